//! Structured multiplication for Kummer extensions k[a]/(a^r − c), σ(a) = ζa.
//!
//! Everything here runs inside the bi-graded ring k⟨X,A⟩/(XA − ζAX): words
//! are kept in the normal form Σ λ_ij X^iA^j ([`BiGradedPoly`]), where moving
//! an A past an X costs one power of ζ and nothing else. The ring maps onto
//! A[x,σ] by X ↦ x, A ↦ a once A^r = c is imposed, and a skew polynomial
//! Σ c_i x^i lifts back canonically: writing c_i in the basis a^j gives the
//! word Σ (c_i)_j A^jX^i, whose X-first table carries the change-of-order
//! twist ζ^{−ij}.
//!
//! * [`bg_oracle_mul`] — schoolbook normal-form product, the ground truth.
//! * [`alg2_mul`] — the fast core for small bi-degrees. Each X-row's
//!   A-profile is evaluated at the full root orbit ζ^0..ζ^{r−1}, so the
//!   table becomes a cyclic banded matrix (X ↦ the cyclic shift β, A ↦ the
//!   diagonal of root powers); one banded product and one interpolation pass
//!   per output row finish the job. Evaluation at roots of unity cannot
//!   distinguish A^r from 1, so exactness needs the product's A-degree below
//!   r — the r/3 input bound gives that with room to spare, and an internal
//!   assert checks the recovered rows really vanish past e₁+e₂.
//! * [`alg3_mul`] — full-height coefficients via slabs: split each operand
//!   into three slabs of A-degree < ⌈r/3⌉, run nine [`alg2_mul`] products,
//!   reattach the slab shifts A^{mh}·G·A^{nh} term-by-term (a right shift is
//!   free; a left shift scales row s by ζ^{−mh·s}), fold A^{j+r} = c·A^j,
//!   and read the coefficients back.
//!
//! Per product this costs 9(d₁+1)(d₂+1)·r multiplications in the banded
//! kernel plus O(d) transforms of size r — against the schoolbook
//! (d₁+1)(d₂+1)·r² — which is the quasi-linear-in-r design point.

use crate::algebra::{AlgebraDescriptor, AlgebraKind};
use crate::banded::{rotated, CyclicBandMatrix};
use crate::error::{Error, Result};
use crate::field::{FieldContext, Fp};
use crate::skew::SkewPoly;
use crate::transforms::{eval_all_roots, interp_all_roots, DensePoly};
use std::rc::Rc;

/// Coefficient table of a bi-graded word in normal form: `table[i][j]` is
/// the coefficient of X^iA^j. Rows may be ragged; missing entries are zero.
/// The same shape serves both commutation relations in this crate — the
/// Kummer rule XA = ζAX here and the additive-shift rule of the Artin
/// module — the consuming operation supplies the interpretation.
///
/// The declared bounds are whatever the table's shape says; the bi-degree
/// (deg_X, deg_A) is computed from the nonzero support and is what the
/// algorithms' preconditions speak about.
#[derive(Clone, Debug)]
pub struct BiGradedPoly {
    table: Vec<Vec<Fp>>,
}

impl BiGradedPoly {
    /// Wrap a coefficient table; rows may have unequal lengths.
    pub fn from_table(table: Vec<Vec<Fp>>) -> Self {
        BiGradedPoly { table }
    }

    /// The zero element (empty table).
    pub fn zero() -> Self {
        BiGradedPoly { table: Vec::new() }
    }

    /// Single word v·X^iA^j.
    pub fn monomial(i: usize, j: usize, v: Fp) -> Self {
        let mut table = vec![Vec::new(); i + 1];
        table[i] = vec![Fp::ZERO; j + 1];
        table[i][j] = v;
        BiGradedPoly { table }
    }

    /// Raw rows, X-index major.
    pub fn table(&self) -> &[Vec<Fp>] {
        &self.table
    }

    /// Coefficient of X^iA^j (zero outside the stored shape).
    pub fn coeff(&self, i: usize, j: usize) -> Fp {
        self.table
            .get(i)
            .and_then(|row| row.get(j))
            .copied()
            .unwrap_or(Fp::ZERO)
    }

    /// (deg_X, deg_A) over the nonzero support, or None for zero.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut out: Option<(usize, usize)> = None;
        for (i, row) in self.table.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    let (dx, da) = out.get_or_insert((i, j));
                    *dx = (*dx).max(i);
                    *da = (*da).max(j);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.bidegree().is_none()
    }
}

impl PartialEq for BiGradedPoly {
    fn eq(&self, other: &Self) -> bool {
        let rows = self.table.len().max(other.table.len());
        for i in 0..rows {
            let cols = self
                .table
                .get(i)
                .map_or(0, Vec::len)
                .max(other.table.get(i).map_or(0, Vec::len));
            for j in 0..cols {
                if self.coeff(i, j) != other.coeff(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

impl Eq for BiGradedPoly {}

/// Schoolbook product in k⟨X,A⟩/(XA − ζAX), the correctness oracle for
/// [`alg2_mul`]. Each pair of words multiplies by walking A^j across X^s one
/// relation application at a time — aggregated, AX = ζ^{−1}XA makes that a
/// single factor ζ^{−js} on the word X^{i+s}A^{j+t}.
pub fn bg_oracle_mul(
    f1: &BiGradedPoly,
    f2: &BiGradedPoly,
    zeta: Fp,
    ctx: &FieldContext,
) -> BiGradedPoly {
    let (Some((dx1, da1)), Some((dx2, da2))) = (f1.bidegree(), f2.bidegree()) else {
        return BiGradedPoly::zero();
    };
    let zinv = ctx.inv(zeta).expect("root of unity is invertible");
    let mut table = vec![vec![Fp::ZERO; da1 + da2 + 1]; dx1 + dx2 + 1];
    let mut written = vec![vec![false; da1 + da2 + 1]; dx1 + dx2 + 1];
    for i in 0..=dx1 {
        for j in 0..=da1 {
            let u = f1.coeff(i, j);
            if u.is_zero() {
                continue;
            }
            for s in 0..=dx2 {
                for t in 0..=da2 {
                    let v = f2.coeff(s, t);
                    if v.is_zero() {
                        continue;
                    }
                    let twist = ctx.pow(zinv, (j * s) as u64);
                    let term = ctx.mul(ctx.mul(u, v), twist);
                    let slot = &mut table[i + s][j + t];
                    if written[i + s][j + t] {
                        *slot = ctx.add(*slot, term);
                    } else {
                        *slot = term;
                        written[i + s][j + t] = true;
                    }
                }
            }
        }
    }
    BiGradedPoly::from_table(table)
}

fn check_kummer(desc: &AlgebraDescriptor) -> Result<()> {
    if desc.kind() != AlgebraKind::Kummer {
        return Err(Error::KindMismatch);
    }
    Ok(())
}

/// Evaluate one X-row's A-profile at the whole root orbit ζ^0..ζ^{r−1}.
fn eval_profile(desc: &AlgebraDescriptor, row: &[Fp]) -> Vec<Fp> {
    let zeta = desc.zeta().expect("kummer has zeta");
    let poly = DensePoly::new(row.to_vec(), desc.ctx());
    eval_all_roots(&poly, zeta, desc.r(), desc.ctx()).expect("descriptor zeta has exact order r")
}

/// Interpolate a full-orbit value vector back to an A-profile.
fn interp_profile(desc: &AlgebraDescriptor, values: &[Fp]) -> Vec<Fp> {
    let zeta = desc.zeta().expect("kummer has zeta");
    interp_all_roots(values, zeta, desc.r(), desc.ctx())
        .expect("descriptor zeta has exact order r")
        .coeffs()
        .to_vec()
}

/// Banded image of a table: the word X^iA^j maps to β^i·diag(ζ^{lj}), so
/// row i lands on the offset-i diagonal as its orbit evaluations rotated by
/// i (commuting β^i past the diagonal re-indexes it for free).
fn table_to_matrix(desc: &AlgebraDescriptor, f: &BiGradedPoly, dx: usize) -> CyclicBandMatrix {
    let r = desc.r();
    let diags = (0..=dx)
        .map(|i| {
            let row = f.table().get(i).map_or(&[][..], Vec::as_slice);
            if row.iter().all(|v| v.is_zero()) {
                vec![Fp::ZERO; r]
            } else {
                rotated(&eval_profile(desc, row), i as i64)
            }
        })
        .collect();
    CyclicBandMatrix::from_diags(r, 0, diags).expect("orbit rows have length r")
}

/// Fast product of two bi-graded normal forms with bi-degrees < r/3 in each
/// variable: evaluate the A-profiles on the root orbit, take one cyclic
/// banded product, interpolate each output diagonal back. The result equals
/// [`bg_oracle_mul`] exactly; `DegreeTooLarge` if an operand is too big.
pub fn alg2_mul(
    f1: &BiGradedPoly,
    f2: &BiGradedPoly,
    desc: &AlgebraDescriptor,
) -> Result<BiGradedPoly> {
    check_kummer(desc)?;
    let (Some((dx1, da1)), Some((dx2, da2))) = (f1.bidegree(), f2.bidegree()) else {
        return Ok(BiGradedPoly::zero());
    };
    let r = desc.r();
    if [dx1, da1, dx2, da2].iter().any(|&d| 3 * d >= r) {
        return Err(Error::DegreeTooLarge);
    }
    let m = table_to_matrix(desc, f1, dx1).cbm_mul(&table_to_matrix(desc, f2, dx2), desc.ctx());
    let mut out = Vec::with_capacity(dx1 + dx2 + 1);
    for k in 0..=dx1 + dx2 {
        let diag = m.diag_at_offset(k as i64).expect("window covers 0..=dx1+dx2");
        let mut row = interp_profile(desc, &rotated(diag, -(k as i64)));
        // Faithfulness of the evaluation model: with the product's A-degree
        // below r, nothing may appear past e1+e2. A violation would mean the
        // embedding wrapped around A^r, i.e. a bug, so fail loudly.
        assert!(
            row.iter().skip(da1 + da2 + 1).all(|v| v.is_zero()),
            "banded product leaked past the degree bound"
        );
        row.truncate(da1 + da2 + 1);
        out.push(row);
    }
    Ok(BiGradedPoly::from_table(out))
}

/// Canonical lift of a skew polynomial: coefficient c_i lands in X-row i,
/// with the basis coordinate (c_i)_j carried from the word A^jX^i to the
/// X-first slot λ_ij by the change-of-order factor ζ^{−ij}.
fn lift(desc: &AlgebraDescriptor, f: &SkewPoly) -> BiGradedPoly {
    let ctx = desc.ctx();
    let deg = match f.degree() {
        None => return BiGradedPoly::zero(),
        Some(d) => d,
    };
    let table = f.coeffs()[..=deg]
        .iter()
        .enumerate()
        .map(|(i, c)| {
            c.coords()
                .iter()
                .enumerate()
                .map(|(j, &v)| {
                    if v.is_zero() || i * j == 0 {
                        v
                    } else {
                        ctx.mul(desc.zeta_pow(-((i * j) as i64)), v)
                    }
                })
                .collect()
        })
        .collect();
    BiGradedPoly::from_table(table)
}

/// Inverse of [`lift`] on reduced tables (A-degree < r): undo the ζ^{−ij}
/// twist and reassemble coefficients.
fn unlift(desc: &Rc<AlgebraDescriptor>, f: &BiGradedPoly) -> Result<SkewPoly> {
    let ctx = desc.ctx();
    let r = desc.r();
    let coeffs = f
        .table()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            debug_assert!(row.len() <= r);
            let mut coords = vec![Fp::ZERO; r];
            for (j, &v) in row.iter().enumerate() {
                coords[j] = if v.is_zero() || i * j == 0 {
                    v
                } else {
                    ctx.mul(desc.zeta_pow((i * j) as i64), v)
                };
            }
            desc.elem_from_coords(coords)
        })
        .collect::<Result<Vec<_>>>()?;
    SkewPoly::from_coeffs(Rc::clone(desc), coeffs)
}

/// Slab m of a table: columns [mh, mh+h), so that F = Σ_m A^{mh}·F_m. The
/// left-attached A^{mh} scales row s by ζ^{+mh·s} on the way out (the
/// inverse of the factor the recombination will pay to put it back).
/// Returns None for an all-zero slab.
fn left_slab(
    desc: &AlgebraDescriptor,
    f: &BiGradedPoly,
    m: usize,
    h: usize,
) -> Option<BiGradedPoly> {
    let ctx = desc.ctx();
    let r = desc.r();
    let lo = m * h;
    if lo >= r {
        return None;
    }
    let hi = (lo + h).min(r);
    let mut any = false;
    let table: Vec<Vec<Fp>> = f
        .table()
        .iter()
        .enumerate()
        .map(|(s, row)| {
            let window = row.get(lo..hi.min(row.len())).unwrap_or(&[]);
            window
                .iter()
                .map(|&v| {
                    if v.is_zero() {
                        v
                    } else {
                        any = true;
                        if m * s == 0 {
                            v
                        } else {
                            ctx.mul(desc.zeta_pow((m * h * s) as i64), v)
                        }
                    }
                })
                .collect()
        })
        .collect();
    any.then(|| BiGradedPoly::from_table(table))
}

/// Right slab: columns [nh, nh+h) taken verbatim, so that F = Σ_n F_n·A^{nh}.
fn right_slab(f: &BiGradedPoly, n: usize, h: usize, r: usize) -> Option<BiGradedPoly> {
    let lo = n * h;
    if lo >= r {
        return None;
    }
    let hi = (lo + h).min(r);
    let mut any = false;
    let table: Vec<Vec<Fp>> = f
        .table()
        .iter()
        .map(|row| {
            let window = row.get(lo..hi.min(row.len())).unwrap_or(&[]);
            if window.iter().any(|v| !v.is_zero()) {
                any = true;
            }
            window.to_vec()
        })
        .collect();
    any.then(|| BiGradedPoly::from_table(table))
}

/// Low-degree skew multiplication over a Kummer extension: lift both
/// operands to bi-graded normal forms, slab-decompose their A-profiles,
/// multiply the nine slab pairs with [`alg2_mul`], reattach the slab shifts
/// (right shifts are free; a left A^{mh} scales the X^s row by ζ^{−mh·s}
/// and shifts the A-index), fold A^{j+r} = c·A^j, and read the result back.
/// Requires deg f, deg g < r/3.
pub fn alg3_mul(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    let desc = f.desc();
    if !desc.same_algebra(g.desc()) {
        return Err(Error::AlgebraMismatch);
    }
    check_kummer(desc)?;
    if f.is_zero() || g.is_zero() {
        return Ok(SkewPoly::zero(Rc::clone(desc)));
    }
    let ctx = desc.ctx();
    let r = desc.r();
    let (d1, d2) = (f.degree().unwrap(), g.degree().unwrap());
    if 3 * d1 >= r || 3 * d2 >= r {
        return Err(Error::DegreeTooLarge);
    }
    let h = r.div_ceil(3);

    let lifted_f = lift(desc, f);
    let lifted_g = lift(desc, g);
    let f_slabs: Vec<Option<BiGradedPoly>> =
        (0..3).map(|m| left_slab(desc, &lifted_f, m, h)).collect();
    let g_slabs: Vec<Option<BiGradedPoly>> =
        (0..3).map(|n| right_slab(&lifted_g, n, h, r)).collect();

    // Wide accumulator: X-rows up to d1+d2, A-indices up to the largest
    // shifted slab-product degree (4h from the shifts plus 2h−2 from the
    // slabs), folded below r afterwards.
    let dw = d1 + d2;
    let width = 6 * h - 1;
    let mut table = vec![vec![Fp::ZERO; width]; dw + 1];
    let mut written = vec![vec![false; width]; dw + 1];
    for (m, fm) in f_slabs.iter().enumerate() {
        let Some(fm) = fm else { continue };
        for (n, gn) in g_slabs.iter().enumerate() {
            let Some(gn) = gn else { continue };
            let prod = alg2_mul(fm, gn, desc)?;
            let shift = (m + n) * h;
            for (s, row) in prod.table().iter().enumerate() {
                let scale = if m * s == 0 {
                    None
                } else {
                    Some(desc.zeta_pow(-((m * h * s) as i64)))
                };
                for (t, &v) in row.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    let v = match scale {
                        Some(z) => ctx.mul(z, v),
                        None => v,
                    };
                    let slot = &mut table[s][shift + t];
                    if written[s][shift + t] {
                        *slot = ctx.add(*slot, v);
                    } else {
                        *slot = v;
                        written[s][shift + t] = true;
                    }
                }
            }
        }
    }

    // Fold A^j for j ≥ r down by A^j = c·A^{j−r}, highest first so a
    // doubly-wrapped index cascades correctly.
    let c = desc.c().expect("kummer has c");
    for row in &mut table {
        for j in (r..width).rev() {
            let v = row[j];
            if !v.is_zero() {
                row[j - r] = ctx.add(row[j - r], ctx.mul(c, v));
                row[j] = Fp::ZERO;
            }
        }
        row.truncate(r);
    }
    unlift(desc, &BiGradedPoly::from_table(table))
}
