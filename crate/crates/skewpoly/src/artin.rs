//! Structured multiplication for Artin–Schreier extensions k[a]/(a^p - a - c)
//! with σ(a) = a + 1 — necessarily r = p.
//!
//! The matrix model mirrors the Kummer one with the root orbit replaced by
//! the arithmetic points 0..p-1: x ↦ β and a ↦ Diag(0, 1, ..., p-1).
//! This respects the defining relations exactly because characteristic-p
//! facts close the loop: the wraparound row of β·Diag sees p ≡ 0, and
//! Fermat gives m^p = m at every point, so the model quotient is
//! (x^r - 1, a^p - a) — faithful to the truth a^p = a + c as long as no
//! product wraps past a-degree r. Rotating a point-indexed vector by i is
//! precisely σ^i (evaluating u(a+i) at the point m reads u(m+i), indices
//! mod p).
//!
//! Bi-graded elements live in two [`BiGradedPoly`] gauges:
//!
//! * **x-first**: row i holds the a-profile λ_i with meaning Σ x^i λ_i(a);
//! * **a-first**: row i holds μ_i with meaning Σ μ_i(a) x^i.
//!
//! Since x^i a^j = (a - i)^j x^i, the two profiles of one element differ by
//! the variable shift μ_i(t) = λ_i(t + i), which in the evaluation domain
//! is a rotation of the value vector — that is [`alg5_exchange`]. Left
//! multiplication by a^k is a free column shift in the a-first gauge; right
//! multiplication is free in the x-first gauge. After any shift,
//! a^{p+s} = a^{s+1} + c·a^s folds the overflow back below r
//! ([`col_shift_fold`]), and the fold commutes with both gauges because the
//! defining relation is central enough here: σ fixes the fold constants.
//!
//! Evaluation at all p points is done through the multiplicative group:
//! F_p^* is cyclic of order p-1, so values at the nonzero points are a
//! single DFT at a primitive root, and the point 0 rides along for free
//! (f(0) is the constant term). Interpolation inverts the DFT and splits
//! the folded coefficient pair (c_0, c_{p-1}) using f(0), which recovers
//! any polynomial of degree ≤ p-1 exactly — see [`PointTransform`].
//!
//! * [`bg_artin_oracle_mul`] — schoolbook word-by-word product used as the
//!   reference implementation, with the commutation expanded binomially.
//! * [`alg4_mul`] — evaluate rows → one banded product → interpolate rows.
//!   Requires all four bi-degree components < r/3.
//! * [`alg5_exchange`] — gauge change between x-first and a-first tables.
//! * [`alg6_mul`] — full skew product for x-degrees < r/3 via a three-way
//!   chunk scheme with h = ⌈r/3⌉: f = Σ_m a^{mh}·f_m and g = Σ_n g_n·a^{nh},
//!   nine [`alg4_mul`] calls, and the shift/fold/exchange bookkeeping above.
//!
//! The chunk products cost 9(e1+1)(e2+1)·r banded multiplications with O(d)
//! point transforms around them. Both are quasi-linear in r only when p-1
//! is smooth enough for the mixed-radix DFT, and fall back to quadratic
//! transforms otherwise.

use crate::algebra::{AlgebraDescriptor, AlgebraKind};
use crate::banded::{rotated, CyclicBandMatrix};
use crate::error::{Error, Result};
use crate::field::{FieldContext, Fp};
use crate::kummer::BiGradedPoly;
use crate::skew::SkewPoly;
use crate::transforms::{eval_all_roots, interp_all_roots, DensePoly};

fn check_artin(desc: &AlgebraDescriptor) -> Result<()> {
    if desc.kind() != AlgebraKind::Artin {
        return Err(Error::KindMismatch);
    }
    Ok(())
}

/// Evaluation/interpolation at the full point set {0, 1, ..., p-1}.
///
/// The nonzero points are enumerated as powers of a fixed primitive root g,
/// so the value vector over them is one DFT of order p-1; the point 0 only
/// needs the constant term. Exact in both directions for polynomials of
/// degree ≤ p-1: interpolation recovers coefficient p-1 by splitting the
/// DFT's folded (c_0 + c_{p-1}) slot against the separately known f(0).
pub struct PointTransform {
    g: Fp,
    /// point_of[t] = g^t, the point assigned to DFT slot t.
    point_of: Vec<Fp>,
}

impl PointTransform {
    pub fn new(ctx: &FieldContext) -> Result<Self> {
        let p = ctx.p() as usize;
        let g = ctx.root_of_unity(p - 1)?;
        let mut point_of = Vec::with_capacity(p - 1);
        let mut acc = ctx.one();
        for _ in 0..p - 1 {
            point_of.push(acc);
            acc = ctx.mul(acc, g);
        }
        Ok(PointTransform { g, point_of })
    }

    /// Values of the polynomial at every point of F_p, indexed by the point
    /// itself: out[m] = f(m). Exponents fold mod p-1 inside the DFT, which
    /// is exact on the nonzero points (m^{p-1} = 1); the point 0 only reads
    /// the constant term.
    pub fn eval(&self, coeffs: &[Fp], ctx: &FieldContext) -> Vec<Fp> {
        let p = ctx.p() as usize;
        let mut out = vec![Fp::ZERO; p];
        out[0] = coeffs.first().copied().unwrap_or(Fp::ZERO);
        if coeffs.is_empty() {
            return out;
        }
        let vals = eval_all_roots(&DensePoly::new(coeffs.to_vec(), ctx), self.g, p - 1, ctx)
            .expect("root order verified at construction");
        for (t, v) in vals.into_iter().enumerate() {
            out[self.point_of[t].raw() as usize] = v;
        }
        out
    }

    /// Coefficients (length exactly p) of the unique polynomial of degree
    /// ≤ p-1 taking the given values; vals[m] = f(m).
    pub fn interp(&self, vals: &[Fp], ctx: &FieldContext) -> Vec<Fp> {
        let p = ctx.p() as usize;
        assert_eq!(vals.len(), p, "need one value per point of the field");
        let mut dft_vals = vec![Fp::ZERO; p - 1];
        for (t, pt) in self.point_of.iter().enumerate() {
            dft_vals[t] = vals[pt.raw() as usize];
        }
        let folded = interp_all_roots(&dft_vals, self.g, p - 1, ctx)
            .expect("root order verified at construction");
        let mut fc = folded.coeffs().to_vec();
        fc.resize(p - 1, Fp::ZERO);
        // fc[0] holds c_0 + c_{p-1}; f(0) = c_0 disambiguates.
        let c0 = vals[0];
        let top = ctx.sub(fc[0], c0);
        let mut out = Vec::with_capacity(p);
        out.push(c0);
        out.extend_from_slice(&fc[1..]);
        out.push(top);
        out
    }
}

/// Shift a coefficient row left-multiplied by a^k — i.e. move coefficient j
/// to j + k — then fold everything above a-degree r-1 back down with the
/// defining relation a^{r+s} = a^{s+1} + c·a^s. One descending pass
/// suffices for any width: each overflow lands strictly below its source
/// and is itself revisited if still out of range.
///
/// The shift itself is free (relayout); only the fold's additions and the
/// multiplications by c are arithmetic.
pub fn col_shift_fold(row: &[Fp], k: usize, desc: &AlgebraDescriptor) -> Vec<Fp> {
    let r = desc.r();
    let ctx = desc.ctx();
    let c = desc.c().expect("Artin descriptors carry their constant");
    let width = row.len() + k;
    let mut wide = vec![Fp::ZERO; width.max(r)];
    for (j, &v) in row.iter().enumerate() {
        wide[j + k] = v;
    }
    for j in (r..wide.len()).rev() {
        let v = wide[j];
        if v.is_zero() {
            continue;
        }
        wide[j] = Fp::ZERO;
        let lin = if wide[j - r + 1].is_zero() {
            v
        } else {
            ctx.add(wide[j - r + 1], v)
        };
        wide[j - r + 1] = lin;
        let cv = ctx.mul(c, v);
        wide[j - r] = if wide[j - r].is_zero() {
            cv
        } else {
            ctx.add(wide[j - r], cv)
        };
    }
    wide.truncate(r);
    wide
}

/// Schoolbook product of two x-first tables in the Artin relation algebra,
/// word by word: (x^i a^j)(x^s a^t) = x^{i+s} (a-s)^j a^t, the binomial
/// expansion of (a-s)^j done against a Pascal triangle mod p. No degree
/// reduction is applied — the output a-degree is the sum of the inputs'.
pub fn bg_artin_oracle_mul(f1: &BiGradedPoly, f2: &BiGradedPoly, ctx: &FieldContext) -> BiGradedPoly {
    let (dx1, da1) = match f1.bidegree() {
        Some(d) => d,
        None => return BiGradedPoly::zero(),
    };
    let (dx2, da2) = match f2.bidegree() {
        Some(d) => d,
        None => return BiGradedPoly::zero(),
    };
    // Pascal triangle C(j, u) mod p, rows 0..=da1.
    let mut binom: Vec<Vec<Fp>> = Vec::with_capacity(da1 + 1);
    binom.push(vec![ctx.one()]);
    for j in 1..=da1 {
        let prev = &binom[j - 1];
        let mut row = Vec::with_capacity(j + 1);
        row.push(ctx.one());
        for u in 1..j {
            row.push(ctx.add(prev[u - 1], prev[u]));
        }
        row.push(ctx.one());
        binom.push(row);
    }
    let mut table = vec![vec![Fp::ZERO; da1 + da2 + 1]; dx1 + dx2 + 1];
    let mut written = vec![vec![false; da1 + da2 + 1]; dx1 + dx2 + 1];
    for i in 0..=dx1 {
        for j in 0..=da1 {
            let lam = f1.coeff(i, j);
            if lam.is_zero() {
                continue;
            }
            for s in 0..=dx2 {
                // Powers of -s, built up as u descends from j to 0.
                let neg_s = ctx.neg(ctx.elem(s as u64));
                for t in 0..=da2 {
                    let mu = f2.coeff(s, t);
                    if mu.is_zero() {
                        continue;
                    }
                    let base = ctx.mul(lam, mu);
                    let mut pow = ctx.one();
                    // u runs from j down to 0; (-s)^{j-u} grows with each step.
                    for step in 0..=j {
                        let u = j - step;
                        let term = ctx.mul(ctx.mul(base, binom[j][u]), pow);
                        let cell = &mut table[i + s][u + t];
                        if written[i + s][u + t] {
                            *cell = ctx.add(*cell, term);
                        } else {
                            *cell = term;
                            written[i + s][u + t] = true;
                        }
                        pow = ctx.mul(pow, neg_s);
                    }
                }
            }
        }
    }
    BiGradedPoly::from_table(table)
}

/// Build the banded matrix image of an x-first table: row i contributes
/// β^i · Diag(λ_i(0), ..., λ_i(r-1)), and pulling β^i to the right turns
/// the diagonal at offset i into the i-rotation of that value vector.
fn table_to_matrix(
    f: &BiGradedPoly,
    dx: usize,
    pt: &PointTransform,
    desc: &AlgebraDescriptor,
) -> CyclicBandMatrix {
    let r = desc.r();
    let ctx = desc.ctx();
    let mut diags = Vec::with_capacity(dx + 1);
    for i in 0..=dx {
        let row = f.table().get(i).map(|r| r.as_slice()).unwrap_or(&[]);
        if row.iter().all(|v| v.is_zero()) {
            diags.push(vec![Fp::ZERO; r]);
        } else {
            diags.push(rotated(&pt.eval(row, ctx), i as i64));
        }
    }
    CyclicBandMatrix::from_diags(r, 0, diags).expect("every diagonal has length r")
}

/// Product of two x-first tables over the Artin relation algebra, by
/// point-evaluating every row profile, multiplying the two banded matrices,
/// and interpolating the diagonals back. Exact when the model's a-degree
/// never reaches r; the precondition demands all four bi-degree components
/// be under r/3, which keeps the product's a-degree at most 2(r/3) < r.
pub fn alg4_mul(
    f1: &BiGradedPoly,
    f2: &BiGradedPoly,
    desc: &AlgebraDescriptor,
) -> Result<BiGradedPoly> {
    check_artin(desc)?;
    let r = desc.r();
    let ctx = desc.ctx();
    let (dx1, da1) = match f1.bidegree() {
        Some(d) => d,
        None => return Ok(BiGradedPoly::zero()),
    };
    let (dx2, da2) = match f2.bidegree() {
        Some(d) => d,
        None => return Ok(BiGradedPoly::zero()),
    };
    if [dx1, da1, dx2, da2].iter().any(|&d| 3 * d >= r) {
        return Err(Error::DegreeTooLarge);
    }
    let pt = PointTransform::new(ctx)?;
    let m1 = table_to_matrix(f1, dx1, &pt, desc);
    let m2 = table_to_matrix(f2, dx2, &pt, desc);
    let prod = m1.cbm_mul(&m2, ctx);
    let mut table = Vec::with_capacity(dx1 + dx2 + 1);
    for k in 0..prod.diag_count() {
        let diag = prod.diags()[k].clone();
        if diag.iter().all(|v| v.is_zero()) {
            table.push(Vec::new());
            continue;
        }
        let vals = rotated(&diag, -(k as i64));
        let mut coeffs = pt.interp(&vals, ctx);
        assert!(
            coeffs[da1 + da2 + 1..].iter().all(|v| v.is_zero()),
            "banded product leaked past the a-degree bound"
        );
        coeffs.truncate(da1 + da2 + 1);
        table.push(coeffs);
    }
    Ok(BiGradedPoly::from_table(table))
}

/// Which way [`alg5_exchange`] rewrites a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExchangeDirection {
    /// Rows currently mean Σ x^i λ_i(a); rewrite to Σ μ_i(a) x^i.
    XFirstToAFirst,
    /// Rows currently mean Σ μ_i(a) x^i; rewrite to Σ x^i λ_i(a).
    AFirstToXFirst,
}

/// Exchange a table between its x-first and a-first gauges. Since
/// x^i a^j = (a - i)^j x^i, row i's profile changes by the variable shift
/// μ_i(t) = λ_i(t + i). In the evaluation domain a shift of the variable is
/// a rotation of the value vector, so the row transform is
/// evaluate → rotate by ±i → interpolate. Rows with x-index ≡ 0 mod p and
/// constant rows are fixed points and skipped outright.
///
/// Requires the table's a-degree to be at most r-1 (the shift is computed
/// through the degree ≤ p-1 point transform).
pub fn alg5_exchange(
    f: &BiGradedPoly,
    direction: ExchangeDirection,
    desc: &AlgebraDescriptor,
) -> Result<BiGradedPoly> {
    check_artin(desc)?;
    let r = desc.r();
    let ctx = desc.ctx();
    let (_, da) = match f.bidegree() {
        Some(d) => d,
        None => return Ok(BiGradedPoly::zero()),
    };
    if da >= r {
        return Err(Error::DegreeTooLarge);
    }
    let pt = PointTransform::new(ctx)?;
    let mut table = Vec::with_capacity(f.table().len());
    for (i, row) in f.table().iter().enumerate() {
        let e = match row.iter().rposition(|v| !v.is_zero()) {
            Some(e) => e,
            None => {
                table.push(Vec::new());
                continue;
            }
        };
        if i % r == 0 || e == 0 {
            table.push(row.clone());
            continue;
        }
        let shift = match direction {
            ExchangeDirection::XFirstToAFirst => i as i64,
            ExchangeDirection::AFirstToXFirst => -(i as i64),
        };
        let vals = rotated(&pt.eval(row, ctx), shift);
        let mut coeffs = pt.interp(&vals, ctx);
        // A variable shift preserves the leading coefficient, hence the
        // degree; anything past it is transform noise that must cancel.
        debug_assert!(coeffs[e + 1..].iter().all(|v| v.is_zero()));
        coeffs.truncate(e + 1);
        table.push(coeffs);
    }
    Ok(BiGradedPoly::from_table(table))
}

/// A skew polynomial's coefficient table read in the a-first gauge: row i
/// is the coordinate vector of coefficient c_i, meaning Σ c_i(a) x^i — the
/// identity layout, no twist.
fn lift_a_first(f: &SkewPoly) -> BiGradedPoly {
    let table: Vec<Vec<Fp>> = f.coeffs().iter().map(|c| c.coords().to_vec()).collect();
    BiGradedPoly::from_table(table)
}

/// Read an a-first table back as a skew polynomial. The table's a-degree
/// must already be below r.
fn unlift_a_first(desc: &std::rc::Rc<AlgebraDescriptor>, f: &BiGradedPoly) -> SkewPoly {
    let r = desc.r();
    let coeffs: Vec<_> = f
        .table()
        .iter()
        .map(|row| {
            debug_assert!(row.len() <= r);
            let mut coords = row.clone();
            coords.resize(r, Fp::ZERO);
            desc.elem_from_coords(coords).expect("row width matches r")
        })
        .collect();
    SkewPoly::from_coeffs(desc.clone(), coeffs).expect("coefficients built over desc")
}

/// Cut the column window [n·h, n·h + h) out of a table. Returns None when
/// the slab is entirely zero.
fn col_slab(f: &BiGradedPoly, n: usize, h: usize) -> Option<BiGradedPoly> {
    let lo = n * h;
    let mut any = false;
    let table: Vec<Vec<Fp>> = f
        .table()
        .iter()
        .map(|row| {
            let mut out = Vec::with_capacity(h);
            for j in lo..lo + h {
                let v = row.get(j).copied().unwrap_or(Fp::ZERO);
                any = any || !v.is_zero();
                out.push(v);
            }
            out
        })
        .collect();
    if any {
        Some(BiGradedPoly::from_table(table))
    } else {
        None
    }
}

/// Skew product in the Artin algebra for x-degrees below r/3.
///
/// Both factors are split a-degree-wise into three slabs of width
/// h = ⌈r/3⌉: f = Σ_m a^{mh} f_m and g = Σ_n g_n a^{nh}, every slab pair is
/// multiplied with [`alg4_mul`], and the slab offsets are reattached where
/// they are cheap: right factors shift a-indices directly in the x-first
/// gauge; left factors are exchanged to the a-first gauge, shifted there,
/// and exchanged back ([`alg5_exchange`] twice). Every shift is followed by
/// the a^{r+s} = a^{s+1} + c·a^s fold so no table ever carries an a-degree
/// ≥ r into an exchange.
pub fn alg6_mul(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    if !f.desc().same_algebra(g.desc()) {
        return Err(Error::AlgebraMismatch);
    }
    let desc = f.desc();
    check_artin(desc)?;
    let r = desc.r();
    let ctx = desc.ctx();
    let (df, dg) = match (f.degree(), g.degree()) {
        (Some(df), Some(dg)) => (df, dg),
        _ => return Ok(SkewPoly::zero(desc.clone())),
    };
    if 3 * df >= r || 3 * dg >= r {
        return Err(Error::DegreeTooLarge);
    }
    let h = r.div_ceil(3);

    // Left factor: slab in the a-first gauge (where the a^{mh} offset will
    // reattach freely), then exchange each slab to x-first for alg4_mul.
    let f_table = lift_a_first(f);
    let mut f_slabs: Vec<Option<BiGradedPoly>> = Vec::with_capacity(3);
    for m in 0..3 {
        f_slabs.push(match col_slab(&f_table, m, h) {
            Some(s) => Some(alg5_exchange(&s, ExchangeDirection::AFirstToXFirst, desc)?),
            None => None,
        });
    }

    // Right factor: exchange once to x-first, then slab there (the a^{nh}
    // offset reattaches freely in this gauge).
    let g_xfirst = alg5_exchange(&lift_a_first(g), ExchangeDirection::AFirstToXFirst, desc)?;
    let g_slabs: Vec<Option<BiGradedPoly>> = (0..3).map(|n| col_slab(&g_xfirst, n, h)).collect();

    // X-first accumulator for the nine slab products, all post-fold so
    // every row stays below a-degree r.
    let mut acc: Vec<Vec<Fp>> = vec![vec![Fp::ZERO; r]; df + dg + 1];
    let mut acc_written: Vec<Vec<bool>> = vec![vec![false; r]; df + dg + 1];

    for (m, fs) in f_slabs.iter().enumerate() {
        let fs = match fs {
            Some(t) => t,
            None => continue,
        };
        for (n, gs) in g_slabs.iter().enumerate() {
            let gs = match gs {
                Some(t) => t,
                None => continue,
            };
            let prod = alg4_mul(fs, gs, desc)?;
            if prod.is_zero() {
                continue;
            }
            // Right offset a^{nh}: free column shift in the x-first gauge.
            let mut rows: Vec<Vec<Fp>> = if n > 0 {
                prod.table()
                    .iter()
                    .map(|row| col_shift_fold(row, n * h, desc))
                    .collect()
            } else {
                prod.table().to_vec()
            };
            // Left offset a^{mh}: free only in the a-first gauge, so hop
            // gauges around the shift.
            if m > 0 {
                let afirst =
                    alg5_exchange(&BiGradedPoly::from_table(rows), ExchangeDirection::XFirstToAFirst, desc)?;
                let shifted: Vec<Vec<Fp>> = afirst
                    .table()
                    .iter()
                    .map(|row| col_shift_fold(row, m * h, desc))
                    .collect();
                rows = alg5_exchange(&BiGradedPoly::from_table(shifted), ExchangeDirection::AFirstToXFirst, desc)?
                    .table()
                    .to_vec();
            }
            for (i, row) in rows.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    if acc_written[i][j] {
                        acc[i][j] = ctx.add(acc[i][j], v);
                    } else {
                        acc[i][j] = v;
                        acc_written[i][j] = true;
                    }
                }
            }
        }
    }

    let result = alg5_exchange(
        &BiGradedPoly::from_table(acc),
        ExchangeDirection::XFirstToAFirst,
        desc,
    )?;
    Ok(unlift_a_first(desc, &result))
}
