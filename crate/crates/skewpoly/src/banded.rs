//! Cyclic banded matrices: sums of terms D·β^s with D diagonal and β the
//! cyclic-shift permutation.
//!
//! β is the r×r matrix with β[i][j] = 1 iff j ≡ i + 1 (mod r) (ones on the
//! superdiagonal plus the bottom-left corner), so β^s shifts column indices
//! by s cyclically and β^r = I. A *cyclic diagonal* at offset s is D_s β^s
//! for a diagonal D_s; it is determined by its value vector v (v[i] sits at
//! row i, column (i + s) mod r). A [`CyclicBandMatrix`] stores a contiguous
//! window of such diagonals, offsets lo ..= hi, as one vector per offset.
//!
//! The whole point of the representation is the product rule
//!
//! ```text
//! (D_s β^s)(D'_t β^t) = (D_s ⊙ rot_s(D'_t)) β^{s+t},   rot_s(v)[i] = v[(i+s) mod r]
//! ```
//!
//! — conjugating a diagonal past β^s merely rotates its values. Multiplying
//! two windows therefore costs exactly (#diagonals₁ × #diagonals₂ × r)
//! base-field multiplications, with the output window the Minkowski sum of
//! the input windows; no reduction mod r happens at this layer, so offsets
//! grow (and may be negative) until a caller chooses to fold them.
//!
//! β itself commutes past a window for free: both `premul_beta` and
//! `postmul_beta` are pure relayouts (offset shifts, plus a value rotation
//! for the left action) and perform no field operations.

use crate::error::{Error, Result};
use crate::field::{FieldContext, Fp};

/// A window of cyclic diagonals: Σ_k diag(diags[k])·β^{lo + k}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicBandMatrix {
    r: usize,
    lo: i64,
    diags: Vec<Vec<Fp>>,
}

/// Rotate values left by s (cyclically): out[i] = v[(i + s) mod r].
///
/// Pure relayout — no field operations. Negative s rotates right.
pub fn rotated(v: &[Fp], s: i64) -> Vec<Fp> {
    let r = v.len() as i64;
    (0..r).map(|i| v[(i + s).rem_euclid(r) as usize]).collect()
}

impl CyclicBandMatrix {
    /// Build from explicit diagonals; `diags[k]` sits at offset `lo + k`.
    /// Every diagonal must have length r >= 1.
    pub fn from_diags(r: usize, lo: i64, diags: Vec<Vec<Fp>>) -> Result<Self> {
        if r == 0 {
            return Err(Error::BadDimension(0));
        }
        if diags.iter().any(|d| d.len() != r) {
            return Err(Error::SizeMismatch);
        }
        Ok(CyclicBandMatrix { r, lo, diags })
    }

    /// The zero matrix as an empty window anchored at `lo`.
    pub fn empty(r: usize, lo: i64) -> Self {
        CyclicBandMatrix { r, lo, diags: Vec::new() }
    }

    /// The permutation β itself: a single all-ones diagonal at offset 1.
    pub fn beta(r: usize, ctx: &FieldContext) -> Self {
        CyclicBandMatrix {
            r,
            lo: 1,
            diags: vec![vec![ctx.one(); r]],
        }
    }

    /// Matrix dimension r.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Lowest stored offset (meaningful only when non-empty).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Number of stored diagonals (the window width).
    pub fn diag_count(&self) -> usize {
        self.diags.len()
    }

    /// All stored diagonals, ascending by offset.
    pub fn diags(&self) -> &[Vec<Fp>] {
        &self.diags
    }

    /// The value vector at an exact (unreduced) offset, if stored.
    pub fn diag_at_offset(&self, offset: i64) -> Option<&[Fp]> {
        let idx = offset - self.lo;
        if idx < 0 || idx as usize >= self.diags.len() {
            None
        } else {
            Some(&self.diags[idx as usize])
        }
    }

    /// Window product. Exactly `diag_count() * other.diag_count() * r`
    /// multiplications; adds occur only where two diagonal pairs land on
    /// the same output offset. The output window is the Minkowski sum
    /// `[lo + other.lo, hi + other.hi]`.
    pub fn cbm_mul(&self, other: &CyclicBandMatrix, ctx: &FieldContext) -> CyclicBandMatrix {
        assert_eq!(self.r, other.r, "dimension mismatch in banded product");
        let r = self.r;
        let out_lo = self.lo + other.lo;
        if self.diags.is_empty() || other.diags.is_empty() {
            return CyclicBandMatrix::empty(r, out_lo);
        }
        let width = self.diags.len() + other.diags.len() - 1;
        let mut out: Vec<Option<Vec<Fp>>> = vec![None; width];
        for (ks, vs) in self.diags.iter().enumerate() {
            let s = self.lo + ks as i64;
            for (kt, vt) in other.diags.iter().enumerate() {
                // (D_s β^s)(D'_t β^t) = (D_s ⊙ rot_s(D'_t)) β^{s+t}.
                let prod: Vec<Fp> = (0..r)
                    .map(|i| ctx.mul(vs[i], vt[((i as i64 + s).rem_euclid(r as i64)) as usize]))
                    .collect();
                let slot = &mut out[ks + kt];
                match slot {
                    None => *slot = Some(prod),
                    Some(acc) => {
                        for i in 0..r {
                            acc[i] = ctx.add(acc[i], prod[i]);
                        }
                    }
                }
            }
        }
        let zero = || vec![ctx.zero(); r];
        CyclicBandMatrix {
            r,
            lo: out_lo,
            diags: out.into_iter().map(|d| d.unwrap_or_else(zero)).collect(),
        }
    }

    /// Left action of β^k: rotate every diagonal's values by k and shift
    /// offsets up by k. Zero field operations.
    pub fn premul_beta(&self, k: i64) -> CyclicBandMatrix {
        CyclicBandMatrix {
            r: self.r,
            lo: self.lo + k,
            diags: self.diags.iter().map(|v| rotated(v, k)).collect(),
        }
    }

    /// Right action of β^k: shift offsets up by k. Zero field operations.
    pub fn postmul_beta(&self, k: i64) -> CyclicBandMatrix {
        CyclicBandMatrix {
            r: self.r,
            lo: self.lo + k,
            diags: self.diags.clone(),
        }
    }

    /// Expand to a dense r×r matrix, folding offsets mod r. Diagonals whose
    /// offsets collide mod r are summed (counted adds).
    pub fn to_dense(&self, ctx: &FieldContext) -> Vec<Vec<Fp>> {
        let r = self.r;
        let mut dense = vec![vec![ctx.zero(); r]; r];
        let mut written = vec![vec![false; r]; r];
        for (k, v) in self.diags.iter().enumerate() {
            let off = self.lo + k as i64;
            for i in 0..r {
                let j = ((i as i64 + off).rem_euclid(r as i64)) as usize;
                if written[i][j] {
                    dense[i][j] = ctx.add(dense[i][j], v[i]);
                } else {
                    dense[i][j] = v[i];
                    written[i][j] = true;
                }
            }
        }
        dense
    }
}

/// Schoolbook dense r×r product (the oracle the banded rule is tested
/// against). O(r³) counted operations.
pub fn dense_mul(a: &[Vec<Fp>], b: &[Vec<Fp>], ctx: &FieldContext) -> Vec<Vec<Fp>> {
    let r = a.len();
    assert!(b.len() == r && a.iter().chain(b).all(|row| row.len() == r));
    let mut out = vec![vec![ctx.zero(); r]; r];
    for i in 0..r {
        for l in 0..r {
            let ail = a[i][l];
            if ail.is_zero() {
                continue;
            }
            for j in 0..r {
                out[i][j] = ctx.add(out[i][j], ctx.mul(ail, b[l][j]));
            }
        }
    }
    out
}
