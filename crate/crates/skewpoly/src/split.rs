//! Structured multiplication for the totally split algebra k^r.
//!
//! When A = k^r and σ rotates coordinates, a skew polynomial embeds into
//! matrices over k by sending u·x^i to Diag(u)·β^i — the twist x·u = σ(u)·x
//! becomes the conjugation β·Diag(u) = Diag(σ(u))·β, so the embedding φ is a
//! ring map with kernel (x^r − 1). Under the cyclic-banded representation φ
//! and its one-sided inverse ψ are pure relayout (coefficient i *is* the
//! diagonal at offset i), and the skew product reduces to one
//! [`CyclicBandMatrix::cbm_mul`]:
//!
//! ```text
//! coefficient of x^{i+j}:   f_i ⊙ rot_i(g_j)  =  f_i · σ^i(g_j)
//! ```
//!
//! [`mul_split`] insists on degrees < r/3 so the product degree stays below
//! r−1 and ψ inverts φ exactly; it costs (d1+1)(d2+1)·r base multiplications,
//! with σ and both layout maps free.

use crate::algebra::{AlgebraDescriptor, AlgebraKind};
use crate::banded::CyclicBandMatrix;
use crate::error::{Error, Result};
use crate::skew::SkewPoly;
use std::rc::Rc;

/// Embed a skew polynomial into a cyclic banded matrix: coefficient i becomes
/// the diagonal at offset i, so f maps to Σ Diag(c_i)·β^i with window
/// [0, deg f]. Pure relayout, zero field operations.
///
/// Only defined on the totally split algebra and for deg f ≤ r−1 (beyond
/// that, x^r − 1 is in the kernel and the matrix no longer determines f).
pub fn phi_split(f: &SkewPoly) -> Result<CyclicBandMatrix> {
    let desc = f.desc();
    if desc.kind() != AlgebraKind::TotallySplit {
        return Err(Error::KindMismatch);
    }
    let deg = match f.degree() {
        None => return Ok(CyclicBandMatrix::empty(desc.r(), 0)),
        Some(d) => d,
    };
    if deg > desc.r() - 1 {
        return Err(Error::DegreeTooLarge);
    }
    let diags = f.coeffs()[..=deg].iter().map(|c| c.coords().to_vec()).collect();
    Ok(CyclicBandMatrix::from_diags(desc.r(), 0, diags).expect("element coords have length r"))
}

/// Read any banded matrix back as a skew polynomial: the diagonal at offset
/// s contributes to the coefficient of x^{s mod r}. Total on all matrices —
/// offsets that collide mod r accumulate by addition (within the algorithm's
/// precondition windows collisions never occur, so the adds below only fire
/// on out-of-band inputs). No field operations besides those accumulations.
pub fn psi_split(desc: &Rc<AlgebraDescriptor>, m: &CyclicBandMatrix) -> SkewPoly {
    assert_eq!(desc.kind(), AlgebraKind::TotallySplit, "split relayout only");
    assert_eq!(desc.r(), m.r(), "matrix size must match the algebra");
    let r = desc.r();
    let ctx = desc.ctx();
    let mut slots: Vec<Option<Vec<crate::field::Fp>>> = vec![None; r];
    for (k, diag) in m.diags().iter().enumerate() {
        let s = (m.lo() + k as i64).rem_euclid(r as i64) as usize;
        match &mut slots[s] {
            None => slots[s] = Some(diag.clone()),
            Some(acc) => {
                for (a, &v) in acc.iter_mut().zip(diag) {
                    *a = ctx.add(*a, v);
                }
            }
        }
    }
    let coeffs = slots
        .into_iter()
        .map(|slot| match slot {
            Some(v) => desc.elem_from_coords(v).expect("diagonal has length r"),
            None => desc.zero_elem(),
        })
        .collect();
    SkewPoly::from_coeffs(Rc::clone(desc), coeffs).expect("coefficients built from desc")
}

/// Low-degree skew product over k^r: relayout both operands with
/// [`phi_split`], multiply the banded images, read the result back with
/// [`psi_split`]. Requires deg f, deg g < r/3; counted multiplications are
/// exactly (d1+1)(d2+1)·r ≤ (d+1)²·r.
pub fn mul_split(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    let desc = f.desc();
    if !desc.same_algebra(g.desc()) {
        return Err(Error::AlgebraMismatch);
    }
    if desc.kind() != AlgebraKind::TotallySplit {
        return Err(Error::KindMismatch);
    }
    if f.is_zero() || g.is_zero() {
        return Ok(SkewPoly::zero(Rc::clone(desc)));
    }
    let r = desc.r();
    if 3 * f.degree().unwrap() >= r || 3 * g.degree().unwrap() >= r {
        return Err(Error::DegreeTooLarge);
    }
    let prod = phi_split(f)?.cbm_mul(&phi_split(g)?, desc.ctx());
    Ok(psi_split(desc, &prod))
}
