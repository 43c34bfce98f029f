//! Degree reductions through a tower k ⊆ A₁ ⊆ A₂ of totally split algebras.
//!
//! The concrete tower: A₂ = k^{r₂} with σ the rotation by one, A₁ = k^{r₁}
//! (r₁ | r₂) embedded by block repetition
//!
//! ```text
//! (a₀, ..., a_{r₁-1}) ↦ (a₀, ..., a_{r₁-1}, a₀, ..., a_{r₁-1}, ...)
//! ```
//!
//! so the outer σ restricted to embedded A₁ is the inner σ, and σ^{r₁}
//! fixes embedded A₁ pointwise. Both directions of the tower turn one
//! product of degree-d skew polynomials over A₂ into many smaller products:
//!
//! * [`tower_mul_outer`] — split each operand along residues of the
//!   x-exponent mod r₁: f = Σ_k x^k g_k(x^{r₁}) and g = Σ_l h_l(x^{r₁}) x^l.
//!   The inner products g_k·h_l live in A₂[y, σ^{r₁}], and since σ^{r₁}
//!   rotates each of the r₁ interleaved coordinate slices of k^{r₂}
//!   independently, that ring decomposes into r₁ parallel split skew rings
//!   over k^m (m = r₂/r₁), each handled by the banded-matrix kernel when
//!   the slice degrees fit its exactness window and by the schoolbook
//!   y-ring product otherwise.
//! * [`tower_mul_inner`] — write A₂ = A₁[u] for the block-index selector u
//!   (u is ⌊i/r₁⌋ at coordinate i; its powers are an A₁-basis because the
//!   per-offset change of basis is a Vandermonde matrix at the distinct
//!   nodes 0..m-1). Decompose f = Σ_k u^k g_k(x) and g = Σ_l h_l(x)·u^l
//!   with coefficients in A₁, multiply the m² pairs g_k·h_l in A₁[x,σ]
//!   through [`SkewPoly::fast_mul`], and reattach the selector powers with
//!   σ-twists for the x-powers they crossed.
//!
//! [`tower_dispatch`] picks the inner path for degrees below r₁/3 (where
//! the A₁-level structured kernel applies directly) and the outer path
//! otherwise. Both paths return exactly the schoolbook product; the payoff
//! is in the operation counts, which stay measured, never assumed.

use std::rc::Rc;

use crate::algebra::{AlgebraDescriptor, AlgebraElement, AlgebraKind};
use crate::error::{Error, Result};
use crate::field::Fp;
use crate::skew::SkewPoly;
use crate::split::{phi_split, psi_split};
use crate::transforms::interp_at_points;

/// A validated split/split tower instance with its embedding data.
pub struct TowerDescriptor {
    inner: Rc<AlgebraDescriptor>,
    outer: Rc<AlgebraDescriptor>,
    /// Tower index m = r₂ / r₁.
    m: usize,
    /// Block-index selector u with A₂ = A₁[u]: coordinate i holds ⌊i/r₁⌋.
    selector: AlgebraElement,
    /// Interpolation nodes 0..m-1 for the per-offset Vandermonde basis.
    nodes: Vec<Fp>,
    /// Split algebra k^m modelling one coordinate slice of A₂ under σ^{r₁}
    /// (absent for the trivial tower m = 1, where no slicing is needed).
    slice: Option<Rc<AlgebraDescriptor>>,
}

impl TowerDescriptor {
    /// Build the split tower k ⊆ k^{r₁} ⊆ k^{r₂} over F_p.
    pub fn new(p: u64, r1: usize, r2: usize) -> Result<Rc<Self>> {
        if r1 == 0 || r2 == 0 || r2 % r1 != 0 {
            return Err(Error::NotATower(format!(
                "inner dimension {r1} must divide outer dimension {r2}"
            )));
        }
        let outer = AlgebraDescriptor::build(AlgebraKind::TotallySplit, p, r2, 0)?;
        let inner = AlgebraDescriptor::split(outer.ctx_rc(), r1)?;
        let m = r2 / r1;
        if m as u64 >= p {
            // The selector's per-offset basis needs m distinct nodes in k.
            return Err(Error::NoPrimitive);
        }
        let ctx = outer.ctx();
        let nodes: Vec<Fp> = (0..m as u64).map(|q| ctx.elem(q)).collect();
        let selector = outer
            .elem_from_coords((0..r2).map(|i| ctx.elem((i / r1) as u64)).collect())
            .expect("selector has outer dimension");
        let slice = if m >= 2 {
            Some(AlgebraDescriptor::split(outer.ctx_rc(), m)?)
        } else {
            None
        };
        Ok(Rc::new(TowerDescriptor { inner, outer, m, selector, nodes, slice }))
    }

    /// The inner algebra A₁ = k^{r₁}.
    pub fn inner(&self) -> &Rc<AlgebraDescriptor> {
        &self.inner
    }

    /// The outer algebra A₂ = k^{r₂}.
    pub fn outer(&self) -> &Rc<AlgebraDescriptor> {
        &self.outer
    }

    /// Tower index r₂ / r₁.
    pub fn m(&self) -> usize {
        self.m
    }

    /// The selector u with A₂ = A₁[u].
    pub fn selector(&self) -> &AlgebraElement {
        &self.selector
    }

    /// Block-repetition embedding A₁ ↪ A₂ (a pure relayout: no arithmetic).
    pub fn embed(&self, u: &AlgebraElement) -> Result<AlgebraElement> {
        let r1 = self.inner.r();
        if u.coords().len() != r1 {
            return Err(Error::SizeMismatch);
        }
        let coords = (0..self.outer.r()).map(|i| u.coords()[i % r1]).collect();
        self.outer.elem_from_coords(coords)
    }

    /// Decompose v ∈ A₂ over the selector basis: v = Σ_k embed(out[k])·u^k.
    /// Per block offset b this interpolates the values v[r₁q + b] at the
    /// nodes q = 0..m-1.
    fn selector_decompose(&self, v: &AlgebraElement) -> Result<Vec<AlgebraElement>> {
        let r1 = self.inner.r();
        let ctx = self.outer.ctx();
        let mut out = vec![vec![Fp::ZERO; r1]; self.m];
        for b in 0..r1 {
            let vals: Vec<Fp> = (0..self.m).map(|q| v.coords()[r1 * q + b]).collect();
            let poly = interp_at_points(&self.nodes, &vals, ctx)?;
            for (k, row) in out.iter_mut().enumerate() {
                row[b] = poly.coeff(k);
            }
        }
        out.into_iter().map(|c| self.inner.elem_from_coords(c)).collect()
    }

    fn check_operands(&self, f: &SkewPoly, g: &SkewPoly) -> Result<()> {
        if !f.desc().same_algebra(g.desc()) {
            return Err(Error::AlgebraMismatch);
        }
        if !f.desc().same_algebra(&self.outer) {
            return Err(Error::NotATower(
                "operands do not live over the tower's outer algebra".into(),
            ));
        }
        Ok(())
    }
}

/// Schoolbook product in the y-ring A₂[y, σ^{r₁}]: out_{q+v} += g_q·σ^{r₁q}(h_v).
fn y_ring_naive(
    g: &[AlgebraElement],
    h: &[AlgebraElement],
    tw: &TowerDescriptor,
) -> Vec<AlgebraElement> {
    let desc = &tw.outer;
    let r1 = tw.inner.r() as i64;
    let mut out = vec![desc.zero_elem(); g.len() + h.len() - 1];
    for (q, gq) in g.iter().enumerate() {
        if gq.is_zero() {
            continue;
        }
        for (v, hv) in h.iter().enumerate() {
            if hv.is_zero() {
                continue;
            }
            let twisted = desc.sigma_pow(hv, r1 * q as i64);
            out[q + v] = desc.add(&out[q + v], &desc.mul(gq, &twisted));
        }
    }
    out
}

/// Product in A₂[y, σ^{r₁}] via the r₁ independent coordinate slices, each
/// a split skew product in k^m run through the banded-matrix embedding.
/// Exact only while the y-degrees sum below m (callers check).
fn y_ring_sliced(
    g: &[AlgebraElement],
    h: &[AlgebraElement],
    tw: &TowerDescriptor,
) -> Result<Vec<AlgebraElement>> {
    let slice_desc = tw.slice.as_ref().expect("sliced path needs m >= 2");
    let desc = &tw.outer;
    let ctx = desc.ctx();
    let r1 = tw.inner.r();
    let m = tw.m;
    let out_len = g.len() + h.len() - 1;
    let mut out_coords = vec![vec![Fp::ZERO; desc.r()]; out_len];
    for b in 0..r1 {
        let slice_of = |polys: &[AlgebraElement]| -> Result<SkewPoly> {
            let coeffs = polys
                .iter()
                .map(|u| {
                    let coords = (0..m).map(|j| u.coords()[b + r1 * j]).collect();
                    slice_desc.elem_from_coords(coords)
                })
                .collect::<Result<Vec<_>>>()?;
            SkewPoly::from_coeffs(Rc::clone(slice_desc), coeffs)
        };
        let sg = slice_of(g)?;
        let sh = slice_of(h)?;
        if sg.is_zero() || sh.is_zero() {
            continue;
        }
        let prod = psi_split(slice_desc, &phi_split(&sg)?.cbm_mul(&phi_split(&sh)?, ctx));
        for (w, row) in out_coords.iter_mut().enumerate() {
            let c = prod.coeff(w);
            for j in 0..m {
                row[b + r1 * j] = c.coords()[j];
            }
        }
    }
    out_coords.into_iter().map(|c| desc.elem_from_coords(c)).collect()
}

/// Multiply over A₂ by splitting x-exponents into residues mod r₁:
/// f = Σ_k x^k g_k(x^{r₁}), g = Σ_l h_l(x^{r₁}) x^l, with the g_k·h_l
/// products taken in A₂[y, σ^{r₁}] — slicewise banded when the y-degrees
/// fit the exactness window, schoolbook in y otherwise. Always equals the
/// schoolbook product.
pub fn tower_mul_outer(f: &SkewPoly, g: &SkewPoly, tw: &TowerDescriptor) -> Result<SkewPoly> {
    tw.check_operands(f, g)?;
    let desc = &tw.outer;
    let (Some(d1), Some(d2)) = (f.degree(), g.degree()) else {
        return Ok(SkewPoly::zero(Rc::clone(desc)));
    };
    let r1 = tw.inner.r();
    let m = tw.m;

    // g_k(y) collects the x-exponents ≡ k (mod r₁); pulling x^k out front
    // twists each coefficient by σ^{-k}. h_l needs no twist (x^l trails).
    let mut gks: Vec<Vec<AlgebraElement>> = Vec::new();
    for k in 0..r1.min(d1 + 1) {
        let coeffs: Vec<AlgebraElement> = (0..=(d1 - k) / r1)
            .map(|q| desc.sigma_pow(&f.coeff(k + r1 * q), -(k as i64)))
            .collect();
        gks.push(coeffs);
    }
    let mut hls: Vec<Vec<AlgebraElement>> = Vec::new();
    for l in 0..r1.min(d2 + 1) {
        let coeffs: Vec<AlgebraElement> = (0..=(d2 - l) / r1).map(|v| g.coeff(l + r1 * v)).collect();
        hls.push(coeffs);
    }

    let mut out = vec![desc.zero_elem(); d1 + d2 + 1];
    for (k, gk) in gks.iter().enumerate() {
        for (l, hl) in hls.iter().enumerate() {
            let prod = if m >= 2 && gk.len() + hl.len() - 2 < m {
                y_ring_sliced(gk, hl, tw)?
            } else {
                y_ring_naive(gk, hl, tw)
            };
            for (w, qw) in prod.into_iter().enumerate() {
                if qw.is_zero() {
                    continue;
                }
                let idx = k + l + r1 * w;
                out[idx] = desc.add(&out[idx], &desc.sigma_pow(&qw, k as i64));
            }
        }
    }
    SkewPoly::from_coeffs(Rc::clone(desc), out)
}

/// Multiply over A₂ by decomposing both operands over the selector basis:
/// f = Σ_k u^k g_k(x), g = Σ_l h_l(x)·u^l with g_k, h_l ∈ A₁[x,σ], the m²
/// pairwise products taken through [`SkewPoly::fast_mul`] over A₁, and
/// u^k·x^w·u^l reattached as embed(q_w)·u^k·σ^w(u)^l. Always equals the
/// schoolbook product.
pub fn tower_mul_inner(f: &SkewPoly, g: &SkewPoly, tw: &TowerDescriptor) -> Result<SkewPoly> {
    tw.check_operands(f, g)?;
    let desc = &tw.outer;
    let inner = &tw.inner;
    let (Some(d1), Some(d2)) = (f.degree(), g.degree()) else {
        return Ok(SkewPoly::zero(Rc::clone(desc)));
    };

    // f's coefficients decompose directly: c_i = Σ_k embed(γ_{k,i})·u^k.
    let mut gks: Vec<Vec<AlgebraElement>> = vec![Vec::with_capacity(d1 + 1); tw.m];
    for i in 0..=d1 {
        let parts = tw.selector_decompose(&f.coeff(i))?;
        for (k, part) in parts.into_iter().enumerate() {
            gks[k].push(part);
        }
    }
    // g's coefficient sits left of x^i but the selector power must end up
    // on the right of it:
    // c'_i = Σ_l η_{l,i}·σ^i(u^l) with η_{l,i} = σ^i(decomp_l(σ^{-i}(c'_i))).
    let mut hls: Vec<Vec<AlgebraElement>> = vec![Vec::with_capacity(d2 + 1); tw.m];
    for i in 0..=d2 {
        let untwisted = desc.sigma_pow(&g.coeff(i), -(i as i64));
        let parts = tw.selector_decompose(&untwisted)?;
        for (l, part) in parts.into_iter().enumerate() {
            hls[l].push(inner.sigma_pow(&part, i as i64));
        }
    }

    // Selector powers u^0..u^{m-1}, reused across all reattachments.
    let mut u_pows = Vec::with_capacity(tw.m);
    u_pows.push(desc.one_elem());
    for _ in 1..tw.m {
        u_pows.push(desc.mul(u_pows.last().unwrap(), &tw.selector));
    }

    let mut out = vec![desc.zero_elem(); d1 + d2 + 1];
    for (k, gk_coeffs) in gks.iter().enumerate() {
        let gk = SkewPoly::from_coeffs(Rc::clone(inner), gk_coeffs.clone())?;
        if gk.is_zero() {
            continue;
        }
        for (l, hl_coeffs) in hls.iter().enumerate() {
            let hl = SkewPoly::from_coeffs(Rc::clone(inner), hl_coeffs.clone())?;
            if hl.is_zero() {
                continue;
            }
            let q = gk.fast_mul(&hl)?;
            for w in 0..=(d1 + d2).min(q.coeffs().len().saturating_sub(1)) {
                let qw = q.coeff(w);
                if qw.is_zero() {
                    continue;
                }
                let attach = desc.mul(&u_pows[k], &desc.sigma_pow(&u_pows[l], w as i64));
                let term = desc.mul(&tw.embed(&qw)?, &attach);
                out[w] = desc.add(&out[w], &term);
            }
        }
    }
    SkewPoly::from_coeffs(Rc::clone(desc), out)
}

/// Which tower reduction [`tower_dispatch`] ran.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TowerRoute {
    Inner,
    Outer,
}

/// The dispatch rule by itself: inner iff the degree is below r₁/3.
pub fn tower_route(d: usize, tw: &TowerDescriptor) -> TowerRoute {
    if 3 * d < tw.inner.r() {
        TowerRoute::Inner
    } else {
        TowerRoute::Outer
    }
}

/// Multiply over A₂ through the tower, picking the inner decomposition for
/// degrees below r₁/3 and the outer one otherwise, and reporting which ran.
pub fn tower_dispatch_routed(
    f: &SkewPoly,
    g: &SkewPoly,
    tw: &TowerDescriptor,
) -> Result<(SkewPoly, TowerRoute)> {
    tw.check_operands(f, g)?;
    let d = match (f.degree(), g.degree()) {
        (Some(d1), Some(d2)) => d1.max(d2),
        _ => return Ok((SkewPoly::zero(Rc::clone(&tw.outer)), TowerRoute::Inner)),
    };
    match tower_route(d, tw) {
        TowerRoute::Inner => Ok((tower_mul_inner(f, g, tw)?, TowerRoute::Inner)),
        TowerRoute::Outer => Ok((tower_mul_outer(f, g, tw)?, TowerRoute::Outer)),
    }
}

/// [`tower_dispatch_routed`] without the route report.
pub fn tower_dispatch(f: &SkewPoly, g: &SkewPoly, tw: &TowerDescriptor) -> Result<SkewPoly> {
    tower_dispatch_routed(f, g, tw).map(|(p, _)| p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tower(p: u64, r1: usize, r2: usize) -> Rc<TowerDescriptor> {
        TowerDescriptor::new(p, r1, r2).unwrap()
    }

    #[test]
    fn embedding_commutes_with_algebra_ops() {
        let tw = tower(101, 4, 12);
        let a1 = tw.inner();
        let a2 = tw.outer();
        for seed in 0..30u64 {
            let u = a1.random_element(seed);
            let v = a1.random_element(seed + 1000);
            assert_eq!(
                tw.embed(&a1.mul(&u, &v)).unwrap(),
                a2.mul(&tw.embed(&u).unwrap(), &tw.embed(&v).unwrap())
            );
            assert_eq!(
                tw.embed(&a1.add(&u, &v)).unwrap(),
                a2.add(&tw.embed(&u).unwrap(), &tw.embed(&v).unwrap())
            );
            // The outer σ restricted to embedded A₁ is the inner σ.
            assert_eq!(
                a2.sigma_pow(&tw.embed(&u).unwrap(), 1),
                tw.embed(&a1.sigma_pow(&u, 1)).unwrap()
            );
        }
    }

    #[test]
    fn sigma_r1_fixes_embedded_elements() {
        let tw = tower(101, 4, 12);
        for seed in 0..20u64 {
            let e = tw.embed(&tw.inner().random_element(seed)).unwrap();
            assert_eq!(tw.outer().sigma_pow(&e, tw.inner().r() as i64), e);
        }
        // ... and moves non-embedded elements.
        let probe = tw.outer().basis_elem(0);
        assert_ne!(tw.outer().sigma_pow(&probe, tw.inner().r() as i64), probe);
    }

    #[test]
    fn selector_powers_are_a_basis() {
        // decompose → recompose is the identity on random A₂ elements.
        let tw = tower(101, 4, 12);
        let a2 = tw.outer();
        for seed in 0..20u64 {
            let v = a2.random_element(seed * 3 + 1);
            let parts = tw.selector_decompose(&v).unwrap();
            assert_eq!(parts.len(), tw.m());
            let mut acc = a2.zero_elem();
            let mut upow = a2.one_elem();
            for part in &parts {
                acc = a2.add(&acc, &a2.mul(&tw.embed(part).unwrap(), &upow));
                upow = a2.mul(&upow, tw.selector());
            }
            assert_eq!(acc, v);
        }
    }

    #[test]
    fn outer_matches_naive() {
        let tw = tower(101, 4, 12);
        for seed in 0..20u64 {
            let f = SkewPoly::random(Rc::clone(tw.outer()), 7, 7000 + seed);
            let g = SkewPoly::random(Rc::clone(tw.outer()), 7, 8000 + seed);
            assert_eq!(
                tower_mul_outer(&f, &g, &tw).unwrap(),
                f.naive_mul(&g).unwrap(),
                "seed={seed}"
            );
        }
    }

    #[test]
    fn outer_matches_naive_past_the_banded_window() {
        // Degree 25 makes the y-degrees overflow m = 3, forcing the
        // schoolbook y-ring branch.
        let tw = tower(101, 4, 12);
        let f = SkewPoly::random(Rc::clone(tw.outer()), 25, 91);
        let g = SkewPoly::random(Rc::clone(tw.outer()), 25, 92);
        assert_eq!(
            tower_mul_outer(&f, &g, &tw).unwrap(),
            f.naive_mul(&g).unwrap()
        );
    }

    #[test]
    fn inner_matches_naive() {
        let tw = tower(101, 5, 10);
        for seed in 0..20u64 {
            let f = SkewPoly::random(Rc::clone(tw.outer()), 1, 100 + seed);
            let g = SkewPoly::random(Rc::clone(tw.outer()), 1, 200 + seed);
            assert_eq!(
                tower_mul_inner(&f, &g, &tw).unwrap(),
                f.naive_mul(&g).unwrap(),
                "seed={seed}"
            );
        }
    }

    #[test]
    fn inner_matches_naive_above_its_sweet_spot() {
        // d = 4 exceeds r₁/3, so the A₁-level products fall back to
        // schoolbook internally; the reduction must still be exact.
        let tw = tower(101, 5, 10);
        let f = SkewPoly::random(Rc::clone(tw.outer()), 4, 55);
        let g = SkewPoly::random(Rc::clone(tw.outer()), 4, 56);
        assert_eq!(
            tower_mul_inner(&f, &g, &tw).unwrap(),
            f.naive_mul(&g).unwrap()
        );
    }

    #[test]
    fn degree_zero_inner_is_the_algebra_product() {
        let tw = tower(101, 4, 12);
        let a2 = tw.outer();
        let u = a2.random_element(5);
        let v = a2.random_element(6);
        let f = SkewPoly::monomial(Rc::clone(a2), u.clone(), 0).unwrap();
        let g = SkewPoly::monomial(Rc::clone(a2), v.clone(), 0).unwrap();
        let prod = tower_mul_inner(&f, &g, &tw).unwrap();
        assert_eq!(prod.degree(), Some(0));
        assert_eq!(prod.coeff(0), a2.mul(&u, &v));
    }

    #[test]
    fn trivial_tower_reduces_to_plain_products() {
        // r₁ = r₂: m = 1, the selector is zero-ish (single block), and both
        // paths collapse to one product each.
        let tw = tower(101, 6, 6);
        assert_eq!(tw.m(), 1);
        for seed in 0..10u64 {
            let f = SkewPoly::random(Rc::clone(tw.outer()), 3, 61 + seed);
            let g = SkewPoly::random(Rc::clone(tw.outer()), 2, 62 + seed);
            let want = f.naive_mul(&g).unwrap();
            assert_eq!(tower_mul_outer(&f, &g, &tw).unwrap(), want);
            assert_eq!(tower_mul_inner(&f, &g, &tw).unwrap(), want);
        }
    }

    #[test]
    fn dispatch_rule_and_agreement() {
        let tw = tower(101, 12, 24);
        let low = SkewPoly::random(Rc::clone(tw.outer()), 1, 11);
        let low2 = SkewPoly::random(Rc::clone(tw.outer()), 1, 12);
        let (p1, route1) = tower_dispatch_routed(&low, &low2, &tw).unwrap();
        assert_eq!(route1, TowerRoute::Inner, "d=1 below r1/3");
        assert_eq!(p1, low.naive_mul(&low2).unwrap());

        let high = SkewPoly::random(Rc::clone(tw.outer()), 12, 13);
        let high2 = SkewPoly::random(Rc::clone(tw.outer()), 12, 14);
        let (p2, route2) = tower_dispatch_routed(&high, &high2, &tw).unwrap();
        assert_eq!(route2, TowerRoute::Outer, "d=r1 takes the outer path");
        assert_eq!(p2, high.naive_mul(&high2).unwrap());

        // Both paths agree with the oracle on one shared instance.
        let tw2 = tower(101, 4, 12);
        let f = SkewPoly::random(Rc::clone(tw2.outer()), 3, 15);
        let g = SkewPoly::random(Rc::clone(tw2.outer()), 3, 16);
        let want = f.naive_mul(&g).unwrap();
        assert_eq!(tower_mul_inner(&f, &g, &tw2).unwrap(), want);
        assert_eq!(tower_mul_outer(&f, &g, &tw2).unwrap(), want);
    }

    #[test]
    fn zero_operands_short_circuit() {
        let tw = tower(101, 4, 12);
        let f = SkewPoly::random(Rc::clone(tw.outer()), 2, 3);
        let z = SkewPoly::zero(Rc::clone(tw.outer()));
        assert!(tower_mul_outer(&f, &z, &tw).unwrap().is_zero());
        assert!(tower_mul_inner(&z, &f, &tw).unwrap().is_zero());
        assert!(tower_dispatch(&z, &z, &tw).unwrap().is_zero());
    }

    #[test]
    fn malformed_towers_are_rejected() {
        assert!(matches!(
            TowerDescriptor::new(101, 5, 12),
            Err(Error::NotATower(_))
        ));
        // Operands over a foreign algebra are refused even with valid dims.
        let tw = tower(101, 4, 12);
        let other = AlgebraDescriptor::build(AlgebraKind::TotallySplit, 101, 8, 0).unwrap();
        let f = SkewPoly::random(Rc::clone(&other), 2, 1);
        let g = SkewPoly::random(Rc::clone(&other), 2, 2);
        assert!(matches!(
            tower_mul_outer(&f, &g, &tw),
            Err(Error::NotATower(_))
        ));
        // Mismatched operands fail before tower checks.
        let h = SkewPoly::random(Rc::clone(tw.outer()), 2, 3);
        assert!(matches!(
            tower_mul_inner(&f, &h, &tw),
            Err(Error::AlgebraMismatch)
        ));
    }
}
