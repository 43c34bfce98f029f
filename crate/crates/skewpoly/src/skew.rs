//! Skew polynomials f = Σ f_i x^i over an algebra A, with x·u = σ(u)·x.
//!
//! Coefficients sit on the *left* of powers of x, and moving x past a
//! coefficient applies σ once: x^i·u = σ^i(u)·x^i. Multiplication therefore
//! expands as
//!
//! ```text
//! (Σ_i f_i x^i)(Σ_j g_j x^j) = Σ_{i,j} f_i · σ^i(g_j) · x^{i+j}
//! ```
//!
//! [`SkewPoly::naive_mul`] implements exactly that double sum — one algebra
//! product and one σ-power per coefficient pair — and serves as the
//! correctness oracle for every structured path. [`SkewPoly::fast_mul`]
//! routes products with both degrees below r/3 through the per-family
//! evaluation/banded-matrix pipelines and falls back to the schoolbook
//! expansion otherwise; [`SkewPoly::fast_mul_routed`] additionally reports
//! which path ran.

use std::rc::Rc;

use crate::algebra::{AlgebraDescriptor, AlgebraElement, AlgebraKind};
use crate::error::{Error, Result};

/// Which implementation [`SkewPoly::fast_mul_routed`] selected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MulRoute {
    /// A structured per-family kernel ran (degrees were below r/3).
    Structured(AlgebraKind),
    /// Degrees were too large for the structured path; the schoolbook
    /// expansion ran instead.
    NaiveFallback,
}

impl std::fmt::Display for MulRoute {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MulRoute::Structured(kind) => write!(f, "structured({})", kind.label()),
            MulRoute::NaiveFallback => write!(f, "naive-fallback"),
        }
    }
}

/// A skew polynomial: dense coefficient list, index = power of x.
#[derive(Clone, Debug)]
pub struct SkewPoly {
    desc: Rc<AlgebraDescriptor>,
    coeffs: Vec<AlgebraElement>,
}

impl SkewPoly {
    /// The zero polynomial.
    pub fn zero(desc: Rc<AlgebraDescriptor>) -> Self {
        SkewPoly { desc, coeffs: Vec::new() }
    }

    /// Wrap a dense coefficient list (index i holds the coefficient of x^i).
    /// Every element must have the descriptor's dimension.
    pub fn from_coeffs(desc: Rc<AlgebraDescriptor>, coeffs: Vec<AlgebraElement>) -> Result<Self> {
        if coeffs.iter().any(|c| c.coords().len() != desc.r()) {
            return Err(Error::SizeMismatch);
        }
        Ok(SkewPoly { desc, coeffs })
    }

    /// The single-term polynomial u·x^i.
    pub fn monomial(desc: Rc<AlgebraDescriptor>, u: AlgebraElement, i: usize) -> Result<Self> {
        if u.coords().len() != desc.r() {
            return Err(Error::SizeMismatch);
        }
        let mut coeffs = vec![desc.zero_elem(); i + 1];
        coeffs[i] = u;
        Ok(SkewPoly { desc, coeffs })
    }

    /// Deterministic dense random polynomial of degree exactly `d`
    /// (the leading coefficient is redrawn until nonzero).
    pub fn random(desc: Rc<AlgebraDescriptor>, d: usize, seed: u64) -> Self {
        let mut coeffs: Vec<AlgebraElement> = (0..=d as u64)
            .map(|i| desc.random_element(seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(i)))
            .collect();
        let mut bump = 1u64;
        while coeffs[d].is_zero() {
            coeffs[d] = desc.random_element(seed.wrapping_add(0xdead_beef).wrapping_add(bump));
            bump += 1;
        }
        SkewPoly { desc, coeffs }
    }

    /// The algebra this polynomial lives over.
    pub fn desc(&self) -> &Rc<AlgebraDescriptor> {
        &self.desc
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Coefficient of x^i (zero element beyond the stored length).
    pub fn coeff(&self, i: usize) -> AlgebraElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.desc.zero_elem())
    }

    /// The stored dense coefficient slice.
    pub fn coeffs(&self) -> &[AlgebraElement] {
        &self.coeffs
    }

    /// Is this the zero polynomial?
    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    fn check_same(&self, other: &SkewPoly) -> Result<()> {
        if !self.desc.same_algebra(&other.desc) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Coefficientwise sum.
    pub fn add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_same(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.desc.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        Ok(SkewPoly { desc: Rc::clone(&self.desc), coeffs })
    }

    /// Coefficientwise difference.
    pub fn sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_same(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.desc.sub(&self.coeff(i), &other.coeff(i)))
            .collect();
        Ok(SkewPoly { desc: Rc::clone(&self.desc), coeffs })
    }

    /// Left multiplication by a scalar element of A (no twist: the scalar
    /// never crosses a power of x).
    pub fn scale(&self, u: &AlgebraElement) -> SkewPoly {
        SkewPoly {
            desc: Rc::clone(&self.desc),
            coeffs: self.coeffs.iter().map(|c| self.desc.mul(u, c)).collect(),
        }
    }

    /// Schoolbook skew product: out_{i+j} += f_i · σ^i(g_j), expanding every
    /// coefficient pair (no sparsity shortcuts beyond a zero *polynomial*
    /// operand). This is the oracle all structured paths are tested against.
    pub fn naive_mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_same(other)?;
        let (Some(d1), Some(d2)) = (self.degree(), other.degree()) else {
            return Ok(SkewPoly::zero(Rc::clone(&self.desc)));
        };
        let desc = &self.desc;
        let mut out = vec![desc.zero_elem(); d1 + d2 + 1];
        for i in 0..=d1 {
            let fi = self.coeff(i);
            for j in 0..=d2 {
                let twisted = desc.sigma_pow(&other.coeff(j), i as i64);
                let term = desc.mul(&fi, &twisted);
                out[i + j] = desc.add(&out[i + j], &term);
            }
        }
        SkewPoly::from_coeffs(Rc::clone(desc), out)
    }

    /// Multiply through the structured per-family kernel when both degrees
    /// are below r/3, falling back to [`SkewPoly::naive_mul`] otherwise.
    /// The result is always exactly the schoolbook product.
    pub fn fast_mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.fast_mul_routed(other).map(|(p, _)| p)
    }

    /// [`SkewPoly::fast_mul`] plus a report of which path actually ran.
    /// Products with a zero operand short-circuit (route: structured).
    pub fn fast_mul_routed(&self, other: &SkewPoly) -> Result<(SkewPoly, MulRoute)> {
        self.check_same(other)?;
        let kind = self.desc.kind();
        let structured = MulRoute::Structured(kind);
        let (Some(d1), Some(d2)) = (self.degree(), other.degree()) else {
            return Ok((SkewPoly::zero(Rc::clone(&self.desc)), structured));
        };
        let r = self.desc.r();
        if 3 * d1.max(d2) >= r {
            return Ok((self.naive_mul(other)?, MulRoute::NaiveFallback));
        }
        let prod = match kind {
            AlgebraKind::TotallySplit => crate::split::mul_split(self, other)?,
            AlgebraKind::Kummer => crate::kummer::alg3_mul(self, other)?,
            AlgebraKind::Artin => crate::artin::alg6_mul(self, other)?,
        };
        Ok((prod, structured))
    }
}

/// Equality up to trailing zero coefficients (and over the same algebra).
impl PartialEq for SkewPoly {
    fn eq(&self, other: &Self) -> bool {
        if !self.desc.same_algebra(&other.desc) {
            return false;
        }
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i) == other.coeff(i))
    }
}

impl Eq for SkewPoly {}
