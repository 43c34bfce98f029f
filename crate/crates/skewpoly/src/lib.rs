//! Skew-polynomial arithmetic over ⟨σ⟩-Galois algebras of finite prime
//! fields, with exact operation counting.
//!
//! The objects here are polynomials f = Σ f_i x^i with coefficients in an
//! r-dimensional commutative algebra A over k = F_p, multiplied under the
//! twist x·u = σ(u)·x for a distinguished automorphism σ of order r. Three
//! algebra families are supported — totally split (k^r with rotation),
//! Kummer (k[a]/(a^r - c) with σ(a) = ζa), and Artin (k[a]/(a^p - a - c)
//! with σ(a) = a + 1).
//!
//! Two multiplication paths exist for every family: a schoolbook expansion
//! that applies the twist term by term (the correctness oracle), and a
//! structured path for low degrees (3·deg < r) that rewrites the product as
//! a small number of r-point evaluations, cyclic-banded matrix products, and
//! interpolations, costing O(r²) base-field multiplications per product
//! instead of the oracle's O(d²·r²) (Kummer/Artin) — with everything
//! funneled through a counting [`field::FieldContext`] so costs are measured,
//! not estimated.
//!
//! Start with [`algebra::AlgebraDescriptor`] to fix a family, then build
//! [`skew::SkewPoly`] values and multiply them; see the `examples/`
//! directory for walkthroughs of each capability.

pub mod algebra;
pub mod artin;
pub mod banded;
pub mod error;
pub mod field;
pub mod harness;
pub mod kummer;
pub mod skew;
pub mod split;
pub mod tower;
pub mod transforms;

pub use algebra::{AlgebraDescriptor, AlgebraElement, AlgebraKind};
pub use error::{Error, Result};
pub use field::{FieldContext, Fp, OpCounts};
pub use kummer::BiGradedPoly;
pub use skew::{MulRoute, SkewPoly};
pub use tower::{TowerDescriptor, TowerRoute};
