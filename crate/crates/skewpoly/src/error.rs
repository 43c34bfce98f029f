//! Error type shared across the crate.
//!
//! Every fallible operation returns [`Error`]; variants are coarse on purpose
//! so that callers (and the CLI exit-code mapping) can match on the failure
//! class rather than on message text.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure classes for field, algebra, and multiplication routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The requested modulus failed the deterministic primality check.
    NotPrime(u64),
    /// Moduli must fit comfortably in a machine word (p < 2^31).
    ModulusTooLarge(u64),
    /// Moduli must be at least 3.
    ModulusTooSmall(u64),
    /// Attempted to invert (or divide by) zero.
    ZeroInverse,
    /// No element of multiplicative order r exists (r does not divide p-1).
    NoRootOfUnity { p: u64, r: usize },
    /// Interpolation nodes must be pairwise distinct.
    DuplicateNodes,
    /// The supplied element does not have multiplicative order exactly r.
    BadRootOrder,
    /// No constant c makes t^r - c (or t^r - t - c) irreducible for these parameters.
    NoIrreducible { p: u64, r: usize },
    /// Artin algebras require r = p (the characteristic).
    NotCharR { p: u64, r: usize },
    /// Split and Kummer algebras require p > 3r.
    SmallField { p: u64, r: usize },
    /// Dimension parameter out of range (e.g. r < 2 for a split algebra).
    BadDimension(usize),
    /// Operands belong to different algebra descriptors.
    AlgebraMismatch,
    /// Coordinate vector length does not match the algebra dimension.
    SizeMismatch,
    /// Operation applied to an algebra kind it does not support.
    KindMismatch,
    /// Input degree outside the structured algorithm's validity range.
    DegreeTooLarge,
    /// Tower construction invariants violated (e.g. r1 does not divide r2).
    NotATower(String),
    /// No primitive element / basis construction failed for the tower step.
    NoPrimitive,
    /// Harness configuration invalid (bad grid, missing parameter, ...).
    InvalidConfig(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "NotPrime: {p} is not prime"),
            Error::ModulusTooLarge(p) => write!(f, "ModulusTooLarge: {p} >= 2^31"),
            Error::ModulusTooSmall(p) => write!(f, "ModulusTooSmall: {p} < 3"),
            Error::ZeroInverse => write!(f, "ZeroInverse: division by zero"),
            Error::NoRootOfUnity { p, r } => {
                write!(f, "NoRootOfUnity: {r} does not divide p-1 for p={p}")
            }
            Error::DuplicateNodes => write!(f, "DuplicateNodes: interpolation nodes repeat"),
            Error::BadRootOrder => write!(f, "BadRootOrder: element order differs from r"),
            Error::NoIrreducible { p, r } => {
                write!(f, "NoIrreducible: no valid constant for p={p}, r={r}")
            }
            Error::NotCharR { p, r } => {
                write!(f, "NotCharR: Artin algebras need r = p, got p={p}, r={r}")
            }
            Error::SmallField { p, r } => {
                write!(f, "SmallField: need p > 3r, got p={p}, r={r}")
            }
            Error::BadDimension(r) => write!(f, "BadDimension: invalid dimension {r}"),
            Error::AlgebraMismatch => write!(f, "AlgebraMismatch: operands use different algebras"),
            Error::SizeMismatch => write!(f, "SizeMismatch: coordinate length != algebra dimension"),
            Error::KindMismatch => write!(f, "KindMismatch: operation unsupported for this algebra kind"),
            Error::DegreeTooLarge => write!(f, "DegreeTooLarge: degree outside the structured range"),
            Error::NotATower(msg) => write!(f, "NotATower: {msg}"),
            Error::NoPrimitive => write!(f, "NoPrimitive: tower basis construction failed"),
            Error::InvalidConfig(msg) => write!(f, "InvalidConfig: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
