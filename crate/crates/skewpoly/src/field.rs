//! Prime-field arithmetic with exact operation counting.
//!
//! All base-field work in this crate flows through a [`FieldContext`]: a
//! validated word-sized prime modulus plus an attached [`OpCounter`] session.
//! Every public operation tallies what it does — multiplications/divisions
//! into `n_mul`, additions/subtractions into `n_add`, inversions into
//! `n_inv` — so higher layers can report counted costs that are functions of
//! the inputs alone, never of wall-clock conditions.
//!
//! Design points:
//! * moduli are restricted to p < 2^31 so products fit in `u64` without
//!   Montgomery or barrett tricks; intermediates use plain double-width
//!   arithmetic;
//! * primality is checked at construction with a deterministic Miller–Rabin
//!   witness set valid for all 64-bit inputs;
//! * layout work (copying, reindexing, canonicalizing inputs) is free;
//!   only arithmetic counts.
//!
//! One context (and hence one counter) is intended per measurement stream;
//! the counter uses interior mutability so contexts can be shared immutably
//! within a stream.

use std::cell::Cell;

use crate::error::{Error, Result};

/// Largest permitted modulus (exclusive): keeps a*b < 2^62 inside `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// An element of F_p in canonical residue form (0 <= value < p).
///
/// The element deliberately does not know its modulus; all arithmetic goes
/// through the owning [`FieldContext`], mirroring how the rest of the crate
/// passes algebra descriptors alongside raw coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp(u64);

impl Fp {
    /// The zero element (canonical in every field).
    pub const ZERO: Fp = Fp(0);

    /// The canonical residue as a bare integer.
    pub fn raw(self) -> u64 {
        self.0
    }

    /// True when this is the additive identity.
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Snapshot of counter tallies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounts {
    /// Base-field multiplications and divisions.
    pub n_mul: u64,
    /// Base-field additions and subtractions.
    pub n_add: u64,
    /// Base-field inversions.
    pub n_inv: u64,
}

/// Monotone tallies for one measurement session.
///
/// Interior mutability lets a shared `&FieldContext` count; tallies only ever
/// increase between [`OpCounter::reset`] calls.
#[derive(Debug, Default)]
pub struct OpCounter {
    muls: Cell<u64>,
    adds: Cell<u64>,
    invs: Cell<u64>,
}

impl OpCounter {
    fn bump_mul(&self) {
        self.muls.set(self.muls.get() + 1);
    }

    fn bump_add(&self) {
        self.adds.set(self.adds.get() + 1);
    }

    fn bump_inv(&self) {
        self.invs.set(self.invs.get() + 1);
    }

    /// Current tallies.
    pub fn snapshot(&self) -> OpCounts {
        OpCounts {
            n_mul: self.muls.get(),
            n_add: self.adds.get(),
            n_inv: self.invs.get(),
        }
    }

    /// Zero all tallies.
    pub fn reset(&self) {
        self.muls.set(0);
        self.adds.set(0);
        self.invs.set(0);
    }
}

/// A validated prime field F_p with an owned counting session.
#[derive(Debug)]
pub struct FieldContext {
    p: u64,
    counter: OpCounter,
}

impl FieldContext {
    /// Validate and construct a field context.
    ///
    /// Requires 3 <= p < 2^31 and p prime (deterministic Miller–Rabin).
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 {
            return Err(Error::ModulusTooSmall(p));
        }
        if p >= MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldContext {
            p,
            counter: OpCounter::default(),
        })
    }

    /// The modulus.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The attached counter session.
    pub fn counter(&self) -> &OpCounter {
        &self.counter
    }

    /// Shorthand for `self.counter().snapshot()`.
    pub fn counts(&self) -> OpCounts {
        self.counter.snapshot()
    }

    /// Shorthand for `self.counter().reset()`.
    pub fn reset_counts(&self) {
        self.counter.reset()
    }

    /// Canonicalize an integer into the field (free: not arithmetic).
    pub fn elem(&self, v: u64) -> Fp {
        Fp(v % self.p)
    }

    /// Canonicalize a signed integer into the field (free).
    pub fn elem_i64(&self, v: i64) -> Fp {
        let p = self.p as i64;
        Fp(v.rem_euclid(p) as u64)
    }

    /// Additive identity.
    pub fn zero(&self) -> Fp {
        Fp(0)
    }

    /// Multiplicative identity.
    pub fn one(&self) -> Fp {
        Fp(1)
    }

    /// Counted addition.
    pub fn add(&self, a: Fp, b: Fp) -> Fp {
        self.counter.bump_add();
        let s = a.0 + b.0;
        Fp(if s >= self.p { s - self.p } else { s })
    }

    /// Counted subtraction.
    pub fn sub(&self, a: Fp, b: Fp) -> Fp {
        self.counter.bump_add();
        Fp(if a.0 >= b.0 {
            a.0 - b.0
        } else {
            a.0 + self.p - b.0
        })
    }

    /// Counted negation (tallied as a subtraction).
    pub fn neg(&self, a: Fp) -> Fp {
        self.counter.bump_add();
        Fp(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    /// Counted multiplication.
    pub fn mul(&self, a: Fp, b: Fp) -> Fp {
        self.counter.bump_mul();
        Fp(a.0 * b.0 % self.p)
    }

    /// Counted inversion via the extended Euclidean algorithm.
    ///
    /// Tallies one inversion regardless of the internal Euclid steps; errors
    /// on zero.
    pub fn inv(&self, a: Fp) -> Result<Fp> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        self.counter.bump_inv();
        // Extended Euclid on (a, p); p prime so gcd = 1.
        let (mut t, mut new_t): (i64, i64) = (0, 1);
        let (mut r, mut new_r): (i64, i64) = (self.p as i64, a.0 as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1, "modulus validated prime, gcd must be 1");
        Ok(self.elem_i64(t))
    }

    /// Counted division: one multiplication plus one inversion.
    pub fn div(&self, a: Fp, b: Fp) -> Result<Fp> {
        let bi = self.inv(b)?;
        Ok(self.mul(a, bi))
    }

    /// Counted exponentiation by square-and-multiply.
    ///
    /// Each squaring and each conditional product is tallied individually;
    /// `pow(a, 0)` returns 1 with no counted work.
    pub fn pow(&self, a: Fp, e: u64) -> Fp {
        if e == 0 {
            return Fp(1);
        }
        let mut base = a;
        let mut exp = e;
        let mut acc: Option<Fp> = None;
        loop {
            if exp & 1 == 1 {
                acc = Some(match acc {
                    None => base,
                    Some(v) => self.mul(v, base),
                });
            }
            exp >>= 1;
            if exp == 0 {
                break;
            }
            base = self.mul(base, base);
        }
        acc.expect("e > 0 always sets the accumulator")
    }

    /// Deterministically find an element of multiplicative order exactly r.
    ///
    /// Scans candidate bases g = 2, 3, ... in increasing order, maps each to
    /// g^((p-1)/r), and returns the first image whose order is exactly r
    /// (checked against the prime factors of r). Requires r >= 1 and
    /// r | p - 1; `r = 1` yields 1.
    pub fn root_of_unity(&self, r: usize) -> Result<Fp> {
        if r == 0 {
            return Err(Error::BadDimension(0));
        }
        let r64 = r as u64;
        if (self.p - 1) % r64 != 0 {
            return Err(Error::NoRootOfUnity { p: self.p, r });
        }
        let cofactor = (self.p - 1) / r64;
        let prime_factors = distinct_prime_factors(r64);
        for g in 2..self.p {
            let z = self.pow(Fp(g), cofactor);
            if self.has_order(z, r64, &prime_factors) {
                return Ok(z);
            }
        }
        // p - 1 divisible by r guarantees a cyclic subgroup of order r, so a
        // generator of F_p^* (which exists) always succeeds before this point.
        unreachable!("multiplicative group of a prime field is cyclic")
    }

    /// True when z has multiplicative order exactly `order` (whose distinct
    /// prime factors are supplied). Counted via `pow`.
    pub(crate) fn has_order(&self, z: Fp, order: u64, prime_factors: &[u64]) -> bool {
        if z.0 == 0 {
            return false;
        }
        if self.pow(z, order) != Fp(1) {
            return false;
        }
        prime_factors
            .iter()
            .all(|&q| self.pow(z, order / q) != Fp(1))
    }
}

/// Distinct prime factors by trial division (inputs here are small dims).
pub(crate) fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Deterministic Miller–Rabin for 64-bit inputs.
///
/// The fixed witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is a
/// known-complete certificate below 2^64, so the answer is exact.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64) -> FieldContext {
        FieldContext::new(p).unwrap()
    }

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(FieldContext::new(1).unwrap_err(), Error::ModulusTooSmall(1));
        assert_eq!(FieldContext::new(2).unwrap_err(), Error::ModulusTooSmall(2));
        assert_eq!(FieldContext::new(91).unwrap_err(), Error::NotPrime(91));
        assert_eq!(FieldContext::new(1 << 32).unwrap_err(), Error::ModulusTooLarge(1 << 32));
        // 2^31 - 1 is prime and is the largest admissible modulus.
        assert!(FieldContext::new((1 << 31) - 1).is_ok());
        assert_eq!(
            FieldContext::new(1 << 31).unwrap_err(),
            Error::ModulusTooLarge(1 << 31)
        );
    }

    #[test]
    fn primality_is_exact_on_small_range() {
        // Independent sieve oracle over [0, 2000).
        let n = 2000usize;
        let mut sieve = vec![true; n];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..n {
            if sieve[i] {
                let mut j = i * i;
                while j < n {
                    sieve[j] = false;
                    j += i;
                }
            }
        }
        for v in 0..n {
            assert_eq!(is_prime_u64(v as u64), sieve[v], "disagree at {v}");
        }
    }

    #[test]
    fn add_matches_hand_values() {
        let f = ctx(5);
        assert_eq!(f.add(f.elem(3), f.elem(4)), f.elem(2));
        let f97 = ctx(97);
        assert_eq!(f97.add(f97.elem(96), f97.elem(96)), f97.elem(95));
    }

    #[test]
    fn mul_and_inv_match_brute_force() {
        let f = ctx(7);
        assert_eq!(f.mul(f.elem(2), f.elem(3)), f.elem(6));
        // Brute-force inverse table over F_7.
        for a in 1..7u64 {
            let inv = (1..7u64).find(|b| a * b % 7 == 1).unwrap();
            assert_eq!(f.inv(f.elem(a)).unwrap(), f.elem(inv));
        }
        assert_eq!(f.inv(f.zero()).unwrap_err(), Error::ZeroInverse);
    }

    #[test]
    fn pow_handles_edges() {
        let f = ctx(5);
        assert_eq!(f.pow(f.elem(2), 4), f.one());
        assert_eq!(f.pow(f.elem(2), 0), f.one());
        assert_eq!(f.pow(f.zero(), 5), f.zero());
        // Fermat: a^(p-1) = 1 for all nonzero a.
        let f97 = ctx(97);
        for a in 1..97u64 {
            assert_eq!(f97.pow(f97.elem(a), 96), f97.one());
        }
    }

    #[test]
    fn field_axioms_hold_on_random_triples() {
        // Deterministic LCG inputs; >= 1000 triples per modulus.
        for p in [5u64, 97, 12289] {
            let f = ctx(p);
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                f.elem(state >> 11)
            };
            for _ in 0..1000 {
                let (a, b, c) = (next(), next(), next());
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
            }
        }
    }

    #[test]
    fn counter_tallies_exact_script() {
        let f = ctx(97);
        f.reset_counts();
        let mut acc = f.one();
        for i in 0..10 {
            acc = f.add(acc, f.elem(i));
        }
        for i in 1..8 {
            acc = f.mul(acc, f.elem(i));
        }
        let counts = f.counts();
        assert_eq!(
            counts,
            OpCounts {
                n_mul: 7,
                n_add: 10,
                n_inv: 0
            }
        );
        f.inv(acc).unwrap();
        assert_eq!(f.counts().n_inv, 1);
        f.reset_counts();
        assert_eq!(f.counts(), OpCounts::default());
    }

    #[test]
    fn root_of_unity_small_cases() {
        let f5 = ctx(5);
        let z = f5.root_of_unity(4).unwrap();
        assert!(z == f5.elem(2) || z == f5.elem(3));
        // Deterministic: repeated calls agree.
        assert_eq!(z, f5.root_of_unity(4).unwrap());
        assert_eq!(f5.root_of_unity(1).unwrap(), f5.one());

        let f7 = ctx(7);
        let z3 = f7.root_of_unity(3).unwrap();
        assert!(z3 == f7.elem(2) || z3 == f7.elem(4));

        assert_eq!(
            f7.root_of_unity(4).unwrap_err(),
            Error::NoRootOfUnity { p: 7, r: 4 }
        );
    }

    #[test]
    fn root_of_unity_has_exact_order() {
        for (p, r) in [(97u64, 8usize), (97, 16), (193, 32), (12289, 12), (101, 25)] {
            let f = ctx(p);
            let z = f.root_of_unity(r).unwrap();
            assert_eq!(f.pow(z, r as u64), f.one());
            for q in distinct_prime_factors(r as u64) {
                assert_ne!(f.pow(z, r as u64 / q), f.one(), "order divides r/{q}");
            }
        }
    }
}
