//! Dense univariate polynomials over F_p: evaluation and interpolation.
//!
//! Two point-set flavours are provided, matching how the multiplication
//! pipelines consume them:
//!
//! * **arbitrary nodes** — Horner evaluation and Lagrange interpolation
//!   (master-polynomial form with counted barycentric weights), both
//!   quadratic; used for the arithmetic progressions 0..r-1;
//! * **full root-of-unity orbits** — evaluation/interpolation at all r
//!   powers of an order-r root ζ. When every prime factor of r is at most 7
//!   this runs as a mixed-radix decimation-in-time transform in
//!   O(r · Σ prime factors) counted multiplications; otherwise it falls back
//!   to the quadratic node path. The inverse transform reuses the forward
//!   machinery at ζ^{-1} and rescales by r^{-1}.
//!
//! Every multiplication/addition/inversion in either flavour is tallied on
//! the owning [`FieldContext`]; index shuffling is free.

use crate::error::{Error, Result};
use crate::field::{distinct_prime_factors, FieldContext, Fp};

/// Coefficient form, ascending powers; always at least one entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly {
    coeffs: Vec<Fp>,
}

impl DensePoly {
    /// Wrap a coefficient vector (an empty vector becomes the zero poly).
    pub fn new(mut coeffs: Vec<Fp>, ctx: &FieldContext) -> Self {
        if coeffs.is_empty() {
            coeffs.push(ctx.zero());
        }
        DensePoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero(ctx: &FieldContext) -> Self {
        DensePoly {
            coeffs: vec![ctx.zero()],
        }
    }

    /// Coefficients, ascending.
    pub fn coeffs(&self) -> &[Fp] {
        &self.coeffs
    }

    /// Coefficient of t^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> Fp {
        self.coeffs.get(i).copied().unwrap_or(Fp::ZERO)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Horner evaluation at one point (counted).
    pub fn eval(&self, x: Fp, ctx: &FieldContext) -> Fp {
        let mut acc = *self.coeffs.last().expect("nonempty");
        for &c in self.coeffs.iter().rev().skip(1) {
            acc = ctx.add(ctx.mul(acc, x), c);
        }
        acc
    }
}

/// Evaluate f at each point (Horner per point; O(n·deg) multiplications).
pub fn eval_at_points(f: &DensePoly, pts: &[Fp], ctx: &FieldContext) -> Vec<Fp> {
    pts.iter().map(|&x| f.eval(x, ctx)).collect()
}

/// Interpolate the unique polynomial of degree < n through n distinct nodes.
///
/// Master-polynomial Lagrange: W(t) = Π (t - x_i) is built once, each
/// numerator W/(t - x_i) by synthetic division, and the barycentric weight
/// 1/W'(x_i) per node; all quadratic in n and fully counted (one inversion
/// per node).
pub fn interp_at_points(pts: &[Fp], vals: &[Fp], ctx: &FieldContext) -> Result<DensePoly> {
    if pts.len() != vals.len() {
        return Err(Error::SizeMismatch);
    }
    let n = pts.len();
    if n == 0 {
        return Ok(DensePoly::zero(ctx));
    }
    for i in 0..n {
        for j in i + 1..n {
            if pts[i] == pts[j] {
                return Err(Error::DuplicateNodes);
            }
        }
    }

    // W(t) = prod (t - x_i), built incrementally.
    let mut master = vec![ctx.one()];
    for &x in pts {
        let mut next = vec![ctx.zero(); master.len() + 1];
        for (k, &c) in master.iter().enumerate() {
            next[k + 1] = ctx.add(next[k + 1], c);
            next[k] = ctx.sub(next[k], ctx.mul(c, x));
        }
        master = next;
    }

    let mut out = vec![ctx.zero(); n];
    for i in 0..n {
        // Synthetic division: q(t) = W(t) / (t - x_i).
        let mut q = vec![ctx.zero(); n];
        let mut carry = master[n];
        for k in (0..n).rev() {
            q[k] = carry;
            carry = ctx.add(master[k], ctx.mul(carry, pts[i]));
        }
        // carry is W(x_i) = 0; q(x_i) = W'(x_i) is the weight denominator.
        let mut denom = *q.last().expect("n >= 1");
        for &c in q.iter().rev().skip(1) {
            denom = ctx.add(ctx.mul(denom, pts[i]), c);
        }
        let scale = ctx.mul(vals[i], ctx.inv(denom)?);
        for k in 0..n {
            out[k] = ctx.add(out[k], ctx.mul(scale, q[k]));
        }
    }
    Ok(DensePoly::new(out, ctx))
}

/// True when every prime factor of n is at most 7 (transform-friendly).
pub fn is_smooth(n: usize) -> bool {
    let mut m = n.max(1);
    for q in [2usize, 3, 5, 7] {
        while m % q == 0 {
            m /= q;
        }
    }
    m == 1
}

/// Check that zeta has multiplicative order exactly r.
fn check_root_order(zeta: Fp, r: usize, ctx: &FieldContext) -> Result<()> {
    if r == 0 {
        return Err(Error::BadDimension(0));
    }
    let factors = distinct_prime_factors(r as u64);
    if !ctx.has_order(zeta, r as u64, &factors) {
        return Err(Error::BadRootOrder);
    }
    Ok(())
}

/// Evaluate f at all r powers ζ^0, ζ^1, ..., ζ^{r-1}.
///
/// Output slot l holds f(ζ^l). Uses the mixed-radix transform when r is
/// smooth, the quadratic node path otherwise. Errors with `BadRootOrder`
/// when ζ does not have order exactly r.
pub fn eval_all_roots(f: &DensePoly, zeta: Fp, r: usize, ctx: &FieldContext) -> Result<Vec<Fp>> {
    check_root_order(zeta, r, ctx)?;
    let table = power_table(zeta, r, ctx);

    // Reduce coefficients into length r: t^{r+k} takes the same values as t^k
    // on the orbit, so fold (free adds are not free — counted).
    let mut a = vec![ctx.zero(); r];
    let mut written = vec![false; r];
    for (k, &c) in f.coeffs().iter().enumerate() {
        let slot = k % r;
        if written[slot] {
            a[slot] = ctx.add(a[slot], c);
        } else {
            a[slot] = c;
            written[slot] = true;
        }
    }

    if is_smooth(r) {
        Ok(dft_mixed_radix(&a, &table, ctx))
    } else {
        Ok(a_eval_via_horner(&a, &table, ctx))
    }
}

/// Recover the unique polynomial of degree < r from its values on the full
/// orbit of an order-r root ζ (vals[l] = f(ζ^l)).
///
/// Inverse transform: forward transform at ζ^{-1} (whose power table is the
/// reversal of ζ's — no extra multiplications) followed by scaling with
/// r^{-1} (one counted inversion, r multiplications).
pub fn interp_all_roots(vals: &[Fp], zeta: Fp, r: usize, ctx: &FieldContext) -> Result<DensePoly> {
    if vals.len() != r {
        return Err(Error::SizeMismatch);
    }
    check_root_order(zeta, r, ctx)?;
    let table = power_table(zeta, r, ctx);
    // ζ^{-j} = ζ^{r-j}: reverse the tail of the table.
    let mut inv_table = Vec::with_capacity(r);
    inv_table.push(table[0]);
    for j in 1..r {
        inv_table.push(table[r - j]);
    }

    let spectrum = if is_smooth(r) {
        dft_mixed_radix(vals, &inv_table, ctx)
    } else {
        a_eval_via_horner(vals, &inv_table, ctx)
    };

    let r_inv = ctx.inv(ctx.elem(r as u64))?;
    let coeffs = spectrum.iter().map(|&v| ctx.mul(v, r_inv)).collect();
    Ok(DensePoly::new(coeffs, ctx))
}

/// ζ^0 .. ζ^{r-1}; r-2 counted multiplications.
fn power_table(zeta: Fp, r: usize, ctx: &FieldContext) -> Vec<Fp> {
    let mut table = Vec::with_capacity(r);
    table.push(ctx.one());
    if r > 1 {
        table.push(zeta);
    }
    for _ in 2..r {
        let last = *table.last().expect("nonempty");
        table.push(ctx.mul(last, zeta));
    }
    table
}

/// Quadratic full-orbit evaluation: X[k] = Σ_i a[i] · table[(i·k) mod r].
///
/// Equivalent to Horner at each orbit point but indexes the shared power
/// table, so the count profile matches the node path (O(r^2) products).
fn a_eval_via_horner(a: &[Fp], table: &[Fp], ctx: &FieldContext) -> Vec<Fp> {
    let r = table.len();
    let mut out = Vec::with_capacity(r);
    for k in 0..r {
        let mut acc = a[0];
        for i in 1..r {
            if a[i].is_zero() {
                continue;
            }
            acc = ctx.add(acc, ctx.mul(a[i], table[(i * k) % r]));
        }
        out.push(acc);
    }
    out
}

/// Mixed-radix decimation-in-time transform over the full orbit.
///
/// X[k] = Σ_i a[i] · table[(i·k) mod r]. The length is split by its smallest
/// prime factor q at each level: q sub-transforms of size n/q combine with
/// n·(q-1) counted multiplications per level.
fn dft_mixed_radix(a: &[Fp], table: &[Fp], ctx: &FieldContext) -> Vec<Fp> {
    let r = table.len();
    dft_rec(a, table, r, ctx)
}

fn smallest_prime_factor(n: usize) -> usize {
    for q in [2usize, 3, 5, 7] {
        if n % q == 0 {
            return q;
        }
    }
    let mut d = 11;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

/// Recursive transform of length n (n divides r); the implicit root for this
/// level is ζ^{r/n}, realized by striding the shared power table.
fn dft_rec(a: &[Fp], table: &[Fp], r: usize, ctx: &FieldContext) -> Vec<Fp> {
    let n = a.len();
    if n == 1 {
        return vec![a[0]];
    }
    let q = smallest_prime_factor(n);
    let m = n / q;
    let stride = r / n;

    // Decimate: residue class j mod q forms one sub-input.
    let mut subs = Vec::with_capacity(q);
    for j in 0..q {
        let sub: Vec<Fp> = (0..m).map(|t| a[j + q * t]).collect();
        subs.push(dft_rec(&sub, table, r, ctx));
    }

    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = subs[0][k % m];
        for j in 1..q {
            let twiddle = table[(stride * j * k) % r];
            acc = ctx.add(acc, ctx.mul(twiddle, subs[j][k % m]));
        }
        out.push(acc);
    }
    out
}
