//! Multiply skew polynomials over the rotation algebra k^r, where the twist
//! cycles coordinates one step. Run with:
//!
//! ```bash
//! cargo run --example rotation_family
//! ```

use std::rc::Rc;

use skewpoly::{AlgebraDescriptor, AlgebraKind, SkewPoly};

fn main() {
    let desc = AlgebraDescriptor::build(AlgebraKind::TotallySplit, 101, 12, 0).unwrap();
    let ctx = desc.ctx();

    // The twist rotates coordinates: acting on a basis vector moves its slot.
    let e0 = desc.basis_elem(0);
    println!("sigma(e0) = {:?}", desc.sigma_pow(&e0, 1).coords());

    let f = SkewPoly::random(Rc::clone(&desc), 3, 11);
    let g = SkewPoly::random(Rc::clone(&desc), 3, 12);

    ctx.reset_counts();
    let slow = f.naive_mul(&g).unwrap();
    let slow_cost = ctx.counts();

    ctx.reset_counts();
    let (fast, route) = f.fast_mul_routed(&g).unwrap();
    let fast_cost = ctx.counts();

    assert_eq!(fast, slow);
    println!("degree {} x degree {} -> degree {}", 3, 3, fast.degree().unwrap());
    println!("route: {route}");
    println!("schoolbook: {} muls, {} adds", slow_cost.n_mul, slow_cost.n_add);
    println!("structured: {} muls, {} adds", fast_cost.n_mul, fast_cost.n_add);
}
