//! The power-basis family k[a]/(a^r - c) with twist a -> ζa, where ζ is a
//! primitive r-th root of unity. Commuting x across a coefficient multiplies
//! each basis power by the matching power of ζ, and products of low-degree
//! polynomials route through a banded matrix of evaluations.
//!
//! ```bash
//! cargo run --example power_basis_family
//! ```

use std::rc::Rc;

use skewpoly::{AlgebraDescriptor, AlgebraKind, Fp, SkewPoly};

fn main() {
    let desc = AlgebraDescriptor::build(AlgebraKind::Kummer, 97, 8, 1).unwrap();
    let ctx = desc.ctx();
    let zeta = desc.zeta().unwrap();
    println!(
        "k = F_{}, dimension r = {}, zeta = {}, c = {}",
        ctx.p(),
        desc.r(),
        zeta.raw(),
        desc.c().unwrap().raw()
    );

    // x * a = zeta * a * x, visible through the twist on the generator.
    let a = desc.basis_elem(1);
    let mut scaled_coords = vec![Fp::ZERO; desc.r()];
    scaled_coords[1] = zeta;
    let scaled = desc.elem_from_coords(scaled_coords).unwrap();
    assert_eq!(desc.sigma_pow(&a, 1), scaled);
    println!("sigma(a) == zeta * a   (the defining twist)");

    let f = SkewPoly::random(Rc::clone(&desc), 2, 21);
    let g = SkewPoly::random(Rc::clone(&desc), 2, 22);

    ctx.reset_counts();
    let slow = f.naive_mul(&g).unwrap();
    let slow_muls = ctx.counts().n_mul;

    ctx.reset_counts();
    let (fast, route) = f.fast_mul_routed(&g).unwrap();
    let fast_muls = ctx.counts().n_mul;

    assert_eq!(fast, slow);
    println!("product degree: {}", fast.degree().unwrap());
    println!("route: {route}");
    println!("muls: schoolbook {slow_muls}, structured {fast_muls}");
    println!("(at r = 8 the transform setup dominates; the operation_counts");
    println!(" example sweeps r to where the structured slope wins)");
}
