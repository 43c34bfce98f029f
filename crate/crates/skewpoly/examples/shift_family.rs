//! The shift family k[a]/(a^p - a - c) in characteristic p, with twist
//! a -> a + 1. Products are computed in a two-variable normal form: commute
//! every x to the right, reduce the a-powers, and read the coefficients
//! back off. The interesting move is the gauge exchange — rewriting
//! "x-powers first" rows into "a-powers first" rows and back — which this
//! example demonstrates directly before multiplying.
//!
//! ```bash
//! cargo run --example shift_family
//! ```

use std::rc::Rc;

use skewpoly::artin::{alg5_exchange, ExchangeDirection};
use skewpoly::kummer::BiGradedPoly;
use skewpoly::{AlgebraDescriptor, AlgebraKind, SkewPoly};

fn main() {
    let p = 13u64;
    let desc = AlgebraDescriptor::build(AlgebraKind::Artin, p, p as usize, 2).unwrap();
    let ctx = desc.ctx();
    println!("k = F_{p}, dimension r = {p}, twist a -> a + 1");

    // x^2 a, read x-first, becomes (a + 2) x^2 once the a moves in front:
    // commuting a leftward across each x adds 1.
    let word = BiGradedPoly::monomial(2, 1, ctx.one());
    let swapped = alg5_exchange(&word, ExchangeDirection::XFirstToAFirst, &desc).unwrap();
    println!(
        "x^2 a  ->  a-first coefficients on x^2: {:?}",
        swapped.table()[2].iter().map(|v| v.raw()).collect::<Vec<_>>()
    );
    let back = alg5_exchange(&swapped, ExchangeDirection::AFirstToXFirst, &desc).unwrap();
    assert_eq!(back, word, "the exchange is an involution pair");

    // Full product through the structured path, checked against schoolbook.
    let d = (p as usize) / 3 - 1;
    let f = SkewPoly::random(Rc::clone(&desc), d, 31);
    let g = SkewPoly::random(Rc::clone(&desc), d, 32);

    ctx.reset_counts();
    let slow = f.naive_mul(&g).unwrap();
    let slow_muls = ctx.counts().n_mul;

    ctx.reset_counts();
    let (fast, route) = f.fast_mul_routed(&g).unwrap();
    let fast_muls = ctx.counts().n_mul;

    assert_eq!(fast, slow);
    println!("degree {d} product, route {route}");
    println!("muls: schoolbook {slow_muls}, structured {fast_muls}");
    println!("(the structured path pays off as p grows; try p = 127, d = 42)");
}
