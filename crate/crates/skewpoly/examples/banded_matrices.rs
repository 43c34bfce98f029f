//! The cyclic banded matrix kernel on its own. A matrix is stored as a few
//! wrapped diagonals; the product of an m1-diagonal and an m2-diagonal
//! matrix spends exactly m1 * m2 * r base-field multiplications — no dense
//! r^3 blowup — and every structured multiplication path in the crate
//! bottoms out here.
//!
//! ```bash
//! cargo run --example banded_matrices
//! ```

use skewpoly::banded::{dense_mul, CyclicBandMatrix};
use skewpoly::FieldContext;

fn main() {
    let ctx = FieldContext::new(101).unwrap();
    let r = 8;

    let diag = |k: u64| (0..r).map(|i| ctx.elem(k + i as u64)).collect::<Vec<_>>();
    let a = CyclicBandMatrix::from_diags(r, -1, vec![diag(3), diag(40), diag(7)]).unwrap();
    let b = CyclicBandMatrix::from_diags(r, 2, vec![diag(11), diag(20)]).unwrap();

    ctx.reset_counts();
    let prod = a.cbm_mul(&b, &ctx);
    let counts = ctx.counts();
    println!(
        "3-diagonal x 2-diagonal at r = {r}: {} muls (budget 3*2*{r} = {})",
        counts.n_mul,
        3 * 2 * r
    );

    // Same product, dense schoolbook: r^3 multiplications.
    ctx.reset_counts();
    let dense = dense_mul(&a.to_dense(&ctx), &b.to_dense(&ctx), &ctx);
    println!("dense oracle: {} muls", ctx.counts().n_mul);

    assert_eq!(prod.to_dense(&ctx), dense);
    println!("products agree; band of the result starts at offset {}", prod.lo());
}
