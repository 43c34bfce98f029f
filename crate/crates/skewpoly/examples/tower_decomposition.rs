//! Two-stage products: when the rotation algebra's dimension factors as
//! r2 = r1 * m, a product over k^{r2} can be reduced either outward (rewrite
//! in the variable y = x^{r1}, whose twist has order m) or inward (rewrite
//! coefficients over the subalgebra k^{r1} spanned by block-constant
//! vectors). The dispatcher picks inward exactly when the degree sits inside
//! the r1-sized structured window.
//!
//! ```bash
//! cargo run --example tower_decomposition
//! ```

use std::rc::Rc;

use skewpoly::tower::{tower_dispatch_routed, tower_mul_inner, tower_mul_outer};
use skewpoly::{SkewPoly, TowerDescriptor, TowerRoute};

fn main() {
    let tw = TowerDescriptor::new(101, 4, 12).unwrap();
    println!("tower k^4 inside k^12 over F_101 (m = {})", tw.m());

    // The embedded copy of k^4 repeats each vector across blocks, and the
    // twist to the power r1 = 4 fixes exactly those block-periodic vectors.
    let v = tw.inner().random_element(9);
    let emb = tw.embed(&v).unwrap();
    assert_eq!(tw.outer().sigma_pow(&emb, 4), emb);

    // The selector counts block indices; adjoining it to the embedded copy
    // rebuilds all of k^12 as polynomials in u of degree below m.
    let u = tw.selector();
    println!("selector coords: {:?}", u.coords().iter().map(|v| v.raw()).collect::<Vec<_>>());

    for d in [1usize, 7] {
        let f = SkewPoly::random(Rc::clone(tw.outer()), d, 70 + d as u64);
        let g = SkewPoly::random(Rc::clone(tw.outer()), d, 80 + d as u64);
        let want = f.naive_mul(&g).unwrap();

        // Both reductions are valid at any degree; the dispatcher just
        // picks the cheaper regime.
        assert_eq!(tower_mul_inner(&f, &g, &tw).unwrap(), want);
        assert_eq!(tower_mul_outer(&f, &g, &tw).unwrap(), want);

        let (prod, route) = tower_dispatch_routed(&f, &g, &tw).unwrap();
        assert_eq!(prod, want);
        let label = match route {
            TowerRoute::Inner => "inner (coefficients over k^4)",
            TowerRoute::Outer => "outer (y = x^4 rewrite)",
        };
        println!("degree {d}: dispatched to the {label} reduction");
    }
}
