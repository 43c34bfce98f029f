//! Deterministic operation-count sweeps through the measurement harness —
//! the same plumbing the `skewbench` binary drives. Counts are exact
//! base-field tallies, so rows are reproducible bit-for-bit from the seed.
//!
//! The sweep below fixes d = 4 and grows r across 60 -> 120 -> 240 in two
//! families. In the rotation family both paths scale linearly in r (a
//! coefficient product there costs r multiplications); in the power-basis
//! family the schoolbook path pays r^2 per coefficient product and falls
//! behind, while the structured path keeps the same shallow slope.
//!
//! ```bash
//! cargo run --example operation_counts
//! ```

use skewpoly::harness::{run_count, to_csv, RunConfig};

fn main() {
    for kind in ["split", "kummer"] {
        let cfg = RunConfig {
            kind: kind.into(),
            p: 1201,
            r: 60,
            d: 4,
            trials: 1,
            seed: 7,
            algo: "both".into(),
            r1: None,
            r2: None,
            grid_r: Some(vec![60, 120, 240]),
            grid_d: None,
            corrupt_fast: false,
        };
        let records = run_count(&cfg).expect("grid sweep");
        println!("# kind = {kind}");
        print!("{}", to_csv(&records));
        println!();
    }
}
