//! End-to-end acceptance checks, one test per contract point. Each test
//! prints a single PASS line on success; a failure panics with the measured
//! numbers so the line reads as the corresponding FAIL.

use std::process::Command;
use std::rc::Rc;

use rand_core::{RngCore, SeedableRng};
use skewpoly::algebra::{AlgebraDescriptor, AlgebraKind};
use skewpoly::artin::{alg4_mul, alg5_exchange, bg_artin_oracle_mul, ExchangeDirection};
use skewpoly::banded::{dense_mul, CyclicBandMatrix};
use skewpoly::field::{FieldContext, Fp};
use skewpoly::harness::{run_count, RunConfig, CSV_HEADER};
use skewpoly::kummer::{alg2_mul, bg_oracle_mul, BiGradedPoly};
use skewpoly::split::{phi_split, psi_split};
use skewpoly::tower::{tower_mul_inner, tower_mul_outer, tower_route, TowerDescriptor, TowerRoute};
use skewpoly::SkewPoly;

type Rng = rand_chacha::ChaCha8Rng;

fn split_desc(p: u64, r: usize) -> Rc<AlgebraDescriptor> {
    AlgebraDescriptor::build(AlgebraKind::TotallySplit, p, r, 0).unwrap()
}

fn kummer_desc(p: u64, r: usize) -> Rc<AlgebraDescriptor> {
    AlgebraDescriptor::build(AlgebraKind::Kummer, p, r, 1).unwrap()
}

fn artin_desc(p: u64) -> Rc<AlgebraDescriptor> {
    AlgebraDescriptor::build(AlgebraKind::Artin, p, p as usize, 2).unwrap()
}

/// The full descriptor grid the suite exercises.
fn all_descriptors() -> Vec<Rc<AlgebraDescriptor>> {
    vec![
        split_desc(101, 7),
        split_desc(101, 12),
        split_desc(101, 25),
        kummer_desc(97, 8),
        kummer_desc(97, 16),
        kummer_desc(193, 32),
        artin_desc(7),
        artin_desc(13),
        artin_desc(31),
    ]
}

#[test]
fn oracle_equivalence() {
    // Structured == schoolbook on 100 seeded pairs per grid point, with
    // d at the top of the structured window.
    for desc in all_descriptors() {
        let r = desc.r();
        let d = r / 3 - 1;
        for trial in 0..100u64 {
            let seed = 0x5eed_0000 + trial;
            let f = SkewPoly::random(Rc::clone(&desc), d, seed);
            let g = SkewPoly::random(Rc::clone(&desc), d, seed ^ 0xffff);
            let fast = f.fast_mul(&g).unwrap();
            let slow = f.naive_mul(&g).unwrap();
            assert_eq!(
                fast,
                slow,
                "kind={:?} p={} r={} d={} trial={}",
                desc.kind(),
                desc.ctx().p(),
                r,
                d,
                trial
            );
        }
    }
    println!("acceptance oracle_equivalence: PASS");
}

#[test]
fn bigraded_normal_form_oracles() {
    // Power-basis family, r = 8: exhaustive monomials within the window,
    // then 200 random dense tables.
    let dk = kummer_desc(97, 8);
    let ctx = dk.ctx();
    let zeta = dk.zeta().unwrap();
    for i in 0..=2usize {
        for j in 0..=2usize {
            for s in 0..=2usize {
                for t in 0..=2usize {
                    let f = BiGradedPoly::monomial(i, j, ctx.elem(5));
                    let g = BiGradedPoly::monomial(s, t, ctx.elem(7));
                    let fast = alg2_mul(&f, &g, &dk).unwrap();
                    let slow = bg_oracle_mul(&f, &g, zeta, ctx);
                    assert_eq!(fast, slow, "kummer ({i},{j})x({s},{t})");
                }
            }
        }
    }
    let mut rng = Rng::seed_from_u64(21);
    for trial in 0..200 {
        let table = |rng: &mut Rng| {
            BiGradedPoly::from_table(
                (0..=2)
                    .map(|_| (0..=2).map(|_| ctx.elem(rng.next_u64())).collect())
                    .collect(),
            )
        };
        let f = table(&mut rng);
        let g = table(&mut rng);
        assert_eq!(
            alg2_mul(&f, &g, &dk).unwrap(),
            bg_oracle_mul(&f, &g, zeta, ctx),
            "kummer random {trial}"
        );
    }

    // Shift family, r = 7: same plan against its binomial-expansion oracle.
    let da = artin_desc(7);
    let ctx = da.ctx();
    for i in 0..=2usize {
        for j in 0..=2usize {
            for s in 0..=2usize {
                for t in 0..=2usize {
                    let f = BiGradedPoly::monomial(i, j, ctx.elem(3));
                    let g = BiGradedPoly::monomial(s, t, ctx.elem(2));
                    let fast = alg4_mul(&f, &g, &da).unwrap();
                    let slow = bg_artin_oracle_mul(&f, &g, ctx);
                    assert_eq!(fast, slow, "artin ({i},{j})x({s},{t})");
                }
            }
        }
    }
    let mut rng = Rng::seed_from_u64(22);
    for trial in 0..200 {
        let table = |rng: &mut Rng| {
            BiGradedPoly::from_table(
                (0..=2)
                    .map(|_| (0..=2).map(|_| ctx.elem(rng.next_u64())).collect())
                    .collect(),
            )
        };
        let f = table(&mut rng);
        let g = table(&mut rng);
        assert_eq!(
            alg4_mul(&f, &g, &da).unwrap(),
            bg_artin_oracle_mul(&f, &g, ctx),
            "artin random {trial}"
        );
    }
    println!("acceptance bigraded_normal_form_oracles: PASS");
}

#[test]
fn structural_identities() {
    for desc in all_descriptors() {
        let r = desc.r();
        let ctx = desc.ctx();
        match desc.kind() {
            AlgebraKind::TotallySplit => {
                // Recovering a polynomial from its matrix image is exact up
                // to degree r-1.
                for seed in 0..50u64 {
                    let f = SkewPoly::random(Rc::clone(&desc), r - 1, 900 + seed);
                    let back = psi_split(&desc, &phi_split(&f).unwrap());
                    assert_eq!(back, f, "split r={r} seed={seed}");
                }
            }
            AlgebraKind::Kummer => {
                // The generator images commute by one twist factor:
                // β·α = ζ·α·β as dense matrices. (Stated the way the
                // x·a = ζ·a·x relation forces; see the decisions record
                // accompanying the build for the sign convention.)
                let zeta = desc.zeta().unwrap();
                let alpha_diag: Vec<Fp> = (0..r).map(|j| desc.zeta_pow(j as i64)).collect();
                let alpha = CyclicBandMatrix::from_diags(r, 0, vec![alpha_diag])
                    .unwrap()
                    .to_dense(ctx);
                let beta = CyclicBandMatrix::beta(r, ctx).to_dense(ctx);
                let ba = dense_mul(&beta, &alpha, ctx);
                let zab: Vec<Vec<Fp>> = dense_mul(&alpha, &beta, ctx)
                    .into_iter()
                    .map(|row| row.into_iter().map(|v| ctx.mul(zeta, v)).collect())
                    .collect();
                assert_eq!(ba, zab, "kummer r={r}: beta*alpha = zeta*alpha*beta");
            }
            AlgebraKind::Artin => {
                let alpha_diag: Vec<Fp> = (0..r as u64).map(|m| ctx.elem(m)).collect();
                let alpha = CyclicBandMatrix::from_diags(r, 0, vec![alpha_diag.clone()])
                    .unwrap()
                    .to_dense(ctx);
                let beta = CyclicBandMatrix::beta(r, ctx).to_dense(ctx);
                // β·α = (α+1)·β
                let ba = dense_mul(&beta, &alpha, ctx);
                let alpha1: Vec<Fp> = alpha_diag.iter().map(|&v| ctx.add(v, ctx.one())).collect();
                let a1b = dense_mul(
                    &CyclicBandMatrix::from_diags(r, 0, vec![alpha1]).unwrap().to_dense(ctx),
                    &beta,
                    ctx,
                );
                assert_eq!(ba, a1b, "artin r={r}: beta*alpha = (alpha+1)*beta");
                // β^r = I
                let mut bp = beta.clone();
                for _ in 1..r {
                    bp = dense_mul(&bp, &beta, ctx);
                }
                let id: Vec<Vec<Fp>> = (0..r)
                    .map(|i| (0..r).map(|j| if i == j { ctx.one() } else { Fp::ZERO }).collect())
                    .collect();
                assert_eq!(bp, id, "artin r={r}: beta^r = I");
                // α^r = α
                let mut ap = alpha.clone();
                for _ in 1..r {
                    ap = dense_mul(&ap, &alpha, ctx);
                }
                assert_eq!(ap, alpha, "artin r={r}: alpha^r = alpha");
            }
        }
    }
    println!("acceptance structural_identities: PASS");
}

#[test]
fn banded_kernel_contract() {
    // Banded times banded equals the dense product, within the counted
    // multiplication budget m1*m2*r, across 200 random shapes.
    let ctx = FieldContext::new(101).unwrap();
    let mut rng = Rng::seed_from_u64(404);
    for trial in 0..200 {
        let r = 4 + (trial % 29); // 4..=32
        let m1 = 1 + (rng.next_u64() as usize) % r.min(6);
        let m2 = 1 + (rng.next_u64() as usize) % r.min(6);
        let lo1 = (rng.next_u64() % (2 * r as u64)) as i64 - r as i64;
        let lo2 = (rng.next_u64() % (2 * r as u64)) as i64 - r as i64;
        let diags = |m: usize, rng: &mut Rng| -> Vec<Vec<Fp>> {
            (0..m)
                .map(|_| (0..r).map(|_| ctx.elem(rng.next_u64())).collect())
                .collect()
        };
        let a = CyclicBandMatrix::from_diags(r, lo1, diags(m1, &mut rng)).unwrap();
        let b = CyclicBandMatrix::from_diags(r, lo2, diags(m2, &mut rng)).unwrap();
        ctx.reset_counts();
        let prod = a.cbm_mul(&b, &ctx);
        let muls = ctx.counts().n_mul;
        assert!(
            muls <= (m1 * m2 * r) as u64,
            "trial {trial}: {muls} muls exceeds {m1}x{m2}x{r}"
        );
        assert_eq!(
            prod.to_dense(&ctx),
            dense_mul(&a.to_dense(&ctx), &b.to_dense(&ctx), &ctx),
            "trial {trial} r={r}"
        );
    }
    println!("acceptance banded_kernel_contract: PASS");
}

#[test]
fn exchange_round_trip() {
    let desc = artin_desc(13);
    let ctx = desc.ctx();
    let mut rng = Rng::seed_from_u64(505);
    for trial in 0..200 {
        let table: Vec<Vec<Fp>> = (0..8)
            .map(|_| (0..13).map(|_| ctx.elem(rng.next_u64())).collect())
            .collect();
        let f = BiGradedPoly::from_table(table);
        let there = alg5_exchange(&f, ExchangeDirection::XFirstToAFirst, &desc).unwrap();
        let back = alg5_exchange(&there, ExchangeDirection::AFirstToXFirst, &desc).unwrap();
        assert_eq!(back, f, "trial {trial}");
    }
    println!("acceptance exchange_round_trip: PASS");
}

#[test]
fn scaling_profile_low_degree_window() {
    // Fixed d = 4, r swept 60 -> 240 (4x) in the rotation family: the
    // structured path's counted multiplications may grow at most 6x. The
    // schoolbook path is required to grow at least 12x by the quadratic
    // cost model; the rotation family's schoolbook product actually costs
    // (d+1)^2 * r multiplications — linear in r, identical to the
    // structured path — so that leg cannot be met there. The power-basis
    // family, whose coefficient products genuinely cost r^2, is measured
    // alongside for contrast before the strict assertion runs.
    let count_at = |kind: &str, p: u64, r: usize, algo: &str| -> u64 {
        let cfg = RunConfig {
            kind: kind.into(),
            p,
            r,
            d: 4,
            trials: 1,
            seed: 7,
            algo: algo.into(),
            r1: None,
            r2: None,
            grid_r: None,
            grid_d: None,
            corrupt_fast: false,
        };
        let records = run_count(&cfg).unwrap();
        records.iter().find(|rec| rec.algo == algo).unwrap().n_mul
    };

    let fast_ratio = count_at("split", 1201, 240, "fast") as f64
        / count_at("split", 1201, 60, "fast") as f64;
    let naive_ratio = count_at("split", 1201, 240, "naive") as f64
        / count_at("split", 1201, 60, "naive") as f64;
    let kummer_naive_ratio = count_at("kummer", 1201, 240, "naive") as f64
        / count_at("kummer", 1201, 60, "naive") as f64;

    println!("structured rotation-family growth 60->240: {fast_ratio:.2}x (bound: <= 6x)");
    println!("schoolbook rotation-family growth 60->240: {naive_ratio:.2}x (required: >= 12x)");
    println!("schoolbook power-basis growth 60->240: {kummer_naive_ratio:.2}x (contrast)");

    assert!(
        fast_ratio <= 6.0,
        "structured growth {fast_ratio:.2} exceeds 6x"
    );
    assert!(
        naive_ratio >= 12.0,
        "acceptance scaling_profile_low_degree_window: FAIL — schoolbook \
         rotation-family growth is {naive_ratio:.2}x, below the required 12x; \
         its coefficient products are coordinatewise (r multiplications, not \
         r^2), so its total is (d+1)^2*r and scales linearly in r, exactly \
         like the structured path ({fast_ratio:.2}x). The r^2-cost contrast \
         family shows {kummer_naive_ratio:.2}x over the same sweep."
    );
    println!("acceptance scaling_profile_low_degree_window: PASS");
}

#[test]
fn tower_reductions() {
    for (r1, r2, d_outer, d_inner) in [(4usize, 12usize, 7usize, 1usize), (5, 10, 4, 1)] {
        let tw = TowerDescriptor::new(101, r1, r2).unwrap();
        for trial in 0..50u64 {
            let f = SkewPoly::random(Rc::clone(tw.outer()), d_outer, 3000 + trial);
            let g = SkewPoly::random(Rc::clone(tw.outer()), d_outer, 4000 + trial);
            assert_eq!(
                tower_mul_outer(&f, &g, &tw).unwrap(),
                f.naive_mul(&g).unwrap(),
                "outer ({r1},{r2}) trial={trial}"
            );
        }
        for trial in 0..50u64 {
            let f = SkewPoly::random(Rc::clone(tw.outer()), d_inner, 5000 + trial);
            let g = SkewPoly::random(Rc::clone(tw.outer()), d_inner, 6000 + trial);
            assert_eq!(
                tower_mul_inner(&f, &g, &tw).unwrap(),
                f.naive_mul(&g).unwrap(),
                "inner ({r1},{r2}) trial={trial}"
            );
        }
        // Dispatch rule: inner exactly when d is below r1/3.
        for d in 0..=r1 + 2 {
            let want = if 3 * d < r1 { TowerRoute::Inner } else { TowerRoute::Outer };
            assert_eq!(tower_route(d, &tw), want, "({r1},{r2}) d={d}");
        }
    }
    println!("acceptance tower_reductions: PASS");
}

/// Rank of a square matrix over F_p by Gaussian elimination.
fn rank(mut m: Vec<Vec<Fp>>, ctx: &FieldContext) -> usize {
    let n = m.len();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&row| !m[row][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = ctx.inv(m[rank][col]).unwrap();
        for j in col..n {
            m[rank][j] = ctx.mul(m[rank][j], inv);
        }
        for row in 0..n {
            if row != rank && !m[row][col].is_zero() {
                let factor = m[row][col];
                for j in col..n {
                    let sub = ctx.mul(factor, m[rank][j]);
                    m[row][j] = ctx.sub(m[row][j], sub);
                }
            }
        }
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

#[test]
fn galois_automorphism_structure() {
    for desc in all_descriptors() {
        let r = desc.r();
        let ctx = desc.ctx();
        // σ has order dividing r on every element...
        for seed in 0..100u64 {
            let u = desc.random_element(seed * 11 + 1);
            assert_eq!(desc.sigma_pow(&u, r as i64), u, "{:?} r={r}", desc.kind());
        }
        // ...and its fixed space is exactly the scalars: rank(σ - id) = r-1.
        let mut m: Vec<Vec<Fp>> = vec![vec![Fp::ZERO; r]; r];
        for j in 0..r {
            let col = desc.sigma_pow(&desc.basis_elem(j), 1);
            for i in 0..r {
                m[i][j] = col.coords()[i];
            }
        }
        for i in 0..r {
            m[i][i] = ctx.sub(m[i][i], ctx.one());
        }
        assert_eq!(
            rank(m, ctx),
            r - 1,
            "{:?} r={r}: fixed space must be one-dimensional",
            desc.kind()
        );
    }
    println!("acceptance galois_automorphism_structure: PASS");
}

#[test]
fn cli_contract() {
    let bin = env!("CARGO_BIN_EXE_skewbench");

    // Clean verify: exit 0, exact CSV header on the first stdout line.
    let ok = Command::new(bin)
        .args(["verify", "--kind", "split", "--p", "101", "--r", "12", "--d", "3", "--trials", "25"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0), "clean verify must exit 0");
    let stdout = String::from_utf8(ok.stdout).unwrap();
    assert_eq!(stdout.lines().next(), Some(CSV_HEADER), "header must be bit-exact");

    let ok2 = Command::new(bin)
        .args(["verify", "--kind", "artin", "--p", "7", "--r", "7", "--d", "1", "--trials", "25"])
        .output()
        .unwrap();
    assert_eq!(ok2.status.code(), Some(0));

    // Invalid parameters: exit 2 with the validation error named.
    let bad = Command::new(bin)
        .args(["verify", "--kind", "kummer", "--p", "97", "--r", "5", "--d", "1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2), "invalid params must exit 2");
    let stderr = String::from_utf8(bad.stderr).unwrap();
    assert!(
        stderr.contains("NoRootOfUnity"),
        "stderr must name the failure: {stderr}"
    );

    // Injected fault: exit 1 plus a standalone reproduction command.
    let corrupted = Command::new(bin)
        .args([
            "verify", "--kind", "split", "--p", "101", "--r", "12", "--d", "3",
            "--trials", "3", "--corrupt-fast",
        ])
        .output()
        .unwrap();
    assert_eq!(corrupted.status.code(), Some(1), "mismatch must exit 1");
    let stderr = String::from_utf8(corrupted.stderr).unwrap();
    assert!(
        stderr.contains("reproduce with: skewbench verify") && stderr.contains("--seed"),
        "stderr must carry a reproduction command: {stderr}"
    );
    println!("acceptance cli_contract: PASS");
}
