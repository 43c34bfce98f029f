//! Instrumented run harness behind the command-line tool: builds algebra or
//! tower instances from a plain config, runs seeded trials of naive and
//! structured products, and reports exact operation counts and wall times
//! as stable records.
//!
//! Three entry points mirror the CLI subcommands:
//!
//! * [`run_verify`] — seeded random pairs, fast vs. naive, with a
//!   reproduction command for every mismatch;
//! * [`run_count`] — a sweep over a grid in r or d, one record per
//!   (point, algorithm, trial), deterministic for a fixed root seed;
//! * [`run_bench`] — like count at a single point but with an unrecorded
//!   warmup and a median wall-time summary per algorithm.
//!
//! Records serialize to CSV under the fixed header [`CSV_HEADER`] (empty
//! fields for columns that do not apply, e.g. r₁/r₂ outside towers) and to
//! JSON one-to-one.
//!
//! Seeding is counter-based: trial t of a run rooted at seed s draws its
//! operands from `trial_seed(s, t)`, and a failing trial is reproduced
//! standalone by rooting a one-trial run at that derived value — the
//! derivation satisfies `trial_seed(trial_seed(s, t), 0) = trial_seed(s, t)`.

use std::rc::Rc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraDescriptor, AlgebraKind};
use crate::error::{Error, Result};
use crate::skew::SkewPoly;
use crate::tower::{tower_dispatch, TowerDescriptor};

/// The exact CSV schema, in column order. Stability matters: downstream
/// plots key on these names.
pub const CSV_HEADER: &str = "kind,p,r,d,r1,r2,algo,trial,n_mul,n_add,n_inv,wall_ns,pass";

/// Everything a run needs, as plain data. `grid_r`/`grid_d` distinguish
/// "not given" (None) from "given but empty" (Some([])) — the latter is an
/// error for the count command.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RunConfig {
    /// One of "split", "kummer", "artin", "tower".
    pub kind: String,
    pub p: u64,
    /// Algebra dimension (ignored for towers, which use r1/r2).
    pub r: usize,
    /// Operand degree.
    pub d: usize,
    pub trials: u32,
    /// Root seed; trial seeds derive from it by counter.
    pub seed: u64,
    /// One of "naive", "fast", "both".
    pub algo: String,
    #[serde(default)]
    pub r1: Option<usize>,
    #[serde(default)]
    pub r2: Option<usize>,
    #[serde(default)]
    pub grid_r: Option<Vec<usize>>,
    #[serde(default)]
    pub grid_d: Option<Vec<usize>>,
    /// Fault injection for exercising the mismatch path: flips one
    /// coordinate of the structured product. Never set outside tests.
    #[serde(default)]
    pub corrupt_fast: bool,
}

/// One (grid point, algorithm, trial) measurement. Fields that do not
/// apply stay None and serialize to empty CSV cells.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RunRecord {
    pub kind: String,
    pub p: u64,
    pub r: Option<usize>,
    pub d: usize,
    pub r1: Option<usize>,
    pub r2: Option<usize>,
    /// "naive" or "fast".
    pub algo: String,
    pub trial: u32,
    pub n_mul: u64,
    pub n_add: u64,
    pub n_inv: u64,
    pub wall_ns: u64,
    /// Set when both algorithms ran on the trial: fast equals naive.
    pub pass: Option<bool>,
}

impl RunRecord {
    /// The record as one CSV line under [`CSV_HEADER`].
    pub fn csv_row(&self) -> String {
        let opt = |v: &Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        let pass = match self.pass {
            Some(true) => "true",
            Some(false) => "false",
            None => "",
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.kind,
            self.p,
            opt(&self.r),
            self.d,
            opt(&self.r1),
            opt(&self.r2),
            self.algo,
            self.trial,
            self.n_mul,
            self.n_add,
            self.n_inv,
            self.wall_ns,
            pass
        )
    }
}

/// Render records as a full CSV document (header + one line per record).
pub fn to_csv(records: &[RunRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    for rec in records {
        out.push('\n');
        out.push_str(&rec.csv_row());
    }
    out.push('\n');
    out
}

/// Render records as a JSON array (parses back to the same records).
pub fn to_json(records: &[RunRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records are plain data")
}

/// Counter-based per-trial seed derivation. Adding the trial counter times
/// an odd constant keeps the map injective per root, and the identity
/// trial_seed(s, 0) = s makes failure reproduction commands exact.
pub fn trial_seed(root: u64, trial: u32) -> u64 {
    root.wrapping_add((trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn operand_seed(trial_root: u64, stream: u64) -> u64 {
    // splitmix64 finalizer over (root ⊕ stream tag): decorrelates the two
    // operand streams from each other and from the raw counter.
    let mut z = trial_root ^ stream.wrapping_mul(0xd6e8_feb8_6659_fd93);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Which multiplications a run performs.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Algo {
    Naive,
    Fast,
    Both,
}

impl Algo {
    fn parse(s: &str) -> Result<Algo> {
        match s {
            "naive" => Ok(Algo::Naive),
            "fast" => Ok(Algo::Fast),
            "both" => Ok(Algo::Both),
            other => Err(Error::InvalidConfig(format!(
                "algo must be naive|fast|both, got {other:?}"
            ))),
        }
    }

    fn runs_naive(self) -> bool {
        self != Algo::Fast
    }

    fn runs_fast(self) -> bool {
        self != Algo::Naive
    }
}

/// A constructed multiplication target: one algebra or one tower.
enum Instance {
    Family(Rc<AlgebraDescriptor>),
    Tower(Rc<TowerDescriptor>),
}

impl Instance {
    fn build(cfg: &RunConfig, r: usize) -> Result<Instance> {
        if cfg.trials == 0 {
            return Err(Error::InvalidConfig("trials must be at least 1".into()));
        }
        match cfg.kind.as_str() {
            "split" => Ok(Instance::Family(AlgebraDescriptor::build(
                AlgebraKind::TotallySplit,
                cfg.p,
                r,
                cfg.seed,
            )?)),
            "kummer" => Ok(Instance::Family(AlgebraDescriptor::build(
                AlgebraKind::Kummer,
                cfg.p,
                r,
                cfg.seed,
            )?)),
            "artin" => Ok(Instance::Family(AlgebraDescriptor::build(
                AlgebraKind::Artin,
                cfg.p,
                r,
                cfg.seed,
            )?)),
            "tower" => {
                let (r1, r2) = match (cfg.r1, cfg.r2) {
                    (Some(r1), Some(r2)) => (r1, r2),
                    _ => {
                        return Err(Error::InvalidConfig(
                            "tower runs need --tower R1:R2".into(),
                        ))
                    }
                };
                Ok(Instance::Tower(TowerDescriptor::new(cfg.p, r1, r2)?))
            }
            other => Err(Error::InvalidConfig(format!(
                "kind must be split|kummer|artin|tower, got {other:?}"
            ))),
        }
    }

    fn poly_desc(&self) -> &Rc<AlgebraDescriptor> {
        match self {
            Instance::Family(d) => d,
            Instance::Tower(tw) => tw.outer(),
        }
    }

    fn fast(&self, f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
        match self {
            Instance::Family(_) => f.fast_mul(g),
            Instance::Tower(tw) => tower_dispatch(f, g, tw),
        }
    }

    fn echo(&self, r: usize) -> (Option<usize>, Option<usize>, Option<usize>) {
        match self {
            Instance::Family(_) => (Some(r), None, None),
            Instance::Tower(tw) => (None, Some(tw.inner().r()), Some(tw.outer().r())),
        }
    }
}

/// Flip one coordinate of the product — the fault-injection hook behind
/// `--corrupt-fast`.
fn corrupt(poly: &SkewPoly) -> SkewPoly {
    let desc = poly.desc();
    let ctx = desc.ctx();
    let mut coeffs: Vec<_> = poly.coeffs().to_vec();
    if coeffs.is_empty() {
        coeffs.push(desc.zero_elem());
    }
    let mut coords = coeffs[0].coords().to_vec();
    coords[0] = ctx.add(coords[0], ctx.one());
    coeffs[0] = desc
        .elem_from_coords(coords)
        .expect("coordinate flip preserves dimension");
    SkewPoly::from_coeffs(Rc::clone(desc), coeffs).expect("same coefficient layout")
}

struct TrialOutput {
    records: Vec<RunRecord>,
    pass: Option<bool>,
}

/// Run one seeded trial at one grid point, producing one record per
/// requested algorithm plus the comparison verdict when both ran.
fn run_trial(
    instance: &Instance,
    cfg: &RunConfig,
    r: usize,
    d: usize,
    trial: u32,
    algo: Algo,
) -> Result<TrialOutput> {
    let desc = instance.poly_desc();
    let ctx = desc.ctx();
    let root = trial_seed(cfg.seed, trial);
    let f = SkewPoly::random(Rc::clone(desc), d, operand_seed(root, 1));
    let g = SkewPoly::random(Rc::clone(desc), d, operand_seed(root, 2));
    let (r_echo, r1_echo, r2_echo) = instance.echo(r);

    let record = |algo_name: &str, n: crate::field::OpCounts, wall_ns: u64| RunRecord {
        kind: cfg.kind.clone(),
        p: cfg.p,
        r: r_echo,
        d,
        r1: r1_echo,
        r2: r2_echo,
        algo: algo_name.to_string(),
        trial,
        n_mul: n.n_mul,
        n_add: n.n_add,
        n_inv: n.n_inv,
        wall_ns,
        pass: None,
    };

    let mut records = Vec::new();
    let mut naive_prod = None;
    if algo.runs_naive() {
        ctx.reset_counts();
        let t0 = Instant::now();
        let prod = f.naive_mul(&g)?;
        let wall = t0.elapsed().as_nanos() as u64;
        records.push(record("naive", ctx.counts(), wall));
        naive_prod = Some(prod);
    }
    let mut fast_prod = None;
    if algo.runs_fast() {
        ctx.reset_counts();
        let t0 = Instant::now();
        let mut prod = instance.fast(&f, &g)?;
        let wall = t0.elapsed().as_nanos() as u64;
        if cfg.corrupt_fast {
            prod = corrupt(&prod);
        }
        records.push(record("fast", ctx.counts(), wall));
        fast_prod = Some(prod);
    }

    let pass = match (&naive_prod, &fast_prod) {
        (Some(n), Some(f)) => Some(n == f),
        _ => None,
    };
    if let Some(ok) = pass {
        for rec in &mut records {
            rec.pass = Some(ok);
        }
    }
    Ok(TrialOutput { records, pass })
}

/// One mismatch found by [`run_verify`]: which trial, the derived seed, and
/// a standalone command that reproduces exactly that trial.
#[derive(Clone, Debug)]
pub struct VerifyFailure {
    pub trial: u32,
    pub seed: u64,
    pub repro: String,
}

/// Everything [`run_verify`] produced.
pub struct VerifyReport {
    pub records: Vec<RunRecord>,
    pub failures: Vec<VerifyFailure>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn repro_command(cfg: &RunConfig, seed: u64) -> String {
    let target = match cfg.kind.as_str() {
        "tower" => format!(
            "--tower {}:{}",
            cfg.r1.unwrap_or_default(),
            cfg.r2.unwrap_or_default()
        ),
        _ => format!("--r {}", cfg.r),
    };
    format!(
        "skewbench verify --kind {} --p {} {} --d {} --trials 1 --seed {}",
        cfg.kind, cfg.p, target, cfg.d, seed
    )
}

/// Run `cfg.trials` seeded random pairs and compare fast against naive on
/// each; the report carries one reproduction command per mismatch.
pub fn run_verify(cfg: &RunConfig) -> Result<VerifyReport> {
    let instance = Instance::build(cfg, cfg.r)?;
    let mut records = Vec::new();
    let mut failures = Vec::new();
    for trial in 0..cfg.trials {
        let out = run_trial(&instance, cfg, cfg.r, cfg.d, trial, Algo::Both)?;
        if out.pass == Some(false) {
            let seed = trial_seed(cfg.seed, trial);
            failures.push(VerifyFailure {
                trial,
                seed,
                repro: repro_command(cfg, seed),
            });
        }
        records.extend(out.records);
    }
    Ok(VerifyReport { records, failures })
}

/// Sweep a grid over r or d (exactly one; a single point if neither is
/// given) and record every (point, algorithm, trial). Deterministic in
/// (config, seed): counted quantities never depend on wall time.
pub fn run_count(cfg: &RunConfig) -> Result<Vec<RunRecord>> {
    let algo = Algo::parse(&cfg.algo)?;
    enum Grid {
        OverR(Vec<usize>),
        OverD(Vec<usize>),
    }
    let grid = match (&cfg.grid_r, &cfg.grid_d) {
        (Some(_), Some(_)) => {
            return Err(Error::InvalidConfig(
                "choose one grid: --grid-r or --grid-d".into(),
            ))
        }
        (Some(rs), None) if rs.is_empty() => {
            return Err(Error::InvalidConfig("empty r grid".into()))
        }
        (None, Some(ds)) if ds.is_empty() => {
            return Err(Error::InvalidConfig("empty d grid".into()))
        }
        (Some(rs), None) => Grid::OverR(rs.clone()),
        (None, Some(ds)) => Grid::OverD(ds.clone()),
        (None, None) => Grid::OverR(vec![cfg.r]),
    };
    let points: Vec<(usize, usize)> = match grid {
        Grid::OverR(rs) => rs.into_iter().map(|r| (r, cfg.d)).collect(),
        Grid::OverD(ds) => ds.into_iter().map(|d| (cfg.r, d)).collect(),
    };
    let mut records = Vec::new();
    for (r, d) in points {
        let instance = Instance::build(cfg, r)?;
        for trial in 0..cfg.trials {
            let out = run_trial(&instance, cfg, r, d, trial, algo)?;
            records.extend(out.records);
        }
    }
    Ok(records)
}

/// Benchmark output: per-trial records plus the per-algorithm median wall
/// time (the headline number; counts are identical across trials anyway).
pub struct BenchReport {
    pub records: Vec<RunRecord>,
    /// (algo, median wall_ns) pairs in a stable order.
    pub medians: Vec<(String, u64)>,
}

/// Measure one configuration: one unrecorded warmup per algorithm, then
/// `cfg.trials` recorded runs.
pub fn run_bench(cfg: &RunConfig) -> Result<BenchReport> {
    let algo = Algo::parse(&cfg.algo)?;
    let instance = Instance::build(cfg, cfg.r)?;
    // Warmup: same work as trial 0, results discarded.
    let _ = run_trial(&instance, cfg, cfg.r, cfg.d, 0, algo)?;
    let mut records = Vec::new();
    for trial in 0..cfg.trials {
        let out = run_trial(&instance, cfg, cfg.r, cfg.d, trial, algo)?;
        records.extend(out.records);
    }
    let mut medians = Vec::new();
    for name in ["naive", "fast"] {
        let mut walls: Vec<u64> = records
            .iter()
            .filter(|rec| rec.algo == name)
            .map(|rec| rec.wall_ns)
            .collect();
        if walls.is_empty() {
            continue;
        }
        walls.sort_unstable();
        medians.push((name.to_string(), walls[walls.len() / 2]));
    }
    Ok(BenchReport { records, medians })
}
