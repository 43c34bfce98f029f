//! Thin CLI over the run harness: `verify`, `count`, and `bench`
//! subcommands sharing one flag set, CSV/JSON reports on stdout or a file,
//! and exit codes 0 (pass), 1 (mismatch), 2 (invalid parameters).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use skewpoly::harness::{self, RunConfig};

#[derive(Parser)]
#[command(
    name = "skewbench",
    about = "Verify, count, and benchmark skew-polynomial multiplication kernels",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run seeded random products and compare the structured path against
    /// the schoolbook oracle.
    Verify(RunArgs),
    /// Sweep a grid over r or d and report exact operation counts.
    Count(RunArgs),
    /// Time one configuration (after warmup) and report per-trial records
    /// plus per-algorithm median wall times.
    Bench(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Algebra family: split | kummer | artin | tower.
    #[arg(long, default_value = "split")]
    kind: String,

    /// Prime field characteristic.
    #[arg(long, default_value_t = 101)]
    p: u64,

    /// Algebra dimension (and automorphism order).
    #[arg(long, default_value_t = 12)]
    r: usize,

    /// Degree of both random operands.
    #[arg(long, default_value_t = 3)]
    d: usize,

    /// Seeded random trials per grid point.
    #[arg(long, default_value_t = 25)]
    trials: u32,

    /// Root seed; trial seeds derive from it by counter.
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Which multipliers run: naive | fast | both.
    #[arg(long, default_value = "both")]
    algo: String,

    /// Tower dimensions, inner:outer (with --kind tower).
    #[arg(long, value_name = "R1:R2")]
    tower: Option<String>,

    /// Comma-separated r values to sweep (count subcommand).
    #[arg(long, value_name = "LIST")]
    grid_r: Option<String>,

    /// Comma-separated d values to sweep (count subcommand).
    #[arg(long, value_name = "LIST")]
    grid_d: Option<String>,

    /// Write the report to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Report format: csv | json.
    #[arg(long, default_value = "csv")]
    format: String,

    /// Fault injection for testing the mismatch path: flips one coordinate
    /// of every structured product.
    #[arg(long, hide = true)]
    corrupt_fast: bool,
}

fn parse_grid(s: &str) -> Result<Vec<usize>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad grid entry {part:?}"))
        })
        .collect()
}

fn parse_tower(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("tower spec must be R1:R2, got {s:?}"))?;
    let r1 = a.trim().parse::<usize>().map_err(|_| format!("bad r1 {a:?}"))?;
    let r2 = b.trim().parse::<usize>().map_err(|_| format!("bad r2 {b:?}"))?;
    Ok((r1, r2))
}

fn to_config(args: &RunArgs) -> Result<RunConfig, String> {
    let (r1, r2) = match &args.tower {
        Some(spec) => {
            let (r1, r2) = parse_tower(spec)?;
            (Some(r1), Some(r2))
        }
        None => (None, None),
    };
    let grid_r = args.grid_r.as_deref().map(parse_grid).transpose()?;
    let grid_d = args.grid_d.as_deref().map(parse_grid).transpose()?;
    Ok(RunConfig {
        kind: args.kind.clone(),
        p: args.p,
        r: args.r,
        d: args.d,
        trials: args.trials,
        seed: args.seed,
        algo: args.algo.clone(),
        r1,
        r2,
        grid_r,
        grid_d,
        corrupt_fast: args.corrupt_fast,
    })
}

fn render(records: &[harness::RunRecord], format: &str) -> Result<String, String> {
    match format {
        "csv" => Ok(harness::to_csv(records)),
        "json" => Ok(harness::to_json(records)),
        other => Err(format!("format must be csv|json, got {other:?}")),
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let (args, which) = match &cli.cmd {
        Cmd::Verify(a) => (a, "verify"),
        Cmd::Count(a) => (a, "count"),
        Cmd::Bench(a) => (a, "bench"),
    };
    let cfg = to_config(args)?;
    match which {
        "verify" => {
            let report = harness::run_verify(&cfg).map_err(|e| e.to_string())?;
            emit(&render(&report.records, &args.format)?, &args.out)?;
            if report.all_pass() {
                Ok(ExitCode::SUCCESS)
            } else {
                for f in &report.failures {
                    eprintln!("mismatch at trial {} (seed {})", f.trial, f.seed);
                    eprintln!("reproduce with: {}", f.repro);
                }
                Ok(ExitCode::from(1))
            }
        }
        "count" => {
            let records = harness::run_count(&cfg).map_err(|e| e.to_string())?;
            emit(&render(&records, &args.format)?, &args.out)?;
            Ok(ExitCode::SUCCESS)
        }
        _ => {
            let report = harness::run_bench(&cfg).map_err(|e| e.to_string())?;
            emit(&render(&report.records, &args.format)?, &args.out)?;
            for (algo, wall) in &report.medians {
                eprintln!("median wall_ns {algo} = {wall}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
