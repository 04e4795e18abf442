use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lcr_core::bounds::{
    bound_simple, bound_table, bound_theorem7, crossing_lower_bound_exact, epsilon_integral, halving_upper_bound,
};
use lcr_core::census::{edge_vector_bruteforce, edge_vector_sweep, enclosing_triangle, good_k_edge_count};
use lcr_core::crossings::{crossings_bruteforce, crossings_via_identity};
use lcr_core::generate::{generate, GeneratorKind, GeneratorSpec};
use lcr_core::io::{format_point_set, parse_point_set};
use lcr_core::motion::reduce_to_triangle;
use lcr_core::PointSet;

/// Exact tools for k-edges, rectilinear crossings and halving-ray motion.
#[derive(Parser)]
#[command(name = "lcr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Format {
    /// Emit CSV
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    /// Emit JSON with sorted keys
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Identity,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Count (<=k)-edges and halving edges
    Census {
        file: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// Count crossings of the straight-line complete graph
    Crossings {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
    },
    /// Lower bounds on (<=k)-edges and the crossing number of K_n
    Bounds {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Move extreme points along halving rays until the hull is a triangle
    Reduce {
        file: PathBuf,
        /// Write the motion trace as JSON
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Write the reduced point set
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Generate a point set in general position
    Generate {
        #[arg(long, default_value = "random-disc")]
        kind: GeneratorKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        scale: i64,
    },
    /// Evaluate the epsilon integral from t0 to 1/2
    Epsilon {
        #[arg(long)]
        t0: f64,
    },
    /// Cross-check counts and bounds on a file or on seeded random sets
    Verify {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        file: Option<PathBuf>,
        /// Number of random sets to check
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 11)]
        max_n: usize,
    },
}

/// Input that could not be read or is not a valid point set.
#[derive(Debug)]
struct BadInput(String);

impl std::fmt::Display for BadInput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for BadInput {}

/// Some cross-check did not hold.
#[derive(Debug)]
struct VerificationFailed(usize);

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} check(s) failed", self.0)
    }
}

impl std::error::Error for VerificationFailed {}

fn load(path: &Path) -> Result<PointSet> {
    let text = fs::read_to_string(path).map_err(|e| BadInput(format!("{}: {e}", path.display())))?;
    parse_point_set(&text).map_err(|e| BadInput(format!("{}: {e}", path.display())).into())
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("values serialize"));
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn census(file: &Path, format: &Format) -> Result<()> {
    let set = load(file)?;
    let e = edge_vector_sweep(&set);
    let cumulative = e.cumulative();
    if format.json {
        print_json(&json!({
            "n": e.n,
            "e": e.e,
            "E": cumulative.values,
            "halving": e.halving(),
        }));
    } else if format.csv {
        println!("n,k,e_k,E_k,halving");
        for (k, (x, c)) in e.e.iter().zip(&cumulative.values).enumerate() {
            println!("{},{k},{x},{c},{}", e.n, e.halving());
        }
    } else {
        println!("n: {}", e.n);
        println!("e: {}", join(&e.e, ","));
        println!("E: {}", join(&cumulative.values, ","));
        println!("halving: {}", e.halving());
    }
    Ok(())
}

fn crossings(file: &Path, method: MethodArg) -> Result<()> {
    let set = load(file)?;
    let timed = |f: &dyn Fn() -> Result<u64>| -> Result<(u64, f64)> {
        let start = Instant::now();
        let c = f()?;
        Ok((c, start.elapsed().as_secs_f64()))
    };
    let brute = || Ok(crossings_bruteforce(&set).crossings);
    let identity = || Ok(crossings_via_identity(&set)?.crossings);
    match method {
        MethodArg::Brute => println!("crossings: {}", brute()?),
        MethodArg::Identity => println!("crossings: {}", identity()?),
        MethodArg::Both => {
            let (b, tb) = timed(&brute)?;
            let (i, ti) = timed(&identity)?;
            eprintln!("brute force {tb:.6}s, identity {ti:.6}s");
            if b != i {
                eprintln!("brute force gives {b}, identity gives {i}");
                return Err(VerificationFailed(1).into());
            }
            println!("crossings: {b}");
        }
    }
    Ok(())
}

fn bounds(n: u64, format: &Format) -> Result<()> {
    let table = bound_table(n)?;
    let lcr = crossing_lower_bound_exact(n)?;
    let halving = halving_upper_bound(n).ok();
    if format.json {
        let mut value = serde_json::to_value(&table)?;
        value["crossing_lower_bound"] = json!(lcr);
        value["halving_upper_bound"] = json!(halving);
        print_json(&value);
    } else if format.csv {
        println!("k,theorem7,simple,lvww,lvww_ceil,best");
        for r in &table.rows {
            println!(
                "{},{},{},{:.6},{},{}",
                r.k, r.theorem7, r.simple, r.lvww, r.lvww_ceil, r.best
            );
        }
        println!();
        println!("crossing_lower_bound,{lcr}");
        if let Some(h) = halving {
            println!("halving_upper_bound,{h}");
        }
    } else {
        println!("n = {n}");
        println!(
            "{:>4} {:>10} {:>10} {:>14} {:>10}",
            "k", "theorem7", "simple", "lvww", "best"
        );
        for r in &table.rows {
            println!(
                "{:>4} {:>10} {:>10} {:>14.3} {:>10}",
                r.k, r.theorem7, r.simple, r.lvww, r.best
            );
        }
        println!("crossing lower bound: {lcr}");
        if let Some(h) = halving {
            println!("halving upper bound: {h}");
        }
    }
    Ok(())
}

fn reduce(file: &Path, trace_path: Option<&Path>, output: Option<&Path>) -> Result<()> {
    let set = load(file)?;
    let (reduced, trace) = reduce_to_triangle(&set)?;
    if let Some(path) = trace_path {
        let value = serde_json::to_value(&trace)?;
        fs::write(path, serde_json::to_string_pretty(&value)? + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    let (b, a) = (&trace.before, &trace.after);
    let events: usize = trace.steps.iter().map(|s| s.events.len()).sum();
    println!("hull: {} -> {}", b.hull_size, a.hull_size);
    println!("crossings: {} -> {}", b.crossings, a.crossings);
    println!("halving: {} -> {}", b.halving, a.halving);
    println!("steps: {}, events: {events}", trace.steps.len());
    match output {
        Some(path) => {
            fs::write(path, format_point_set(&reduced)).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{}", format_point_set(&reduced)),
    }
    Ok(())
}

/// Runs every cross-check on one set and returns the violations.
fn check_set(set: &PointSet) -> Vec<String> {
    let mut problems = Vec::new();
    let n = set.len() as u64;
    let e = edge_vector_sweep(set);
    if e != edge_vector_bruteforce(set) {
        problems.push("sweep census differs from brute force".to_string());
    }
    let brute = crossings_bruteforce(set).crossings;
    match crossings_via_identity(set) {
        Ok(r) if r.crossings == brute => {}
        Ok(r) => problems.push(format!("identity gives {} crossings, brute force {brute}", r.crossings)),
        Err(err) => problems.push(format!("identity failed: {err}")),
    }
    let cumulative = e.cumulative();
    for k in 0..e.max_depth() as u64 {
        let have = cumulative.values[k as usize];
        for (name, bound) in [("theorem7", bound_theorem7(n, k)), ("simple", bound_simple(n, k))] {
            if let Ok(bound) = bound {
                if have < bound {
                    problems.push(format!("E_{k} = {have} below the {name} bound {bound}"));
                }
            }
        }
    }
    let triangle = enclosing_triangle(set);
    for k in (n / 3)..n {
        if 2 * k + 2 > n {
            break;
        }
        match good_k_edge_count(set, triangle, k as usize) {
            Ok(good) if good as i64 >= 3 * k as i64 - n as i64 + 3 => {}
            Ok(good) => problems.push(format!("{good} good {k}-edges, fewer than 3k-n+3")),
            Err(err) => problems.push(format!("good {k}-edges: {err}")),
        }
    }
    problems
}

fn verify(file: Option<&Path>, random: Option<usize>, seed: u64, max_n: usize) -> Result<()> {
    let sets: Vec<(String, PointSet)> = match (file, random) {
        (Some(path), _) => vec![(path.display().to_string(), load(path)?)],
        (None, Some(count)) => {
            if max_n < 4 {
                bail!(BadInput(format!("--max-n must be at least 4, got {max_n}")));
            }
            (0..count)
                .map(|i| {
                    let spec = GeneratorSpec {
                        kind: GeneratorKind::RandomDisc,
                        n: 4 + i % (max_n - 3),
                        seed: seed.wrapping_add(i as u64),
                        scale: 1000,
                    };
                    Ok((
                        format!("random set {i} (n = {}, seed {})", spec.n, spec.seed),
                        generate(&spec)?,
                    ))
                })
                .collect::<Result<_>>()?
        }
        (None, None) => unreachable!("clap requires a file or --random"),
    };
    let mut failures = 0;
    for (name, set) in &sets {
        for problem in check_set(set) {
            println!("FAIL {name}: {problem}");
            failures += 1;
        }
    }
    if failures > 0 {
        return Err(VerificationFailed(failures).into());
    }
    println!("ok: {} set(s) verified", sets.len());
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Census { file, format } => census(&file, &format),
        Command::Crossings { file, method } => crossings(&file, method),
        Command::Bounds { n, format } => bounds(n, &format),
        Command::Reduce { file, trace, output } => reduce(&file, trace.as_deref(), output.as_deref()),
        Command::Generate { kind, n, seed, scale } => {
            let set = generate(&GeneratorSpec { kind, n, seed, scale })?;
            print!("{}", format_point_set(&set));
            Ok(())
        }
        Command::Epsilon { t0 } => {
            println!("{:e}", epsilon_integral(t0)?);
            Ok(())
        }
        Command::Verify {
            file,
            random,
            seed,
            max_n,
        } => verify(file.as_deref(), random, seed, max_n),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.is::<BadInput>() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
