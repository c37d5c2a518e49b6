//! The `csl` command-line interface.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use csl_core::cache::Cache;
use csl_core::groupengine::catalog_group;
use csl_core::lieorders::{aut_order, prime_power, simple_order, Family, LieSpec};
use csl_core::numtheory::{greatest_primitive_divisor, primitive_prime_set};
use csl_core::spectrumlab::recognition_scan;
use csl_core::verify::{list_checks, run_check, CheckStatus};

#[derive(Parser)]
#[command(
    name = "csl",
    about = "Exact arithmetic for conjugacy-class-size spectra, primitive prime divisors, and Lie-type order formulas",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the factored order of a simple group of Lie type
    Order(OrderArgs),
    /// Print the greatest primitive divisor k_i(a) and the set R_i(a)
    Kdiv(KdivArgs),
    /// Print the class-size spectrum N(G) of a catalog group
    Spectrum(SpectrumArgs),
    /// Print the element-order set of a catalog group
    Omega(GroupArgs),
    /// Write the prime graph GK(G) as a DOT file
    PrimeGraph(PrimeGraphArgs),
    /// Run one named check and print its JSON report
    Verify(VerifyArgs),
    /// Scan the catalog for groups with a given spectrum
    Recognize(RecognizeArgs),
    /// List the check registry
    Checks,
}

#[derive(Args)]
struct OrderArgs {
    /// family name: A, 2A, B, C, D, 2D, 3D4, G2, 2G2, F4, 2F4, E6, 2E6, E7, E8, 2B2
    #[arg(long)]
    family: String,
    #[arg(long)]
    rank: u32,
    /// field size, a prime power
    #[arg(long)]
    q: u64,
    /// print the automorphism-group order instead
    #[arg(long)]
    aut: bool,
}

#[derive(Args)]
struct KdivArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: i64,
    #[arg(long)]
    i: u32,
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long)]
    group: String,
    /// cache directory (overrides CSL_CACHE)
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    group: String,
    /// write the spectrum as JSON to this path
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct PrimeGraphArgs {
    #[arg(long)]
    group: String,
    /// output DOT path
    #[arg(long)]
    dot: PathBuf,
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// check id from `csl checks`
    #[arg(long)]
    check: String,
    /// key=value overrides for the check's parameters
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
}

#[derive(Args)]
struct RecognizeArgs {
    /// catalog group whose spectrum is the target
    #[arg(long)]
    target: String,
    #[arg(long)]
    max_order: u64,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let msg = e.to_string();
                let first = msg.lines().next().unwrap_or("invalid usage");
                return usage_error(first.trim_start_matches("error: "));
            }
            // help and version go to stdout with success
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => usage_error(msg),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Order(args) => {
            let family = Family::parse(&args.family)
                .ok_or_else(|| format!("unknown family {}", args.family))?;
            let (p, n) =
                prime_power(args.q).ok_or_else(|| format!("{} is not a prime power", args.q))?;
            let spec = LieSpec::new(family, args.rank, p, n).map_err(|e| e.to_string())?;
            let order = if args.aut {
                aut_order(&spec).map_err(|e| e.to_string())?
            } else {
                simple_order(&spec).map_err(|e| e.to_string())?
            };
            let what = if args.aut {
                format!("|Aut({spec})|")
            } else {
                format!("|{spec}|")
            };
            println!("{what} = {order}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Kdiv(args) => {
            let a = BigInt::from(args.a);
            let k = greatest_primitive_divisor(&a, args.i).map_err(|e| e.to_string())?;
            let factored = csl_core::numtheory::factor(&k).map_err(|e| e.to_string())?;
            println!("k_{}({}) = {}", args.i, args.a, factored);
            let set = primitive_prime_set(&a, args.i).map_err(|e| e.to_string())?;
            let primes: Vec<String> = set.primes.iter().map(|p| p.to_string()).collect();
            println!("R_{}({}) = {{{}}}", args.i, args.a, primes.join(", "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum(args) => {
            let cache = Cache::resolve(args.cache);
            let (entry, _) = cache
                .load_or_compute(&args.group)
                .map_err(|e| e.to_string())?;
            let spectrum = entry.spectrum();
            let sizes: Vec<String> = spectrum.sizes().iter().map(|s| s.to_string()).collect();
            println!("N({}) = {{{}}}", args.group, sizes.join(", "));
            if let Some(path) = args.json {
                std::fs::write(&path, spectrum.to_json())
                    .map_err(|e| format!("writing {}: {e}", path.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Omega(args) => {
            let cache = Cache::resolve(args.cache);
            let (entry, _) = cache
                .load_or_compute(&args.group)
                .map_err(|e| e.to_string())?;
            let orders: Vec<String> = entry.omega.iter().map(|o| o.to_string()).collect();
            println!("omega({}) = {{{}}}", args.group, orders.join(", "));
            Ok(ExitCode::SUCCESS)
        }
        Command::PrimeGraph(args) => {
            let cache = Cache::resolve(args.cache);
            let (entry, _) = cache
                .load_or_compute(&args.group)
                .map_err(|e| e.to_string())?;
            let graph = entry.prime_graph();
            std::fs::write(&args.dot, graph.to_dot())
                .map_err(|e| format!("writing {}: {e}", args.dot.display()))?;
            println!(
                "GK({}): {} vertices, {} edges -> {}",
                args.group,
                graph.vertices.len(),
                graph.edges.len(),
                args.dot.display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let mut params: BTreeMap<String, u64> = BTreeMap::new();
            for kv in &args.params {
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| format!("parameter {kv} is not KEY=VALUE"))?;
                let value: u64 = v
                    .parse()
                    .map_err(|_| format!("parameter {k} wants an integer, got {v}"))?;
                params.insert(k.to_string(), value);
            }
            let report = run_check(&args.check, &params).map_err(|e| e.to_string())?;
            println!("{}", report.to_json());
            Ok(if report.status == CheckStatus::Fail {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Recognize(args) => {
            let target = catalog_group(&args.target)
                .and_then(|g| g.spectrum())
                .map_err(|e| e.to_string())?;
            let matches = recognition_scan(&target, args.max_order).map_err(|e| e.to_string())?;
            for label in &matches {
                println!("{label}");
            }
            if matches.is_empty() {
                eprintln!("no catalog group of order <= {} matches", args.max_order);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Checks => {
            for info in list_checks() {
                let defaults: Vec<String> = info
                    .defaults
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                if defaults.is_empty() {
                    println!("{} — {}", info.id, info.description);
                } else {
                    println!(
                        "{} — {} (defaults: {})",
                        info.id,
                        info.description,
                        defaults.join(", ")
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
