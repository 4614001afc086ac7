use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use uncertainty::cli::{self, CampaignConfig, OutputFormat, SaturateTarget, Section, EXIT_FAILURE, EXIT_OK};
use uncertainty::saturation::SearchConfig;
use uncertainty::{BoundKind, Result, Seed};

#[derive(Parser)]
#[command(name = "uncertainty", version, about = "Check and saturate variance uncertainty relations")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a random campaign over bound kinds and dimensions.
    Verify {
        #[arg(long, env = "UNCERTAINTY_KINDS", value_delimiter = ',', value_parser = parse_kind,
              default_value = "robertson,triple_sum,triple_product,rss3,quad_sum")]
        kinds: Vec<BoundKind>,
        #[arg(long, env = "UNCERTAINTY_DIMS", value_delimiter = ',', default_value = "2,3,4")]
        dims: Vec<usize>,
        #[arg(long, env = "UNCERTAINTY_INSTANCES", default_value_t = 1000)]
        instances: usize,
        #[arg(long, env = "UNCERTAINTY_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "UNCERTAINTY_OUT")]
        out: Option<PathBuf>,
        #[arg(long, env = "UNCERTAINTY_FORMAT", value_parser = parse_format, default_value = "json")]
        format: OutputFormat,
    },
    /// Validate an instance file and print its bound report.
    Check { file: PathBuf },
    /// Search for the state minimizing lhs/rhs. TARGET is `pauli3`, `tight4` or an instance file.
    Saturate {
        target: String,
        #[arg(long, env = "UNCERTAINTY_RESTARTS", default_value_t = 20)]
        restarts: usize,
        #[arg(long, env = "UNCERTAINTY_MAX_ITERS", default_value_t = 2000)]
        max_iters: usize,
        #[arg(long, env = "UNCERTAINTY_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, env = "UNCERTAINTY_PURE_ONLY", default_value_t = true, num_args = 0..=1,
              default_missing_value = "true", action = clap::ArgAction::Set)]
        pure_only: bool,
        #[arg(long, env = "UNCERTAINTY_OUT")]
        out: Option<PathBuf>,
    },
    /// Reproduce a named construction: robertson, triple, quad, reductions, pauli-decomp.
    Paper { which: String },
}

fn parse_kind(s: &str) -> std::result::Result<BoundKind, String> {
    s.parse().map_err(|e: uncertainty::Error| e.to_string())
}

fn parse_format(s: &str) -> std::result::Result<OutputFormat, String> {
    s.parse().map_err(|e: uncertainty::Error| e.to_string())
}

fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Verify {
            kinds,
            dims,
            instances,
            seed,
            out,
            format,
        } => {
            let cfg = CampaignConfig {
                kinds,
                dims,
                instances,
                seed: Seed(seed),
                out,
                format,
            };
            let outcome = cli::run_campaign(&cfg)?;
            println!("{}", serde_json::to_string_pretty(&outcome.summary)?);
            Ok(outcome.summary.passed())
        }
        Command::Check { file } => {
            let report = cli::check_file(&file)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(cli::report_passes(&report))
        }
        Command::Saturate {
            target,
            restarts,
            max_iters,
            seed,
            pure_only,
            out,
        } => {
            let cfg = SearchConfig {
                restarts,
                max_iters,
                seed: Seed(seed),
                pure_only,
                ..SearchConfig::default()
            };
            let outcome = cli::saturate(&SaturateTarget::parse(&target), &cfg, out.as_deref())?;
            println!(
                "kind {} best ratio {} (recomputed {}), {} evaluations, converged {}",
                outcome.kind,
                outcome.result.best_ratio,
                outcome.recomputed_ratio,
                outcome.result.evaluations,
                outcome.result.converged
            );
            if out.is_none() {
                println!("{}", serde_json::to_string_pretty(&outcome)?);
            }
            Ok(outcome.recomputed_ratio >= 1.0 - 1e-6)
        }
        Command::Paper { which } => {
            let sections = if which == "all" {
                Section::ALL.to_vec()
            } else {
                vec![which.parse::<Section>()?]
            };
            let mut ok = true;
            for s in sections {
                println!("[{}]", s.name());
                for c in cli::reproduce(s)? {
                    println!("  {c}");
                    ok &= c.pass;
                }
            }
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(true) => ExitCode::from(EXIT_OK),
        Ok(false) => ExitCode::from(EXIT_FAILURE),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code_for(&e))
        }
    }
}
