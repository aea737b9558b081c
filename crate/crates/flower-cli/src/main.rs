//! `flower` — a reproducible harness around the flower pollination
//! optimizer: run problems, export Pareto fronts as CSV, score fronts
//! against reference fronts, and render SVG plots.
//!
//! Exit codes: 0 on success, 2 for usage errors (bad flags, parameters, or
//! input data), 3 for I/O failures, 4 for numeric failures.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod config;
mod csvio;
mod svg;

#[derive(Parser)]
#[command(name = "flower", version, about = "Flower pollination optimizer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Optimize a problem and export fronts, metrics, and plots
    Run(RunArgs),
    /// Score a front CSV against a benchmark's reference front
    Metrics(MetricsArgs),
    /// Export a benchmark's reference front as CSV
    Front(FrontArgs),
}

#[derive(Args, Default)]
pub struct RunArgs {
    /// Problem id: zdt1 | zdt2 | zdt3 | lz | sphere | discbrake
    #[arg(long)]
    problem: Option<String>,
    /// Population size
    #[arg(long)]
    pop: Option<usize>,
    /// Iteration count
    #[arg(long)]
    iters: Option<usize>,
    /// Global/local switch probability
    #[arg(long)]
    p: Option<f64>,
    /// Levy tail exponent in (1, 2]
    #[arg(long)]
    lambda: Option<f64>,
    /// Global step scale
    #[arg(long)]
    gamma: Option<f64>,
    /// Base seed; repetition r uses seed + r
    #[arg(long)]
    seed: Option<u64>,
    /// Number of repetitions
    #[arg(long)]
    reps: Option<usize>,
    /// Pareto archive capacity
    #[arg(long)]
    archive: Option<usize>,
    /// Weight generation: random | lds
    #[arg(long)]
    weights: Option<String>,
    /// Weight schedule: per-iter | sweep
    #[arg(long)]
    schedule: Option<String>,
    /// Fixed-weight runs per repetition for the sweep schedule
    #[arg(long = "sweep-runs")]
    sweep_runs: Option<usize>,
    /// Integer handling for discbrake: round | enumerate-s
    #[arg(long)]
    mode: Option<String>,
    /// Front CSV path (repetitions beyond the first add a -seed<N> suffix)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Metrics JSON path (benchmark problems only)
    #[arg(long = "metrics-out")]
    metrics_out: Option<PathBuf>,
    /// SVG plot path (front problems only)
    #[arg(long)]
    plot: Option<PathBuf>,
    /// TOML config file; explicit flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
pub struct MetricsArgs {
    /// Benchmark id: zdt1 | zdt2 | zdt3 | lz
    #[arg(long)]
    problem: String,
    /// Front CSV to score (header f1,f2)
    #[arg(long)]
    front: PathBuf,
}

#[derive(Args)]
pub struct FrontArgs {
    /// Benchmark id: zdt1 | zdt2 | zdt3 | lz
    #[arg(long)]
    problem: String,
    /// Number of reference points
    #[arg(long, default_value_t = 1000)]
    points: usize,
    /// Output CSV path; omit to print to stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Command failures, each mapped to a process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, parameters, or input data (exit 2).
    Usage(String),
    /// Failed reads or writes (exit 3).
    Io(String),
    /// Results outside the representable/meaningful range (exit 4).
    Numeric(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Numeric(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Io(msg) | CliError::Numeric(msg) => {
                f.write_str(msg)
            }
        }
    }
}

impl From<flower::Error> for CliError {
    fn from(err: flower::Error) -> Self {
        match err {
            flower::Error::InvalidParameter(_) | flower::Error::UnknownProblem(_) => {
                CliError::Usage(err.to_string())
            }
            flower::Error::Domain(_) | flower::Error::EmptyFront(_) => {
                CliError::Numeric(err.to_string())
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => commands::run(args),
        Command::Metrics(args) => commands::metrics(args),
        Command::Front(args) => commands::front(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code())
        }
    }
}
