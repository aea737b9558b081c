//! Run configuration: TOML file parsing and CLI/file/default resolution.

use std::path::PathBuf;
use std::str::FromStr;

use serde::Deserialize;

use flower::benchmarks::Benchmark;
use flower::discbrake::DiscreteMode;
use flower::fpa::FpaParams;
use flower::levy::LevyParams;
use flower::mofpa::{MofpaParams, WeightMode, WeightSchedule};

use crate::{CliError, RunArgs};

/// Optional values read from a `--config` TOML file. Every key is optional;
/// explicit CLI flags override file values, which override built-in defaults.
#[derive(Debug, Default, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct FileConfig {
    pub problem: Option<String>,
    pub pop: Option<usize>,
    pub iters: Option<usize>,
    pub p: Option<f64>,
    pub lambda: Option<f64>,
    pub gamma: Option<f64>,
    pub seed: Option<u64>,
    pub reps: Option<usize>,
    pub archive: Option<usize>,
    pub weights: Option<String>,
    pub schedule: Option<String>,
    pub sweep_runs: Option<usize>,
    pub mode: Option<String>,
    pub out: Option<PathBuf>,
    pub metrics_out: Option<PathBuf>,
    pub plot: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text)
            .map_err(|e| CliError::Usage(format!("invalid config {}: {e}", path.display())))
    }
}

/// What to optimize: a two-objective benchmark, the single-objective
/// sphere, or the constrained disc-brake design problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    Benchmark(Benchmark),
    Sphere,
    DiscBrake,
}

impl ProblemKind {
    pub fn name(&self) -> &'static str {
        match self {
            ProblemKind::Benchmark(b) => b.name(),
            ProblemKind::Sphere => "sphere",
            ProblemKind::DiscBrake => "discbrake",
        }
    }
}

impl FromStr for ProblemKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "sphere" => Ok(ProblemKind::Sphere),
            "discbrake" => Ok(ProblemKind::DiscBrake),
            _ => lower
                .parse::<Benchmark>()
                .map(ProblemKind::Benchmark)
                .map_err(|_| {
                    CliError::Usage(format!(
                        "unknown problem '{s}' (expected zdt1, zdt2, zdt3, lz, sphere, or discbrake)"
                    ))
                }),
        }
    }
}

fn parse_weights(s: &str) -> Result<WeightMode, CliError> {
    match s.to_ascii_lowercase().as_str() {
        "random" => Ok(WeightMode::Random),
        "lds" => Ok(WeightMode::LowDiscrepancy),
        other => Err(CliError::Usage(format!(
            "unknown weights '{other}' (expected random or lds)"
        ))),
    }
}

fn parse_schedule(s: &str) -> Result<WeightSchedule, CliError> {
    match s.to_ascii_lowercase().as_str() {
        "per-iter" | "per-iteration" => Ok(WeightSchedule::PerIteration),
        "sweep" => Ok(WeightSchedule::Sweep),
        other => Err(CliError::Usage(format!(
            "unknown schedule '{other}' (expected per-iter or sweep)"
        ))),
    }
}

fn parse_mode(s: &str) -> Result<DiscreteMode, CliError> {
    match s.to_ascii_lowercase().as_str() {
        "round" => Ok(DiscreteMode::RoundOnEvaluate),
        "enumerate-s" | "enumerate" => Ok(DiscreteMode::EnumerateSurfaces),
        other => Err(CliError::Usage(format!(
            "unknown mode '{other}' (expected round or enumerate-s)"
        ))),
    }
}

/// Fully resolved run settings, validated before any work starts.
pub struct RunSettings {
    pub problem: ProblemKind,
    pub population: usize,
    pub iterations: usize,
    pub switch_probability: f64,
    pub lambda: f64,
    pub gamma: f64,
    pub seed: u64,
    pub reps: usize,
    pub archive: usize,
    pub weights: WeightMode,
    pub schedule: WeightSchedule,
    pub sweep_runs: usize,
    pub mode: DiscreteMode,
    pub out: Option<PathBuf>,
    pub metrics_out: Option<PathBuf>,
    pub plot: Option<PathBuf>,
}

impl RunSettings {
    /// Merge CLI flags over file config over defaults, then validate the
    /// whole combination. Nothing is executed and no file is touched until
    /// this returns `Ok`.
    pub fn resolve(args: RunArgs) -> Result<Self, CliError> {
        let file = match &args.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };

        let problem_name = args
            .problem
            .or(file.problem)
            .ok_or_else(|| CliError::Usage("missing --problem".to_string()))?;
        let problem: ProblemKind = problem_name.parse()?;

        let weights = match args.weights.or(file.weights) {
            Some(s) => parse_weights(&s)?,
            None => WeightMode::Random,
        };
        let schedule = match args.schedule.or(file.schedule) {
            Some(s) => parse_schedule(&s)?,
            None => WeightSchedule::PerIteration,
        };
        let mode = match args.mode.or(file.mode) {
            Some(s) => parse_mode(&s)?,
            None => DiscreteMode::RoundOnEvaluate,
        };

        let settings = RunSettings {
            problem,
            population: args.pop.or(file.pop).unwrap_or(50),
            iterations: args.iters.or(file.iters).unwrap_or(1000),
            switch_probability: args.p.or(file.p).unwrap_or(0.8),
            lambda: args.lambda.or(file.lambda).unwrap_or(1.5),
            gamma: args.gamma.or(file.gamma).unwrap_or(0.1),
            seed: args.seed.or(file.seed).unwrap_or(0),
            reps: args.reps.or(file.reps).unwrap_or(1),
            archive: args.archive.or(file.archive).unwrap_or(100),
            weights,
            schedule,
            sweep_runs: args.sweep_runs.or(file.sweep_runs).unwrap_or(100),
            mode,
            out: args.out.or(file.out),
            metrics_out: args.metrics_out.or(file.metrics_out),
            plot: args.plot.or(file.plot),
        };
        settings.validate()?;
        Ok(settings)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.reps == 0 {
            return Err(CliError::Usage("--reps must be at least 1".to_string()));
        }
        // Exercise the library's own parameter validation up front so a bad
        // combination fails before any repetition starts or file is created.
        self.fpa_params(self.seed).validate().map_err(CliError::from)?;
        match self.problem {
            ProblemKind::Sphere => {
                if self.plot.is_some() {
                    return Err(CliError::Usage(
                        "--plot is not supported for sphere (no front to draw)".to_string(),
                    ));
                }
                if self.metrics_out.is_some() {
                    return Err(CliError::Usage(
                        "--metrics-out is only supported for benchmark problems".to_string(),
                    ));
                }
            }
            ProblemKind::DiscBrake => {
                if self.metrics_out.is_some() {
                    return Err(CliError::Usage(
                        "--metrics-out is only supported for benchmark problems".to_string(),
                    ));
                }
                if self.archive == 0 {
                    return Err(CliError::Usage("--archive must be at least 1".to_string()));
                }
            }
            ProblemKind::Benchmark(_) => {
                if self.archive == 0 {
                    return Err(CliError::Usage("--archive must be at least 1".to_string()));
                }
                if self.sweep_runs == 0 {
                    return Err(CliError::Usage(
                        "--sweep-runs must be at least 1".to_string(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn fpa_params(&self, seed: u64) -> FpaParams {
        FpaParams {
            population: self.population,
            iterations: self.iterations,
            switch_probability: self.switch_probability,
            gamma: self.gamma,
            levy: LevyParams {
                lambda: self.lambda,
                ..LevyParams::default()
            },
            seed,
        }
    }

    pub fn mofpa_params(&self, seed: u64) -> MofpaParams {
        MofpaParams {
            fpa: self.fpa_params(seed),
            archive_capacity: self.archive,
            weight_mode: self.weights,
            schedule: self.schedule,
            sweep_runs: self.sweep_runs,
        }
    }

    pub fn weights_name(&self) -> &'static str {
        match self.weights {
            WeightMode::Random => "random",
            WeightMode::LowDiscrepancy => "lds",
        }
    }

    pub fn schedule_name(&self) -> &'static str {
        match self.schedule {
            WeightSchedule::PerIteration => "per-iter",
            WeightSchedule::Sweep => "sweep",
        }
    }
}
