//! Implementations of the `run`, `metrics`, and `front` subcommands.
//!
//! All artifacts are deterministic: no timestamps, no machine identifiers,
//! and float formatting that depends only on the values. Repeating an
//! invocation with the same configuration and seed yields byte-identical
//! CSV, JSON, and SVG files.

use serde::Serialize;

use flower::benchmarks::{error_metric_ef, generalized_distance, Benchmark, SphereProblem};
use flower::core::Problem;
use flower::discbrake;
use flower::exec::run_batch;
use flower::mofpa::{mofpa_run, ParetoArchive};

use crate::config::{ProblemKind, RunSettings};
use crate::csvio::{design_csv, front_csv, read_front_csv, rep_path, trace_csv, write_text};
use crate::svg::front_plot;
use crate::{CliError, FrontArgs, MetricsArgs, RunArgs};

/// Resolution of exported and scoring reference fronts.
const REFERENCE_POINTS: usize = 1000;
/// Decision-space dimension for the sphere sanity problem.
const SPHERE_DIMENSION: usize = 10;

pub fn run(args: RunArgs) -> Result<(), CliError> {
    let settings = RunSettings::resolve(args)?;
    match settings.problem {
        ProblemKind::Benchmark(benchmark) => run_benchmark(&settings, benchmark),
        ProblemKind::Sphere => run_sphere(&settings),
        ProblemKind::DiscBrake => run_discbrake(&settings),
    }
}

struct Repetition {
    seed: u64,
    points: Vec<[f64; 2]>,
    e_f: f64,
    d_g: f64,
}

fn run_benchmark(settings: &RunSettings, benchmark: Benchmark) -> Result<(), CliError> {
    let problem = benchmark.default_problem();
    let reference = benchmark.true_front(REFERENCE_POINTS)?;

    let results = run_batch(settings.reps, |r| {
        let params = settings.mofpa_params(settings.seed + r as u64);
        mofpa_run(&problem, &params)
    });

    let mut reps = Vec::with_capacity(settings.reps);
    for (r, result) in results.into_iter().enumerate() {
        let archive = result?;
        let points = archive_points(&archive);
        let vectors: Vec<Vec<f64>> = points.iter().map(|p| p.to_vec()).collect();
        let e_f = error_metric_ef(&vectors, reference.points())?;
        let d_g = generalized_distance(&vectors, reference.points())?;
        reps.push(Repetition {
            seed: settings.seed + r as u64,
            points,
            e_f,
            d_g,
        });
    }

    if let Some(out) = &settings.out {
        for rep in &reps {
            let path = rep_path(out, settings.reps, rep.seed);
            write_text(&path, &front_csv(&rep.points))?;
        }
    }

    if let Some(path) = &settings.metrics_out {
        write_text(path, &metrics_json(settings, benchmark, &reps)?)?;
    }

    if let Some(path) = &settings.plot {
        let rep = median_rep(&reps);
        let reference_points: Vec<[f64; 2]> = reference
            .points()
            .iter()
            .map(|p| [p[0], p[1]])
            .collect();
        let svg = front_plot(
            &format!("{} front (seed {})", benchmark.name(), rep.seed),
            &rep.points,
            Some(&reference_points),
        );
        write_text(path, &svg)?;
    }

    println!("problem: {}", benchmark.name());
    for rep in &reps {
        println!(
            "seed {}: {} front points, e_f {:e}, d_g {:e}",
            rep.seed,
            rep.points.len(),
            rep.e_f,
            rep.d_g
        );
    }
    let d_gs: Vec<f64> = reps.iter().map(|r| r.d_g).collect();
    println!("median d_g: {:e}", median(&d_gs));
    Ok(())
}

fn run_sphere(settings: &RunSettings) -> Result<(), CliError> {
    let problem = SphereProblem::new(SPHERE_DIMENSION);
    let results = run_batch(settings.reps, |r| {
        let params = settings.fpa_params(settings.seed + r as u64);
        flower::fpa::fpa_minimize(&problem, &params)
    });
    println!("problem: sphere");
    for (r, result) in results.into_iter().enumerate() {
        let trace = result?;
        let seed = settings.seed + r as u64;
        if let Some(out) = &settings.out {
            let path = rep_path(out, settings.reps, seed);
            write_text(&path, &trace_csv(&trace.best_per_iteration))?;
        }
        println!(
            "seed {}: best {:e} after {} evaluations",
            seed, trace.best.objectives[0], trace.evaluations
        );
    }
    Ok(())
}

fn run_discbrake(settings: &RunSettings) -> Result<(), CliError> {
    let results = run_batch(settings.reps, |r| {
        let params = settings.mofpa_params(settings.seed + r as u64);
        discbrake::solve(&params, settings.mode)
    });

    let mut archives = Vec::with_capacity(settings.reps);
    for (r, result) in results.into_iter().enumerate() {
        archives.push((settings.seed + r as u64, result?));
    }

    println!("problem: discbrake");
    for (seed, archive) in &archives {
        if let Some(out) = &settings.out {
            let path = rep_path(out, settings.reps, *seed);
            write_text(&path, &design_csv(&design_rows(archive)))?;
        }
        println!("seed {}: {} feasible designs", seed, archive.len());
    }

    if let Some(path) = &settings.plot {
        // No analytic reference front exists for this problem; plot the
        // first repetition's trade-off curve on its own.
        let (seed, archive) = &archives[0];
        let points: Vec<[f64; 2]> = design_rows(archive).iter().map(|(_, f)| *f).collect();
        let svg = front_plot(&format!("discbrake front (seed {seed})"), &points, None);
        write_text(path, &svg)?;
    }
    Ok(())
}

pub fn metrics(args: MetricsArgs) -> Result<(), CliError> {
    let benchmark = reference_benchmark(&args.problem)?;
    let estimated = read_front_csv(&args.front)?;
    let vectors: Vec<Vec<f64>> = estimated.iter().map(|p| p.to_vec()).collect();
    let reference = benchmark.true_front(REFERENCE_POINTS)?;
    let e_f = error_metric_ef(&vectors, reference.points())?;
    let d_g = generalized_distance(&vectors, reference.points())?;
    if !e_f.is_finite() || !d_g.is_finite() {
        return Err(CliError::Numeric(format!(
            "front {} produced non-finite metrics (e_f = {e_f}, d_g = {d_g})",
            args.front.display()
        )));
    }

    #[derive(Serialize)]
    struct Score<'a> {
        problem: &'a str,
        front_points: usize,
        reference_points: usize,
        e_f: f64,
        d_g: f64,
    }
    let doc = Score {
        problem: benchmark.name(),
        front_points: vectors.len(),
        reference_points: reference.len(),
        e_f,
        d_g,
    };
    println!("{}", to_pretty_json(&doc)?);
    Ok(())
}

pub fn front(args: FrontArgs) -> Result<(), CliError> {
    let benchmark = reference_benchmark(&args.problem)?;
    let sample = benchmark.true_front(args.points)?;
    let rows: Vec<[f64; 2]> = sample.points().iter().map(|p| [p[0], p[1]]).collect();
    let csv = front_csv(&rows);
    match &args.out {
        Some(path) => write_text(path, &csv)?,
        None => print!("{csv}"),
    }
    Ok(())
}

/// Parse a problem id and require one with an analytic reference front.
fn reference_benchmark(name: &str) -> Result<Benchmark, CliError> {
    match name.parse::<ProblemKind>()? {
        ProblemKind::Benchmark(b) => Ok(b),
        other => Err(CliError::Usage(format!(
            "'{}' has no analytic reference front (expected zdt1, zdt2, zdt3, or lz)",
            other.name()
        ))),
    }
}

/// Archive objectives sorted lexicographically by (f1, f2).
fn archive_points(archive: &ParetoArchive) -> Vec<[f64; 2]> {
    archive
        .sorted_entries()
        .iter()
        .map(|p| [p.objectives[0], p.objectives[1]])
        .collect()
}

/// Archive designs as (decision vector, objectives) rows sorted by f1.
fn design_rows(archive: &ParetoArchive) -> Vec<(Vec<f64>, [f64; 2])> {
    archive
        .sorted_entries()
        .into_iter()
        .map(|p| {
            let f = [p.objectives[0], p.objectives[1]];
            (p.position, f)
        })
        .collect()
}

#[derive(Serialize)]
struct MetricsDoc<'a> {
    problem: &'a str,
    params: ParamsDoc<'a>,
    per_rep: Vec<PerRep>,
    median_d_g: f64,
    iqr_d_g: f64,
}

#[derive(Serialize)]
struct ParamsDoc<'a> {
    population: usize,
    iterations: usize,
    switch_probability: f64,
    lambda: f64,
    gamma: f64,
    seed: u64,
    repetitions: usize,
    archive_capacity: usize,
    weights: &'a str,
    schedule: &'a str,
    sweep_runs: usize,
    dimension: usize,
}

#[derive(Serialize)]
struct PerRep {
    seed: u64,
    d_g: f64,
    e_f: f64,
}

fn metrics_json(
    settings: &RunSettings,
    benchmark: Benchmark,
    reps: &[Repetition],
) -> Result<String, CliError> {
    let d_gs: Vec<f64> = reps.iter().map(|r| r.d_g).collect();
    let doc = MetricsDoc {
        problem: benchmark.name(),
        params: ParamsDoc {
            population: settings.population,
            iterations: settings.iterations,
            switch_probability: settings.switch_probability,
            lambda: settings.lambda,
            gamma: settings.gamma,
            seed: settings.seed,
            repetitions: settings.reps,
            archive_capacity: settings.archive,
            weights: settings.weights_name(),
            schedule: settings.schedule_name(),
            sweep_runs: settings.sweep_runs,
            dimension: benchmark.default_problem().dimension(),
        },
        per_rep: reps
            .iter()
            .map(|r| PerRep {
                seed: r.seed,
                d_g: r.d_g,
                e_f: r.e_f,
            })
            .collect(),
        median_d_g: median(&d_gs),
        iqr_d_g: interquartile_range(&d_gs),
    };
    to_pretty_json(&doc)
}

fn to_pretty_json<T: Serialize>(doc: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(doc)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| CliError::Numeric(format!("cannot serialize metrics: {e}")))
}

/// The repetition whose D_g sits at the median (lower middle for even
/// counts) — the honest representative to plot.
fn median_rep(reps: &[Repetition]) -> &Repetition {
    let mut order: Vec<usize> = (0..reps.len()).collect();
    order.sort_by(|&a, &b| reps[a].d_g.total_cmp(&reps[b].d_g));
    &reps[order[(reps.len() - 1) / 2]]
}

fn median(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}

/// Q3 − Q1 with linearly interpolated quantiles.
fn interquartile_range(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    quantile(&sorted, 0.75) - quantile(&sorted, 0.25)
}

fn quantile(sorted: &[f64], q: f64) -> f64 {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = (n - 1) as f64 * q;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}
