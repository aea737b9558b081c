//! Bi-objective benchmark problems (ZDT1/ZDT2/ZDT3/LZ), their reference
//! fronts, the sphere function, and front-quality metrics.
//!
//! All four bi-objective problems are minimization problems whose true
//! Pareto fronts are known: ZDT1 (convex), ZDT2 (non-convex), ZDT3
//! (disconnected, five segments), and LZ (convex front, nonlinearly shifted
//! Pareto set). Front quality is measured against a sampled reference front
//! by the summed squared nearest-point error `E_f` and the generalized
//! distance `D_g`.

use std::fmt;
use std::str::FromStr;

use crate::core::{BoxBounds, Evaluation, Problem};
use crate::{Error, Result};

fn assert_unit_box(x: &[f64], name: &str) {
    assert!(x.len() >= 2, "{name} needs at least 2 variables, got {}", x.len());
    for (i, &v) in x.iter().enumerate() {
        assert!((0.0..=1.0).contains(&v), "{name} domain is [0,1]^d, got x[{i}] = {v}");
    }
}

/// ZDT1: `f1 = x1`, `f2 = g (1 − √(f1/g))` with
/// `g = 1 + 9 Σ_{i≥2} x_i / (d−1)` on `[0,1]^d`. Convex front
/// `f2 = 1 − √f1` at `x_i = 0` for `i ≥ 2`.
///
/// # Panics
///
/// Panics when `x` leaves `[0,1]^d` or has fewer than two components.
pub fn zdt1(x: &[f64]) -> [f64; 2] {
    assert_unit_box(x, "zdt1");
    let f1 = x[0];
    let g = 1.0 + 9.0 * x[1..].iter().sum::<f64>() / (x.len() - 1) as f64;
    [f1, g * (1.0 - (f1 / g).sqrt())]
}

/// ZDT2: like ZDT1 but `f2 = g (1 − (f1/g)²)`, giving the non-convex front
/// `f2 = 1 − f1²`.
///
/// # Panics
///
/// Panics when `x` leaves `[0,1]^d` or has fewer than two components.
pub fn zdt2(x: &[f64]) -> [f64; 2] {
    assert_unit_box(x, "zdt2");
    let f1 = x[0];
    let g = 1.0 + 9.0 * x[1..].iter().sum::<f64>() / (x.len() - 1) as f64;
    [f1, g * (1.0 - (f1 / g).powi(2))]
}

/// ZDT3: like ZDT1 but `f2 = g (1 − √(f1/g) − (f1/g) sin(10π f1))`, whose
/// front is disconnected (five segments, `f2` dipping below zero).
///
/// # Panics
///
/// Panics when `x` leaves `[0,1]^d` or has fewer than two components.
pub fn zdt3(x: &[f64]) -> [f64; 2] {
    assert_unit_box(x, "zdt3");
    let f1 = x[0];
    let g = 1.0 + 9.0 * x[1..].iter().sum::<f64>() / (x.len() - 1) as f64;
    let ratio = f1 / g;
    [f1, g * (1.0 - ratio.sqrt() - ratio * (10.0 * std::f64::consts::PI * f1).sin())]
}

/// LZ: a convex-front problem whose Pareto set is the nonlinear curve
/// `x_j = sin(6π x1 + jπ/d)`. With `J1`/`J2` the odd/even index sets among
/// `2..=d` (1-based),
///
/// `f1 = x1 + (2/|J1|) Σ_{j∈J1} (x_j − sin(6π x1 + jπ/d))²`
/// `f2 = 1 − √x1 + (2/|J2|) Σ_{j∈J2} (x_j − sin(6π x1 + jπ/d))²`
///
/// on `x1 ∈ [0,1]`, `x_j ∈ [−1,1]`. On the Pareto set this reduces to
/// `(x1, 1 − √x1)`.
///
/// # Panics
///
/// Panics when `x` leaves its box or has fewer than two components.
pub fn lz(x: &[f64]) -> [f64; 2] {
    let d = x.len();
    assert!(d >= 2, "lz needs at least 2 variables, got {d}");
    assert!((0.0..=1.0).contains(&x[0]), "lz domain is x1 in [0,1], got {}", x[0]);
    for (i, &v) in x.iter().enumerate().skip(1) {
        assert!((-1.0..=1.0).contains(&v), "lz domain is x_j in [-1,1], got x[{i}] = {v}");
    }
    let x1 = x[0];
    let mut odd_sum = 0.0;
    let mut odd_count = 0usize;
    let mut even_sum = 0.0;
    let mut even_count = 0usize;
    for j in 2..=d {
        let shifted = (6.0 * std::f64::consts::PI * x1 + j as f64 * std::f64::consts::PI
            / d as f64)
            .sin();
        let delta = x[j - 1] - shifted;
        if j % 2 == 1 {
            odd_sum += delta * delta;
            odd_count += 1;
        } else {
            even_sum += delta * delta;
            even_count += 1;
        }
    }
    let f1 = x1 + if odd_count > 0 { 2.0 * odd_sum / odd_count as f64 } else { 0.0 };
    let f2 =
        1.0 - x1.sqrt() + if even_count > 0 { 2.0 * even_sum / even_count as f64 } else { 0.0 };
    [f1, f2]
}

/// `Σ x_i²`, minimized at the origin.
///
/// # Panics
///
/// Panics on an empty slice.
pub fn sphere(x: &[f64]) -> f64 {
    assert!(!x.is_empty(), "sphere needs at least 1 variable");
    x.iter().map(|v| v * v).sum()
}

/// The four bi-objective benchmarks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Benchmark {
    Zdt1,
    Zdt2,
    Zdt3,
    Lz,
}

impl Benchmark {
    pub const ALL: [Benchmark; 4] = [Benchmark::Zdt1, Benchmark::Zdt2, Benchmark::Zdt3, Benchmark::Lz];

    pub fn name(self) -> &'static str {
        match self {
            Benchmark::Zdt1 => "zdt1",
            Benchmark::Zdt2 => "zdt2",
            Benchmark::Zdt3 => "zdt3",
            Benchmark::Lz => "lz",
        }
    }

    /// Evaluates the raw objective pair (see [`zdt1`] etc. for domains).
    pub fn objectives(self, x: &[f64]) -> [f64; 2] {
        match self {
            Benchmark::Zdt1 => zdt1(x),
            Benchmark::Zdt2 => zdt2(x),
            Benchmark::Zdt3 => zdt3(x),
            Benchmark::Lz => lz(x),
        }
    }

    /// Wraps the benchmark as a `Problem` in `dimension` variables
    /// (at least 2).
    pub fn problem(self, dimension: usize) -> Result<BenchmarkProblem> {
        if dimension < 2 {
            return Err(Error::InvalidParameter(format!(
                "{} needs at least 2 variables, got {dimension}",
                self.name()
            )));
        }
        let bounds = match self {
            Benchmark::Lz => {
                let mut lower = vec![-1.0; dimension];
                lower[0] = 0.0;
                BoxBounds::new(lower, vec![1.0; dimension])?
            }
            _ => BoxBounds::uniform(dimension, 0.0, 1.0)?,
        };
        Ok(BenchmarkProblem { benchmark: self, bounds })
    }

    /// The standard 30-variable instance.
    pub fn default_problem(self) -> BenchmarkProblem {
        self.problem(30).expect("30 >= 2")
    }

    /// Samples the true Pareto front with `points >= 2` points, sorted by
    /// `f1`. ZDT1, ZDT2, and LZ use closed forms; ZDT3's disconnected front
    /// is extracted by non-dominated filtering of a dense curve sample.
    pub fn true_front(self, points: usize) -> Result<FrontSample> {
        if points < 2 {
            return Err(Error::InvalidParameter(format!(
                "reference fronts need at least 2 points, got {points}"
            )));
        }
        let closed_form: Option<fn(f64) -> f64> = match self {
            Benchmark::Zdt1 | Benchmark::Lz => Some(|f1: f64| 1.0 - f1.sqrt()),
            Benchmark::Zdt2 => Some(|f1: f64| 1.0 - f1 * f1),
            Benchmark::Zdt3 => None,
        };
        if let Some(f2_of) = closed_form {
            let pts = (0..points)
                .map(|i| {
                    let f1 = i as f64 / (points - 1) as f64;
                    vec![f1, f2_of(f1)]
                })
                .collect();
            return FrontSample::new(pts, FrontSource::Analytic);
        }
        let kept = zdt3_front_dense();
        if points >= kept.len() {
            return FrontSample::new(kept, FrontSource::SampledFiltered);
        }
        let pts = (0..points)
            .map(|i| kept[i * (kept.len() - 1) / (points - 1)].clone())
            .collect();
        FrontSample::new(pts, FrontSource::SampledFiltered)
    }
}

impl fmt::Display for Benchmark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Benchmark {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "zdt1" => Ok(Benchmark::Zdt1),
            "zdt2" => Ok(Benchmark::Zdt2),
            "zdt3" => Ok(Benchmark::Zdt3),
            "lz" => Ok(Benchmark::Lz),
            _ => Err(Error::UnknownProblem(s.to_string())),
        }
    }
}

/// Number of grid points for the ZDT3 front extraction.
const ZDT3_GRID: usize = 100_001;

/// Dense non-dominated sample of the ZDT3 front: evaluate the `g = 1`
/// curve on a fine `f1` grid and keep points whose `f2` strictly improves
/// on everything to their left.
fn zdt3_front_dense() -> Vec<Vec<f64>> {
    let mut kept: Vec<Vec<f64>> = Vec::new();
    let mut best_f2 = f64::INFINITY;
    for i in 0..ZDT3_GRID {
        let f1 = i as f64 / (ZDT3_GRID - 1) as f64;
        let f2 = 1.0 - f1.sqrt() - f1 * (10.0 * std::f64::consts::PI * f1).sin();
        if f2 < best_f2 {
            best_f2 = f2;
            kept.push(vec![f1, f2]);
        }
    }
    kept
}

/// The five disconnected segments of the ZDT3 front as inclusive `f1`
/// intervals, in ascending order, extracted from the same dense sample
/// that backs [`Benchmark::true_front`].
pub fn zdt3_front_segments() -> Vec<(f64, f64)> {
    let step = 1.0 / (ZDT3_GRID - 1) as f64;
    let mut segments: Vec<(f64, f64)> = Vec::new();
    for point in zdt3_front_dense() {
        let f1 = point[0];
        match segments.last_mut() {
            // Grid neighbors (within one step and change) extend a segment.
            Some(seg) if f1 - seg.1 <= 1.5 * step => seg.1 = f1,
            _ => segments.push((f1, f1)),
        }
    }
    segments
}

/// How a reference front was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrontSource {
    /// Closed-form expression evaluated on a uniform grid.
    Analytic,
    /// Dense curve sample reduced to its non-dominated subset.
    SampledFiltered,
}

/// A sampled reference front: non-empty, points of equal arity, mutually
/// non-dominated, sorted ascending by the first objective.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontSample {
    points: Vec<Vec<f64>>,
    source: FrontSource,
}

impl FrontSample {
    /// Sorts the points by `f1` and validates the front invariants.
    pub fn new(mut points: Vec<Vec<f64>>, source: FrontSource) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyFront("front sample must contain points".into()));
        }
        let m = points[0].len();
        if m < 2 {
            return Err(Error::InvalidParameter("front points need at least 2 objectives".into()));
        }
        if points.iter().any(|p| p.len() != m) {
            return Err(Error::InvalidParameter("front points differ in arity".into()));
        }
        if points.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter("front points must be finite".into()));
        }
        points.sort_by(|a, b| {
            a.iter()
                .zip(b)
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let nondominated = if m == 2 {
            // Sorted by (f1 asc, f2 asc): each point must strictly improve
            // f2 over its predecessor, otherwise one of the two dominates.
            points.windows(2).all(|w| w[1][1] < w[0][1])
        } else {
            points.iter().all(|a| {
                points
                    .iter()
                    .all(|b| !crate::core::dominates(a, 0.0, b, 0.0))
            })
        };
        if !nondominated {
            return Err(Error::InvalidParameter(
                "front points must be mutually non-dominated".into(),
            ));
        }
        Ok(Self { points, source })
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn source(&self) -> FrontSource {
        self.source
    }
}

/// Squared distance from `p` to its nearest neighbor in `reference`.
fn nearest_squared_distance(p: &[f64], reference: &[Vec<f64>]) -> f64 {
    reference
        .iter()
        .map(|q| {
            assert_eq!(p.len(), q.len(), "front arity mismatch");
            p.iter().zip(q).map(|(&a, &b)| (a - b) * (a - b)).sum::<f64>()
        })
        .fold(f64::INFINITY, f64::min)
}

/// Front error `E_f = Σ_j d_j²`, where `d_j` is the Euclidean distance from
/// the `j`-th estimated point to its nearest reference point.
///
/// Fails when either front is empty.
pub fn error_metric_ef(estimated: &[Vec<f64>], reference: &[Vec<f64>]) -> Result<f64> {
    if estimated.is_empty() {
        return Err(Error::EmptyFront("estimated front is empty".into()));
    }
    if reference.is_empty() {
        return Err(Error::EmptyFront("reference front is empty".into()));
    }
    Ok(estimated.iter().map(|p| nearest_squared_distance(p, reference)).sum())
}

/// Generalized distance `D_g = (1/N) √(Σ_j d_j²)` with `N` the number of
/// estimated points — equivalently `√(E_f) / N`.
///
/// Fails when either front is empty.
pub fn generalized_distance(estimated: &[Vec<f64>], reference: &[Vec<f64>]) -> Result<f64> {
    if estimated.is_empty() {
        return Err(Error::EmptyFront("estimated front is empty".into()));
    }
    if reference.is_empty() {
        return Err(Error::EmptyFront("reference front is empty".into()));
    }
    let sum_sq: f64 = estimated.iter().map(|p| nearest_squared_distance(p, reference)).sum();
    Ok(sum_sq.sqrt() / estimated.len() as f64)
}

/// A `d`-dimensional sphere problem on `[-5, 5]^d`.
pub struct SphereProblem {
    bounds: BoxBounds,
}

impl SphereProblem {
    /// # Panics
    ///
    /// Panics if `dimension == 0`.
    pub fn new(dimension: usize) -> Self {
        assert!(dimension >= 1, "sphere needs at least 1 variable");
        Self { bounds: BoxBounds::uniform(dimension, -5.0, 5.0).expect("valid box") }
    }
}

impl Problem for SphereProblem {
    fn dimension(&self) -> usize {
        self.bounds.dimension()
    }
    fn objective_count(&self) -> usize {
        1
    }
    fn bounds(&self) -> &BoxBounds {
        &self.bounds
    }
    fn evaluate(&self, x: &[f64]) -> Evaluation {
        Evaluation::unconstrained(vec![sphere(x)])
    }
}

/// A [`Benchmark`] wrapped as a [`Problem`].
pub struct BenchmarkProblem {
    benchmark: Benchmark,
    bounds: BoxBounds,
}

impl BenchmarkProblem {
    pub fn benchmark(&self) -> Benchmark {
        self.benchmark
    }
}

impl Problem for BenchmarkProblem {
    fn dimension(&self) -> usize {
        self.bounds.dimension()
    }
    fn objective_count(&self) -> usize {
        2
    }
    fn bounds(&self) -> &BoxBounds {
        &self.bounds
    }
    fn evaluate(&self, x: &[f64]) -> Evaluation {
        Evaluation::unconstrained(self.benchmark.objectives(x).to_vec())
    }
}
