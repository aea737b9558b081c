//! The single-objective flower pollination algorithm.
//!
//! A population of `n` flowers evolves for `t` iterations. Each flower
//! proposes one candidate per iteration: with probability `p` a *global*
//! move that flies toward the best known solution along a Lévy step, and
//! otherwise a *local* move that blends the displacement between two random
//! flowers. A candidate replaces its flower only if it is better
//! (feasibility first, then objective value), and the best solution is
//! re-selected after every full population sweep.

use rand::Rng;

use crate::core::{clamp_to_bounds, stream_rng, BoxBounds, Pollen, Problem, RunRng};
use crate::levy::{LevyParams, LevySampler};
use crate::{Error, Result};

/// Stream id for a solver's main loop (initialization + moves).
pub(crate) const STREAM_MAIN: u64 = 0;

/// Tuning parameters for [`fpa_minimize`] (also embedded in the
/// multi-objective solver's parameters).
#[derive(Debug, Clone, PartialEq)]
pub struct FpaParams {
    /// Population size `n`.
    pub population: usize,
    /// Iteration count `t` (full population sweeps after initialization).
    pub iterations: usize,
    /// Probability `p` of choosing the global (Lévy) move for a proposal.
    pub switch_probability: f64,
    /// Scale `γ` applied to Lévy steps in the global move.
    pub gamma: f64,
    /// Lévy step distribution.
    pub levy: LevyParams,
    /// Seed for the run's random stream.
    pub seed: u64,
}

impl Default for FpaParams {
    /// `n = 50`, `t = 1000`, `p = 0.8`, `γ = 0.1`, `λ = 1.5`, seed 0.
    fn default() -> Self {
        Self {
            population: 50,
            iterations: 1000,
            switch_probability: 0.8,
            gamma: 0.1,
            levy: LevyParams::default(),
            seed: 0,
        }
    }
}

impl FpaParams {
    pub fn validate(&self) -> Result<()> {
        if self.population == 0 {
            return Err(Error::InvalidParameter("population must be >= 1".into()));
        }
        if self.iterations == 0 {
            return Err(Error::InvalidParameter("iterations must be >= 1".into()));
        }
        if !(self.switch_probability >= 0.0 && self.switch_probability <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "switch probability must lie in [0, 1], got {}",
                self.switch_probability
            )));
        }
        if !(self.gamma > 0.0 && self.gamma.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "gamma must be positive and finite, got {}",
                self.gamma
            )));
        }
        // Re-validate the Lévy parameters: the fields are public, so the
        // struct may not have come through `LevyParams::new`.
        LevyParams::new(self.levy.lambda, self.levy.s0)?;
        Ok(())
    }
}

/// Everything a single run produces.
#[derive(Debug, Clone, PartialEq)]
pub struct RunTrace {
    /// Best solution at termination.
    pub best: Pollen,
    /// Best objective value after initialization and after each iteration
    /// (`iterations + 1` entries, non-increasing while the incumbent stays
    /// feasible).
    pub best_per_iteration: Vec<f64>,
    /// Final population.
    pub population: Vec<Pollen>,
    /// Number of objective evaluations (`n · (t + 1)`).
    pub evaluations: usize,
    /// How many proposals took the global (Lévy) branch.
    pub global_moves: usize,
    /// How many proposals took the local branch.
    pub local_moves: usize,
}

/// Global pollination update: `x' = x + γ · L ⊙ (g* − x)`.
///
/// `steps` is one Lévy draw per component. The move is a no-op when
/// `x == g*` or `γ = 0`, regardless of the steps.
///
/// # Panics
///
/// Panics if `x`, `g_star`, and `steps` differ in length.
pub fn global_move(x: &[f64], g_star: &[f64], gamma: f64, steps: &[f64]) -> Vec<f64> {
    assert_eq!(x.len(), g_star.len(), "position dimension mismatch");
    assert_eq!(x.len(), steps.len(), "step dimension mismatch");
    x.iter()
        .zip(g_star)
        .zip(steps)
        .map(|((&xi, &gi), &li)| xi + gamma * li * (gi - xi))
        .collect()
}

/// Local pollination update: `x' = x + ε · (x_j − x_k)` with a scalar `ε`.
///
/// The move is a no-op when `x_j == x_k` or `ε = 0`.
///
/// # Panics
///
/// Panics if the positions differ in length.
pub fn local_move(x: &[f64], x_j: &[f64], x_k: &[f64], epsilon: f64) -> Vec<f64> {
    assert_eq!(x.len(), x_j.len(), "position dimension mismatch");
    assert_eq!(x.len(), x_k.len(), "position dimension mismatch");
    x.iter()
        .zip(x_j.iter().zip(x_k))
        .map(|(&xi, (&xj, &xk))| xi + epsilon * (xj - xk))
        .collect()
}

/// Samples a Lévy step vector, applies [`global_move`], and clamps the
/// result into `bounds` (with integer rounding where `integer_mask` says so).
pub fn global_pollination<R: Rng + ?Sized>(
    x: &[f64],
    g_star: &[f64],
    gamma: f64,
    sampler: &LevySampler,
    bounds: &BoxBounds,
    integer_mask: Option<&[bool]>,
    rng: &mut R,
) -> Vec<f64> {
    let steps = sampler.sample_vector(x.len(), rng);
    clamp_to_bounds(&global_move(x, g_star, gamma, &steps), bounds, integer_mask)
}

/// Draws `ε ~ U[0, 1)`, applies [`local_move`], and clamps the result.
pub fn local_pollination<R: Rng + ?Sized>(
    x: &[f64],
    x_j: &[f64],
    x_k: &[f64],
    bounds: &BoxBounds,
    integer_mask: Option<&[bool]>,
    rng: &mut R,
) -> Vec<f64> {
    let epsilon: f64 = rng.random();
    clamp_to_bounds(&local_move(x, x_j, x_k, epsilon), bounds, integer_mask)
}

/// Which branch a proposal took; used for move accounting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum MoveKind {
    Global,
    Local,
}

/// Draws the branch and produces the raw (unclamped) candidate position for
/// flower `i`. Shared by the single- and multi-objective solvers so both
/// consume randomness in exactly the same order: branch, then either the
/// Lévy vector (global) or `j`, `k`, `ε` (local).
pub(crate) fn propose_position(
    population: &[Pollen],
    i: usize,
    g_star: &[f64],
    params: &FpaParams,
    sampler: &LevySampler,
    rng: &mut RunRng,
) -> (Vec<f64>, MoveKind) {
    let x = &population[i].position;
    if rng.random::<f64>() < params.switch_probability {
        let steps = sampler.sample_vector(x.len(), rng);
        (global_move(x, g_star, params.gamma, &steps), MoveKind::Global)
    } else {
        let n = population.len();
        let (j, k) = if n == 1 {
            // A lone flower has no partner pair; the move degenerates to x.
            (0, 0)
        } else {
            let j = rng.random_range(0..n);
            let mut k = rng.random_range(0..n);
            while k == j {
                k = rng.random_range(0..n);
            }
            (j, k)
        };
        let epsilon: f64 = rng.random();
        (
            local_move(x, &population[j].position, &population[k].position, epsilon),
            MoveKind::Local,
        )
    }
}

/// Uniform random initialization, evaluated through the clamping
/// constructor so integer components start on integers.
pub(crate) fn init_population<P: Problem + ?Sized>(
    problem: &P,
    n: usize,
    rng: &mut RunRng,
) -> Vec<Pollen> {
    (0..n)
        .map(|_| {
            let raw = problem.bounds().sample_uniform(rng);
            Pollen::from_candidate(problem, &raw)
        })
        .collect()
}

/// Index of the best pollen under constraint-aware dominance, preferring
/// the earliest index on ties so selection is deterministic.
pub(crate) fn best_index(population: &[Pollen]) -> usize {
    let mut best = 0;
    for i in 1..population.len() {
        if population[i].dominates(&population[best]) {
            best = i;
        }
    }
    best
}

/// Minimizes a single-objective problem and returns the full run trace.
///
/// Fails if the parameters are out of range or the problem does not have
/// exactly one objective (use the multi-objective solver for `m >= 2`).
pub fn fpa_minimize<P: Problem + ?Sized>(problem: &P, params: &FpaParams) -> Result<RunTrace> {
    params.validate()?;
    if problem.objective_count() != 1 {
        return Err(Error::InvalidParameter(format!(
            "fpa_minimize requires exactly one objective, problem has {}",
            problem.objective_count()
        )));
    }

    let sampler = LevySampler::new(params.levy);
    let mut rng = stream_rng(params.seed, STREAM_MAIN);
    let mut population = init_population(problem, params.population, &mut rng);
    let mut evaluations = population.len();
    let mut best = population[best_index(&population)].clone();

    let mut best_per_iteration = Vec::with_capacity(params.iterations + 1);
    best_per_iteration.push(best.objectives[0]);

    let mut global_moves = 0;
    let mut local_moves = 0;

    for _ in 0..params.iterations {
        // The attractor stays fixed during a sweep; it is re-selected below.
        let g_star = best.position.clone();
        for i in 0..population.len() {
            let (raw, kind) =
                propose_position(&population, i, &g_star, params, &sampler, &mut rng);
            match kind {
                MoveKind::Global => global_moves += 1,
                MoveKind::Local => local_moves += 1,
            }
            let candidate = Pollen::from_candidate(problem, &raw);
            evaluations += 1;
            if candidate.dominates(&population[i]) {
                population[i] = candidate;
            }
        }
        let idx = best_index(&population);
        if population[idx].dominates(&best) {
            best = population[idx].clone();
        }
        best_per_iteration.push(best.objectives[0]);
    }

    Ok(RunTrace { best, best_per_iteration, population, evaluations, global_moves, local_moves })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{BoxBounds, Evaluation};

    struct Sphere {
        bounds: BoxBounds,
    }

    impl Sphere {
        fn new(d: usize) -> Self {
            Self { bounds: BoxBounds::uniform(d, -5.0, 5.0).unwrap() }
        }
    }

    impl Problem for Sphere {
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
            Evaluation::unconstrained(vec![x.iter().map(|v| v * v).sum()])
        }
    }

    struct TwoObjective {
        bounds: BoxBounds,
    }

    impl Problem for TwoObjective {
        fn dimension(&self) -> usize {
            2
        }
        fn objective_count(&self) -> usize {
            2
        }
        fn bounds(&self) -> &BoxBounds {
            &self.bounds
        }
        fn evaluate(&self, x: &[f64]) -> Evaluation {
            Evaluation::unconstrained(vec![x[0], x[1]])
        }
    }

    #[test]
    fn global_move_formula() {
        assert_eq!(global_move(&[1.0, 1.0], &[0.0, 0.0], 0.1, &[0.5, 0.5]), vec![0.95, 0.95]);
        // At the attractor the move vanishes for any step.
        assert_eq!(global_move(&[2.0, 3.0], &[2.0, 3.0], 0.1, &[9.0, -4.0]), vec![2.0, 3.0]);
        // Zero gamma freezes the flower.
        assert_eq!(global_move(&[2.0, 3.0], &[0.0, 0.0], 0.0, &[9.0, -4.0]), vec![2.0, 3.0]);
    }

    #[test]
    fn local_move_formula() {
        assert_eq!(local_move(&[0.0, 0.0], &[1.0, 0.0], &[0.0, 1.0], 1.0), vec![1.0, -1.0]);
        assert_eq!(local_move(&[0.5, 0.5], &[1.0, 2.0], &[1.0, 2.0], 0.7), vec![0.5, 0.5]);
        assert_eq!(local_move(&[0.5, 0.5], &[1.0, 2.0], &[3.0, 4.0], 0.0), vec![0.5, 0.5]);
    }

    #[test]
    fn pollination_wrappers_clamp() {
        let bounds = BoxBounds::uniform(2, 0.0, 1.0).unwrap();
        let sampler = LevySampler::new(LevyParams::default());
        let mut rng = crate::core::seeded_rng(5);
        for _ in 0..200 {
            let p = global_pollination(
                &[0.9, 0.1],
                &[0.0, 1.0],
                5.0,
                &sampler,
                &bounds,
                None,
                &mut rng,
            );
            assert!(bounds.contains(&p));
            let q =
                local_pollination(&[0.9, 0.1], &[1.0, 1.0], &[0.0, 0.0], &bounds, None, &mut rng);
            assert!(bounds.contains(&q));
        }
    }

    #[test]
    fn params_are_validated() {
        let ok = FpaParams::default();
        assert!(ok.validate().is_ok());
        assert!(FpaParams { population: 0, ..ok.clone() }.validate().is_err());
        assert!(FpaParams { iterations: 0, ..ok.clone() }.validate().is_err());
        assert!(FpaParams { switch_probability: 1.5, ..ok.clone() }.validate().is_err());
        assert!(FpaParams { switch_probability: -0.1, ..ok.clone() }.validate().is_err());
        assert!(FpaParams { switch_probability: f64::NAN, ..ok.clone() }.validate().is_err());
        assert!(FpaParams { gamma: 0.0, ..ok.clone() }.validate().is_err());
        assert!(FpaParams { gamma: -0.5, ..ok.clone() }.validate().is_err());
        let bad_levy = LevyParams { lambda: 0.5, s0: 0.01 };
        assert!(FpaParams { levy: bad_levy, ..ok }.validate().is_err());
    }

    #[test]
    fn rejects_multi_objective_problems() {
        let problem = TwoObjective { bounds: BoxBounds::uniform(2, 0.0, 1.0).unwrap() };
        let err = fpa_minimize(&problem, &FpaParams::default()).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter(_)));
    }

    #[test]
    fn converges_on_a_small_sphere() {
        let problem = Sphere::new(5);
        let params = FpaParams { population: 20, iterations: 300, seed: 1, ..Default::default() };
        let trace = fpa_minimize(&problem, &params).unwrap();
        assert!(trace.best.objectives[0] < 1e-2, "best {}", trace.best.objectives[0]);
    }

    #[test]
    fn trace_shape_and_monotonicity() {
        let problem = Sphere::new(4);
        let params = FpaParams { population: 12, iterations: 80, seed: 9, ..Default::default() };
        let trace = fpa_minimize(&problem, &params).unwrap();
        assert_eq!(trace.best_per_iteration.len(), params.iterations + 1);
        assert_eq!(trace.evaluations, params.population * (params.iterations + 1));
        assert_eq!(trace.global_moves + trace.local_moves, params.population * params.iterations);
        for w in trace.best_per_iteration.windows(2) {
            assert!(w[1] <= w[0], "best-so-far must never regress: {w:?}");
        }
        assert_eq!(trace.population.len(), params.population);
        for p in &trace.population {
            assert!(problem.bounds.contains(&p.position));
        }
        let last = *trace.best_per_iteration.last().unwrap();
        assert_eq!(last, trace.best.objectives[0]);
    }

    #[test]
    fn runs_are_deterministic() {
        let problem = Sphere::new(6);
        let params = FpaParams { population: 15, iterations: 60, seed: 77, ..Default::default() };
        let a = fpa_minimize(&problem, &params).unwrap();
        let b = fpa_minimize(&problem, &params).unwrap();
        assert_eq!(a, b);
        let c = fpa_minimize(&problem, &FpaParams { seed: 78, ..params }).unwrap();
        assert_ne!(a.best.position, c.best.position);
    }

    #[test]
    fn single_flower_population_still_runs() {
        let problem = Sphere::new(3);
        let params = FpaParams { population: 1, iterations: 50, seed: 4, ..Default::default() };
        let trace = fpa_minimize(&problem, &params).unwrap();
        assert_eq!(trace.population.len(), 1);
        assert!(trace.best.objectives[0].is_finite());
    }

    #[test]
    fn branch_frequency_tracks_switch_probability() {
        // 50 flowers for 2000 iterations = 1e5 proposals.
        let problem = Sphere::new(2);
        let params = FpaParams {
            population: 50,
            iterations: 2000,
            switch_probability: 0.8,
            seed: 13,
            ..Default::default()
        };
        let trace = fpa_minimize(&problem, &params).unwrap();
        let proposals = (params.population * params.iterations) as f64;
        let fraction = trace.global_moves as f64 / proposals;
        assert!((0.79..=0.81).contains(&fraction), "global fraction {fraction}");
    }
}
