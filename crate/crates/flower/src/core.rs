//! Problem definitions, box bounds, candidate solutions, and the
//! constraint-aware dominance relation shared by all solvers.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// The generator used for every stochastic component in this crate.
///
/// ChaCha8 is seedable from a single `u64`, supports independent streams,
/// and behaves identically on every platform, which is what makes runs
/// reproducible bit-for-bit.
pub type RunRng = ChaCha8Rng;

/// A fresh generator for `seed` on the default stream.
pub fn seeded_rng(seed: u64) -> RunRng {
    RunRng::seed_from_u64(seed)
}

/// A generator for `seed` on a dedicated `stream`.
///
/// Streams of the same seed are statistically independent; solvers use them
/// to give sub-tasks (weight draws, scalarized sub-runs) their own sequence
/// without coupling the consumption order of one task to another.
pub fn stream_rng(seed: u64, stream: u64) -> RunRng {
    let mut rng = seeded_rng(seed);
    rng.set_stream(stream);
    rng
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a child seed from a base seed and a salt (e.g. a sub-run index),
/// so nested solvers do not reuse each other's streams.
pub fn derive_seed(seed: u64, salt: u64) -> u64 {
    splitmix64(splitmix64(seed).wrapping_add(salt))
}

/// Axis-aligned box constraints: per-component lower and upper limits.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxBounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl BoxBounds {
    /// Builds bounds from per-component limits.
    ///
    /// Fails if the vectors differ in length, are empty, contain non-finite
    /// values, or violate `lower[i] < upper[i]` anywhere.
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::InvalidParameter(format!(
                "bounds length mismatch: {} lower vs {} upper",
                lower.len(),
                upper.len()
            )));
        }
        if lower.is_empty() {
            return Err(Error::InvalidParameter("bounds must have dimension >= 1".into()));
        }
        for (i, (&lo, &hi)) in lower.iter().zip(&upper).enumerate() {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "bounds must be finite (component {i}: [{lo}, {hi}])"
                )));
            }
            if lo >= hi {
                return Err(Error::InvalidParameter(format!(
                    "lower bound must be below upper bound (component {i}: [{lo}, {hi}])"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The box `[lo, hi]^d`.
    pub fn uniform(dimension: usize, lo: f64, hi: f64) -> Result<Self> {
        Self::new(vec![lo; dimension], vec![hi; dimension])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// True when every component of `x` lies inside the box (inclusive).
    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(&self.lower)
                .zip(&self.upper)
                .all(|((&v, &lo), &hi)| v >= lo && v <= hi)
    }

    /// Draws a point uniformly from the box.
    pub fn sample_uniform<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(&lo, &hi)| lo + rng.random::<f64>() * (hi - lo))
            .collect()
    }
}

/// Projects `x` into `bounds`, component by component.
///
/// Components flagged in `integer_mask` are additionally rounded to the
/// nearest integer after clamping; when rounding would leave the box the
/// value moves to the nearest integer inside it instead (integer components
/// are assumed to span at least one integer, as every provided problem
/// does). Non-finite inputs clamp like any other value (NaN maps to the
/// lower bound).
///
/// # Panics
///
/// Panics if `x`, the bounds, and the mask (when present) disagree on
/// dimension — that is a programming error, not an input error.
pub fn clamp_to_bounds(x: &[f64], bounds: &BoxBounds, integer_mask: Option<&[bool]>) -> Vec<f64> {
    assert_eq!(x.len(), bounds.dimension(), "point/bounds dimension mismatch");
    if let Some(mask) = integer_mask {
        assert_eq!(mask.len(), x.len(), "integer mask dimension mismatch");
    }
    x.iter()
        .enumerate()
        .map(|(i, &v)| {
            let (lo, hi) = (bounds.lower[i], bounds.upper[i]);
            let mut v = if v.is_nan() { lo } else { v.clamp(lo, hi) };
            if integer_mask.is_some_and(|m| m[i]) {
                v = v.round();
                if v < lo {
                    v = lo.ceil();
                }
                if v > hi {
                    v = hi.floor();
                }
            }
            v
        })
        .collect()
}

/// The result of evaluating a candidate: objective values plus one
/// non-negative violation magnitude per inequality constraint (empty for
/// unconstrained problems).
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub objectives: Vec<f64>,
    pub violations: Vec<f64>,
}

impl Evaluation {
    /// An unconstrained evaluation.
    pub fn unconstrained(objectives: Vec<f64>) -> Self {
        Self { objectives, violations: Vec::new() }
    }
}

/// An optimization problem over a box-constrained search space.
///
/// Implementations must be deterministic: the same `x` always yields the
/// same evaluation. `evaluate` may assume `x` has already been clamped into
/// `bounds` (and rounded on any integer components) — the solvers guarantee
/// that by constructing candidates through [`Pollen::from_candidate`].
pub trait Problem: Sync {
    /// Search-space dimension `d`.
    fn dimension(&self) -> usize;

    /// Number of objectives `m`.
    fn objective_count(&self) -> usize;

    /// The feasible box.
    fn bounds(&self) -> &BoxBounds;

    /// Components that only take integer values, if any.
    fn integer_mask(&self) -> Option<&[bool]> {
        None
    }

    /// Objectives and constraint violations at `x`.
    fn evaluate(&self, x: &[f64]) -> Evaluation;
}

/// A candidate solution together with its evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct Pollen {
    pub position: Vec<f64>,
    pub objectives: Vec<f64>,
    pub violations: Vec<f64>,
}

impl Pollen {
    /// Clamps a raw (possibly out-of-box) candidate into the problem's
    /// bounds, applies integer rounding, and evaluates it. All solver moves
    /// construct candidates through this, which keeps the invariant that a
    /// stored position is always inside the box and already rounded.
    pub fn from_candidate<P: Problem + ?Sized>(problem: &P, raw_position: &[f64]) -> Self {
        let position = clamp_to_bounds(raw_position, problem.bounds(), problem.integer_mask());
        let eval = problem.evaluate(&position);
        assert_eq!(
            eval.objectives.len(),
            problem.objective_count(),
            "problem returned wrong number of objectives"
        );
        Self { position, objectives: eval.objectives, violations: eval.violations }
    }

    /// Sum of all constraint violations (zero for feasible points).
    pub fn total_violation(&self) -> f64 {
        self.violations.iter().sum()
    }

    pub fn is_feasible(&self) -> bool {
        self.total_violation() == 0.0
    }

    /// Constraint-aware dominance against another candidate.
    pub fn dominates(&self, other: &Pollen) -> bool {
        dominates(
            &self.objectives,
            self.total_violation(),
            &other.objectives,
            other.total_violation(),
        )
    }
}

/// Constraint-aware Pareto dominance (feasibility first):
///
/// * a feasible point dominates any infeasible one;
/// * between infeasible points, strictly smaller total violation dominates;
/// * between feasible points, `a` dominates `b` when it is no worse in every
///   objective and strictly better in at least one.
///
/// With a single objective this reduces to "strictly smaller value wins",
/// so the same relation drives both solvers.
///
/// # Panics
///
/// Panics if the objective vectors differ in length.
pub fn dominates(a: &[f64], a_violation: f64, b: &[f64], b_violation: f64) -> bool {
    assert_eq!(a.len(), b.len(), "objective dimension mismatch");
    let a_feasible = a_violation == 0.0;
    let b_feasible = b_violation == 0.0;
    match (a_feasible, b_feasible) {
        (true, false) => true,
        (false, true) => false,
        (false, false) => a_violation < b_violation,
        (true, true) => {
            let mut strictly_better = false;
            for (&ai, &bi) in a.iter().zip(b) {
                if ai > bi {
                    return false;
                }
                if ai < bi {
                    strictly_better = true;
                }
            }
            strictly_better
        }
    }
}

/// Like [`dominates`], but ties count: equal objective vectors (or equal
/// violations among infeasible points) weakly dominate each other. Archives
/// use this to reject duplicates.
pub fn weakly_dominates(a: &[f64], a_violation: f64, b: &[f64], b_violation: f64) -> bool {
    assert_eq!(a.len(), b.len(), "objective dimension mismatch");
    let a_feasible = a_violation == 0.0;
    let b_feasible = b_violation == 0.0;
    match (a_feasible, b_feasible) {
        (true, false) => true,
        (false, true) => false,
        (false, false) => a_violation <= b_violation,
        (true, true) => a.iter().zip(b).all(|(&ai, &bi)| ai <= bi),
    }
}
