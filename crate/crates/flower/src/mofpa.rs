//! Multi-objective flower pollination via random-weight scalarization.
//!
//! Each proposal is judged by a weighted sum of the objectives; varying the
//! weights steers the population toward different regions of the Pareto
//! front. Every evaluated candidate is offered to an external
//! [`ParetoArchive`] that keeps a bounded, mutually non-dominated set,
//! pruned by crowding distance so the retained front stays spread out.
//!
//! Two weight schedules are provided:
//!
//! * [`WeightSchedule::PerIteration`] — one population, fresh weights each
//!   iteration. Cheap (one run's worth of evaluations) and serviceable, but
//!   the moving target limits how far the population itself converges.
//! * [`WeightSchedule::Sweep`] — `sweep_runs` independent runs, each with a
//!   fixed weight vector, merged into one archive. This is the protocol
//!   behind the reported reference results; with the `parallel` feature the
//!   sub-runs execute concurrently and merge in a fixed order, so output is
//!   identical either way.

use rand::Rng;

use crate::core::{stream_rng, Pollen, Problem, RunRng};
use crate::exec::run_batch;
use crate::fpa::{init_population, propose_position, FpaParams, STREAM_MAIN};
use crate::levy::LevySampler;
use crate::{Error, Result};

/// Stream id for drawing sweep weight vectors.
const STREAM_WEIGHTS: u64 = 1;
/// First stream id for sweep sub-runs (sub-run `k` uses `2 + k`).
const STREAM_SUBRUN_BASE: u64 = 2;

/// How scalarization weights are generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMode {
    /// Independent uniform draws, normalized to sum to one.
    Random,
    /// Deterministic low-discrepancy sequence (van der Corput / Halton),
    /// which covers the weight simplex more evenly than random draws.
    LowDiscrepancy,
}

/// When weights change during a solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightSchedule {
    /// Redraw at the start of every iteration of a single run.
    PerIteration,
    /// One fixed weight vector per run, `sweep_runs` runs, archives merged.
    Sweep,
}

/// A strictly positive weight vector summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    /// Validates positivity and normalization (sum within `1e-9` of one).
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidParameter("weight vector must be non-empty".into()));
        }
        if weights.iter().any(|&w| !(w > 0.0) || !w.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "weights must be strictly positive and finite, got {weights:?}"
            )));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidParameter(format!(
                "weights must sum to 1, got {sum}"
            )));
        }
        Ok(Self(weights))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// First sixteen primes, used as van der Corput bases.
const PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

fn van_der_corput(mut n: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let mut value = 0.0;
    let mut factor = inv;
    while n > 0 {
        value += (n % base) as f64 * factor;
        n /= base;
        factor *= inv;
    }
    value
}

/// `m` positive weights summing to one, from independent uniforms
/// normalized by their total. Draws with a zero component are redrawn, so
/// every weight is strictly positive.
pub fn random_weights<R: Rng + ?Sized>(m: usize, rng: &mut R) -> WeightVector {
    assert!(m >= 1, "weight vectors must have at least one component");
    loop {
        let raw: Vec<f64> = (0..m).map(|_| rng.random::<f64>()).collect();
        if raw.iter().any(|&u| u == 0.0) {
            continue;
        }
        let sum: f64 = raw.iter().sum();
        return WeightVector(raw.into_iter().map(|u| u / sum).collect());
    }
}

/// The `index`-th member (1-based) of a deterministic low-discrepancy
/// sequence on the weight simplex: `m - 1` Halton coordinates are sorted
/// and their gaps become the weights. Components are floored at `1e-12`
/// (then renormalized) on the rare event of coinciding coordinates.
///
/// # Panics
///
/// Panics if `m == 0`, if `index == 0`, or if `m - 1` exceeds the number of
/// available Halton bases (16).
pub fn low_discrepancy_weights(m: usize, index: u64) -> WeightVector {
    assert!(m >= 1, "weight vectors must have at least one component");
    assert!(index >= 1, "low-discrepancy indices start at 1");
    assert!(m - 1 <= PRIMES.len(), "too many objectives for the Halton bases");
    if m == 1 {
        return WeightVector(vec![1.0]);
    }
    let mut coords: Vec<f64> = PRIMES[..m - 1].iter().map(|&b| van_der_corput(index, b)).collect();
    coords.sort_by(f64::total_cmp);
    let mut weights = Vec::with_capacity(m);
    let mut prev = 0.0;
    for &c in &coords {
        weights.push(c - prev);
        prev = c;
    }
    weights.push(1.0 - prev);
    if weights.iter().any(|&w| w < 1e-12) {
        for w in &mut weights {
            *w = w.max(1e-12);
        }
        let sum: f64 = weights.iter().sum();
        for w in &mut weights {
            *w /= sum;
        }
    }
    WeightVector(weights)
}

/// Draws a weight vector according to `mode`. `index` (1-based) selects the
/// member of the low-discrepancy sequence and is ignored for random draws.
pub fn draw_weights<R: Rng + ?Sized>(
    m: usize,
    mode: WeightMode,
    rng: &mut R,
    index: u64,
) -> Result<WeightVector> {
    if m == 0 {
        return Err(Error::InvalidParameter("cannot draw weights for zero objectives".into()));
    }
    if mode == WeightMode::LowDiscrepancy {
        if index == 0 {
            return Err(Error::InvalidParameter("low-discrepancy indices start at 1".into()));
        }
        if m - 1 > PRIMES.len() {
            return Err(Error::InvalidParameter(format!(
                "low-discrepancy weights support at most {} objectives",
                PRIMES.len() + 1
            )));
        }
        return Ok(low_discrepancy_weights(m, index));
    }
    Ok(random_weights(m, rng))
}

/// Weighted sum `Σ w_i f_i`.
///
/// # Panics
///
/// Panics if the vectors differ in length.
pub fn scalarize(objectives: &[f64], weights: &WeightVector) -> f64 {
    assert_eq!(objectives.len(), weights.len(), "objective/weight dimension mismatch");
    objectives.iter().zip(weights.values()).map(|(&f, &w)| f * w).sum()
}

/// Feasibility-first comparison under a fixed weight vector: feasible beats
/// infeasible, infeasible points compare by total violation, feasible
/// points by scalarized objective.
fn scalar_better(a: &Pollen, b: &Pollen, weights: &WeightVector) -> bool {
    match (a.is_feasible(), b.is_feasible()) {
        (true, false) => true,
        (false, true) => false,
        (false, false) => a.total_violation() < b.total_violation(),
        (true, true) => scalarize(&a.objectives, weights) < scalarize(&b.objectives, weights),
    }
}

/// A bounded external archive of mutually non-dominated solutions.
///
/// Insertion rejects any candidate weakly dominated by a current entry
/// (which also swallows exact duplicates), removes entries the candidate
/// strictly dominates, and — when the archive would exceed its capacity —
/// evicts the entry with the smallest crowding distance, so boundary points
/// survive and dense clusters thin out first.
#[derive(Debug, Clone, PartialEq)]
pub struct ParetoArchive {
    capacity: usize,
    entries: Vec<Pollen>,
}

impl ParetoArchive {
    pub const DEFAULT_CAPACITY: usize = 100;

    /// # Panics
    ///
    /// Panics if `capacity == 0`.
    pub fn new(capacity: usize) -> Self {
        assert!(capacity >= 1, "archive capacity must be >= 1");
        Self { capacity, entries: Vec::new() }
    }

    pub fn with_default_capacity() -> Self {
        Self::new(Self::DEFAULT_CAPACITY)
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Pollen] {
        &self.entries
    }

    /// Offers a candidate; returns whether it was kept.
    pub fn insert(&mut self, candidate: Pollen) -> bool {
        let cand_violation = candidate.total_violation();
        if self.entries.iter().any(|e| {
            crate::core::weakly_dominates(
                &e.objectives,
                e.total_violation(),
                &candidate.objectives,
                cand_violation,
            )
        }) {
            return false;
        }
        self.entries.retain(|e| !candidate.dominates(e));
        self.entries.push(candidate);
        if self.entries.len() > self.capacity {
            self.evict_most_crowded();
        }
        true
    }

    /// Offers a sequence of candidates in order.
    pub fn merge<I: IntoIterator<Item = Pollen>>(&mut self, candidates: I) {
        for c in candidates {
            self.insert(c);
        }
    }

    /// Entries sorted by the first objective (remaining objectives break
    /// ties), e.g. for plotting or CSV export.
    pub fn sorted_entries(&self) -> Vec<Pollen> {
        let mut sorted = self.entries.clone();
        sorted.sort_by(|a, b| {
            a.objectives
                .iter()
                .zip(&b.objectives)
                .map(|(x, y)| x.total_cmp(y))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        sorted
    }

    /// The objective vectors of all entries, in insertion order.
    pub fn objective_vectors(&self) -> Vec<Vec<f64>> {
        self.entries.iter().map(|e| e.objectives.clone()).collect()
    }

    fn evict_most_crowded(&mut self) {
        let distances = crowding_distances(&self.entries);
        let mut victim = 0;
        for (i, &d) in distances.iter().enumerate() {
            if d < distances[victim] {
                victim = i;
            }
        }
        self.entries.remove(victim);
    }
}

/// Crowding distance per entry: for each objective the entries are sorted,
/// the extremes get infinity, and interior entries accumulate the
/// neighbor-to-neighbor span normalized by the objective's range.
fn crowding_distances(entries: &[Pollen]) -> Vec<f64> {
    let k = entries.len();
    let mut distances = vec![0.0; k];
    if k == 0 {
        return distances;
    }
    let m = entries[0].objectives.len();
    let mut order: Vec<usize> = (0..k).collect();
    for o in 0..m {
        order.sort_by(|&a, &b| entries[a].objectives[o].total_cmp(&entries[b].objectives[o]));
        distances[order[0]] = f64::INFINITY;
        distances[order[k - 1]] = f64::INFINITY;
        let lo = entries[order[0]].objectives[o];
        let hi = entries[order[k - 1]].objectives[o];
        let span = if hi > lo { hi - lo } else { 1.0 };
        for w in 2..k {
            let prev = entries[order[w - 2]].objectives[o];
            let next = entries[order[w]].objectives[o];
            distances[order[w - 1]] += (next - prev) / span;
        }
    }
    distances
}

/// Parameters of the multi-objective solver.
#[derive(Debug, Clone, PartialEq)]
pub struct MofpaParams {
    /// Population dynamics (size, iterations, switch probability, Lévy,
    /// seed) — identical to the single-objective solver.
    pub fpa: FpaParams,
    /// Maximum archive size.
    pub archive_capacity: usize,
    /// How weight vectors are generated.
    pub weight_mode: WeightMode,
    /// When weights change.
    pub schedule: WeightSchedule,
    /// Number of fixed-weight runs for [`WeightSchedule::Sweep`]; ignored
    /// by the per-iteration schedule.
    pub sweep_runs: usize,
}

impl Default for MofpaParams {
    fn default() -> Self {
        Self {
            fpa: FpaParams::default(),
            archive_capacity: ParetoArchive::DEFAULT_CAPACITY,
            weight_mode: WeightMode::Random,
            schedule: WeightSchedule::PerIteration,
            sweep_runs: 100,
        }
    }
}

impl MofpaParams {
    pub fn validate(&self) -> Result<()> {
        self.fpa.validate()?;
        if self.archive_capacity == 0 {
            return Err(Error::InvalidParameter("archive capacity must be >= 1".into()));
        }
        if self.sweep_runs == 0 {
            return Err(Error::InvalidParameter("sweep run count must be >= 1".into()));
        }
        Ok(())
    }
}

/// One scalarized population run. `fixed_weights` pins the weight vector
/// for the whole run (sweep mode); otherwise weights are redrawn at the
/// start of every iteration according to `mode` (low-discrepancy redraws
/// take the iteration number as sequence index). Every evaluated candidate
/// — including the initial population — is offered to `archive`.
fn evolve_scalarized<P: Problem + ?Sized>(
    problem: &P,
    params: &FpaParams,
    mode: WeightMode,
    fixed_weights: Option<&WeightVector>,
    archive: &mut ParetoArchive,
    rng: &mut RunRng,
) {
    let m = problem.objective_count();
    let sampler = LevySampler::new(params.levy);
    let mut population = init_population(problem, params.population, rng);
    for p in &population {
        archive.insert(p.clone());
    }

    for iter in 1..=params.iterations {
        let weights = match fixed_weights {
            Some(w) => w.clone(),
            None => match mode {
                WeightMode::Random => random_weights(m, rng),
                WeightMode::LowDiscrepancy => low_discrepancy_weights(m, iter as u64),
            },
        };

        let mut g_idx = 0;
        for i in 1..population.len() {
            if scalar_better(&population[i], &population[g_idx], &weights) {
                g_idx = i;
            }
        }
        let g_star = population[g_idx].position.clone();

        for i in 0..population.len() {
            let (raw, _) = propose_position(&population, i, &g_star, params, &sampler, rng);
            let candidate = Pollen::from_candidate(problem, &raw);
            archive.insert(candidate.clone());
            if scalar_better(&candidate, &population[i], &weights) {
                population[i] = candidate;
            }
        }
    }
}

/// Runs the multi-objective solver and returns its Pareto archive.
///
/// Fails on invalid parameters or a problem with fewer than two objectives
/// (use [`crate::fpa::fpa_minimize`] for those).
///
/// For [`WeightSchedule::Sweep`], sub-run `k` evolves under the `k`-th
/// weight vector on its own random stream; the per-run archives are merged
/// into the final one in run order, so results do not depend on whether the
/// sub-runs execute in parallel.
pub fn mofpa_run<P: Problem + ?Sized>(problem: &P, params: &MofpaParams) -> Result<ParetoArchive> {
    params.validate()?;
    let m = problem.objective_count();
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "multi-objective solver requires at least two objectives, problem has {m} \
             (use fpa_minimize for single-objective problems)"
        )));
    }

    match params.schedule {
        WeightSchedule::PerIteration => {
            let mut archive = ParetoArchive::new(params.archive_capacity);
            let mut rng = stream_rng(params.fpa.seed, STREAM_MAIN);
            evolve_scalarized(
                problem,
                &params.fpa,
                params.weight_mode,
                None,
                &mut archive,
                &mut rng,
            );
            Ok(archive)
        }
        WeightSchedule::Sweep => {
            let mut weight_rng = stream_rng(params.fpa.seed, STREAM_WEIGHTS);
            let weights: Vec<WeightVector> = (1..=params.sweep_runs as u64)
                .map(|index| draw_weights(m, params.weight_mode, &mut weight_rng, index))
                .collect::<Result<_>>()?;

            let sub_archives = run_batch(params.sweep_runs, |k| {
                let mut archive = ParetoArchive::new(params.archive_capacity);
                let mut rng = stream_rng(params.fpa.seed, STREAM_SUBRUN_BASE + k as u64);
                evolve_scalarized(
                    problem,
                    &params.fpa,
                    params.weight_mode,
                    Some(&weights[k]),
                    &mut archive,
                    &mut rng,
                );
                archive
            });

            let mut merged = ParetoArchive::new(params.archive_capacity);
            for sub in sub_archives {
                merged.merge(sub.entries.into_iter());
            }
            Ok(merged)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{seeded_rng, BoxBounds, Evaluation};

    fn pollen(objectives: &[f64], violation: f64) -> Pollen {
        Pollen {
            position: vec![0.0],
            objectives: objectives.to_vec(),
            violations: if violation > 0.0 { vec![violation] } else { Vec::new() },
        }
    }

    #[test]
    fn weight_vector_validation() {
        assert!(WeightVector::new(vec![0.5, 0.5]).is_ok());
        assert!(WeightVector::new(vec![]).is_err());
        assert!(WeightVector::new(vec![0.5, 0.6]).is_err());
        assert!(WeightVector::new(vec![1.2, -0.2]).is_err());
        assert!(WeightVector::new(vec![0.0, 1.0]).is_err());
    }

    #[test]
    fn random_weights_are_positive_and_normalized() {
        let mut rng = seeded_rng(1);
        for m in 1..=4 {
            for _ in 0..200 {
                let w = random_weights(m, &mut rng);
                assert_eq!(w.len(), m);
                assert!(w.values().iter().all(|&x| x > 0.0));
                let sum: f64 = w.values().iter().sum();
                assert!((sum - 1.0).abs() < 1e-12, "sum {sum}");
            }
        }
    }

    #[test]
    fn low_discrepancy_weights_follow_van_der_corput() {
        // Base-2 radical inverse: 1/2, 1/4, 3/4, 1/8, ...
        assert_eq!(low_discrepancy_weights(2, 1).values(), &[0.5, 0.5]);
        assert_eq!(low_discrepancy_weights(2, 2).values(), &[0.25, 0.75]);
        assert_eq!(low_discrepancy_weights(2, 3).values(), &[0.75, 0.25]);
        assert_eq!(low_discrepancy_weights(2, 4).values(), &[0.125, 0.875]);
        // Deterministic: same index, same vector.
        assert_eq!(low_discrepancy_weights(3, 9), low_discrepancy_weights(3, 9));
        // Three objectives stay positive and normalized over many indices.
        for index in 1..=200 {
            let w = low_discrepancy_weights(3, index);
            assert!(w.values().iter().all(|&x| x > 0.0));
            let sum: f64 = w.values().iter().sum();
            assert!((sum - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn draw_weights_validates_inputs() {
        let mut rng = seeded_rng(0);
        assert!(draw_weights(0, WeightMode::Random, &mut rng, 1).is_err());
        assert!(draw_weights(2, WeightMode::LowDiscrepancy, &mut rng, 0).is_err());
        assert!(draw_weights(2, WeightMode::Random, &mut rng, 1).is_ok());
        assert!(draw_weights(30, WeightMode::LowDiscrepancy, &mut rng, 1).is_err());
    }

    #[test]
    fn scalarize_is_a_weighted_sum() {
        let half = WeightVector::new(vec![0.5, 0.5]).unwrap();
        assert_eq!(scalarize(&[1.0, 0.0], &half), 0.5);
        assert_eq!(scalarize(&[2.0, 1.5], &half), 1.75);
        // Any weights applied to a constant vector return the constant.
        let w = WeightVector::new(vec![0.3, 0.2, 0.5]).unwrap();
        assert!((scalarize(&[4.0, 4.0, 4.0], &w) - 4.0).abs() < 1e-12);
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn scalarize_rejects_mismatched_lengths() {
        let w = WeightVector::new(vec![1.0]).unwrap();
        let _ = scalarize(&[1.0, 2.0], &w);
    }

    #[test]
    fn archive_keeps_mutually_nondominated_points() {
        let mut archive = ParetoArchive::new(10);
        assert!(archive.insert(pollen(&[0.0, 4.0], 0.0)));
        assert!(archive.insert(pollen(&[2.0, 2.0], 0.0)));
        assert!(archive.insert(pollen(&[4.0, 0.0], 0.0)));
        assert_eq!(archive.len(), 3);
        // Dominated offer is rejected outright.
        assert!(!archive.insert(pollen(&[3.0, 3.0], 0.0)));
        assert_eq!(archive.len(), 3);
        // A dominating offer displaces everything it dominates.
        assert!(archive.insert(pollen(&[0.0, 0.0], 0.0)));
        assert_eq!(archive.len(), 1);
        assert_eq!(archive.entries()[0].objectives, vec![0.0, 0.0]);
    }

    #[test]
    fn archive_rejects_duplicates() {
        let mut archive = ParetoArchive::new(10);
        assert!(archive.insert(pollen(&[1.0, 2.0], 0.0)));
        assert!(!archive.insert(pollen(&[1.0, 2.0], 0.0)));
        assert_eq!(archive.len(), 1);
    }

    #[test]
    fn archive_eviction_preserves_extremes() {
        let mut archive = ParetoArchive::new(3);
        for (f1, f2) in [(0.0, 4.0), (1.0, 3.0), (2.0, 2.0), (3.0, 1.0), (4.0, 0.0)] {
            archive.insert(pollen(&[f1, f2], 0.0));
        }
        assert_eq!(archive.len(), 3);
        let objs = archive.objective_vectors();
        assert!(objs.contains(&vec![0.0, 4.0]));
        assert!(objs.contains(&vec![4.0, 0.0]));
    }

    #[test]
    fn feasible_entry_flushes_infeasible_ones() {
        let mut archive = ParetoArchive::new(10);
        assert!(archive.insert(pollen(&[0.0, 0.0], 2.0)));
        assert!(archive.insert(pollen(&[0.0, 0.0], 1.0)));
        assert_eq!(archive.len(), 1, "lower violation displaces higher");
        assert!(!archive.insert(pollen(&[0.0, 0.0], 3.0)));
        assert!(archive.insert(pollen(&[9.0, 9.0], 0.0)));
        assert_eq!(archive.len(), 1);
        assert!(archive.entries()[0].is_feasible());
    }

    #[test]
    fn sorted_entries_order_by_first_objective() {
        let mut archive = ParetoArchive::new(10);
        archive.insert(pollen(&[3.0, 0.0], 0.0));
        archive.insert(pollen(&[1.0, 2.0], 0.0));
        archive.insert(pollen(&[2.0, 1.0], 0.0));
        let f1s: Vec<f64> = archive.sorted_entries().iter().map(|p| p.objectives[0]).collect();
        assert_eq!(f1s, vec![1.0, 2.0, 3.0]);
    }

    /// 1-d problem with two convex objectives whose Pareto set is x in [0, 2]:
    /// f = (x^2, (x-2)^2).
    struct Schaffer {
        bounds: BoxBounds,
    }

    impl Schaffer {
        fn new() -> Self {
            Self { bounds: BoxBounds::uniform(1, -4.0, 4.0).unwrap() }
        }
    }

    impl Problem for Schaffer {
        fn dimension(&self) -> usize {
            1
        }
        fn objective_count(&self) -> usize {
            2
        }
        fn bounds(&self) -> &BoxBounds {
            &self.bounds
        }
        fn evaluate(&self, x: &[f64]) -> Evaluation {
            Evaluation::unconstrained(vec![x[0] * x[0], (x[0] - 2.0) * (x[0] - 2.0)])
        }
    }

    struct FlatLine {
        bounds: BoxBounds,
    }

    impl Problem for FlatLine {
        fn dimension(&self) -> usize {
            1
        }
        fn objective_count(&self) -> usize {
            2
        }
        fn bounds(&self) -> &BoxBounds {
            &self.bounds
        }
        fn evaluate(&self, x: &[f64]) -> Evaluation {
            let v = x[0] * x[0];
            Evaluation::unconstrained(vec![v, v])
        }
    }

    fn small_params(schedule: WeightSchedule) -> MofpaParams {
        MofpaParams {
            fpa: FpaParams { population: 12, iterations: 60, seed: 3, ..Default::default() },
            archive_capacity: 40,
            schedule,
            sweep_runs: 6,
            ..Default::default()
        }
    }

    #[test]
    fn rejects_single_objective_problems() {
        struct OneObj(BoxBounds);
        impl Problem for OneObj {
            fn dimension(&self) -> usize {
                1
            }
            fn objective_count(&self) -> usize {
                1
            }
            fn bounds(&self) -> &BoxBounds {
                &self.0
            }
            fn evaluate(&self, x: &[f64]) -> Evaluation {
                Evaluation::unconstrained(vec![x[0]])
            }
        }
        let problem = OneObj(BoxBounds::uniform(1, 0.0, 1.0).unwrap());
        assert!(mofpa_run(&problem, &small_params(WeightSchedule::PerIteration)).is_err());
    }

    #[test]
    fn archive_entries_are_mutually_nondominated_and_capped() {
        let problem = Schaffer::new();
        for schedule in [WeightSchedule::PerIteration, WeightSchedule::Sweep] {
            let params = small_params(schedule);
            let archive = mofpa_run(&problem, &params).unwrap();
            assert!(!archive.is_empty());
            assert!(archive.len() <= params.archive_capacity);
            let entries = archive.entries();
            for a in entries {
                for b in entries {
                    assert!(!a.dominates(b), "{:?} dominates {:?}", a.objectives, b.objectives);
                }
                assert!(problem.bounds.contains(&a.position));
            }
        }
    }

    #[test]
    fn runs_are_deterministic() {
        let problem = Schaffer::new();
        for schedule in [WeightSchedule::PerIteration, WeightSchedule::Sweep] {
            let params = small_params(schedule);
            let a = mofpa_run(&problem, &params).unwrap();
            let b = mofpa_run(&problem, &params).unwrap();
            assert_eq!(a, b);
        }
        for mode in [WeightMode::Random, WeightMode::LowDiscrepancy] {
            let params = MofpaParams { weight_mode: mode, ..small_params(WeightSchedule::Sweep) };
            let a = mofpa_run(&problem, &params).unwrap();
            let b = mofpa_run(&problem, &params).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn identical_objectives_collapse_to_one_point() {
        let problem = FlatLine { bounds: BoxBounds::uniform(1, -1.0, 1.0).unwrap() };
        let archive = mofpa_run(&problem, &small_params(WeightSchedule::PerIteration)).unwrap();
        assert_eq!(archive.len(), 1, "equal objectives must collapse to the single minimum");
    }

    #[test]
    fn schaffer_front_is_approximated() {
        let problem = Schaffer::new();
        let params = MofpaParams {
            fpa: FpaParams { population: 20, iterations: 150, seed: 11, ..Default::default() },
            archive_capacity: 50,
            ..Default::default()
        };
        let archive = mofpa_run(&problem, &params).unwrap();
        assert!(archive.len() >= 20);
        for p in archive.entries() {
            // On the true front sqrt(f1) + sqrt(f2) = 2.
            let residual = (p.objectives[0].sqrt() + p.objectives[1].sqrt() - 2.0).abs();
            assert!(residual < 0.15, "far from front: {:?}", p.objectives);
        }
    }
}
