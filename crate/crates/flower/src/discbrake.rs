//! Constrained mixed-integer disc brake design.
//!
//! Four variables — inner radius `r` (mm), outer radius `R` (mm), actuating
//! force `F` (N), and the integer number of friction surfaces `s` — trade
//! off brake mass against stopping time:
//!
//! `f1 = 4.9e-5 (R² − r²)(s − 1)` (mass)
//! `f2 = 9.82e6 (R² − r²) / (F s (R³ − r³))` (stopping time)
//!
//! subject to five inequality constraints `g_i ≤ 0` (minimum annulus width,
//! assembly length, pad pressure, temperature rise, and braking torque).
//! The length constraint alone caps the feasible surface count at 11.
//!
//! Two strategies handle the integer variable: rounding `s` to the nearest
//! integer on every evaluation, or enumerating each feasible `s` as its own
//! continuous sub-problem over `(r, R, F)` and merging the resulting
//! archives.

use std::ops::RangeInclusive;

use crate::core::{derive_seed, BoxBounds, Evaluation, Pollen, Problem};
use crate::exec::run_batch;
use crate::mofpa::{mofpa_run, MofpaParams, ParetoArchive};
use crate::{Error, Result};

/// Surface counts that can satisfy the assembly-length constraint.
pub const FEASIBLE_SURFACES: RangeInclusive<u32> = 2..=11;

/// A concrete brake design.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscBrakeDesign {
    /// Inner pad radius `r` in mm.
    pub inner_radius: f64,
    /// Outer pad radius `R` in mm.
    pub outer_radius: f64,
    /// Actuating force `F` in N.
    pub force: f64,
    /// Number of friction surfaces `s`.
    pub surfaces: u32,
}

impl DiscBrakeDesign {
    pub fn new(inner_radius: f64, outer_radius: f64, force: f64, surfaces: u32) -> Self {
        Self { inner_radius, outer_radius, force, surfaces }
    }

    /// Interprets a 4-component position as a design, rounding the surface
    /// count to the nearest integer.
    ///
    /// # Panics
    ///
    /// Panics unless `x` has exactly 4 components.
    pub fn from_vector(x: &[f64]) -> Self {
        assert_eq!(x.len(), 4, "disc brake designs have 4 variables");
        Self {
            inner_radius: x[0],
            outer_radius: x[1],
            force: x[2],
            surfaces: x[3].round().max(0.0) as u32,
        }
    }

    pub fn to_vector(self) -> [f64; 4] {
        [self.inner_radius, self.outer_radius, self.force, f64::from(self.surfaces)]
    }
}

/// The search box: `r ∈ [55, 80]`, `R ∈ [75, 110]`, `F ∈ [1000, 3000]`,
/// `s ∈ [2, 20]`.
pub fn design_bounds() -> BoxBounds {
    BoxBounds::new(vec![55.0, 75.0, 1000.0, 2.0], vec![80.0, 110.0, 3000.0, 20.0])
        .expect("static bounds are valid")
}

fn annulus_terms(design: &DiscBrakeDesign) -> Result<(f64, f64)> {
    let (r, radius) = (design.inner_radius, design.outer_radius);
    if radius <= r {
        return Err(Error::Domain(format!(
            "outer radius must exceed inner radius, got r = {r}, R = {radius}"
        )));
    }
    Ok((radius * radius - r * r, radius.powi(3) - r.powi(3)))
}

/// `(f1, f2)` = (mass, stopping time).
///
/// Fails when `R ≤ r`, where the stopping time is undefined.
pub fn objectives(design: &DiscBrakeDesign) -> Result<[f64; 2]> {
    let (sq_diff, cube_diff) = annulus_terms(design)?;
    let s = f64::from(design.surfaces);
    let f1 = 4.9e-5 * sq_diff * (s - 1.0);
    let f2 = 9.82e6 * sq_diff / (design.force * s * cube_diff);
    Ok([f1, f2])
}

/// The five signed constraint values `g_i` (feasible when all `≤ 0`):
///
/// 1. annulus width: `20 − (R − r)`
/// 2. assembly length: `2.5 (s + 1) − 30`
/// 3. pad pressure: `F / (3.14 (R² − r²)) − 0.4`
/// 4. temperature rise: `2.22e-3 F (R³ − r³) / (R² − r²)² − 1`
/// 5. braking torque: `900 − 2.66e-2 F s (R³ − r³) / (R² − r²)`
///
/// Fails when `R ≤ r`.
pub fn constraint_values(design: &DiscBrakeDesign) -> Result<[f64; 5]> {
    let (sq_diff, cube_diff) = annulus_terms(design)?;
    let (r, radius, force) = (design.inner_radius, design.outer_radius, design.force);
    let s = f64::from(design.surfaces);
    Ok([
        20.0 + r - radius,
        2.5 * (s + 1.0) - 30.0,
        force / (3.14 * sq_diff) - 0.4,
        2.22e-3 * force * cube_diff / (sq_diff * sq_diff) - 1.0,
        900.0 - 2.66e-2 * force * s * cube_diff / sq_diff,
    ])
}

/// Non-negative violation magnitudes `max(g_i, 0)`.
///
/// Fails when `R ≤ r`.
pub fn violations(design: &DiscBrakeDesign) -> Result<[f64; 5]> {
    Ok(constraint_values(design)?.map(|g| g.max(0.0)))
}

/// Shared evaluation with the degenerate-geometry guard: designs with
/// `R ≤ r` are marked infeasible with infinite violations on the
/// radius-dependent constraints instead of producing NaNs.
fn evaluate_design(design: &DiscBrakeDesign) -> Evaluation {
    match violations(design) {
        Ok(v) => Evaluation {
            objectives: objectives(design).expect("same guard as violations").to_vec(),
            violations: v.to_vec(),
        },
        Err(_) => {
            let g1 = 20.0 + design.inner_radius - design.outer_radius;
            let g2 = 2.5 * (f64::from(design.surfaces) + 1.0) - 30.0;
            Evaluation {
                objectives: vec![f64::INFINITY, f64::INFINITY],
                violations: vec![
                    g1.max(0.0),
                    g2.max(0.0),
                    f64::INFINITY,
                    f64::INFINITY,
                    f64::INFINITY,
                ],
            }
        }
    }
}

/// The full 4-variable problem with `s` rounded on every evaluation.
pub struct DiscBrakeProblem {
    bounds: BoxBounds,
    integer_mask: [bool; 4],
}

impl DiscBrakeProblem {
    pub fn new() -> Self {
        Self { bounds: design_bounds(), integer_mask: [false, false, false, true] }
    }
}

impl Default for DiscBrakeProblem {
    fn default() -> Self {
        Self::new()
    }
}

impl Problem for DiscBrakeProblem {
    fn dimension(&self) -> usize {
        4
    }
    fn objective_count(&self) -> usize {
        2
    }
    fn bounds(&self) -> &BoxBounds {
        &self.bounds
    }
    fn integer_mask(&self) -> Option<&[bool]> {
        Some(&self.integer_mask)
    }
    fn evaluate(&self, x: &[f64]) -> Evaluation {
        evaluate_design(&DiscBrakeDesign::from_vector(x))
    }
}

/// The continuous `(r, R, F)` sub-problem for one fixed surface count.
struct FixedSurfaceProblem {
    surfaces: u32,
    bounds: BoxBounds,
}

impl FixedSurfaceProblem {
    fn new(surfaces: u32) -> Self {
        Self {
            surfaces,
            bounds: BoxBounds::new(vec![55.0, 75.0, 1000.0], vec![80.0, 110.0, 3000.0])
                .expect("static bounds are valid"),
        }
    }
}

impl Problem for FixedSurfaceProblem {
    fn dimension(&self) -> usize {
        3
    }
    fn objective_count(&self) -> usize {
        2
    }
    fn bounds(&self) -> &BoxBounds {
        &self.bounds
    }
    fn evaluate(&self, x: &[f64]) -> Evaluation {
        evaluate_design(&DiscBrakeDesign::new(x[0], x[1], x[2], self.surfaces))
    }
}

/// How the integer surface count is handled during optimization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscreteMode {
    /// Optimize all four variables, rounding `s` on every evaluation.
    RoundOnEvaluate,
    /// One continuous sub-run per feasible `s` (2 through 11), archives
    /// merged in ascending `s` order.
    EnumerateSurfaces,
}

/// Optimizes the disc brake with the multi-objective solver and returns the
/// final archive (positions are always the full `[r, R, F, s]` vector).
///
/// In [`DiscreteMode::EnumerateSurfaces`] each sub-run gets its own seed
/// derived from the base seed and its surface count, sub-runs execute
/// through the batch runner (parallel under the `parallel` feature), and
/// the merge happens on the calling thread in ascending `s`, so the result
/// is deterministic either way.
pub fn solve(params: &MofpaParams, mode: DiscreteMode) -> Result<ParetoArchive> {
    match mode {
        DiscreteMode::RoundOnEvaluate => mofpa_run(&DiscBrakeProblem::new(), params),
        DiscreteMode::EnumerateSurfaces => {
            params.validate()?;
            let surfaces: Vec<u32> = FEASIBLE_SURFACES.collect();
            let sub_archives: Vec<Result<ParetoArchive>> = run_batch(surfaces.len(), |i| {
                let s = surfaces[i];
                let mut sub_params = params.clone();
                sub_params.fpa.seed = derive_seed(params.fpa.seed, u64::from(s));
                mofpa_run(&FixedSurfaceProblem::new(s), &sub_params)
            });
            let mut merged = ParetoArchive::new(params.archive_capacity);
            for (archive, &s) in sub_archives.into_iter().zip(&surfaces) {
                for entry in archive?.entries() {
                    let mut position = entry.position.clone();
                    position.push(f64::from(s));
                    merged.insert(Pollen {
                        position,
                        objectives: entry.objectives.clone(),
                        violations: entry.violations.clone(),
                    });
                }
            }
            Ok(merged)
        }
    }
}
