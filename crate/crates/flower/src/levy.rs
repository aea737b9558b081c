//! Lévy-stable step sampling via Mantegna's algorithm.
//!
//! Global pollination perturbs flowers with heavy-tailed steps whose
//! magnitudes follow a power law `~ |s|^(-λ)` for large `|s|`. Mantegna's
//! construction produces such steps from two Gaussians:
//!
//! `s = u / |v|^(1/λ)` with `u ~ N(0, σ_u²)`, `v ~ N(0, 1)`,
//!
//! where `σ_u` depends only on `λ`. Steps are signed and symmetric around
//! zero; nothing truncates them.

use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::{Error, Result};

/// Parameters of the Lévy step distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevyParams {
    /// Tail exponent `λ`, valid in `(1, 2]`. At `λ = 2` the construction
    /// degenerates toward a point mass at zero (`σ_u = 0` up to rounding).
    pub lambda: f64,
    /// Reference step scale for diagnostics such as tail fitting. It does
    /// not scale or truncate the samples themselves.
    pub s0: f64,
}

impl LevyParams {
    pub fn new(lambda: f64, s0: f64) -> Result<Self> {
        if !(lambda > 1.0 && lambda <= 2.0) {
            return Err(Error::InvalidParameter(format!(
                "levy exponent must satisfy 1 < lambda <= 2, got {lambda}"
            )));
        }
        if !(s0 > 0.0 && s0.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "levy reference scale must be positive and finite, got {s0}"
            )));
        }
        Ok(Self { lambda, s0 })
    }
}

impl Default for LevyParams {
    /// `λ = 1.5`, `s0 = 0.01`.
    fn default() -> Self {
        Self { lambda: 1.5, s0: 0.01 }
    }
}

/// Mantegna's `σ_u` for tail exponent `lambda`:
///
/// `σ_u = [ Γ(1+λ) sin(πλ/2) / ( Γ((1+λ)/2) · λ · 2^((λ−1)/2) ) ]^(1/λ)`
///
/// The caller is responsible for `lambda` being in `(1, 2]`; see
/// [`LevyParams::new`].
pub fn mantegna_sigma(lambda: f64) -> f64 {
    let numerator = libm::tgamma(1.0 + lambda) * (std::f64::consts::PI * lambda / 2.0).sin();
    let denominator =
        libm::tgamma((1.0 + lambda) / 2.0) * lambda * 2.0_f64.powf((lambda - 1.0) / 2.0);
    (numerator / denominator).powf(1.0 / lambda)
}

/// A reusable sampler that caches `σ_u` for its `λ`.
#[derive(Debug, Clone)]
pub struct LevySampler {
    params: LevyParams,
    inv_lambda: f64,
    numerator: Normal<f64>,
}

impl LevySampler {
    pub fn new(params: LevyParams) -> Self {
        let sigma = mantegna_sigma(params.lambda);
        Self {
            params,
            inv_lambda: 1.0 / params.lambda,
            // σ_u is finite and non-negative on (1, 2], so this cannot fail.
            numerator: Normal::new(0.0, sigma).expect("sigma_u is finite and non-negative"),
        }
    }

    pub fn params(&self) -> LevyParams {
        self.params
    }

    pub fn sigma_u(&self) -> f64 {
        self.numerator.std_dev()
    }

    /// One signed step. Draws `u` first, then `v`, redrawing `v` on the
    /// (measure-zero) event that it is exactly zero.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let u = self.numerator.sample(rng);
        let mut v: f64 = rand_distr::StandardNormal.sample(rng);
        while v == 0.0 {
            v = rand_distr::StandardNormal.sample(rng);
        }
        u / v.abs().powf(self.inv_lambda)
    }

    /// A vector of `d` independent steps, drawn component by component.
    ///
    /// # Panics
    ///
    /// Panics if `d == 0`.
    pub fn sample_vector<R: Rng + ?Sized>(&self, d: usize, rng: &mut R) -> Vec<f64> {
        assert!(d >= 1, "levy step vectors must have dimension >= 1");
        (0..d).map(|_| self.sample(rng)).collect()
    }
}

/// One-off convenience for a single step; prefer [`LevySampler`] in loops.
pub fn sample_levy_step<R: Rng + ?Sized>(params: &LevyParams, rng: &mut R) -> f64 {
    LevySampler::new(*params).sample(rng)
}

/// One-off convenience for a step vector; prefer [`LevySampler`] in loops.
pub fn sample_levy_vector<R: Rng + ?Sized>(d: usize, params: &LevyParams, rng: &mut R) -> Vec<f64> {
    LevySampler::new(*params).sample_vector(d, rng)
}
