//! Flower pollination algorithm (FPA) for derivative-free global optimization.
//!
//! The crate provides:
//!
//! * [`fpa::fpa_minimize`] — single-objective FPA over box-constrained
//!   problems, combining global pollination (Lévy flights toward the best
//!   known solution) with local pollination (mixing random pairs of flowers).
//! * [`mofpa::mofpa_run`] — the multi-objective extension, which scalarizes
//!   the objectives with random weights and maintains an external
//!   Pareto archive of bounded size.
//! * [`benchmarks`] — the ZDT1/ZDT2/ZDT3/LZ bi-objective test suite with
//!   analytic reference fronts and front-quality metrics.
//! * [`discbrake`] — a constrained mixed-integer engineering problem
//!   (disc brake design) with two discrete-variable strategies.
//!
//! All randomness flows through explicitly seeded ChaCha8 generators, so any
//! run is reproducible bit-for-bit from `(params, seed)`. With the default
//! `parallel` feature, independent runs and sub-runs execute on a rayon
//! thread pool; results are merged in a fixed order so the feature never
//! changes numeric output.
//!
//! ```
//! use flower::benchmarks::SphereProblem;
//! use flower::fpa::{fpa_minimize, FpaParams};
//!
//! let problem = SphereProblem::new(4);
//! let params = FpaParams { population: 20, iterations: 200, seed: 7, ..FpaParams::default() };
//! let trace = fpa_minimize(&problem, &params).unwrap();
//! assert!(trace.best.objectives[0] < 1e-3);
//! ```

pub mod benchmarks;
pub mod core;
pub mod discbrake;
mod error;
pub mod exec;
pub mod fpa;
pub mod levy;
pub mod mofpa;

pub use error::{Error, Result};
