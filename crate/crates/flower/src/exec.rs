//! Batch execution of independent tasks (repetitions, sweep sub-runs).
//!
//! With the default `parallel` feature, [`run_batch`] fans the tasks out on
//! a rayon thread pool; without it, it runs them in order on the calling
//! thread. Results always come back indexed `0..count`, so callers merge
//! them in a fixed order and output is identical under either backend. The
//! explicit `_sequential`/`_parallel` variants exist so the two backends
//! can be compared directly (see the `batch` benchmark).

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Runs `task(0..count)` sequentially on the calling thread.
pub fn run_batch_sequential<T, F>(count: usize, task: F) -> Vec<T>
where
    F: Fn(usize) -> T + Sync,
    T: Send,
{
    (0..count).map(task).collect()
}

/// Runs `task(0..count)` on the rayon thread pool, preserving index order
/// in the returned vector.
#[cfg(feature = "parallel")]
pub fn run_batch_parallel<T, F>(count: usize, task: F) -> Vec<T>
where
    F: Fn(usize) -> T + Sync + Send,
    T: Send,
{
    (0..count).into_par_iter().map(task).collect()
}

/// Runs `task` for every index in `0..count` and returns the results in
/// index order, parallel when the `parallel` feature is enabled.
pub fn run_batch<T, F>(count: usize, task: F) -> Vec<T>
where
    F: Fn(usize) -> T + Sync + Send,
    T: Send,
{
    #[cfg(feature = "parallel")]
    {
        run_batch_parallel(count, task)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_batch_sequential(count, task)
    }
}
