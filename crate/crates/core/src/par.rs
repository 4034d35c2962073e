//! Switch between rayon-backed and sequential execution.
//!
//! Every parallel loop in this crate goes through [`map_indexed`] so that the
//! `parallel` feature (and benchmarks comparing both modes) can select the
//! execution strategy at runtime. Results are collected in index order, so the
//! output is identical for both modes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for data-parallel inner loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threading {
    Sequential,
    /// Uses the rayon thread pool when the `parallel` feature is enabled,
    /// otherwise falls back to sequential execution.
    Parallel,
}

impl Default for Threading {
    fn default() -> Self {
        Threading::Parallel
    }
}

/// Maps `f` over `0..n`, preserving index order in the output.
pub fn map_indexed<U, F>(threading: Threading, n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if threading == Threading::Parallel {
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    let _ = threading;
    (0..n).map(f).collect()
}
