//! Sequential/parallel execution strategy for the identity pools.
//!
//! All calculus values are immutable and all operations are pure, so checks
//! over pools parallelize trivially. The strategy is a runtime value rather
//! than a compile-time switch so one binary can compare both; when the
//! `parallel` feature is disabled, `Strategy::Parallel` silently degrades to
//! the sequential path and the rayon dependency disappears entirely.

use serde::{Deserialize, Serialize};

/// How to evaluate a pool of independent checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    Sequential,
    Parallel,
}

impl Strategy {
    /// The fastest strategy this build supports.
    pub fn auto() -> Self {
        if cfg!(feature = "parallel") {
            Strategy::Parallel
        } else {
            Strategy::Sequential
        }
    }
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Strategy::Sequential => write!(f, "sequential"),
            Strategy::Parallel => write!(f, "parallel"),
        }
    }
}

/// Applies `check` to every item, returning the first (by index) error.
///
/// The parallel path evaluates eagerly across threads but still reports the
/// smallest-index failure, so both strategies produce identical results.
pub fn try_all<T, F>(strategy: Strategy, items: &[T], check: F) -> Result<(), String>
where
    T: Sync,
    F: Fn(usize, &T) -> Result<(), String> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if strategy == Strategy::Parallel {
            use rayon::prelude::*;
            let mut failures: Vec<(usize, String)> = items
                .par_iter()
                .enumerate()
                .filter_map(|(i, item)| check(i, item).err().map(|e| (i, e)))
                .collect();
            failures.sort_by_key(|(i, _)| *i);
            return match failures.into_iter().next() {
                None => Ok(()),
                Some((_, e)) => Err(e),
            };
        }
    }
    let _ = &strategy;
    for (i, item) in items.iter().enumerate() {
        check(i, item)?;
    }
    Ok(())
}

/// Maps `f` over the items with the chosen strategy, preserving order.
pub fn map_all<T, U, F>(strategy: Strategy, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    #[cfg(feature = "parallel")]
    {
        if strategy == Strategy::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(&f).collect();
        }
    }
    let _ = &strategy;
    items.iter().map(f).collect()
}
