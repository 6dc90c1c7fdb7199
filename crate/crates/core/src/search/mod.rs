//! Budgeted searches: `σ_n` by branch and bound over 1-factorizations, and
//! colorings with a prescribed shift vector by exact cover.

mod dlx;
mod realize;
mod sigma;

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

pub use realize::{realize_shift, Realization};
pub use sigma::{sigma_search, sigma_search_with, SigmaOptions, SigmaResult};

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "INTERVAL_KN_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Progress {
    pub nodes: u64,
    /// Best value so far: splitted matchings for `σ` search, unused otherwise.
    pub best: Option<usize>,
    pub elapsed: Duration,
}

pub type ProgressHook = Arc<dyn Fn(&Progress) + Send + Sync>;

/// Limits and knobs shared by the searches. `None` limits are unbounded.
#[derive(Clone, Default)]
pub struct SearchBudget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Shuffles candidate order; without it the order is lexicographic.
    pub seed: Option<u64>,
    /// Worker threads; defaults to `INTERVAL_KN_THREADS`, else 1.
    pub workers: Option<usize>,
    /// Checked regularly; setting it stops the search like an exhausted budget.
    pub cancel: Option<Arc<AtomicBool>>,
    pub progress: Option<ProgressHook>,
    /// Nodes between progress callbacks.
    pub progress_every: Option<u64>,
}

impl fmt::Debug for SearchBudget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SearchBudget")
            .field("node_limit", &self.node_limit)
            .field("time_limit", &self.time_limit)
            .field("seed", &self.seed)
            .field("workers", &self.workers)
            .field("cancel", &self.cancel.is_some())
            .field("progress", &self.progress.is_some())
            .finish()
    }
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_nodes(mut self, nodes: u64) -> Self {
        self.node_limit = Some(nodes);
        self
    }

    pub fn with_time(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    pub fn with_cancel(mut self, flag: Arc<AtomicBool>) -> Self {
        self.cancel = Some(flag);
        self
    }

    pub fn with_progress(mut self, hook: ProgressHook) -> Self {
        self.progress = Some(hook);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.node_limit == Some(0) {
            return Err(Error::Precondition("node limit must be positive".into()));
        }
        if self.time_limit == Some(Duration::ZERO) {
            return Err(Error::Precondition("time limit must be positive".into()));
        }
        if self.workers == Some(0) {
            return Err(Error::Precondition("worker count must be positive".into()));
        }
        Ok(())
    }

    fn worker_count(&self) -> usize {
        self.workers
            .or_else(|| std::env::var(THREADS_ENV).ok()?.parse().ok())
            .unwrap_or(1)
            .max(1)
    }
}

/// Node accounting shared between workers.
pub(crate) struct Meter {
    budget: SearchBudget,
    start: Instant,
    nodes: AtomicU64,
    spent: AtomicBool,
    done: AtomicBool,
    every: u64,
}

impl Meter {
    pub(crate) fn new(budget: &SearchBudget) -> Self {
        Meter {
            budget: budget.clone(),
            start: Instant::now(),
            nodes: AtomicU64::new(0),
            spent: AtomicBool::new(false),
            done: AtomicBool::new(false),
            every: budget.progress_every.unwrap_or(1 << 16).max(1),
        }
    }

    /// Counts one node; `false` once the budget is spent or cancelled.
    pub(crate) fn tick(&self, best: impl Fn() -> Option<usize>) -> bool {
        if self.spent.load(Ordering::Relaxed) || self.done.load(Ordering::Relaxed) {
            return false;
        }
        let nodes = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.budget.node_limit.is_some_and(|l| nodes > l) {
            self.spent.store(true, Ordering::Relaxed);
            return false;
        }
        if nodes % 1024 == 0 {
            let cancelled = self.budget.cancel.as_ref().is_some_and(|c| c.load(Ordering::Relaxed));
            let late = self.budget.time_limit.is_some_and(|t| self.start.elapsed() >= t);
            if cancelled || late {
                self.spent.store(true, Ordering::Relaxed);
                return false;
            }
        }
        if nodes % self.every == 0 {
            if let Some(hook) = &self.budget.progress {
                hook(&Progress {
                    nodes,
                    best: best(),
                    elapsed: self.start.elapsed(),
                });
            }
        }
        true
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    /// Whether the budget ran out or the search was cancelled.
    pub(crate) fn spent(&self) -> bool {
        self.spent.load(Ordering::Relaxed)
    }

    /// Stops every worker without marking the budget as spent.
    pub(crate) fn finish(&self) {
        self.done.store(true, Ordering::Relaxed);
    }
}
