//! Exact zero forcing numbers.
//!
//! Two independent routes: [`z_exhaustive`] enumerates candidate sets by
//! ascending size, and [`z_branch_and_bound`] searches over closed black
//! sets. Both respect a [`Budget`]; when it runs out they report the proven
//! interval and never a guessed value.

mod bnb;
pub mod bounds;
mod exhaustive;
pub(crate) mod kernel;

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub use bnb::{greedy_upper_bound, z_branch_and_bound};
pub use bounds::{
    bound_amos, bound_conjecture_third, bound_girth5, bound_gr, z_formula, BoundFormula, BoundNumber, BoundValue,
    DomainError, FormulaFamily, Rational,
};
pub use exhaustive::{verify_no_smaller, z_exhaustive};

/// How minimality of a returned value was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    /// Every set with size in `from..z` was tested and fails to force.
    /// `from` is 0 unless a caller supplied lower bound was trusted.
    ExhaustedBelow { z: usize, from: usize },
    /// The closed-set search drained every branch that could beat `z`.
    BnBClosed,
    /// Closed-form value for a standard family.
    FormulaOracle,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::ExhaustedBelow { z, from: 0 } => write!(f, "ExhaustedBelow({z})"),
            Certificate::ExhaustedBelow { z, from } => write!(f, "ExhaustedBelow({z}, from={from})"),
            Certificate::BnBClosed => f.write_str("BnBClosed"),
            Certificate::FormulaOracle => f.write_str("FormulaOracle"),
        }
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub sets_examined: u64,
    pub closures: u64,
    pub nodes: u64,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
}

fn secs<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolverResult {
    pub z: usize,
    pub witness: VertexSet,
    pub certificate: Certificate,
    pub stats: SearchStats,
}

/// Search ran out of budget. `lower ≤ Z ≤ upper` is proven; `witness`
/// forces and has size `upper` when one is known.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[error("budget exhausted: zero forcing number lies in [{lower}, {upper}]")]
pub struct Timeout {
    pub lower: usize,
    pub upper: usize,
    pub witness: Option<VertexSet>,
    pub stats: SearchStats,
}

/// Limits on a search. `threads` only affects subset enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub time: Option<Duration>,
    pub node_limit: Option<u64>,
    pub threads: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { time: None, node_limit: None, threads: 1 }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn seconds(secs: f64) -> Self {
        Budget { time: Some(Duration::from_secs_f64(secs)), ..Budget::default() }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_node_limit(mut self, nodes: u64) -> Self {
        self.node_limit = Some(nodes);
        self
    }

    pub(crate) fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        if self.threads <= 1 {
            return f();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.threads).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}

/// Shared countdown for workers: counts work units and trips once the
/// deadline or the unit limit is passed.
pub(crate) struct Meter {
    start: Instant,
    deadline: Option<Instant>,
    limit: Option<u64>,
    units: AtomicU64,
    closures: AtomicU64,
    tripped: AtomicBool,
}

impl Meter {
    pub fn new(budget: &Budget) -> Meter {
        let start = Instant::now();
        Meter {
            start,
            deadline: budget.time.map(|t| start + t),
            limit: budget.node_limit,
            units: AtomicU64::new(0),
            closures: AtomicU64::new(0),
            tripped: AtomicBool::new(false),
        }
    }

    /// Records `units` of work; returns false once the budget is gone.
    pub fn tick(&self, units: u64, closures: u64) -> bool {
        let total = self.units.fetch_add(units, Ordering::Relaxed) + units;
        self.closures.fetch_add(closures, Ordering::Relaxed);
        if self.tripped.load(Ordering::Relaxed) {
            return false;
        }
        let over = self.limit.is_some_and(|l| total > l) || self.deadline.is_some_and(|d| Instant::now() >= d);
        if over {
            self.tripped.store(true, Ordering::Relaxed);
        }
        !over
    }

    pub fn tripped(&self) -> bool {
        self.tripped.load(Ordering::Relaxed)
    }

    pub fn stats(&self, nodes: u64) -> SearchStats {
        SearchStats {
            sets_examined: self.units.load(Ordering::Relaxed),
            closures: self.closures.load(Ordering::Relaxed),
            nodes,
            elapsed: self.start.elapsed(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolverKind {
    Exhaustive,
    BranchAndBound,
    /// Branch-and-bound; on timeout, falls back to subset enumeration
    /// starting at the proven lower bound with whatever budget remains.
    #[default]
    Auto,
}

/// Dispatches to the chosen exact algorithm.
pub fn solve(g: &Graph, kind: SolverKind, budget: &Budget) -> Result<SolverResult, Timeout> {
    match kind {
        SolverKind::Exhaustive => z_exhaustive(g, None, budget),
        SolverKind::BranchAndBound => z_branch_and_bound(g, budget),
        SolverKind::Auto => {
            let first = Budget { time: budget.time.map(|t| t / 2), ..*budget };
            match z_branch_and_bound(g, &first) {
                Ok(r) => Ok(r),
                Err(t) => {
                    let rest = Budget { time: budget.time.map(|b| b.saturating_sub(t.stats.elapsed)), ..*budget };
                    z_exhaustive(g, Some((t.lower, t.upper)), &rest).map_err(|e| Timeout {
                        lower: e.lower.max(t.lower),
                        upper: t.upper,
                        witness: t.witness,
                        stats: e.stats,
                    })
                }
            }
        }
    }
}
