//! Decision procedures: the backtracking oracle, canonical choosability
//! search, cut extension, the theta and two-cycle procedures, and the
//! profile-based cut search.

use core::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use crate::lists::ListAssignment;

mod choosability;
mod cut;
mod cycles;
mod oracle;
mod profiles;
mod theta;

pub use choosability::{
    canonical_options, is_ab_choosable, peel_order, search_from, ChoosabilitySearch,
};
pub use cut::{auto_cut, check_cut, extend_from_cut, CutPath};
pub use cycles::{bad_w_sets, path_injection, solve_two_cycles, InjectionTable};
pub use oracle::{l_colourable, l_colourable_with, oracle_order};
pub use profiles::{cut_search, enumerate_profiles, ProfileShape};
pub use theta::{
    couple_table, find_simple_solution, solve_theta_22r2s, CoupleTable, ThetaRoute,
    SIMPLE_PAIRS,
};

/// Work counters reported by every search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SearchStats {
    /// Backtracking nodes visited by the oracle.
    pub nodes: u64,
    /// List assignments (complete or partial) examined.
    pub assignments: u64,
}

/// Limits and knobs for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: Option<u64>,
    pub assignment_budget: Option<u64>,
    /// Largest colour universe for canonical enumeration; `None` means
    /// `a·m·|V|` (enough colours for pairwise disjoint lists), capped at 64.
    pub universe_cap: Option<usize>,
    /// Parallel workers; the core crate itself is single-threaded and only
    /// reports this for callers that split the search.
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: None,
            assignment_budget: None,
            universe_cap: None,
            workers: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Choosable,
    NotChoosable,
}

/// Result of a choosability decision. `witness` is present exactly when the
/// outcome is [`Outcome::NotChoosable`] and has been checked uncolourable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witness: Option<ListAssignment>,
    pub stats: SearchStats,
}

impl Verdict {
    pub fn choosable(stats: SearchStats) -> Self {
        Verdict {
            outcome: Outcome::Choosable,
            witness: None,
            stats,
        }
    }

    pub fn not_choosable(witness: ListAssignment, stats: SearchStats) -> Self {
        Verdict {
            outcome: Outcome::NotChoosable,
            witness: Some(witness),
            stats,
        }
    }

    pub fn is_choosable(&self) -> bool {
        self.outcome == Outcome::Choosable
    }
}

/// Shared work counter with optional limits. Safe to share between threads.
#[derive(Debug, Default)]
pub struct Budget {
    nodes: AtomicU64,
    assignments: AtomicU64,
    node_limit: Option<u64>,
    assignment_limit: Option<u64>,
    stop: AtomicBool,
}

/// Raised when a [`Budget`] runs out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exhausted;

impl Budget {
    pub fn new(cfg: &SearchConfig) -> Self {
        Budget {
            node_limit: cfg.node_budget,
            assignment_limit: cfg.assignment_budget,
            ..Budget::default()
        }
    }

    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn node(&self) -> Result<(), Exhausted> {
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.stop.load(Ordering::Relaxed) || self.node_limit.is_some_and(|l| used > l) {
            self.stop.store(true, Ordering::Relaxed);
            return Err(Exhausted);
        }
        Ok(())
    }

    pub fn assignment(&self) -> Result<(), Exhausted> {
        let used = self.assignments.fetch_add(1, Ordering::Relaxed) + 1;
        if self.stop.load(Ordering::Relaxed) || self.assignment_limit.is_some_and(|l| used > l)
        {
            self.stop.store(true, Ordering::Relaxed);
            return Err(Exhausted);
        }
        Ok(())
    }

    pub fn exhausted(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }

    pub fn stats(&self) -> SearchStats {
        SearchStats {
            nodes: self.nodes.load(Ordering::Relaxed),
            assignments: self.assignments.load(Ordering::Relaxed),
        }
    }
}
