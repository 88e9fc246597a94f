//! Exact algorithms for pathwidth, induced minors and induced-tree
//! extraction on small graphs.
//!
//! Every search takes a node [`Budget`] and reports [`Outcome::Exhausted`]
//! when it runs out; `Absent` is only ever produced by a search that
//! completed.

pub mod constants;
pub mod constellations;
pub mod containment;
pub mod extraction;
pub mod generators;
pub mod graph;
pub mod rng;
pub mod width;

mod error;

pub use error::{Error, Result};
pub use graph::{Digraph, Graph, PathInGraph, VertexSet};

/// Result of a budgeted search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Found(T),
    /// The search space was exhausted without a witness.
    Absent,
    /// The node budget ran out first. Says nothing about existence.
    Exhausted,
}

impl<T> Outcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Outcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Outcome::Absent)
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Outcome::Exhausted)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Found(t) => Outcome::Found(f(t)),
            Outcome::Absent => Outcome::Absent,
            Outcome::Exhausted => Outcome::Exhausted,
        }
    }

    pub fn as_ref(&self) -> Outcome<&T> {
        match self {
            Outcome::Found(t) => Outcome::Found(t),
            Outcome::Absent => Outcome::Absent,
            Outcome::Exhausted => Outcome::Exhausted,
        }
    }
}

/// Search-node counter shared by nested searches.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

/// Marker returned by [`Budget::tick`] once the limit is reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OutOfBudget;

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    /// Counts one search node.
    pub fn tick(&mut self) -> std::result::Result<(), OutOfBudget> {
        if self.used >= self.limit {
            return Err(OutOfBudget);
        }
        self.used += 1;
        Ok(())
    }

    /// Counts `k` nodes at once, saturating at the limit.
    pub fn spend(&mut self, k: u64) {
        self.used = self.used.saturating_add(k).min(self.limit);
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn remaining(&self) -> u64 {
        self.limit - self.used
    }
}
