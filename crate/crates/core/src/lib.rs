//! Twin-width contraction sequences, the vertex orders they induce, and
//! exact generalized coloring numbers.
//!
//! The crate is organized around a pipeline:
//!
//! * [`graph`] — simple undirected graphs, girth, degeneracy, the biclique
//!   number `bomega`, and brute-force path oracles,
//! * [`trigraph`] — trigraphs, contraction sequences, their width (maximum
//!   red degree), and an exact twin-width search for tiny graphs,
//! * [`order`] — converting a contraction sequence of width `d` into a
//!   linear vertex order whose strong coloring number is bounded in terms
//!   of `d` and `bomega`, plus the cotree order for cographs,
//! * [`reach`] — weak/strong r-reachability, r-backconnectivity, and the
//!   parameters `wcol_r`, `scol_r`, `adm_r` (per order and minimized over
//!   all orders),
//! * [`generators`] — 2-lifts, full edge-indexed lifts, subdivided cliques,
//!   lexicographic products with cliques, and random cographs,
//! * [`bounds`] — closed-form bound evaluators and a verification harness
//!   joining exact values with the evaluated bounds.

pub mod bounds;
pub mod cograph;
pub mod enumerate;
mod error;
pub mod generators;
pub mod graph;
pub mod order;
pub mod reach;
pub mod trigraph;

pub use error::{Error, Result};
pub use graph::Graph;
pub use order::LinearOrder;

/// Node budget for the exponential searches. Every search-tree node costs
/// one tick; exhausting the budget aborts with [`Error::ResourceLimit`]
/// rather than silently truncating the result.
#[derive(Debug, Clone)]
pub struct Budget {
    label: &'static str,
    limit: u64,
    used: u64,
}

/// Default node budget for all exponential searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

impl Budget {
    pub fn new(label: &'static str, limit: u64) -> Self {
        Budget { label, limit, used: 0 }
    }

    /// Budget with the default limit of [`DEFAULT_BUDGET`] nodes.
    pub fn default_for(label: &'static str) -> Self {
        Budget::new(label, DEFAULT_BUDGET)
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::ResourceLimit { what: self.label, limit: self.limit, best_known: None })
        } else {
            Ok(())
        }
    }
}
