//! Brute-force ground truth for every closed form and recurrence.
//!
//! Labelled counts come from exhaustive sweeps over edge subsets of the
//! complete graph (or arc subsets, for oriented cacti). Unlabelled counts come
//! from canonical forms of representatives grown one leaf block at a time.
//! Everything here trades speed for obviousness and refuses `n` beyond the
//! configured limit.

mod blocks;
mod burnside;
mod canon;
mod classify;
mod enumerate;
mod graph;
mod grow;
mod labeled;

pub use blocks::{block_decompose, Block, BlockDecomposition};
pub use burnside::burnside_count;
pub use canon::{canonical_form, canonical_form_plain, CanonicalForm};
pub use classify::{block_monomial, classify, classify_blocks, is_oriented_cactus, Classification};
pub use enumerate::{edge_pairs, enumerate_graphs, graph_from_mask};
pub use graph::{Digraph, LabeledGraph, MAX_VERTICES};
pub use grow::{count_unlabeled, count_unlabeled_by_distribution, Census, Structure};
pub use labeled::{
    count_labeled, count_labeled_by_distribution, count_oriented_digraphs, husimi_graphs,
    labeled_members, DIRECT_DIGRAPH_LIMIT,
};

use crate::error::{Error, Result};

/// Default largest `n` the oracle will enumerate.
pub const DEFAULT_ORACLE_LIMIT: usize = 7;
/// Upper bound accepted for a configured limit.
pub const MAX_ORACLE_LIMIT: usize = 12;
/// Largest `n` whose edge subsets fit a 64-bit mask. The leaf-block census
/// has no such bound and may go up to the configured limit.
pub const MAX_SWEEP_VERTICES: usize = 11;

/// Oracle configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub limit: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { limit: DEFAULT_ORACLE_LIMIT }
    }
}

impl OracleConfig {
    pub fn with_limit(limit: usize) -> Result<Self> {
        if limit == 0 || limit > MAX_ORACLE_LIMIT {
            return Err(Error::domain(format!(
                "oracle limit must lie in 1..={MAX_ORACLE_LIMIT}, got {limit}"
            )));
        }
        Ok(OracleConfig { limit })
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.limit {
            return Err(Error::OracleLimit { n, limit: self.limit });
        }
        Ok(())
    }

    /// [`check`](Self::check) for sweeps over edge subsets of `K_n`.
    pub fn check_sweep(&self, n: usize) -> Result<()> {
        self.check(n)?;
        if n > MAX_SWEEP_VERTICES {
            return Err(Error::domain(format!(
                "edge-subset sweeps stop at {MAX_SWEEP_VERTICES} vertices, got {n}"
            )));
        }
        Ok(())
    }
}
