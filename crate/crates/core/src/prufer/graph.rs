use std::collections::BTreeSet;

use super::VertexSet;
use crate::error::{Error, Result};

/// A labelled Husimi graph on `1..=n`, stored as its set of blocks.
///
/// Edges are every pair inside a block. Construction checks that the blocks
/// cover `[n]` and that the block/vertex incidence graph is a tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HusimiGraph {
    n: usize,
    // sorted, so equal graphs compare equal
    blocks: Vec<VertexSet>,
}

impl HusimiGraph {
    pub fn new(n: usize, blocks: Vec<VertexSet>) -> Result<Self> {
        let blocks: Vec<VertexSet> = {
            let unique: BTreeSet<VertexSet> = blocks.iter().cloned().collect();
            if unique.len() != blocks.len() {
                return Err(Error::Structure("repeated block".into()));
            }
            unique.into_iter().collect()
        };
        if n == 0 {
            return Err(Error::Structure("a graph needs at least one vertex".into()));
        }
        if n == 1 {
            if !blocks.is_empty() {
                return Err(Error::Structure("a single vertex has no blocks".into()));
            }
            return Ok(HusimiGraph { n, blocks });
        }
        let mut covered = VertexSet::new();
        for b in &blocks {
            if b.len() < 2 {
                return Err(Error::Structure(format!("block {b:?} has fewer than 2 vertices")));
            }
            if let Some(&v) = b.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::Structure(format!("vertex {v} outside 1..={n}")));
            }
            covered.extend(b.iter().copied());
        }
        if covered.len() != n {
            return Err(Error::Structure("blocks do not cover every vertex".into()));
        }
        // incidence graph has n + k nodes and sum |b| edges; it is a tree iff
        // it is connected and sum (|b| - 1) = n - 1
        let excess: usize = blocks.iter().map(|b| b.len() - 1).sum();
        if excess != n - 1 {
            return Err(Error::Structure(
                "block-cutpoint structure is not a tree (blocks overlap or form a cycle)".into(),
            ));
        }
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        for b in &blocks {
            let first = *b.iter().next().expect("nonempty");
            for &v in b {
                let (a, c) = (find(&mut parent, first), find(&mut parent, v));
                parent[a] = c;
            }
        }
        let root = find(&mut parent, 1);
        if (2..=n).any(|v| find(&mut parent, v) != root) {
            return Err(Error::Structure("blocks are not connected".into()));
        }
        Ok(HusimiGraph { n, blocks })
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    /// Every within-block pair `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .flat_map(|b| {
                let vs: Vec<usize> = b.iter().copied().collect();
                let mut pairs = Vec::new();
                for i in 0..vs.len() {
                    for j in i + 1..vs.len() {
                        pairs.push((vs[i], vs[j]));
                    }
                }
                pairs
            })
            .collect();
        e.sort_unstable();
        e
    }
}
