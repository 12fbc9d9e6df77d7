use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::blocks::{block_decompose, Block, BlockDecomposition};
use super::classify::{classify_blocks, is_oriented_cactus};
use super::enumerate::{edge_pairs, graph_from_mask};
use super::graph::{Digraph, LabeledGraph};
use super::OracleConfig;
use crate::error::{Error, Result};
use crate::labeled::{BlockSizeDistribution, CountTable};
use crate::prufer::HusimiGraph;
use crate::species::Species;

/// Largest `n` for which oriented cacti are also counted by sweeping every
/// arc subset (`2^(n(n-1))` digraphs).
pub const DIRECT_DIGRAPH_LIMIT: usize = 5;

fn distribution_of(d: &BlockDecomposition) -> BlockSizeDistribution {
    BlockSizeDistribution::from_block_sizes(d.block_sizes()).expect("blocks have >= 2 vertices")
}

/// Sweeps connected graphs on `[n]` in parallel, tallying `weight` per distribution.
fn sweep<F>(n: usize, config: &OracleConfig, weight: F) -> Result<CountTable>
where
    F: Fn(&BlockDecomposition) -> u64 + Sync,
{
    config.check_sweep(n)?;
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    let pairs = edge_pairs(n);
    let total = 1u64 << pairs.len();
    let tally = (0..total)
        .into_par_iter()
        .fold(BTreeMap::<BlockSizeDistribution, u64>::new, |mut acc, mask| {
            let g = graph_from_mask(n, &pairs, mask);
            if let Ok(d) = block_decompose(&g) {
                let w = weight(&d);
                if w > 0 {
                    *acc.entry(distribution_of(&d)).or_default() += w;
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(CountTable::from_rows(tally.into_iter().map(|(d, c)| (d, BigUint::from(c)))))
}

/// Exhaustive labelled count on `[n]`, split by block-size distribution.
///
/// Oriented cacti are counted as cacti weighted by `2^(#polygons)`.
pub fn count_labeled_by_distribution(species: Species, n: usize, config: &OracleConfig) -> Result<CountTable> {
    sweep(n, config, |d| {
        let c = classify_blocks(d);
        match species {
            Species::Oriented if c.cactus => 1u64 << d.blocks.iter().filter(|b| b.size() >= 3).count(),
            _ if c.admits(species) => 1,
            _ => 0,
        }
    })
}

pub fn count_labeled(species: Species, n: usize, config: &OracleConfig) -> Result<BigUint> {
    Ok(count_labeled_by_distribution(species, n, config)?.total())
}

/// Oriented cacti found by testing every digraph on `[n]` directly.
pub fn count_oriented_digraphs(n: usize) -> Result<CountTable> {
    if n > DIRECT_DIGRAPH_LIMIT {
        return Err(Error::OracleLimit { n, limit: DIRECT_DIGRAPH_LIMIT });
    }
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << arcs.len();
    let tally = (0..total)
        .into_par_iter()
        .fold(BTreeMap::<BlockSizeDistribution, u64>::new, |mut acc, mask| {
            let mut d = Digraph::empty(n);
            let mut m = mask;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                d.add_arc(arcs[i].0, arcs[i].1);
            }
            if is_oriented_cactus(&d) {
                let dec = block_decompose(&d.underlying()).expect("cactus is connected");
                *acc.entry(distribution_of(&dec)).or_default() += 1;
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(CountTable::from_rows(tally.into_iter().map(|(d, c)| (d, BigUint::from(c)))))
}

/// Vertex order around a polygon block, starting at its smallest vertex.
fn cycle_order(b: &Block) -> Vec<usize> {
    let start = b.vertices.trailing_zeros() as usize;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = b
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                if u == cur {
                    Some(v)
                } else if v == cur {
                    Some(u)
                } else {
                    None
                }
            })
            .find(|&w| w != prev)
            .expect("polygon vertex has two neighbours");
        if next == start {
            return order;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
}

/// All orientations of a cactus into an oriented cactus.
fn orientations(g: &LabeledGraph, d: &BlockDecomposition) -> Vec<Digraph> {
    let mut out = vec![Digraph::empty(g.vertices())];
    for b in &d.blocks {
        let mut next = Vec::with_capacity(out.len() * 2);
        if b.size() == 2 {
            let (u, v) = b.edges[0];
            for mut dg in out {
                dg.add_arc(u, v);
                dg.add_arc(v, u);
                next.push(dg);
            }
        } else {
            let cyc = cycle_order(b);
            for dg in out {
                for reverse in [false, true] {
                    let mut dg = dg.clone();
                    for i in 0..cyc.len() {
                        let (a, c) = (cyc[i], cyc[(i + 1) % cyc.len()]);
                        if reverse {
                            dg.add_arc(c, a);
                        } else {
                            dg.add_arc(a, c);
                        }
                    }
                    next.push(dg);
                }
            }
        }
        out = next;
    }
    out
}

/// Every labelled member of `species` on `[n]`; undirected species appear as
/// symmetric digraphs.
pub fn labeled_members(species: Species, n: usize, config: &OracleConfig) -> Result<Vec<Digraph>> {
    config.check_sweep(n)?;
    let pairs = edge_pairs(n);
    let mut out = Vec::new();
    for mask in 0..1u64 << pairs.len() {
        let g = graph_from_mask(n, &pairs, mask);
        let Ok(d) = block_decompose(&g) else { continue };
        if !classify_blocks(&d).admits(species) {
            continue;
        }
        if species == Species::Oriented {
            out.extend(orientations(&g, &d));
        } else {
            out.push(g.to_digraph());
        }
    }
    Ok(out)
}

/// Every labelled Husimi graph on `[n]` as a block set.
pub fn husimi_graphs(n: usize, config: &OracleConfig) -> Result<Vec<HusimiGraph>> {
    config.check_sweep(n)?;
    let pairs = edge_pairs(n);
    let mut out = Vec::new();
    for mask in 0..1u64 << pairs.len() {
        let g = graph_from_mask(n, &pairs, mask);
        let Ok(d) = block_decompose(&g) else { continue };
        if !classify_blocks(&d).husimi {
            continue;
        }
        let blocks = d
            .blocks
            .iter()
            .map(|b| (0..n).filter(|&v| b.vertices >> v & 1 == 1).map(|v| v + 1).collect())
            .collect();
        out.push(HusimiGraph::new(n, blocks)?);
    }
    Ok(out)
}
