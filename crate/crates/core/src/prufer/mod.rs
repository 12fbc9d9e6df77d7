//! Prüfer-type bijection between labelled Husimi graphs with `k` blocks and
//! pairs `(lambda, pi)`: a sequence of `k - 1` vertices and a partition of
//! `[n]` minus the last sequence entry into `k` parts.
//!
//! Encoding repeatedly strips the leaf block whose non-articulation vertices
//! hold the smallest label, recording the articulation point in `lambda` and
//! the stripped vertices as a part of `pi`. The last block, minus the final
//! articulation point, becomes the last part. With a single block, `lambda`
//! is empty and `pi` is that block.

mod graph;
mod text;

pub use graph::HusimiGraph;
pub use text::{format_blocks, format_code, parse_blocks, parse_code};

use std::collections::BTreeSet;

use crate::error::{Error, Result};

pub type VertexSet = BTreeSet<usize>;

/// The pair `(lambda, pi)` attached to a Husimi graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PruferCode {
    pub lambda: Vec<usize>,
    pub pi: BTreeSet<VertexSet>,
}

impl PruferCode {
    /// Number of blocks of the encoded graph.
    pub fn blocks(&self) -> usize {
        self.pi.len()
    }

    /// Vertex count implied by the code: the parts cover `[n]` minus the
    /// last articulation point, or all of `[n]` for a single block.
    pub fn implied_vertices(&self) -> usize {
        let covered: usize = self.pi.iter().map(|p| p.len()).sum();
        if self.pi.is_empty() {
            1
        } else if self.lambda.is_empty() {
            covered
        } else {
            covered + 1
        }
    }

    /// Sorted part sizes.
    pub fn part_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.pi.iter().map(|p| p.len()).collect();
        s.sort_unstable();
        s
    }
}

/// The leaf block whose vertices other than its articulation point contain
/// the smallest label, together with that articulation point.
///
/// A graph with one block has no articulation point and returns `None`.
pub fn leaf_block_select(h: &HusimiGraph) -> Result<(VertexSet, Option<usize>)> {
    select_from(h.blocks())
}

fn select_from(blocks: &[VertexSet]) -> Result<(VertexSet, Option<usize>)> {
    match blocks.len() {
        0 => Err(Error::domain("graph has no blocks")),
        1 => Ok((blocks[0].clone(), None)),
        _ => {
            let mut membership = std::collections::BTreeMap::<usize, usize>::new();
            for b in blocks {
                for &v in b {
                    *membership.entry(v).or_default() += 1;
                }
            }
            let mut best: Option<(usize, &VertexSet, usize)> = None;
            for b in blocks {
                let cuts: Vec<usize> = b.iter().copied().filter(|v| membership[v] > 1).collect();
                if cuts.len() != 1 {
                    continue;
                }
                let j = cuts[0];
                let smallest = *b.iter().find(|&&v| v != j).expect("block has >= 2 vertices");
                if best.map_or(true, |(s, _, _)| smallest < s) {
                    best = Some((smallest, b, j));
                }
            }
            let (_, b, j) = best.ok_or_else(|| Error::Structure("no leaf block found".into()))?;
            Ok((b.clone(), Some(j)))
        }
    }
}

pub fn prufer_encode(h: &HusimiGraph) -> PruferCode {
    let mut blocks: Vec<VertexSet> = h.blocks().to_vec();
    let mut lambda = Vec::new();
    let mut pi = BTreeSet::new();
    if blocks.is_empty() {
        return PruferCode { lambda, pi };
    }
    while blocks.len() > 1 {
        let (b, j) = select_from(&blocks).expect("validated Husimi graph");
        let j = j.expect("several blocks imply an articulation point");
        lambda.push(j);
        let mut part = b.clone();
        part.remove(&j);
        pi.insert(part);
        blocks.retain(|x| *x != b);
    }
    let mut last = blocks.pop().expect("one block left");
    if let Some(j) = lambda.last() {
        last.remove(j);
    }
    pi.insert(last);
    PruferCode { lambda, pi }
}

pub fn prufer_decode(code: &PruferCode, n: usize) -> Result<HusimiGraph> {
    let k = code.pi.len();
    if k == 0 {
        if !code.lambda.is_empty() || n != 1 {
            return Err(Error::Decode("an empty partition encodes only the single vertex".into()));
        }
        return HusimiGraph::new(1, Vec::new()).map_err(|e| Error::Decode(e.to_string()));
    }
    if code.lambda.len() != k - 1 {
        return Err(Error::Decode(format!(
            "{} parts need a sequence of length {}, got {}",
            k,
            k - 1,
            code.lambda.len()
        )));
    }
    if let Some(&bad) = code.lambda.iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::Decode(format!("sequence entry {bad} outside 1..={n}")));
    }
    let mut covered = VertexSet::new();
    for part in &code.pi {
        if part.is_empty() {
            return Err(Error::Decode("empty part".into()));
        }
        for &v in part {
            if v == 0 || v > n {
                return Err(Error::Decode(format!("vertex {v} outside 1..={n}")));
            }
            if !covered.insert(v) {
                return Err(Error::Decode(format!("vertex {v} appears in two parts")));
            }
        }
    }
    let mut expected: VertexSet = (1..=n).collect();
    if let Some(last) = code.lambda.last() {
        expected.remove(last);
    }
    if covered != expected {
        return Err(Error::Decode(
            "parts must cover [n] minus the last sequence entry".into(),
        ));
    }

    // A part can be stripped at step t iff none of its vertices is still
    // needed as a later articulation point.
    let mut remaining: Vec<&VertexSet> = code.pi.iter().collect();
    let mut blocks = Vec::with_capacity(k);
    for t in 0..k - 1 {
        let future: VertexSet = code.lambda[t..].iter().copied().collect();
        let pos = remaining
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_disjoint(&future))
            .min_by_key(|(_, p)| *p.iter().next().expect("nonempty"))
            .map(|(i, _)| i)
            .ok_or_else(|| Error::Decode(format!("no strippable part at step {}", t + 1)))?;
        let mut block = remaining.remove(pos).clone();
        block.insert(code.lambda[t]);
        blocks.push(block);
    }
    let mut last = remaining.pop().expect("one part left").clone();
    if let Some(&j) = code.lambda.last() {
        last.insert(j);
    }
    blocks.push(last);

    let h = HusimiGraph::new(n, blocks).map_err(|e| Error::Decode(e.to_string()))?;
    if prufer_encode(&h) != *code {
        return Err(Error::Decode("code is not the image of any Husimi graph".into()));
    }
    Ok(h)
}

/// Every code `(lambda, pi)` on `[n]` satisfying the shape invariants.
pub fn all_codes(n: usize) -> Vec<PruferCode> {
    assert!(n >= 1, "n must be positive");
    if n == 1 {
        return vec![PruferCode { lambda: Vec::new(), pi: BTreeSet::new() }];
    }
    let mut out = Vec::new();
    // k = 1
    out.push(PruferCode {
        lambda: Vec::new(),
        pi: std::iter::once((1..=n).collect()).collect(),
    });
    for k in 2..=n - 1 {
        for seq in sequences(n, k - 1) {
            let last = *seq.last().expect("k >= 2");
            let ground: Vec<usize> = (1..=n).filter(|&v| v != last).collect();
            for pi in set_partitions(&ground, k) {
                out.push(PruferCode { lambda: seq.clone(), pi });
            }
        }
    }
    out
}

fn sequences(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                (1..=n).map(move |v| {
                    let mut t = s.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

/// Partitions of `ground` into exactly `k` nonempty parts.
pub(crate) fn set_partitions(ground: &[usize], k: usize) -> Vec<BTreeSet<VertexSet>> {
    fn rec(i: usize, ground: &[usize], k: usize, parts: &mut Vec<VertexSet>, out: &mut Vec<BTreeSet<VertexSet>>) {
        if ground.len() - i < k - parts.len().min(k) {
            return;
        }
        if i == ground.len() {
            if parts.len() == k {
                out.push(parts.iter().cloned().collect());
            }
            return;
        }
        for p in 0..parts.len() {
            parts[p].insert(ground[i]);
            rec(i + 1, ground, k, parts, out);
            parts[p].remove(&ground[i]);
        }
        if parts.len() < k {
            parts.push(std::iter::once(ground[i]).collect());
            rec(i + 1, ground, k, parts, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if ground.is_empty() {
            out.push(BTreeSet::new());
        }
        return out;
    }
    rec(0, ground, k, &mut Vec::new(), &mut out);
    out
}
