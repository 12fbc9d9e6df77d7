use super::graph::LabeledGraph;
use super::OracleConfig;
use crate::error::Result;

/// The pairs `(u, v)`, `u < v`, in the order their bits appear in an edge mask.
pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// The graph whose edge set is the subset `mask` of [`edge_pairs`].
pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> LabeledGraph {
    let mut g = LabeledGraph::empty(n);
    let mut m = mask;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        let (u, v) = pairs[i];
        g.add_edge(u, v);
    }
    g
}

/// Every graph on `n` labelled vertices passing `keep`, in increasing order of
/// edge mask.
pub fn enumerate_graphs<'a, F>(
    n: usize,
    config: &OracleConfig,
    keep: F,
) -> Result<impl Iterator<Item = LabeledGraph> + 'a>
where
    F: Fn(&LabeledGraph) -> bool + 'a,
{
    config.check_sweep(n)?;
    let pairs = edge_pairs(n);
    let total = 1u64 << pairs.len();
    Ok((0..total)
        .map(move |mask| graph_from_mask(n, &pairs, mask))
        .filter(move |g| keep(g)))
}
