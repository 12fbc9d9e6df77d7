use std::fmt;

use crate::error::{Error, Result};
use crate::prufer::HusimiGraph;

/// Simple undirected graph on vertices `0..n` (printed as `1..=n`), as
/// adjacency bitmasks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    n: usize,
    adj: Vec<u32>,
}

/// Largest vertex count a bitmask graph can hold.
pub const MAX_VERTICES: usize = 32;

impl LabeledGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        LabeledGraph { n, adj: vec![0; n] }
    }

    /// From 0-based edges. Loops are rejected; repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::domain(format!("bad edge ({u}, {v}) on {n} vertices")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(n: usize, adj: Vec<u32>) -> Self {
        LabeledGraph { n, adj }
    }

    /// The graph whose edges are the within-block pairs of `h`.
    pub fn from_husimi(h: &HusimiGraph) -> Self {
        let mut g = Self::empty(h.vertices());
        for (u, v) in h.edges() {
            g.add_edge(u - 1, v - 1);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn adjacency(&self) -> &[u32] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut m = self.adj[u] >> (u + 1);
            let mut v = u + 1;
            while m != 0 {
                if m & 1 == 1 {
                    out.push((u, v));
                }
                m >>= 1;
                v += 1;
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_mask(0) == full_mask(self.n)
    }

    /// Vertices reachable from `start`.
    pub fn component_mask(&self, start: usize) -> u32 {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & !seen;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut left = full_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let c = self.component_mask(v);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// Subgraph induced on `mask`, relabelled to `0..popcount`.
    pub fn induced(&self, mask: u32) -> LabeledGraph {
        let verts: Vec<usize> = (0..self.n).filter(|&v| mask >> v & 1 == 1).collect();
        let mut g = Self::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Applies a relabelling `v -> perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> LabeledGraph {
        let mut adj = vec![0u32; self.n];
        for u in 0..self.n {
            let mut m = self.adj[u];
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        LabeledGraph { n: self.n, adj }
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_out(self.n, self.adj.clone())
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect();
        write!(f, "LabeledGraph(n={}, [{}])", self.n, edges.join(" "))
    }
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Directed graph without loops, as out-neighbour bitmasks. Undirected graphs
/// embed as symmetric digraphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Digraph {
    n: usize,
    out: Vec<u32>,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Digraph { n, out: vec![0; n] }
    }

    pub fn from_out(n: usize, out: Vec<u32>) -> Self {
        assert_eq!(out.len(), n);
        Digraph { n, out }
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= 1 << v;
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn out_masks(&self) -> &[u32] {
        &self.out
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn in_masks(&self) -> Vec<u32> {
        let mut inn = vec![0u32; self.n];
        for u in 0..self.n {
            let mut m = self.out[u];
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                inn[v] |= 1 << u;
            }
        }
        inn
    }

    /// Forgets directions: `u ~ v` iff an arc joins them either way.
    pub fn underlying(&self) -> LabeledGraph {
        let inn = self.in_masks();
        LabeledGraph::from_adjacency(self.n, (0..self.n).map(|v| self.out[v] | inn[v]).collect())
    }

    /// Appends `extra` isolated vertices.
    pub fn grown(&self, extra: usize) -> Digraph {
        let mut out = self.out.clone();
        out.resize(self.n + extra, 0);
        Digraph { n: self.n + extra, out }
    }

    pub fn permuted(&self, perm: &[usize]) -> Digraph {
        let mut out = vec![0u32; self.n];
        for u in 0..self.n {
            let mut m = self.out[u];
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                out[perm[u]] |= 1 << perm[v];
            }
        }
        Digraph { n: self.n, out }
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut arcs = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.has_arc(u, v) {
                    arcs.push(format!("{}>{}", u + 1, v + 1));
                }
            }
        }
        write!(f, "Digraph(n={}, [{}])", self.n, arcs.join(" "))
    }
}
