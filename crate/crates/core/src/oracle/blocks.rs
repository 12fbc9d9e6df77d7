use super::graph::LabeledGraph;
use crate::error::{Error, Result};

/// One block: a maximal 2-connected subgraph, or a bridge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    pub vertices: u32,
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn size(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    pub fn is_complete(&self) -> bool {
        let s = self.size();
        self.edges.len() == s * (s - 1) / 2
    }

    /// An edge, or a polygon on at least three vertices.
    pub fn is_cycle_or_edge(&self) -> bool {
        let s = self.size();
        (s == 2 && self.edges.len() == 1) || (s >= 3 && self.edges.len() == s)
    }

    pub fn is_triangle(&self) -> bool {
        self.size() == 3 && self.edges.len() == 3
    }
}

/// Blocks, cutpoints and the block-cutpoint tree of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cutpoints: u32,
    /// Edges `(block index, cutpoint)` of the bipartite block-cutpoint tree.
    pub tree: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    pub fn block_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().map(Block::size)
    }
}

/// Biconnected components by depth-first search with an edge stack.
pub fn block_decompose(g: &LabeledGraph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::domain("block decomposition needs a connected graph"));
    }
    let n = g.vertices();
    let mut state = Dfs {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    if n > 0 {
        state.visit(0, usize::MAX);
    }
    let mut blocks = state.blocks;
    for b in &mut blocks {
        b.edges.sort_unstable();
    }
    blocks.sort();

    let mut seen = 0u32;
    let mut cutpoints = 0u32;
    for b in &blocks {
        cutpoints |= seen & b.vertices;
        seen |= b.vertices;
    }
    let mut tree = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        let mut m = b.vertices & cutpoints;
        while m != 0 {
            tree.push((i, m.trailing_zeros() as usize));
            m &= m - 1;
        }
    }
    Ok(BlockDecomposition { blocks, cutpoints, tree })
}

struct Dfs<'a> {
    g: &'a LabeledGraph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Block>,
}

impl Dfs<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut m = self.g.adjacency()[u];
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if self.disc[v] == usize::MAX {
                self.stack.push((u, v));
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let mut block = Block { vertices: 0, edges: Vec::new() };
                    loop {
                        let (a, b) = self.stack.pop().expect("edge stack underflow");
                        block.vertices |= 1 << a | 1 << b;
                        block.edges.push((a.min(b), a.max(b)));
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}
