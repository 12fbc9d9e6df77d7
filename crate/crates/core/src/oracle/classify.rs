use super::blocks::{block_decompose, BlockDecomposition};
use super::graph::{Digraph, LabeledGraph};
use crate::algebra::Monomial;
use crate::species::Species;

/// Which block-structured families a connected graph belongs to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Classification {
    /// Every block is complete.
    pub husimi: bool,
    /// Every block is an edge or a polygon; such graphs underlie oriented cacti.
    pub cactus: bool,
    /// Every block is a triangle.
    pub triangular: bool,
    /// Every block is an edge.
    pub tree: bool,
}

impl Classification {
    pub fn is_other(&self) -> bool {
        !self.husimi && !self.cactus
    }

    /// Membership of the undirected graph; for oriented cacti this asks
    /// whether the graph can be oriented into one.
    pub fn admits(&self, species: Species) -> bool {
        match species {
            Species::Husimi => self.husimi,
            Species::Cacti | Species::Oriented => self.cactus,
            Species::Triangular => self.triangular,
        }
    }
}

/// `None` for disconnected input.
pub fn classify(g: &LabeledGraph) -> Option<Classification> {
    let d = block_decompose(g).ok()?;
    Some(classify_blocks(&d))
}

pub fn classify_blocks(d: &BlockDecomposition) -> Classification {
    Classification {
        husimi: d.blocks.iter().all(|b| b.is_complete()),
        cactus: d.blocks.iter().all(|b| b.is_cycle_or_edge()),
        triangular: d.blocks.iter().all(|b| b.is_triangle()),
        tree: d.blocks.iter().all(|b| b.size() == 2),
    }
}

/// The block-size monomial `prod y_i^{n_i}` of a connected graph.
pub fn block_monomial(d: &BlockDecomposition) -> Monomial {
    Monomial::from_sizes(d.block_sizes().map(|s| (s, 1)))
}

/// Whether `d` is an oriented cactus: its underlying graph is a cactus, every
/// 2-vertex block carries both arcs, and every polygon is a directed cycle.
pub fn is_oriented_cactus(d: &Digraph) -> bool {
    let n = d.vertices();
    let out = d.out_masks();
    if (0..n).any(|v| d.has_arc(v, v)) {
        return false;
    }
    let g = d.underlying();
    let Ok(dec) = block_decompose(&g) else {
        return false;
    };
    for b in &dec.blocks {
        if !b.is_cycle_or_edge() {
            return false;
        }
        if b.size() == 2 {
            let (u, v) = b.edges[0];
            if !(d.has_arc(u, v) && d.has_arc(v, u)) {
                return false;
            }
        } else {
            // each vertex has exactly one out-arc and one in-arc inside the
            // polygon, and no edge is doubled
            for &(u, v) in &b.edges {
                if d.has_arc(u, v) == d.has_arc(v, u) {
                    return false;
                }
            }
            let mut m = b.vertices;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if (out[v] & b.vertices).count_ones() != 1 {
                    return false;
                }
            }
        }
    }
    true
}
