use std::collections::BTreeMap;

use super::graph::Digraph;

/// Certificate identifying a vertex-coloured digraph up to isomorphism.
///
/// Computed as the lexicographically least relabelled adjacency encoding
/// over every leaf of an individualisation-refinement search, so equal
/// certificates mean isomorphic inputs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Canonical form of `g` where vertex `v` carries colour `colors[v]`.
/// Isomorphisms must preserve colours.
pub fn canonical_form(g: &Digraph, colors: &[u32]) -> CanonicalForm {
    let n = g.vertices();
    assert_eq!(colors.len(), n);
    let ctx = Ctx {
        out: g.out_masks().to_vec(),
        inn: g.in_masks(),
        colors: colors.to_vec(),
    };
    let mut by_color: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_color.entry(colors[v]).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = by_color.into_values().collect();
    let mut best: Option<Vec<u32>> = None;
    ctx.search(cells, &mut best);
    let words = best.unwrap_or_default();
    let mut bytes = Vec::with_capacity(4 * words.len() + 1);
    bytes.push(n as u8);
    for w in words {
        bytes.extend_from_slice(&w.to_le_bytes());
    }
    CanonicalForm(bytes)
}

/// Uncoloured shorthand.
pub fn canonical_form_plain(g: &Digraph) -> CanonicalForm {
    canonical_form(g, &vec![0; g.vertices()])
}

struct Ctx {
    out: Vec<u32>,
    inn: Vec<u32>,
    colors: Vec<u32>,
}

impl Ctx {
    /// Splits cells by arc counts into every cell until stable. Sub-cells are
    /// ordered by their count vectors, so the result is labelling-invariant.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        loop {
            let masks: Vec<u32> = cells
                .iter()
                .map(|c| c.iter().fold(0u32, |m, &v| m | 1 << v))
                .collect();
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: BTreeMap<Vec<(u32, u32)>, Vec<usize>> = BTreeMap::new();
                for &v in cell {
                    let sig = masks
                        .iter()
                        .map(|&m| ((self.out[v] & m).count_ones(), (self.inn[v] & m).count_ones()))
                        .collect();
                    groups.entry(sig).or_default().push(v);
                }
                next.extend(groups.into_values());
            }
            let stable = next.len() == cells.len();
            *cells = next;
            if stable {
                return;
            }
        }
    }

    fn search(&self, mut cells: Vec<Vec<usize>>, best: &mut Option<Vec<u32>>) {
        self.refine(&mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            let cert = self.certificate(&order);
            if best.as_ref().map_or(true, |b| cert < *b) {
                *best = Some(cert);
            }
            return;
        };
        for &v in &cells[target] {
            let mut branch = Vec::with_capacity(cells.len() + 1);
            branch.extend_from_slice(&cells[..target]);
            branch.push(vec![v]);
            branch.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            branch.extend_from_slice(&cells[target + 1..]);
            self.search(branch, best);
        }
    }

    fn certificate(&self, order: &[usize]) -> Vec<u32> {
        let n = order.len();
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut words = Vec::with_capacity(2 * n);
        words.extend(order.iter().map(|&v| self.colors[v]));
        for &v in order {
            let mut row = 0u32;
            let mut m = self.out[v];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                row |= 1 << pos[w];
            }
            words.push(row);
        }
        words
    }
}
