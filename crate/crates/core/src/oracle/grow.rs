use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use rayon::prelude::*;

use super::canon::{canonical_form, canonical_form_plain, CanonicalForm};
use super::graph::Digraph;
use super::OracleConfig;
use crate::algebra::Monomial;
use crate::error::{Error, Result};
use crate::labeled::{BlockSizeDistribution, CountTable};
use crate::species::Species;

/// A representative of one unlabelled structure, with its blocks as vertex masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    pub graph: Digraph,
    pub blocks: Vec<u32>,
}

impl Structure {
    fn single_vertex() -> Self {
        Structure { graph: Digraph::empty(1), blocks: Vec::new() }
    }

    pub fn vertices(&self) -> usize {
        self.graph.vertices()
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::from_sizes(self.blocks.iter().map(|b| (b.count_ones() as usize, 1)))
    }

    /// Glues a new block of `size` vertices at `at`, shaped as `species` requires.
    fn attach(&self, species: Species, at: usize, size: usize) -> Structure {
        let n = self.vertices();
        let mut g = self.graph.grown(size - 1);
        let ring: Vec<usize> = std::iter::once(at).chain(n..n + size - 1).collect();
        match species {
            Species::Husimi => {
                for &u in &ring {
                    for &v in &ring {
                        if u != v {
                            g.add_arc(u, v);
                        }
                    }
                }
            }
            Species::Cacti | Species::Triangular => {
                for i in 0..size {
                    let (u, v) = (ring[i], ring[(i + 1) % size]);
                    g.add_arc(u, v);
                    g.add_arc(v, u);
                }
            }
            Species::Oriented => {
                for i in 0..size {
                    g.add_arc(ring[i], ring[(i + 1) % size]);
                }
                if size == 2 {
                    g.add_arc(ring[1], ring[0]);
                }
            }
        }
        let mut blocks = self.blocks.clone();
        blocks.push(ring.iter().fold(0u32, |m, &v| m | 1 << v));
        Structure { graph: g, blocks }
    }

    /// Every vertex that lies in the given block, as a colour vector.
    fn colors(&self, root: Option<usize>, block: Option<u32>) -> Vec<u32> {
        (0..self.vertices())
            .map(|v| {
                if root == Some(v) {
                    2
                } else if block.is_some_and(|b| b >> v & 1 == 1) {
                    1
                } else {
                    0
                }
            })
            .collect()
    }
}

type Tally = BTreeMap<Monomial, u64>;

fn tally_forms(forms: &BTreeMap<CanonicalForm, Monomial>) -> Tally {
    let mut t = Tally::new();
    for m in forms.values() {
        *t.entry(m.clone()).or_default() += 1;
    }
    t
}

/// Unlabelled counts on `n` vertices by block monomial, in four flavours: plain,
/// vertex-rooted, block-rooted, and rooted at a vertex inside a marked block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub species: Species,
    pub n: usize,
    pub representatives: Vec<Structure>,
    pub unrooted: BTreeMap<Monomial, u64>,
    pub rooted: BTreeMap<Monomial, u64>,
    pub block_rooted: BTreeMap<Monomial, u64>,
    pub mixed: BTreeMap<Monomial, u64>,
}

fn total(t: &Tally) -> u64 {
    t.values().sum()
}

impl Census {
    /// Grows representatives for every size up to `n` and returns one census per
    /// size, index 0 holding `n = 1`.
    ///
    /// Every structure with at least one block has a leaf block; deleting its
    /// non-cut vertices leaves a smaller structure of the same species, so
    /// attaching every admissible block at every vertex of every smaller
    /// representative reaches all isomorphism classes.
    pub fn up_to(species: Species, n: usize, config: &OracleConfig) -> Result<Vec<Census>> {
        if n == 0 {
            return Err(Error::domain("n must be positive"));
        }
        config.check(n)?;
        let mut levels: Vec<Vec<Structure>> = vec![vec![Structure::single_vertex()]];
        for size in 2..=n {
            let candidates: Vec<Structure> = (2..=size)
                .filter(|&m| species.allows_block_size(m))
                .flat_map(|m| {
                    let base = &levels[size - m];
                    base.iter().flat_map(move |s| (0..s.vertices()).map(move |v| s.attach(species, v, m)))
                })
                .collect();
            let unique: BTreeMap<CanonicalForm, Structure> = candidates
                .into_par_iter()
                .map(|s| (canonical_form_plain(&s.graph), s))
                .collect::<Vec<_>>()
                .into_iter()
                .fold(BTreeMap::new(), |mut acc, (k, s)| {
                    acc.entry(k).or_insert(s);
                    acc
                });
            levels.push(unique.into_values().collect());
        }
        Ok(levels
            .into_iter()
            .enumerate()
            .map(|(i, reps)| Census::from_representatives(species, i + 1, reps))
            .collect())
    }

    pub fn compute(species: Species, n: usize, config: &OracleConfig) -> Result<Census> {
        Ok(Census::up_to(species, n, config)?.pop().expect("n >= 1"))
    }

    fn from_representatives(species: Species, n: usize, representatives: Vec<Structure>) -> Census {
        let per: Vec<[Vec<(CanonicalForm, Monomial)>; 4]> = representatives
            .par_iter()
            .map(|s| {
                let mono = s.monomial();
                let form = |root, block| (canonical_form(&s.graph, &s.colors(root, block)), mono.clone());
                let plain = vec![form(None, None)];
                let rooted = (0..n).map(|v| form(Some(v), None)).collect();
                let block_rooted = s.blocks.iter().map(|&b| form(None, Some(b))).collect();
                let mixed = s
                    .blocks
                    .iter()
                    .flat_map(|&b| (0..n).filter(move |&v| b >> v & 1 == 1).map(move |v| (v, b)))
                    .map(|(v, b)| form(Some(v), Some(b)))
                    .collect();
                [plain, rooted, block_rooted, mixed]
            })
            .collect();
        let mut sets: [BTreeMap<CanonicalForm, Monomial>; 4] = Default::default();
        for group in per {
            for (set, forms) in sets.iter_mut().zip(group) {
                set.extend(forms);
            }
        }
        Census {
            species,
            n,
            representatives,
            unrooted: tally_forms(&sets[0]),
            rooted: tally_forms(&sets[1]),
            block_rooted: tally_forms(&sets[2]),
            mixed: tally_forms(&sets[3]),
        }
    }

    pub fn unrooted_total(&self) -> u64 {
        total(&self.unrooted)
    }

    pub fn rooted_total(&self) -> u64 {
        total(&self.rooted)
    }

    /// Rooted plus block-rooted equals unrooted plus mixed, monomial by monomial.
    pub fn dissymmetry_holds(&self) -> bool {
        let keys: BTreeSet<&Monomial> = self
            .unrooted
            .keys()
            .chain(self.rooted.keys())
            .chain(self.block_rooted.keys())
            .chain(self.mixed.keys())
            .collect();
        let get = |t: &Tally, k: &Monomial| t.get(k).copied().unwrap_or(0);
        keys.into_iter().all(|k| {
            get(&self.rooted, k) + get(&self.block_rooted, k) == get(&self.unrooted, k) + get(&self.mixed, k)
        })
    }
}

fn to_table(t: &Tally) -> CountTable {
    CountTable::from_rows(t.iter().map(|(m, &c)| (BlockSizeDistribution::from_monomial(m), BigUint::from(c))))
}

/// Number of unlabelled structures of `species` on `n` vertices.
pub fn count_unlabeled(species: Species, n: usize, rooted: bool, config: &OracleConfig) -> Result<BigUint> {
    let c = Census::compute(species, n, config)?;
    Ok(BigUint::from(if rooted { c.rooted_total() } else { c.unrooted_total() }))
}

pub fn count_unlabeled_by_distribution(
    species: Species,
    n: usize,
    rooted: bool,
    config: &OracleConfig,
) -> Result<CountTable> {
    let c = Census::compute(species, n, config)?;
    Ok(to_table(if rooted { &c.rooted } else { &c.unrooted }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::labeled_members;

    fn counts(species: Species, n: usize) -> (Vec<u64>, Vec<u64>) {
        let cfg = OracleConfig::with_limit(9).unwrap();
        let all = Census::up_to(species, n, &cfg).unwrap();
        (
            all.iter().map(Census::unrooted_total).collect(),
            all.iter().map(Census::rooted_total).collect(),
        )
    }

    #[test]
    fn husimi_small() {
        let (h, r) = counts(Species::Husimi, 4);
        assert_eq!(h, [1, 1, 2, 4]);
        assert_eq!(r, [1, 1, 3, 8]);
    }

    #[test]
    fn triangular_small() {
        let (d, r) = counts(Species::Triangular, 7);
        assert_eq!(d, [1, 0, 1, 0, 1, 0, 2]);
        assert_eq!(r, [1, 0, 1, 0, 2, 0, 5]);
    }

    #[test]
    fn oriented_small() {
        let (o, _) = counts(Species::Oriented, 3);
        assert_eq!(o, [1, 1, 2]);
    }

    #[test]
    fn dissymmetry_on_every_species() {
        for s in Species::ALL {
            for c in Census::up_to(s, 6, &OracleConfig::default()).unwrap() {
                assert!(c.dissymmetry_holds(), "{s} n={}", c.n);
            }
        }
    }

    /// Growth must reach every class that exhaustive labelled sweeps find.
    #[test]
    fn growth_matches_exhaustive_classes() {
        let cfg = OracleConfig::default();
        for s in Species::ALL {
            for n in 1..=5 {
                let forms: BTreeSet<CanonicalForm> = labeled_members(s, n, &cfg)
                    .unwrap()
                    .iter()
                    .map(canonical_form_plain)
                    .collect();
                let c = Census::compute(s, n, &cfg).unwrap();
                assert_eq!(c.unrooted_total(), forms.len() as u64, "{s} n={n}");
            }
        }
    }

    #[test]
    fn refuses_beyond_limit() {
        assert!(matches!(
            count_unlabeled(Species::Husimi, 8, false, &OracleConfig::default()),
            Err(Error::OracleLimit { n: 8, limit: 7 })
        ));
    }
}
