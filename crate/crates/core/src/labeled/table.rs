use num_bigint::BigUint;
use num_traits::Zero;

use super::distribution::{distributions, BlockSizeDistribution};
use super::formulas::by_distribution;
use crate::species::Species;

/// Counts keyed by block-size distribution, in lexicographic distribution order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    rows: Vec<(BlockSizeDistribution, BigUint)>,
}

impl CountTable {
    /// Sorts rows, merges duplicates and drops zero counts.
    pub fn from_rows<I: IntoIterator<Item = (BlockSizeDistribution, BigUint)>>(rows: I) -> Self {
        let mut merged: std::collections::BTreeMap<BlockSizeDistribution, BigUint> = Default::default();
        for (d, c) in rows {
            *merged.entry(d).or_default() += c;
        }
        CountTable {
            rows: merged.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn rows(&self) -> &[(BlockSizeDistribution, BigUint)] {
        &self.rows
    }

    pub fn get(&self, d: &BlockSizeDistribution) -> BigUint {
        self.rows
            .iter()
            .find(|(k, _)| k == d)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.rows.iter().map(|(_, c)| c).sum()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// One row per admissible distribution on `n` vertices, from the closed forms.
pub fn distribution_table(species: Species, n: usize) -> CountTable {
    assert!(n >= 1, "n must be positive");
    CountTable::from_rows(
        distributions(n)
            .into_iter()
            .map(|d| {
                let c = by_distribution(species, &d);
                (d, c)
            }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(t: &CountTable) -> Vec<(String, u64)> {
        t.rows()
            .iter()
            .map(|(d, c)| (d.to_string(), c.to_string().parse().unwrap()))
            .collect()
    }

    #[test]
    fn husimi_three() {
        let t = distribution_table(Species::Husimi, 3);
        assert_eq!(rows(&t), [("n3=1".to_string(), 1), ("n2=2".to_string(), 3)]);
    }

    #[test]
    fn oriented_three() {
        let t = distribution_table(Species::Oriented, 3);
        assert_eq!(rows(&t), [("n3=1".to_string(), 2), ("n2=2".to_string(), 3)]);
        assert_eq!(t.total(), BigUint::from(5u32));
    }

    #[test]
    fn single_vertex_row() {
        for species in Species::ALL {
            let t = distribution_table(species, 1);
            assert_eq!(rows(&t), [("-".to_string(), 1)]);
        }
    }

    #[test]
    fn triangular_rows_only_hold_triangles() {
        let t = distribution_table(Species::Triangular, 7);
        assert_eq!(t.len(), 1);
        assert_eq!(t.rows()[0].0.count(3), 3);
        assert!(distribution_table(Species::Triangular, 4).is_empty());
    }
}
