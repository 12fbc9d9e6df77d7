use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Monomial;
use crate::error::{Error, Result};

/// Number of blocks of each size `i >= 2`.
///
/// The vertex count `n = sum n_i (i - 1) + 1` and block count `k = sum n_i`
/// are derived on demand. The empty distribution is the single vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockSizeDistribution {
    // counts[0] is n_2; trailing zeros trimmed
    counts: Vec<u64>,
}

impl BlockSizeDistribution {
    pub fn single_vertex() -> Self {
        Self::default()
    }

    /// From `(size, count)` pairs; sizes below 2 are rejected.
    pub fn from_sizes<I: IntoIterator<Item = (usize, u64)>>(pairs: I) -> Result<Self> {
        let mut counts: Vec<u64> = Vec::new();
        for (size, count) in pairs {
            if size < 2 {
                return Err(Error::InconsistentDistribution(format!(
                    "block size {size} is below 2"
                )));
            }
            if counts.len() < size - 1 {
                counts.resize(size - 1, 0);
            }
            counts[size - 2] += count;
        }
        Ok(Self::from_vec(counts))
    }

    /// Like [`from_sizes`](Self::from_sizes) but also checks the vertex count.
    pub fn with_vertices<I: IntoIterator<Item = (usize, u64)>>(n: usize, pairs: I) -> Result<Self> {
        let d = Self::from_sizes(pairs)?;
        if d.vertices() != n as u64 {
            return Err(Error::InconsistentDistribution(format!(
                "blocks {d} span {} vertices, not {n}",
                d.vertices()
            )));
        }
        Ok(d)
    }

    fn from_vec(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        BlockSizeDistribution { counts }
    }

    /// Tallies the sizes of a list of blocks.
    pub fn from_block_sizes<I: IntoIterator<Item = usize>>(sizes: I) -> Result<Self> {
        Self::from_sizes(sizes.into_iter().map(|s| (s, 1)))
    }

    pub fn count(&self, size: usize) -> u64 {
        if size < 2 {
            return 0;
        }
        self.counts.get(size - 2).copied().unwrap_or(0)
    }

    /// `(size, n_size)` for every nonzero entry, ascending by size.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i + 2, c))
    }

    pub fn vertices(&self) -> u64 {
        self.iter().map(|(i, c)| c * (i as u64 - 1)).sum::<u64>() + 1
    }

    pub fn blocks(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Blocks of size at least 3 (the polygons with two orientations).
    pub fn polygons(&self) -> u64 {
        self.iter().filter(|&(i, _)| i >= 3).map(|(_, c)| c).sum()
    }

    pub fn max_size(&self) -> usize {
        if self.counts.is_empty() {
            0
        } else {
            self.counts.len() + 1
        }
    }

    /// The weight monomial `prod y_i^{n_i}`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_sizes(self.iter().map(|(i, c)| (i, c as u32)))
    }

    pub fn from_monomial(m: &Monomial) -> Self {
        Self::from_vec(m.exponents().iter().map(|&e| e as u64).collect())
    }

    /// Counts as a map, for serialization.
    pub fn as_map(&self) -> BTreeMap<usize, u64> {
        self.iter().collect()
    }
}

impl fmt::Display for BlockSizeDistribution {
    /// `n2=2,n3=1`; the single vertex prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.iter().map(|(i, c)| format!("n{i}={c}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Every distribution on `n` vertices, i.e. every solution of
/// `sum n_i (i - 1) = n - 1`, lexicographically ascending in `(n_2, n_3, ...)`.
pub fn distributions(n: usize) -> Vec<BlockSizeDistribution> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = vec![0u64; n.saturating_sub(1)];
    fill(2, n - 1, n, &mut current, &mut out);
    out
}

fn fill(size: usize, remaining: usize, n: usize, current: &mut Vec<u64>, out: &mut Vec<BlockSizeDistribution>) {
    if size > n {
        if remaining == 0 {
            out.push(BlockSizeDistribution::from_vec(current.clone()));
        }
        return;
    }
    let step = size - 1;
    for c in 0..=remaining / step {
        current[size - 2] = c as u64;
        fill(size + 1, remaining - c * step, n, current, out);
    }
    current[size - 2] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let d = BlockSizeDistribution::from_sizes([(2, 1), (3, 1)]).unwrap();
        assert_eq!(d.vertices(), 4);
        assert_eq!(d.blocks(), 2);
        assert_eq!(d.polygons(), 1);
        assert_eq!(d.to_string(), "n2=1,n3=1");
        assert_eq!(BlockSizeDistribution::single_vertex().vertices(), 1);
    }

    #[test]
    fn inconsistent_inputs_fail() {
        assert!(BlockSizeDistribution::from_sizes([(1, 2)]).is_err());
        assert!(BlockSizeDistribution::with_vertices(5, [(3, 1)]).is_err());
        assert!(BlockSizeDistribution::with_vertices(3, [(3, 1)]).is_ok());
    }

    #[test]
    fn distributions_of_three_and_four() {
        let d3: Vec<String> = distributions(3).iter().map(|d| d.to_string()).collect();
        assert_eq!(d3, ["n3=1", "n2=2"]);
        let d4: Vec<String> = distributions(4).iter().map(|d| d.to_string()).collect();
        assert_eq!(d4, ["n4=1", "n2=1,n3=1", "n2=3"]);
        assert_eq!(distributions(1), vec![BlockSizeDistribution::single_vertex()]);
    }

    #[test]
    fn distribution_counts_are_partition_numbers() {
        // solutions of sum n_i (i-1) = n-1 are partitions of n-1
        let p = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30];
        for (m, &expected) in p.iter().enumerate() {
            assert_eq!(distributions(m + 1).len(), expected);
        }
    }

    #[test]
    fn monomial_round_trip() {
        let d = BlockSizeDistribution::from_sizes([(2, 3), (5, 1)]).unwrap();
        assert_eq!(BlockSizeDistribution::from_monomial(&d.monomial()), d);
    }
}
