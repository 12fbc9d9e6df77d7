use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use super::labeled::labeled_members;
use super::OracleConfig;
use crate::error::Result;
use crate::labeled::factorial;
use crate::species::Species;

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { return out };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Unlabelled count as the average number of labelled structures fixed by a
/// permutation of the vertex set. Uses no canonical forms.
pub fn burnside_count(species: Species, n: usize, config: &OracleConfig) -> Result<BigUint> {
    let members = labeled_members(species, n, config)?;
    let fixed: u64 = permutations(n)
        .par_iter()
        .map(|p| members.iter().filter(|g| g.permuted(p) == **g).count() as u64)
        .sum();
    let total = BigUint::from(fixed);
    let group = factorial(n as u64);
    debug_assert!((&total % &group).is_zero());
    Ok(total / group)
}
