use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::distribution::{distributions, BlockSizeDistribution};
use crate::algebra::{rational, Rational, Series};
use crate::species::Species;

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Stirling number of the second kind, `S(0, 0) = 1`.
pub fn stirling2(m: u64, k: u64) -> BigUint {
    if k > m {
        return BigUint::zero();
    }
    // row-by-row recurrence S(i, j) = j S(i-1, j) + S(i-1, j-1)
    let mut row = vec![BigUint::zero(); k as usize + 1];
    row[0] = BigUint::one();
    for _ in 1..=m {
        for j in (1..=k as usize).rev() {
            row[j] = &row[j] * j as u64 + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[k as usize].clone()
}

fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "count formula produced a non-integer");
    q
}

/// `(n-1)! n^(k-1)` with the single-vertex value 1.
fn leading_factor(d: &BlockSizeDistribution) -> BigUint {
    let k = d.blocks();
    if k == 0 {
        return BigUint::one();
    }
    let n = d.vertices();
    factorial(n - 1) * BigUint::from(n).pow((k - 1) as u32)
}

/// Labelled Husimi graphs on `[n]` with the given block sizes.
pub fn husimi_labeled_by_distribution(d: &BlockSizeDistribution) -> BigUint {
    let den = d.iter().fold(BigUint::one(), |acc, (i, c)| {
        acc * factorial(i as u64 - 1).pow(c as u32) * factorial(c)
    });
    exact_div(leading_factor(d), &den)
}

/// Labelled oriented cacti with `n_i` directed cycles of length `i`.
pub fn oriented_cacti_by_distribution(d: &BlockSizeDistribution) -> BigUint {
    let den = d.iter().fold(BigUint::one(), |acc, (_, c)| acc * factorial(c));
    exact_div(leading_factor(d), &den)
}

/// Labelled cacti with `n_i` polygons of size `i`.
pub fn cacti_by_distribution(d: &BlockSizeDistribution) -> BigUint {
    let den = BigUint::from(2u32).pow(d.polygons() as u32);
    exact_div(oriented_cacti_by_distribution(d), &den)
}

/// Per-distribution count for any species; zero when the species forbids a block size.
pub fn by_distribution(species: Species, d: &BlockSizeDistribution) -> BigUint {
    if !d.iter().all(|(i, _)| species.allows_block_size(i)) {
        return BigUint::zero();
    }
    match species {
        Species::Husimi | Species::Triangular => husimi_labeled_by_distribution(d),
        Species::Cacti => cacti_by_distribution(d),
        Species::Oriented => oriented_cacti_by_distribution(d),
    }
}

/// `H_n = sum_k S(n-1, k) n^(k-1)`.
pub fn husimi_labeled_total(n: u64) -> BigUint {
    assert!(n >= 1, "n must be positive");
    if n == 1 {
        return BigUint::one();
    }
    (1..n)
        .map(|k| stirling2(n - 1, k) * BigUint::from(n).pow(k as u32 - 1))
        .sum()
}

/// `Oc_n = sum_k (n-1)!/k! C(n-2, k-1) n^(k-1)`, with `Oc_1 = 1`.
pub fn oriented_cacti_labeled_total(n: u64) -> BigUint {
    assert!(n >= 1, "n must be positive");
    if n == 1 {
        return BigUint::one();
    }
    (1..n)
        .map(|k| {
            let lah = exact_div(factorial(n - 1) * binomial(n - 2, k - 1), &factorial(k));
            lah * BigUint::from(n).pow(k as u32 - 1)
        })
        .sum()
}

/// Sum of the per-distribution cactus counts.
pub fn cacti_labeled_total(n: u64) -> BigUint {
    assert!(n >= 1, "n must be positive");
    distributions(n as usize).iter().map(cacti_by_distribution).sum()
}

/// Triangular cacti: Husimi graphs whose blocks are all triangles.
pub fn triangular_labeled_total(n: u64) -> BigUint {
    assert!(n >= 1, "n must be positive");
    if n % 2 == 0 {
        return BigUint::zero();
    }
    let d = BlockSizeDistribution::from_sizes([(3, (n - 1) / 2)]).expect("valid size");
    husimi_labeled_by_distribution(&d)
}

pub fn labeled_total(species: Species, n: u64) -> BigUint {
    match species {
        Species::Husimi => husimi_labeled_total(n),
        Species::Cacti => cacti_labeled_total(n),
        Species::Oriented => oriented_cacti_labeled_total(n),
        Species::Triangular => triangular_labeled_total(n),
    }
}

/// `R(t) = exp(B'(t))` such that the rooted EGF satisfies `A = x R(A)`.
///
/// `B'` is the derivative species of the blocks: `e^t - 1` for complete
/// graphs, `t/(1-t)` for directed cycles, `t + t^2/(2(1-t))` for polygons
/// and `t^2/2` for triangles.
pub fn rooted_kernel(species: Species, order: usize) -> Series<Rational> {
    let mut derived = Series::<Rational>::zero(order);
    for m in 1..=order {
        let c = match species {
            // e^t - 1
            Species::Husimi => Rational::new(BigInt::one(), BigInt::from(factorial(m as u64))),
            Species::Oriented => Rational::one(),
            // edges contribute t, polygons of size m+1 contribute t^m / 2
            Species::Cacti if m == 1 => Rational::one(),
            Species::Cacti => rational(1, 2),
            Species::Triangular if m == 2 => rational(1, 2),
            Species::Triangular => Rational::zero(),
        };
        derived.set_coeff(m, c);
    }
    derived.exp().expect("zero constant term")
}
