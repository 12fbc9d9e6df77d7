use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::oracle::LabeledGraph;

/// Number of spanning trees, as the determinant of the Laplacian with its last
/// row and column removed. Zero for disconnected graphs.
pub fn spanning_tree_count(g: &LabeledGraph) -> BigUint {
    let n = g.vertices();
    if n <= 1 {
        return BigUint::from(n as u32);
    }
    if !g.is_connected() {
        return BigUint::zero();
    }
    let m = n - 1;
    let mut a: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i == j {
                        BigInt::from(g.degree(i))
                    } else if g.has_edge(i, j) {
                        -BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    bareiss_determinant(&mut a).to_biguint().expect("Laplacian minors are nonnegative")
}

/// Fraction-free Gaussian elimination; every division is exact.
fn bareiss_determinant(a: &mut [Vec<BigInt>]) -> BigInt {
    let m = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..m {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..m).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[m - 1][m - 1]
}
