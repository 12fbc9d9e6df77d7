use std::collections::BTreeMap;

use super::{check_order, compare_series, divisors, iterate_fixed_point, UnlabeledSeriesBundle};
use crate::algebra::{rational, Rational, Series};
use crate::error::Result;

/// Rooted counts `D_n` and the helper `b_m` from the coefficient recurrence.
/// `D_0 = 0`, so the `j = d` term of the inner sum vanishes.
pub fn triangular_recurrence(order: usize) -> Result<(Series<Rational>, Series<Rational>)> {
    check_order(order)?;
    let zero = rational(0, 1);
    let mut d = vec![zero.clone(); order + 1];
    let mut b = vec![zero.clone(); order + 1];
    d[1] = rational(1, 1);
    for n in 1..=order {
        let m = n;
        let mut bm = zero.clone();
        for dv in divisors(m) {
            if dv >= 2 {
                for j in 1..=dv {
                    bm += rational(j as i64, 1) * &d[dv - j] * &d[j];
                }
            }
            if dv % 2 == 0 {
                bm += rational((dv / 2) as i64, 1) * &d[dv / 2];
            }
        }
        b[m] = bm;
        if n == order {
            break;
        }
        let mut acc = zero.clone();
        for m in 1..=n {
            acc += &d[n - m + 1] * &b[m];
        }
        d[n + 1] = acc * rational(1, n as i64);
    }
    Ok((Series::from_coeffs(order, d)?, Series::from_coeffs(order, b)?))
}

/// Iterates `D = x exp(sum_k (D(x^k)^2 + D(x^{2k})) / 2k)`.
pub fn triangular_fixed_point(order: usize) -> Result<Series<Rational>> {
    iterate_fixed_point(order, |a| {
        let t = a.order();
        let sq = a.mul(a)?;
        let mut sum = Series::zero(t);
        for k in 1..=t {
            let term = sq.plethysm(k).add(&a.plethysm(2 * k))?;
            sum = sum.add(&term.scale(&rational(1, 2 * k as i64)))?;
        }
        Series::x(t).mul(&sum.exp()?)
    })
}

/// Unrooted counts `d_n` from rooted ones, coefficient by coefficient.
pub fn triangular_unrooted(rooted: &Series<Rational>) -> Series<Rational> {
    let n_max = rooted.order();
    let d = rooted.coeffs();
    let mut out = Series::zero(n_max);
    for n in 1..=n_max {
        let mut triple = rational(0, 1);
        for i in 1..n {
            for j in 1..n - i {
                triple += &d[i] * &d[j] * &d[n - i - j];
            }
        }
        let third = if n % 3 == 0 { d[n / 3].clone() } else { rational(0, 1) };
        out.set_coeff(n, &d[n] + (third - triple) * rational(1, 3));
    }
    out
}

/// Unrooted series `D + (D(x^3) - D^3) / 3`.
pub fn triangular_unrooted_series(rooted: &Series<Rational>) -> Result<Series<Rational>> {
    let cube = rooted.pow(3);
    rooted.add(&rooted.plethysm(3).sub(&cube)?.scale(&rational(1, 3)))
}

/// Both routes, checked against each other.
pub fn triangular(order: usize) -> Result<UnlabeledSeriesBundle<Rational>> {
    let (rooted, b) = triangular_recurrence(order)?;
    compare_series("triangular rooted: recurrence vs functional equation", &triangular_fixed_point(order)?, &rooted)?;
    let unrooted = triangular_unrooted(&rooted);
    compare_series("triangular unrooted: coefficients vs series", &triangular_unrooted_series(&rooted)?, &unrooted)?;
    Ok(UnlabeledSeriesBundle {
        rooted,
        unrooted,
        auxiliaries: BTreeMap::from([("b".to_string(), b)]),
    })
}

pub fn triangular_rooted(order: usize) -> Result<Series<Rational>> {
    Ok(triangular(order)?.rooted)
}
