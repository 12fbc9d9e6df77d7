use std::collections::BTreeMap;

use super::{check_order, compare_series, divisors, iterate_fixed_point, UnlabeledSeriesBundle};
use crate::algebra::{rational, Rational, Series};
use crate::error::Result;

/// Output of the rooted Husimi recurrence: `H`, the helper `phi` and `b`.
#[derive(Clone, Debug, PartialEq)]
pub struct HusimiRecurrence {
    pub rooted: Series<Rational>,
    pub phi: Series<Rational>,
    pub b: Series<Rational>,
}

fn truncated(s: &Series<Rational>, order: usize) -> Result<Series<Rational>> {
    Series::from_coeffs(order, s.coeffs()[..=order].to_vec())
}

/// Runs the three interleaved recurrences for `b_n`, `H_{n+1}` and `phi_{n+1}`.
///
/// The triple sum for `b_n` is taken exactly as written: `l` runs over the
/// divisors of `d - h + 1`.
pub fn husimi_recurrence(order: usize) -> Result<HusimiRecurrence> {
    check_order(order)?;
    let zero = rational(0, 1);
    let mut h = vec![zero.clone(); order + 1];
    let mut phi = vec![zero.clone(); order + 1];
    let mut b = vec![zero.clone(); order + 1];
    h[1] = rational(1, 1);
    phi[1] = rational(1, 1);
    for n in 1..=order {
        let mut bn = zero.clone();
        for d in divisors(n) {
            for hh in 1..=d {
                for l in divisors(d - hh + 1) {
                    bn += rational(l as i64, 1) * &h[l] * &phi[hh];
                }
            }
        }
        b[n] = bn;
        if n == order {
            break;
        }
        let inv = rational(1, n as i64);
        let mut hn = zero.clone();
        let mut pn = zero.clone();
        for k in 1..=n {
            hn += &h[n - k + 1] * &b[k];
            let dsum: Rational = divisors(k).map(|d| rational(d as i64, 1) * &h[d]).sum();
            pn += &phi[n - k + 1] * dsum;
        }
        h[n + 1] = hn * &inv;
        phi[n + 1] = pn * inv;
    }
    Ok(HusimiRecurrence {
        rooted: Series::from_coeffs(order, h)?,
        phi: Series::from_coeffs(order, phi)?,
        b: Series::from_coeffs(order, b)?,
    })
}

/// Iterates `H = x exp(sum_k (exp(sum_m H(x^{mk}) / m) - 1) / k)`.
pub fn husimi_fixed_point(order: usize) -> Result<Series<Rational>> {
    iterate_fixed_point(order, |a| {
        let t = a.order();
        let one = Series::one(t);
        let mut outer = Series::zero(t);
        for k in 1..=t {
            let mut inner = Series::zero(t);
            for m in 1..=t / k {
                inner = inner.add(&a.plethysm(m * k).scale(&rational(1, m as i64)))?;
            }
            outer = outer.add(&inner.exp()?.sub(&one)?.scale(&rational(1, k as i64)))?;
        }
        Series::x(t).mul(&outer.exp()?)
    })
}

/// Unrooted counts `h_n = phi_{n+1} - sum_{k<n} phi_{k+1} H_{n-k}`. The result
/// is one order shorter than the recurrence, since `h_n` needs `phi_{n+1}`.
pub fn husimi_unrooted(rec: &HusimiRecurrence) -> Result<Series<Rational>> {
    let order = rec.rooted.order() - 1;
    let (h, phi) = (rec.rooted.coeffs(), rec.phi.coeffs());
    let mut out = Series::zero(order);
    for n in 1..=order {
        let mut c = phi[n + 1].clone();
        for k in 1..n {
            c -= &phi[k + 1] * &h[n - k];
        }
        out.set_coeff(n, c);
    }
    Ok(out)
}

/// Unrooted series `(exp(sum_k H(x^k) / k) - 1)(1 - H)`.
fn husimi_unrooted_series(rooted: &Series<Rational>) -> Result<Series<Rational>> {
    let t = rooted.order();
    let mut sum = Series::zero(t);
    for k in 1..=t {
        sum = sum.add(&rooted.plethysm(k).scale(&rational(1, k as i64)))?;
    }
    let one = Series::one(t);
    sum.exp()?.sub(&one)?.mul(&one.sub(rooted)?)
}

/// Both routes, checked against each other.
pub fn husimi(order: usize) -> Result<UnlabeledSeriesBundle<Rational>> {
    check_order(order)?;
    let rec = husimi_recurrence(order + 1)?;
    compare_series("husimi rooted: recurrence vs functional equation", &husimi_fixed_point(order + 1)?, &rec.rooted)?;
    let rooted = truncated(&rec.rooted, order)?;
    let unrooted = husimi_unrooted(&rec)?;
    compare_series("husimi unrooted: coefficients vs series", &husimi_unrooted_series(&rooted)?, &unrooted)?;
    Ok(UnlabeledSeriesBundle {
        rooted,
        unrooted,
        auxiliaries: BTreeMap::from([
            ("b".to_string(), truncated(&rec.b, order)?),
            ("phi".to_string(), truncated(&rec.phi, order)?),
        ]),
    })
}

pub fn husimi_rooted(order: usize) -> Result<Series<Rational>> {
    Ok(husimi(order)?.rooted)
}
