use std::collections::BTreeMap;

use super::{check_order, compare_series, divisors, euler_totient, iterate_fixed_point, UnlabeledSeriesBundle};
use crate::algebra::{rational, Coeff, Series, WeightPoly};
use crate::error::Result;

/// Output of the rooted oriented-cactus recurrence.
#[derive(Clone, Debug, PartialEq)]
pub struct OrientedRecurrence {
    pub rooted: Series<WeightPoly>,
    pub b: Series<WeightPoly>,
    /// `powers[j][n]` is `[x^n] O^j`, for `0 <= j, n <= order`.
    pub powers: Vec<Vec<WeightPoly>>,
}

/// `y_size`, with `y_1 = 1`.
fn weight(size: usize) -> WeightPoly {
    if size == 1 {
        WeightPoly::one()
    } else {
        WeightPoly::marker(size)
    }
}

fn int(v: usize) -> crate::algebra::Rational {
    rational(v as i64, 1)
}

/// Runs the recurrence for `O_{n+1}(y)` with helper `b_m(y)`, keeping the
/// power table `O^{(j)}_n` up to date. `O^{(0)}_0 = 1` and `O^{(0)}_n = 0`
/// otherwise, which the `d - i = 0` terms of `b_m` rely on.
pub fn oriented_recurrence(order: usize) -> Result<OrientedRecurrence> {
    check_order(order)?;
    let zero = WeightPoly::zero();
    let mut o = vec![zero.clone(); order + 1];
    let mut b = vec![zero.clone(); order + 1];
    let mut powers = vec![vec![zero.clone(); order + 1]; order + 1];
    powers[0][0] = WeightPoly::one();
    o[1] = WeightPoly::one();
    let update_powers = |powers: &mut Vec<Vec<WeightPoly>>, o: &[WeightPoly], n: usize| {
        for j in 1..=order {
            let mut acc = WeightPoly::zero();
            for i in 1..=n {
                if !powers[j - 1][n - i].is_zero() {
                    acc = acc.plus(&o[i].times(&powers[j - 1][n - i]));
                }
            }
            powers[j][n] = acc;
        }
    };
    update_powers(&mut powers, &o, 1);
    for n in 1..=order {
        let mut bm = WeightPoly::zero();
        let m = n;
        for d in divisors(m) {
            let k = (m / d) as u32;
            for i in 1..=d {
                for j in 1..=d - i + 1 {
                    let p = &powers[j - 1][d - i];
                    if p.is_zero() || o[i].is_zero() {
                        continue;
                    }
                    let term = weight(j + 1).times(&o[i]).times(p).raise_markers(k);
                    bm = bm.plus(&term.scale(&int(i * j)));
                }
            }
        }
        b[m] = bm;
        if n == order {
            break;
        }
        let mut acc = WeightPoly::zero();
        for m in 1..=n {
            acc = acc.plus(&o[n - m + 1].times(&b[m]));
        }
        o[n + 1] = acc.scale(&rational(1, n as i64));
        update_powers(&mut powers, &o, n + 1);
    }
    Ok(OrientedRecurrence {
        rooted: Series::from_coeffs(order, o)?,
        b: Series::from_coeffs(order, b)?,
        powers,
    })
}

/// Iterates `O = x exp(sum_k (1/k) sum_j y_{j+1}^k O^j(x^k; y^k))`.
pub fn oriented_fixed_point(order: usize) -> Result<Series<WeightPoly>> {
    let fixed = iterate_fixed_point(order, |a| {
        let t = a.order();
        // S = sum_j y_{j+1} O^j; its plethysm raises the y_{j+1} factor as well.
        let mut s = Series::zero(t);
        let mut power = Series::one(t);
        for j in 1..=t {
            power = power.mul(a)?;
            s = s.add(&power.times_coeff(&weight(j + 1)))?;
        }
        let mut sum = Series::zero(t);
        for k in 1..=t {
            sum = sum.add(&s.plethysm(k).scale(&rational(1, k as i64)))?;
        }
        Ok(Series::x(t).mul(&sum.exp()?)?.map(|c| c.truncate_markers(t)))
    })?;
    Ok(fixed)
}

/// Unrooted polynomials `o_n(y)` from the rooted ones and their powers.
/// The outer cycle weight `y_{dh}` is not raised; only the inner `O` is.
pub fn oriented_cacti_unrooted(rec: &OrientedRecurrence) -> Series<WeightPoly> {
    let order = rec.rooted.order();
    let mut out = Series::zero(order);
    for n in 1..=order {
        let mut c = WeightPoly::zero();
        for d in divisors(n) {
            let q = n / d;
            let phi = int(euler_totient(d as u64) as usize);
            for h in 1..=q {
                let p = &rec.powers[h][q];
                if p.is_zero() {
                    continue;
                }
                let term = weight(d * h).times(&p.raise_markers(d as u32));
                c = c.plus(&term.scale(&(phi.clone() * rational(1, (d * h) as i64))));
            }
        }
        for m in 2..=n {
            c = c.minus(&weight(m).times(&rec.powers[m][n]));
        }
        out.set_coeff(n, c);
    }
    out
}

/// Unrooted series `sum_d phi(d) sum_h y_{dh}/(dh) O^h(x^d; y^d) - sum_{m>=2} y_m O^m`.
pub fn oriented_unrooted_series(rooted: &Series<WeightPoly>) -> Result<Series<WeightPoly>> {
    let t = rooted.order();
    let mut powers = vec![Series::one(t)];
    for j in 1..=t {
        powers.push(powers[j - 1].mul(rooted)?);
    }
    let mut out = Series::zero(t);
    for d in 1..=t {
        let phi = int(euler_totient(d as u64) as usize);
        for h in 1..=t / d {
            let inner = powers[h].plethysm(d).times_coeff(&weight(d * h));
            out = out.add(&inner.scale(&(phi.clone() * rational(1, (d * h) as i64))))?;
        }
    }
    for m in 2..=t {
        out = out.sub(&powers[m].times_coeff(&weight(m)))?;
    }
    Ok(out)
}

/// Both routes, checked against each other.
pub fn oriented_cacti(order: usize) -> Result<UnlabeledSeriesBundle<WeightPoly>> {
    let rec = oriented_recurrence(order)?;
    compare_series("oriented rooted: recurrence vs functional equation", &oriented_fixed_point(order)?, &rec.rooted)?;
    let unrooted = oriented_cacti_unrooted(&rec);
    compare_series("oriented unrooted: coefficients vs series", &oriented_unrooted_series(&rec.rooted)?, &unrooted)?;
    let mut auxiliaries = BTreeMap::from([("b".to_string(), rec.b.clone())]);
    for j in 1..=order {
        auxiliaries.insert(format!("O^{j}"), Series::from_coeffs(order, rec.powers[j].clone())?);
    }
    Ok(UnlabeledSeriesBundle { rooted: rec.rooted, unrooted, auxiliaries })
}

pub fn oriented_cacti_rooted(order: usize) -> Result<Series<WeightPoly>> {
    Ok(oriented_cacti(order)?.rooted)
}
