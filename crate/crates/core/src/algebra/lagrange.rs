use super::coeff::{rational, Coeff, Rational};
use super::series::Series;
use crate::error::{Error, Result};

/// `[x^n] A(x)` where `A = x R(A)`, via `(1/n) [t^(n-1)] R(t)^n`.
pub fn lagrange_invert(r: &Series<Rational>, n: usize) -> Result<Rational> {
    if Coeff::is_zero(r.coeff(0)) {
        return Err(Error::domain("Lagrange inversion needs R(0) != 0"));
    }
    if n == 0 || n > r.order() {
        return Err(Error::domain(format!(
            "coefficient index {n} outside 1..={}",
            r.order()
        )));
    }
    let power = r.pow(n);
    Ok(power.coeff(n - 1) * rational(1, n as i64))
}

/// Solves `A = x R(A)` by iterating from `A = x`; coefficient `n` is exact
/// after `n` passes.
pub fn fixed_point_rooted<C: Coeff>(r: &Series<C>) -> Result<Series<C>> {
    let order = r.order();
    let x = Series::x(order);
    let mut a = x.clone();
    for _ in 0..order {
        a = x.mul(&r.compose(&a)?)?;
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_trees_follow_cayley() {
        // R = e^t: [x^n]A = n^(n-1)/n!
        let r = Series::<Rational>::x(8).exp().unwrap();
        assert_eq!(lagrange_invert(&r, 3).unwrap(), rational(3, 2));
        assert_eq!(lagrange_invert(&r, 5).unwrap(), rational(625, 120));
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let r = Series::<Rational>::x(4);
        assert!(matches!(lagrange_invert(&r, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn agrees_with_fixed_point() {
        let n = 9;
        let r = Series::<Rational>::x(n).exp().unwrap();
        let a = fixed_point_rooted(&r).unwrap();
        for k in 1..=n {
            assert_eq!(&lagrange_invert(&r, k).unwrap(), a.coeff(k));
        }
    }
}
