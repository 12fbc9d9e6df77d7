use std::fmt;

use super::coeff::{rational, Coeff, Rational};
use crate::error::{Error, Result};

/// Truncation order used when the caller does not pick one.
pub const DEFAULT_ORDER: usize = 12;

/// Power series in `x` truncated after `x^order`.
///
/// Binary operations require equal orders and return
/// [`Error::OrderMismatch`] otherwise.
#[derive(Clone, PartialEq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Series<C> {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, C::one())
    }

    pub fn constant(order: usize, c: C) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(order, 1, C::one())
    }

    /// `c * x^power`, or zero when `power > order`.
    pub fn monomial(order: usize, power: usize, c: C) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Builds a series from leading coefficients, padding with zeros.
    pub fn from_coeffs(order: usize, coeffs: Vec<C>) -> Result<Self> {
        if coeffs.len() > order + 1 {
            return Err(Error::domain(format!(
                "{} coefficients do not fit truncation order {order}",
                coeffs.len()
            )));
        }
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, C::zero());
        Ok(Series { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, i: usize, c: C) {
        self.coeffs[i] = c;
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.minus(b)).collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Ok(Series { coeffs: out })
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        self.map(|c| c.scale(factor))
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn times_coeff(&self, c: &C) -> Self {
        self.map(|a| a.times(c))
    }

    pub fn neg(&self) -> Self {
        self.scale(&rational(-1, 1))
    }

    pub fn map(&self, f: impl Fn(&C) -> C) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn pow(&self, j: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..j {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// `x * d/dx`, i.e. coefficient `n` becomes `n * c_n`.
    pub fn x_derivative(&self) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.scale(&rational(n as i64, 1)))
                .collect(),
        }
    }

    /// `d/dx`, padding the top coefficient with zero.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut coeffs: Vec<C> = (1..=n)
            .map(|i| self.coeffs[i].scale(&rational(i as i64, 1)))
            .collect();
        coeffs.push(C::zero());
        Series { coeffs }
    }

    /// Divides by `x`; requires a zero constant term. The top coefficient becomes zero.
    pub fn divide_by_x(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain("cannot divide by x: nonzero constant term"));
        }
        let mut coeffs = self.coeffs[1..].to_vec();
        coeffs.push(C::zero());
        Ok(Series { coeffs })
    }

    /// `exp(self)`, computed from `f' = a' f`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain("exp requires a zero constant term"));
        }
        let n = self.order();
        let mut f = vec![C::zero(); n + 1];
        f[0] = C::one();
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc.plus(&self.coeffs[k].times(&f[m - k]).scale(&rational(k as i64, 1)));
            }
            f[m] = acc.scale(&rational(1, m as i64));
        }
        Ok(Series { coeffs: f })
    }

    /// `log(self)` for a series with constant term exactly one.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::domain("log requires constant term 1"));
        }
        let n = self.order();
        let mut g = vec![C::zero(); n + 1];
        for m in 1..=n {
            let mut acc = self.coeffs[m].scale(&rational(m as i64, 1));
            for k in 1..m {
                acc = acc.minus(&g[k].times(&self.coeffs[m - k]).scale(&rational(k as i64, 1)));
            }
            g[m] = acc.scale(&rational(1, m as i64));
        }
        Ok(Series { coeffs: g })
    }

    /// `self(g(x))` by Horner evaluation; `g` must have zero constant term.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.check_order(g)?;
        if !g.coeffs[0].is_zero() {
            return Err(Error::domain("composition requires inner series with zero constant term"));
        }
        let n = self.order();
        let mut acc = Self::constant(n, self.coeffs[n].clone());
        for i in (0..n).rev() {
            acc = acc.mul(g)?;
            acc.coeffs[0] = acc.coeffs[0].plus(&self.coeffs[i]);
        }
        Ok(acc)
    }

    /// `self(x^k)` with every marker raised, `y_i -> y_i^k`.
    ///
    /// # Panics
    /// If `k == 0`.
    pub fn plethysm(&self, k: usize) -> Self {
        assert!(k >= 1, "plethystic substitution needs k >= 1");
        let n = self.order();
        let mut out = Self::zero(n);
        for (m, c) in self.coeffs.iter().enumerate() {
            if m * k > n {
                break;
            }
            out.coeffs[m * k] = c.raise_markers(k as u32);
        }
        out
    }

    /// Compositional inverse of a series `x + a_2 x^2 + ...`.
    pub fn revert(&self) -> Result<Self> {
        let n = self.order();
        if !self.coeffs[0].is_zero() || n == 0 || !self.coeffs[1].is_one() {
            return Err(Error::domain("reversion requires the form x + O(x^2)"));
        }
        // g = x - h(g) with h = self - x; each pass fixes one more coefficient.
        let x = Self::x(n);
        let h = self.sub(&x)?;
        let mut g = x.clone();
        for _ in 0..n {
            g = x.sub(&h.compose(&g)?)?;
        }
        Ok(g)
    }
}

impl<C: Coeff> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}
