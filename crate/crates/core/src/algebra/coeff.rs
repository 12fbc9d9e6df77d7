use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Shorthand for `num / den` as an exact rational.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Commutative ring with a rational scalar action, usable as a series coefficient.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn scale(&self, factor: &Rational) -> Self;

    fn from_rational(r: Rational) -> Self {
        Self::one().scale(&r)
    }

    fn from_int(v: i64) -> Self {
        Self::from_rational(rational(v, 1))
    }

    /// Substitutes `y_i -> y_i^k` for every marker variable. Scalars are fixed.
    fn raise_markers(&self, _k: u32) -> Self {
        self.clone()
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Coeff for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, factor: &Rational) -> Self {
        self * factor
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
}
