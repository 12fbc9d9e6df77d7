//! Unlabelled enumeration through tilde generating functions.
//!
//! Each species is computed twice: by its coefficient recurrence and by
//! iterating its functional equation. The two must agree exactly; a mismatch
//! surfaces as [`Error::InternalConsistency`] rather than being patched over.

mod husimi;
mod oriented;
mod triangular;

use std::collections::BTreeMap;
use std::fmt::Display;

use num_bigint::BigUint;
use num_traits::Signed;

use crate::algebra::{Coeff, Rational, Series};
use crate::error::{Error, Result};

pub use husimi::{husimi, husimi_fixed_point, husimi_recurrence, husimi_rooted, husimi_unrooted, HusimiRecurrence};
pub use oriented::{
    oriented_cacti, oriented_cacti_rooted, oriented_cacti_unrooted, oriented_fixed_point, oriented_recurrence,
    oriented_unrooted_series, OrientedRecurrence,
};
pub use triangular::{
    triangular, triangular_fixed_point, triangular_recurrence, triangular_rooted, triangular_unrooted,
    triangular_unrooted_series,
};

/// Rooted and unrooted series of one species plus the helper series used to
/// build them. All share one truncation order.
#[derive(Clone, Debug, PartialEq)]
pub struct UnlabeledSeriesBundle<C: Coeff> {
    pub rooted: Series<C>,
    pub unrooted: Series<C>,
    pub auxiliaries: BTreeMap<String, Series<C>>,
}

impl<C: Coeff> UnlabeledSeriesBundle<C> {
    pub fn order(&self) -> usize {
        self.rooted.order()
    }
}

/// Euler's totient.
///
/// # Panics
/// If `m == 0`.
pub fn euler_totient(m: u64) -> u64 {
    assert!(m >= 1, "totient is defined for m >= 1");
    let mut result = m;
    let mut rest = m;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

pub(crate) fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |d| n % d == 0)
}

pub(crate) fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::domain("truncation order must be at least 1"));
    }
    Ok(())
}

/// Solves `A = step(A)` for a rooted series `A = x + ...` whose coefficient
/// `n` only depends on lower ones: pass `t` works at order `t` and settles
/// coefficient `t`.
pub(crate) fn iterate_fixed_point<C: Coeff>(
    order: usize,
    step: impl Fn(&Series<C>) -> Result<Series<C>>,
) -> Result<Series<C>> {
    check_order(order)?;
    let mut a = Series::x(1);
    for t in 2..=order {
        let lifted = Series::from_coeffs(t, a.coeffs().to_vec())?;
        a = step(&lifted)?;
    }
    Ok(a)
}

/// Exact coefficientwise comparison of two routes to the same series.
pub fn compare_series<C: Coeff + Display>(check: &str, expected: &Series<C>, found: &Series<C>) -> Result<()> {
    if expected.order() != found.order() {
        return Err(Error::OrderMismatch { left: expected.order(), right: found.order() });
    }
    for i in 0..=expected.order() {
        if expected.coeff(i) != found.coeff(i) {
            return Err(Error::InternalConsistency {
                check: check.to_string(),
                index: i,
                expected: expected.coeff(i).to_string(),
                found: found.coeff(i).to_string(),
            });
        }
    }
    Ok(())
}

/// Coefficients as nonnegative integers; anything else means a broken route.
pub fn integer_counts(check: &str, s: &Series<Rational>) -> Result<Vec<BigUint>> {
    s.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if !c.is_integer() || c.is_negative() {
                return Err(Error::InternalConsistency {
                    check: check.to_string(),
                    index: i,
                    expected: "a nonnegative integer".into(),
                    found: c.to_string(),
                });
            }
            Ok(c.to_integer().to_biguint().expect("nonnegative"))
        })
        .collect()
}
