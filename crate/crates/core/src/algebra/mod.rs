//! Exact scalars, block-size weight polynomials and truncated power series.
//!
//! Every coefficient in this crate is exact. Series are generic over a
//! [`Coeff`] ring so the same code runs over rationals, over polynomials in the
//! block-size markers `y_2, y_3, ...`, and over the surd ring used by the
//! Gaussian cluster sums.

mod coeff;
mod lagrange;
mod series;
mod weight_poly;

pub use coeff::{rational, Coeff, Rational};
pub use lagrange::{fixed_point_rooted, lagrange_invert};
pub use series::{Series, DEFAULT_ORDER};
pub use weight_poly::{Monomial, WeightPoly};
