//! Exact enumeration of block-structured graphs.
//!
//! Labelled and unlabelled counts of Husimi graphs, cacti, oriented cacti and
//! triangular cacti; a Prüfer-type bijection for labelled Husimi graphs; and
//! the Gaussian-model Mayer cluster sums with the virial expansion. Every
//! closed form and recurrence has a brute-force counterpart in [`oracle`].

pub mod algebra;
pub mod error;
pub mod labeled;
pub mod oracle;
pub mod prufer;
pub mod species;
pub mod unlabeled;
pub mod virial;

pub use algebra::{Coeff, Monomial, Rational, Series, WeightPoly};
pub use error::{Error, Result};
pub use labeled::{BlockSizeDistribution, CountTable};
pub use species::Species;
