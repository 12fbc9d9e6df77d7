//! Closed-form labelled counts of Husimi graphs, cacti and oriented cacti,
//! in total and by block-size distribution.

mod distribution;
mod formulas;
mod table;

pub use distribution::{distributions, BlockSizeDistribution};
pub use formulas::{
    binomial, by_distribution, cacti_by_distribution, cacti_labeled_total, factorial,
    husimi_labeled_by_distribution, husimi_labeled_total, labeled_total,
    oriented_cacti_by_distribution, oriented_cacti_labeled_total, rooted_kernel, stirling2,
    triangular_labeled_total,
};
pub use table::{distribution_table, CountTable};
