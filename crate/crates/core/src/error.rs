use thiserror::Error;

/// Errors raised by the enumeration library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("inconsistent block-size distribution: {0}")]
    InconsistentDistribution(String),

    #[error("invalid Husimi structure: {0}")]
    Structure(String),

    #[error("cannot decode code: {0}")]
    Decode(String),

    #[error("n = {n} exceeds the oracle limit of {limit}")]
    OracleLimit { n: usize, limit: usize },

    /// Two independent computations of the same quantity disagree.
    #[error("internal consistency failure in {check} at index {index}: expected {expected}, found {found}")]
    InternalConsistency {
        check: String,
        index: usize,
        expected: String,
        found: String,
    },

    #[error("precision of {requested} digits is not achievable (max {max})")]
    Precision { requested: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
