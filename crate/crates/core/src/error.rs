use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A distribution or coupling could not be built from the given data.
    #[error("construction error: {0}")]
    Construction(String),

    /// An argument fell outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A required hypothesis (such as a moment assertion) was not satisfied.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An integral did not converge, or its tail does not vanish.
    #[error("divergent integral: {0}")]
    Divergence(String),

    /// A hard size guard was exceeded; nothing is ever truncated silently.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A bivariate function assigned negative mass to some rectangle.
    #[error("invalid joint distribution: {0}")]
    InvalidJoint(String),

    /// The transport solver could not certify its result with dual potentials.
    #[error("optimality certificate failed: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
