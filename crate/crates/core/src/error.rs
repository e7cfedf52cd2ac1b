//! Error type shared across the crate.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("polynomial is not bihomogeneous")]
    NotBihomogeneous,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("zero ideal not allowed here")]
    ZeroIdeal,
    #[error("coordinate change matrix is singular")]
    SingularMatrix,
    #[error("generators must all be nonzero and share one degree in the x-variables")]
    UnequalDegrees,
    #[error("too many generators for the Taylor complex: {0} (limit {1})")]
    TooManyGenerators(usize, usize),
    #[error("Betti table is incomplete in the requested region")]
    IncompleteTable,
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("randomized trials disagree: {0}")]
    Consensus(String),
    #[error("almost-regular retries exhausted (field too small or degenerate input)")]
    RetriesExhausted,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
