use thiserror::Error;

/// Errors produced by validation, enumeration bounds, and the verification oracle.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("malformed bijection: {0}")]
    MalformedBijection(String),

    #[error("tableaux have overlapping entry sets")]
    OverlappingEntries,

    #[error("invalid parameter graph: {0}")]
    InvalidGraph(String),

    #[error("not a rank matrix: {0}")]
    NotARankMatrix(String),

    #[error("parameters live on different (p, q, r)")]
    MismatchedParameters,

    #[error("size exceeds enumeration bound: {0}")]
    BoundExceeded(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("inconsistent column counts: {0}")]
    InconsistentCounts(String),

    #[error("bijectivity violation: {0}")]
    BijectivityViolation(String),

    #[error("genericity failure: sampled types stayed incomparable after {retries} retries")]
    GenericityFailure { retries: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
