use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} needs {needed} but the limit is {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
    },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("non-integral Schur coefficient for {0}")]
    NonIntegralResult(String),
    #[error("shape error: {0}")]
    ShapeError(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown identifier: {0}")]
    Unknown(String),
}

pub type Result<T> = std::result::Result<T, Error>;
