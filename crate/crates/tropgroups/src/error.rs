use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not invertible: {0}")]
    NotInvertible(String),
    #[error("not an element of the group: {0}")]
    NotInGroup(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("Weyl group exceeds the size guard of {limit} elements")]
    GuardExceeded { limit: usize },
    #[error("elements belong to different groups")]
    ParentMismatch,
    #[error("circle lengths differ")]
    LengthMismatch,
    #[error("invalid root datum: {}", .0.join("; "))]
    InvalidDatum(Vec<String>),
    #[error("not of type A: {0}")]
    NotTypeA(String),
    #[error("no permutation interpretation is attached to this Weyl group")]
    NoPermutations,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
