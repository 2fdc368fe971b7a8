use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("invalid form matrix: {0}")]
    InvalidForm(String),
    #[error("elements live over different realizations ({0} vs {1})")]
    RealizationMismatch(String, String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("realization {0} has no triangular grading")]
    Ungraded(String),
    #[error("weight has no value for Cartan generator {0}")]
    MissingWeight(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix entries are not {0}")]
    NotSymmetric(&'static str),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("flavor mismatch: {0}")]
    Flavor(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
