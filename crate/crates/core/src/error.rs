use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {q} exceeds configured bound {bound}")]
    FieldTooLarge { q: u64, bound: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
    #[error("action is not faithful")]
    NotFaithful,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
