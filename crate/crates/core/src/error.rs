use thiserror::Error;

/// Errors raised by the exact engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient of lambda^{exponent} requested beyond validity order {order}")]
    BeyondValidity { exponent: i64, order: i64 },

    #[error("leading coefficient not a unit")]
    NotAUnit,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("partition weights differ: {left} vs {right}")]
    WeightMismatch { left: usize, right: usize },

    #[error("truncation bounds differ: {0}")]
    TruncationMismatch(String),

    #[error("limit does not exist at this truncation: {0}")]
    LimitViolation(String),

    #[error("interpolation residual nonzero: {0}")]
    NotPolynomial(String),

    #[error("dimension constraint violated: {0}")]
    Dimension(String),

    #[error("degree {degree} exceeds configured bound {bound}")]
    DegreeBound { degree: usize, bound: usize },

    #[error("oracle bound exceeded: {0}")]
    OracleBound(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
