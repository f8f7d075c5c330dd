use thiserror::Error;

/// Errors raised by the sequence, determinant and recurrence operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series is not revertible: needs f(0) = 0 and f'(0) != 0")]
    NotRevertible,

    #[error("need {needed} terms but only {available} are known")]
    InsufficientPrefix { needed: usize, available: usize },

    #[error("index {index} outside the valid range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("requested reversion order {requested} exceeds series order {available}")]
    OrderTooLarge { requested: usize, available: usize },

    #[error("zeroth moment is unset")]
    Unset,

    #[error("need {needed} recurrence coefficients but only {available} are known")]
    InsufficientCoeffs { needed: usize, available: usize },

    #[error("invalid scale factor: {0}")]
    InvalidScale(String),

    #[error("r-sequence vanishes at index {0}")]
    DivisionByZeroR(usize),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("independent evaluations disagree at index {index}: {left} vs {right}")]
    Mismatch {
        index: usize,
        left: String,
        right: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
