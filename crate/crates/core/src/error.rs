use thiserror::Error;

/// Errors raised by the character engine and the geometry routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("Adams degree must be positive, got {0}")]
    InvalidAdamsDegree(i64),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("invalid highest weight: {0}")]
    InvalidWeight(String),

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("Weyl dimension formula gave a non-integral value for {0}")]
    NonIntegralDimension(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported plane: {0}")]
    UnsupportedPlane(String),
}

pub type Result<T> = std::result::Result<T, Error>;
