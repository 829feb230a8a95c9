//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("standard-form violation at index {index}: {msg}")]
    StandardForm { index: usize, msg: String },

    #[error("variable {0} is not invertible")]
    NonInvertible(String),

    #[error("expected {expected} exponents, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("{0} is not a unit")]
    NotUnit(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An unreachable branch of a rewrite ladder was hit.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
