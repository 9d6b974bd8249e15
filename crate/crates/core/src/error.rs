use thiserror::Error;

use crate::rat::Rat;

/// Errors surfaced by the exact kernel and the calculus built on it.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be positive")]
    EmptyDimension,

    #[error("not a rational: {0}")]
    BadRational(String),

    #[error("operand is not a cone (it has a nonzero vertex)")]
    NotACone,

    #[error("improper function: {0}")]
    ImproperFunction(String),

    #[error("unsupported combination: {0}")]
    UnsupportedCombination(String),

    #[error("decomposition infeasible: inf-convolution gap {gap} exceeds the epsilon budget")]
    InfeasibleDecomposition { gap: Rat },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
