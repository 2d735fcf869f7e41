use thiserror::Error;

use crate::scalar::{Rational, ScalarError};

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),

    #[error("index ({0}, {1}) out of bounds")]
    OutOfBounds(usize, usize),

    #[error("duplicate basis label '{0}'")]
    DuplicateLabel(String),

    #[error("at least one specialization point is required")]
    EmptyPoints,

    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("simple root {0} is not an isotropic odd root")]
    NonIsotropicRoot(usize),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("dimension budget exceeded: need {needed}, budget {budget}")]
    BudgetExceeded { needed: usize, budget: usize },

    #[error("size guard: {0}")]
    Guard(String),

    #[error("results disagree across specialization points: {0:?}")]
    PointDisagreement(Vec<(Rational, usize)>),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
