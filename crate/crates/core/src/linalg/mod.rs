//! Exact linear algebra over the rationals.

mod elim;
mod matrix;
mod rational;

use thiserror::Error;

pub use elim::{
    null_space_basis, null_space_basis_counted, nullity, pivot_columns, rank, rank_counted,
    solve_all, solve_all_counted,
};
pub use matrix::{RationalMatrix, SparseRow};
pub use rational::{
    format_exact, format_fraction, int, parse_rational, ratio, ParseRationalError, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("index {index} out of range for dimension {len}")]
    UnknownLabel { index: usize, len: usize },
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("right-hand column {column} is not in the column space")]
    Inconsistent { column: usize },
}
