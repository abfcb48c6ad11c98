use std::fmt;

use thiserror::Error;

use crate::chains::Chain;
use crate::graph::GraphError;
use crate::linalg::LinalgError;

/// Which engine produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    General,
    Recursive,
    Maximal,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::General => "general",
            Algorithm::Recursive => "recursive",
            Algorithm::Maximal => "maximal",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    pub betti: usize,
    pub dimension: usize,
    pub algorithm: Algorithm,
    /// Representatives of a basis of the homology group, when requested.
    pub basis: Option<Vec<Chain>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("{predicted} allowed {p}-paths exceed the limit of {limit}")]
    DimensionGuard {
        p: usize,
        predicted: u128,
        limit: u128,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
