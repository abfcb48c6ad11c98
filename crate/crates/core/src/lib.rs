//! Exact path homology of stratified digraphs.
//!
//! The full-depth homology `H_L` of a stratified digraph is computed layer by
//! layer in [`recursive`]; [`general`] implements the textbook algorithm for
//! arbitrary digraphs and serves as a cross-check. All arithmetic is exact
//! over the rationals.

pub mod chains;
pub mod general;
pub mod graph;
pub mod homology;
pub mod linalg;
pub mod persistence;
pub mod recursive;
pub mod sampling;

pub use chains::{Chain, ChainError, ElementaryPath};
pub use graph::{Digraph, GraphError, Reduced, StratifiedDigraph, Vertex};
pub use homology::{Algorithm, HomologyError, HomologyResult};
pub use linalg::{Rational, RationalMatrix};
pub use persistence::{PersistenceCurve, PersistenceError};
