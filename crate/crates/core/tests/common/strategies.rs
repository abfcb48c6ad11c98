//! Proptest strategies for random scalars, matrices, chains and digraphs.

use pathhom_core::chains::{Chain, ElementaryPath};
use pathhom_core::graph::{Digraph, Vertex};
use pathhom_core::linalg::{ratio, Rational, RationalMatrix};
use proptest::prelude::*;

/// Vertex count of random chains and digraphs.
pub const N: u32 = 5;

pub fn coeff() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

/// Sparse-ish entries: about 3 in 7 are zero.
pub fn entry() -> impl Strategy<Value = Rational> {
    prop_oneof![
        3 => Just(ratio(0, 1)),
        4 => (-4i64..=4, 1i64..=3).prop_map(|(n, d)| ratio(n, d)),
    ]
}

pub fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = RationalMatrix> {
    (0..=max_rows, 0..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(entry(), r * c)
            .prop_map(move |vals| RationalMatrix::from_dense(r, c, &vals))
    })
}

/// Up to 5 terms over arbitrary vertex sequences on `0..N`, repeats allowed.
pub fn chain_of(degree: i32) -> impl Strategy<Value = Chain> {
    let len = (degree + 1) as usize;
    prop::collection::vec((prop::collection::vec(0..N, len), coeff()), 0..6).prop_map(
        move |terms| {
            Chain::from_terms(
                degree,
                terms
                    .into_iter()
                    .map(|(vs, c)| (ElementaryPath::new(vs.into_iter().map(Vertex).collect()), c)),
            )
        },
    )
}

pub fn chain(min: i32, max: i32) -> impl Strategy<Value = Chain> {
    (min..=max).prop_flat_map(chain_of)
}

/// Random simple digraph on `0..N`, directed cycles included.
pub fn digraph() -> impl Strategy<Value = Digraph> {
    prop::collection::vec(any::<bool>(), (N * N) as usize).prop_map(|bits| {
        let edges: Vec<(u32, u32)> = (0..N)
            .flat_map(|u| (0..N).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && bits[(u * N + v) as usize])
            .collect();
        Digraph::from_edges(N as usize, &edges).unwrap()
    })
}
