//! Full-depth persistence over the strict-threshold edge filtration.
//!
//! `G_t` keeps every vertex and the edges of weight strictly greater than
//! `t`. The family decreases in `t`, so `β_L(G_t)` is non-increasing and
//! only changes at edge weights.

use std::collections::BTreeSet;

use num_traits::One;
use thiserror::Error;

use crate::graph::StratifiedDigraph;
use crate::linalg::Rational;
use crate::recursive::full_depth;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PersistenceError {
    #[error("graph has no edge weights")]
    MissingWeights,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PersistenceCurve {
    /// `(t, β_L(G_t))` at each distinct weight, increasing in `t`.
    pub points: Vec<(Rational, usize)>,
    /// `β_L` of the whole graph, placed one unit below the smallest weight.
    pub baseline: Option<(Rational, usize)>,
}

/// Sorted distinct edge weights.
pub fn filtration_thresholds(g: &StratifiedDigraph) -> Result<Vec<Rational>, PersistenceError> {
    let weights = g
        .graph()
        .weights()
        .ok_or(PersistenceError::MissingWeights)?;
    let distinct: BTreeSet<&Rational> = weights.iter().collect();
    Ok(distinct.into_iter().cloned().collect())
}

/// `G_t`: same vertices and layers, edges of weight `> t`.
pub fn subgraph_above(
    g: &StratifiedDigraph,
    t: &Rational,
) -> Result<StratifiedDigraph, PersistenceError> {
    if !g.graph().is_weighted() {
        return Err(PersistenceError::MissingWeights);
    }
    Ok(g.with_graph_edges(|_, _, w| w.is_some_and(|w| w > t)))
}

pub fn persistence_curve(
    g: &StratifiedDigraph,
    include_baseline: bool,
) -> Result<PersistenceCurve, PersistenceError> {
    let thresholds = filtration_thresholds(g)?;
    let mut points = Vec::with_capacity(thresholds.len());
    let mut vanished = false;
    for t in thresholds {
        let betti = if vanished {
            0
        } else {
            full_depth(&subgraph_above(g, &t)?, false).betti
        };
        vanished = betti == 0;
        points.push((t, betti));
    }
    let baseline = if include_baseline {
        let below = points
            .first()
            .map_or_else(Rational::one, |(t, _)| t.clone())
            - Rational::one();
        Some((below, full_depth(g, false).betti))
    } else {
        None
    };
    Ok(PersistenceCurve { points, baseline })
}
