//! Digraphs, stratifications and the structural preprocessing used before
//! homology computations.

mod components;
mod order;
mod stratified;
mod trim;

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::linalg::Rational;

pub use components::weakly_connected_components;
pub use order::{
    extract_longest_subgraph, infer_layers, longest_path_length, topological_order, LayerProfile,
};
pub use stratified::{validate_stratified, Reduced, StratifiedDigraph};
pub use trim::{trim_connected_count, trim_removable};

/// Vertex id. Ids index the label table shared by a graph and all of its
/// subgraphs, and their numeric order is the vertex order used everywhere
/// for tie-breaking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

impl Vertex {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}` -> `{1}`")]
    DuplicateEdge(String, String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("either every edge carries a weight or none does")]
    MixedWeights,
    #[error("layers are not a partition of the vertex set: {0}")]
    NotAPartition(String),
    #[error("edge `{0}` -> `{1}` does not go from one layer to the next")]
    EdgeSkipsLayer(String, String),
    #[error("graph has a directed cycle")]
    CycleDetected,
    #[error("edge `{0}` -> `{1}` skips a layer under the inferred stratification")]
    NotStratifiable(String, String),
    #[error("graph has no edges (longest path length 0)")]
    DepthZero,
}

/// A simple digraph: no self-loops, no parallel edges, optional exact edge
/// weights.
///
/// Subgraphs share the label table of the graph they were cut from, so a
/// vertex id means the same vertex across a graph, its components, its
/// trimmed versions and its filtration levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    labels: Arc<[String]>,
    present: Vec<bool>,
    vertices: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
    weights: Option<Vec<Rational>>,
    succ: Vec<Vec<Vertex>>,
    pred: Vec<Vec<Vertex>>,
}

impl Digraph {
    /// Graph on vertices `0..n` labelled by their decimal index.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let edges = edges.iter().map(|&(u, v)| (Vertex(u), Vertex(v))).collect();
        Self::new(labels, edges, None)
    }

    /// Weighted variant of [`Digraph::from_edges`].
    pub fn from_weighted_edges(
        n: usize,
        edges: &[(u32, u32, Rational)],
    ) -> Result<Self, GraphError> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let (edges, weights) = edges
            .iter()
            .map(|(u, v, w)| ((Vertex(*u), Vertex(*v)), w.clone()))
            .unzip();
        Self::new(labels, edges, Some(weights))
    }

    /// Every label becomes a vertex; `labels[i]` is the label of `Vertex(i)`.
    pub fn new(
        labels: Vec<String>,
        edges: Vec<(Vertex, Vertex)>,
        weights: Option<Vec<Rational>>,
    ) -> Result<Self, GraphError> {
        let n = labels.len();
        let labels: Arc<[String]> = labels.into();
        for &(u, v) in &edges {
            for x in [u, v] {
                if x.index() >= n {
                    return Err(GraphError::UnknownVertex(format!("#{}", x.0)));
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(labels[u.index()].clone()));
            }
        }
        if let Some(w) = &weights {
            assert_eq!(w.len(), edges.len(), "one weight per edge");
        }
        let mut order: Vec<usize> = (0..edges.len()).collect();
        order.sort_by_key(|&i| edges[i]);
        for pair in order.windows(2) {
            if edges[pair[0]] == edges[pair[1]] {
                let (u, v) = edges[pair[0]];
                return Err(GraphError::DuplicateEdge(
                    labels[u.index()].clone(),
                    labels[v.index()].clone(),
                ));
            }
        }
        let sorted_edges = order.iter().map(|&i| edges[i]).collect();
        let sorted_weights = weights.map(|w| order.iter().map(|&i| w[i].clone()).collect());
        Ok(Self::assemble(
            labels,
            vec![true; n],
            sorted_edges,
            sorted_weights,
        ))
    }

    /// `edges` must be sorted, deduplicated and inside `present`.
    fn assemble(
        labels: Arc<[String]>,
        present: Vec<bool>,
        edges: Vec<(Vertex, Vertex)>,
        weights: Option<Vec<Rational>>,
    ) -> Self {
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for &(u, v) in &edges {
            debug_assert!(present[u.index()] && present[v.index()]);
            succ[u.index()].push(v);
            pred[v.index()].push(u);
        }
        for list in &mut pred {
            list.sort_unstable();
        }
        let vertices = (0..n)
            .filter(|&i| present[i])
            .map(|i| Vertex(i as u32))
            .collect();
        Self {
            labels,
            present,
            vertices,
            edges,
            weights,
            succ,
            pred,
        }
    }

    /// Same graph with `weights[i]` on the `i`-th edge of [`Digraph::edges`].
    pub fn with_weights(&self, weights: Vec<Rational>) -> Self {
        assert_eq!(weights.len(), self.edges.len(), "one weight per edge");
        Self {
            weights: Some(weights),
            ..self.clone()
        }
    }

    /// Subgraph on the vertices with `keep[v]` set, keeping every edge
    /// between them.
    pub fn induced(&self, keep: &[bool]) -> Self {
        let present: Vec<bool> = (0..self.labels.len())
            .map(|i| self.present[i] && keep.get(i).copied().unwrap_or(false))
            .collect();
        self.filter_edges(present, |u, v, _| keep[u.index()] && keep[v.index()])
    }

    /// Same vertex set, only the edges accepted by `keep(u, v, weight)`.
    pub fn edge_subgraph<F>(&self, keep: F) -> Self
    where
        F: Fn(Vertex, Vertex, Option<&Rational>) -> bool,
    {
        self.filter_edges(self.present.clone(), keep)
    }

    fn filter_edges<F>(&self, present: Vec<bool>, keep: F) -> Self
    where
        F: Fn(Vertex, Vertex, Option<&Rational>) -> bool,
    {
        let mut edges = Vec::new();
        let mut weights = self.weights.as_ref().map(|_| Vec::new());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            let w = self.weights.as_ref().map(|w| &w[i]);
            if present[u.index()] && present[v.index()] && keep(u, v, w) {
                edges.push((u, v));
                if let (Some(out), Some(w)) = (weights.as_mut(), w) {
                    out.push(w.clone());
                }
            }
        }
        Self::assemble(self.labels.clone(), present, edges, weights)
    }

    /// Subgraph with exactly the given vertices and edges (which must exist
    /// in `self`).
    pub fn subgraph(&self, vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> Self {
        let mut present = vec![false; self.labels.len()];
        for v in vertices {
            present[v.index()] = self.present[v.index()];
        }
        let wanted: std::collections::BTreeSet<(Vertex, Vertex)> = edges.iter().copied().collect();
        self.filter_edges(present, |u, v, _| wanted.contains(&(u, v)))
    }

    /// Size of the shared label table (an upper bound on vertex ids).
    pub fn universe(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v.index()]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        self.vertices
            .iter()
            .copied()
            .find(|&v| self.label(v) == label)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.present.get(v.index()).copied().unwrap_or(false)
    }

    /// Present vertices in vertex order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Edges sorted by `(source, target)`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn succ(&self, v: Vertex) -> &[Vertex] {
        &self.succ[v.index()]
    }

    pub fn pred(&self, v: Vertex) -> &[Vertex] {
        &self.pred[v.index()]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.succ
            .get(u.index())
            .is_some_and(|s| s.binary_search(&v).is_ok())
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    /// Weights aligned with [`Digraph::edges`].
    pub fn weights(&self) -> Option<&[Rational]> {
        self.weights.as_deref()
    }

    pub fn weight(&self, u: Vertex, v: Vertex) -> Option<&Rational> {
        let i = self.edges.binary_search(&(u, v)).ok()?;
        self.weights.as_ref().map(|w| &w[i])
    }

    pub fn weight_map(&self) -> Option<BTreeMap<(Vertex, Vertex), Rational>> {
        let w = self.weights.as_ref()?;
        Some(self.edges.iter().copied().zip(w.iter().cloned()).collect())
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Builds a [`Digraph`] from string labels, ordering vertices naturally:
/// all-digit labels first by numeric value, then the rest lexicographically.
#[derive(Debug, Default, Clone)]
pub struct DigraphBuilder {
    vertices: Vec<String>,
    edges: Vec<(String, String, Option<Rational>)>,
}

impl DigraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: &str) -> &mut Self {
        self.vertices.push(label.to_string());
        self
    }

    pub fn add_edge(&mut self, u: &str, v: &str, weight: Option<Rational>) -> &mut Self {
        self.edges.push((u.to_string(), v.to_string(), weight));
        self
    }

    pub fn build(&self) -> Result<Digraph, GraphError> {
        let mut labels: Vec<String> = self
            .vertices
            .iter()
            .cloned()
            .chain(
                self.edges
                    .iter()
                    .flat_map(|(u, v, _)| [u.clone(), v.clone()]),
            )
            .collect();
        labels.sort_by(|a, b| natural_key(a).cmp(&natural_key(b)));
        labels.dedup();
        let index: BTreeMap<&str, Vertex> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), Vertex(i as u32)))
            .collect();
        let weighted = self.edges.iter().filter(|e| e.2.is_some()).count();
        if weighted != 0 && weighted != self.edges.len() {
            return Err(GraphError::MixedWeights);
        }
        let edges = self
            .edges
            .iter()
            .map(|(u, v, _)| (index[u.as_str()], index[v.as_str()]))
            .collect();
        let weights = (weighted > 0).then(|| {
            self.edges
                .iter()
                .map(|e| e.2.clone().expect("checked"))
                .collect()
        });
        Digraph::new(labels, edges, weights)
    }
}

fn natural_key(label: &str) -> (u8, u128, &str) {
    if !label.is_empty() && label.len() <= 38 && label.bytes().all(|b| b.is_ascii_digit()) {
        (0, label.parse().expect("digits"), label)
    } else {
        (1, 0, label)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// 0 -> 1 -> 2
    pub fn chain3() -> Digraph {
        Digraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    /// 0 -> {1, 2} -> 3
    pub fn diamond() -> Digraph {
        Digraph::from_edges(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Complete bipartite `m x n` with sources `0..m`.
    pub fn bipartite(m: u32, n: u32) -> Digraph {
        let edges: Vec<(u32, u32)> = (0..m)
            .flat_map(|u| (m..m + n).map(move |v| (u, v)))
            .collect();
        Digraph::from_edges((m + n) as usize, &edges).unwrap()
    }
}
