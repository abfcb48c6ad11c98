use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{Digraph, GraphError, StratifiedDigraph, Vertex};

/// Kahn's algorithm, always emitting the smallest available vertex.
pub fn topological_order(g: &Digraph) -> Result<Vec<Vertex>, GraphError> {
    let mut indegree = vec![0usize; g.universe()];
    for &(_, v) in g.edges() {
        indegree[v.index()] += 1;
    }
    let mut ready: BinaryHeap<Reverse<Vertex>> = g
        .vertices()
        .iter()
        .filter(|v| indegree[v.index()] == 0)
        .map(|&v| Reverse(v))
        .collect();
    let mut order = Vec::with_capacity(g.vertex_count());
    while let Some(Reverse(u)) = ready.pop() {
        order.push(u);
        for &v in g.succ(u) {
            indegree[v.index()] -= 1;
            if indegree[v.index()] == 0 {
                ready.push(Reverse(v));
            }
        }
    }
    if order.len() != g.vertex_count() {
        return Err(GraphError::CycleDetected);
    }
    Ok(order)
}

/// Longest allowed path lengths ending at (`top`) and starting from
/// (`bottom`) each vertex of a DAG. Indexed by vertex id; absent vertices
/// read 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerProfile {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
    /// Max of `top`, i.e. the longest path length of the graph.
    pub length: usize,
}

impl LayerProfile {
    pub fn compute(g: &Digraph) -> Result<Self, GraphError> {
        let order = topological_order(g)?;
        let mut top = vec![0usize; g.universe()];
        let mut bottom = vec![0usize; g.universe()];
        for &v in &order {
            top[v.index()] = g
                .pred(v)
                .iter()
                .map(|u| top[u.index()] + 1)
                .max()
                .unwrap_or(0);
        }
        for &v in order.iter().rev() {
            bottom[v.index()] = g
                .succ(v)
                .iter()
                .map(|w| bottom[w.index()] + 1)
                .max()
                .unwrap_or(0);
        }
        let length = order.iter().map(|v| top[v.index()]).max().unwrap_or(0);
        Ok(Self {
            top,
            bottom,
            length,
        })
    }
}

pub fn longest_path_length(g: &Digraph) -> Result<usize, GraphError> {
    Ok(LayerProfile::compute(g)?.length)
}

/// The union of the supports of all longest allowed paths, stratified by
/// `top`. An edge `(u, v)` lies on a longest path iff
/// `top[u] + 1 + bottom[v]` equals the longest path length.
pub fn extract_longest_subgraph(g: &Digraph) -> Result<StratifiedDigraph, GraphError> {
    let profile = LayerProfile::compute(g)?;
    let ell = profile.length;
    if ell == 0 {
        return Err(GraphError::DepthZero);
    }
    let edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .copied()
        .filter(|(u, v)| profile.top[u.index()] + 1 + profile.bottom[v.index()] == ell)
        .collect();
    let mut on_path = vec![false; g.universe()];
    for &(u, v) in &edges {
        on_path[u.index()] = true;
        on_path[v.index()] = true;
    }
    let vertices: Vec<Vertex> = g
        .vertices()
        .iter()
        .copied()
        .filter(|v| on_path[v.index()])
        .collect();
    let mut layers = vec![Vec::new(); ell + 1];
    for &v in &vertices {
        layers[profile.top[v.index()]].push(v);
    }
    let sub = g.subgraph(&vertices, &edges);
    StratifiedDigraph::new(sub, layers)
}

/// Stratifies a DAG by `K_i = {v : top[v] = i}`.
pub fn infer_layers(g: &Digraph) -> Result<StratifiedDigraph, GraphError> {
    if g.is_empty() {
        return Err(GraphError::NotAPartition("graph has no vertices".into()));
    }
    let profile = LayerProfile::compute(g)?;
    for &(u, v) in g.edges() {
        if profile.top[v.index()] != profile.top[u.index()] + 1 {
            return Err(GraphError::NotStratifiable(
                g.label(u).to_string(),
                g.label(v).to_string(),
            ));
        }
    }
    let mut layers = vec![Vec::new(); profile.length + 1];
    for &v in g.vertices() {
        layers[profile.top[v.index()]].push(v);
    }
    StratifiedDigraph::new(g.clone(), layers)
}
