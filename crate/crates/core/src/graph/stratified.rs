use super::{Digraph, GraphError, Vertex};

const NO_LAYER: usize = usize::MAX;

/// A digraph together with an ordered partition `K_0, ..., K_L` of its
/// vertices such that every edge goes from some `K_i` to `K_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratifiedDigraph {
    graph: Digraph,
    layers: Vec<Vec<Vertex>>,
    layer_of: Vec<usize>,
}

/// Result of a preprocessing step that may leave a layer empty, in which
/// case the full-depth cycle space is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Reduced {
    Graph(StratifiedDigraph),
    TrivialFullDepth,
}

impl Reduced {
    pub fn graph(&self) -> Option<&StratifiedDigraph> {
        match self {
            Reduced::Graph(g) => Some(g),
            Reduced::TrivialFullDepth => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Reduced::TrivialFullDepth)
    }
}

/// Checks that `layers` partitions the vertex set into nonempty parts and
/// that every edge goes one layer down.
pub fn validate_stratified(
    graph: Digraph,
    layers: Vec<Vec<Vertex>>,
) -> Result<StratifiedDigraph, GraphError> {
    let mut layer_of = vec![NO_LAYER; graph.universe()];
    if layers.is_empty() {
        return Err(GraphError::NotAPartition("no layers".into()));
    }
    let mut layers = layers;
    for (i, layer) in layers.iter_mut().enumerate() {
        if layer.is_empty() {
            return Err(GraphError::NotAPartition(format!("layer {i} is empty")));
        }
        layer.sort_unstable();
        for &v in layer.iter() {
            if !graph.contains(v) {
                return Err(GraphError::NotAPartition(format!(
                    "vertex #{} in layer {i} is not in the graph",
                    v.0
                )));
            }
            if layer_of[v.index()] != NO_LAYER {
                return Err(GraphError::NotAPartition(format!(
                    "vertex `{}` appears more than once",
                    graph.label(v)
                )));
            }
            layer_of[v.index()] = i;
        }
    }
    if let Some(&v) = graph
        .vertices()
        .iter()
        .find(|v| layer_of[v.index()] == NO_LAYER)
    {
        return Err(GraphError::NotAPartition(format!(
            "vertex `{}` is in no layer",
            graph.label(v)
        )));
    }
    for &(u, v) in graph.edges() {
        if layer_of[v.index()] != layer_of[u.index()] + 1 {
            return Err(GraphError::EdgeSkipsLayer(
                graph.label(u).to_string(),
                graph.label(v).to_string(),
            ));
        }
    }
    Ok(StratifiedDigraph {
        graph,
        layers,
        layer_of,
    })
}

impl StratifiedDigraph {
    pub fn new(graph: Digraph, layers: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        validate_stratified(graph, layers)
    }

    /// Fully connected stratified digraph with the given layer sizes;
    /// vertices are numbered layer by layer.
    pub fn fully_connected(sizes: &[usize]) -> Self {
        let mut layers = Vec::with_capacity(sizes.len());
        let mut next = 0u32;
        for &size in sizes {
            layers.push((next..next + size as u32).map(Vertex).collect::<Vec<_>>());
            next += size as u32;
        }
        let edges: Vec<(u32, u32)> = layers
            .windows(2)
            .flat_map(|w| {
                let (top, bottom) = (&w[0], &w[1]);
                top.iter()
                    .flat_map(move |u| bottom.iter().map(move |v| (u.0, v.0)))
            })
            .collect();
        let graph = Digraph::from_edges(next as usize, &edges).expect("valid base graph");
        Self::new(graph, layers).expect("valid stratification")
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn into_graph(self) -> Digraph {
        self.graph
    }

    /// `L`, the number of layer transitions.
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layers(&self) -> &[Vec<Vertex>] {
        &self.layers
    }

    pub fn layer(&self, i: usize) -> &[Vertex] {
        &self.layers[i]
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn layer_of(&self, v: Vertex) -> Option<usize> {
        self.layer_of
            .get(v.index())
            .copied()
            .filter(|&l| l != NO_LAYER)
    }

    /// Restriction to the vertices with `keep[v]` set, keeping layer indices.
    pub fn restrict(&self, keep: &[bool]) -> Reduced {
        let layers: Vec<Vec<Vertex>> = self
            .layers
            .iter()
            .map(|l| l.iter().copied().filter(|v| keep[v.index()]).collect())
            .collect();
        if layers.iter().any(Vec::is_empty) {
            return Reduced::TrivialFullDepth;
        }
        let graph = self.graph.induced(keep);
        Reduced::Graph(Self::new(graph, layers).expect("restriction stays stratified"))
    }

    /// Same graph with edge weights attached, aligned with `graph().edges()`.
    pub fn with_weights(&self, weights: Vec<crate::linalg::Rational>) -> Self {
        Self {
            graph: self.graph.with_weights(weights),
            layers: self.layers.clone(),
            layer_of: self.layer_of.clone(),
        }
    }

    /// Same vertices and layers, only the accepted edges.
    pub fn with_graph_edges<F>(&self, keep: F) -> Self
    where
        F: Fn(Vertex, Vertex, Option<&crate::linalg::Rational>) -> bool,
    {
        Self {
            graph: self.graph.edge_subgraph(keep),
            layers: self.layers.clone(),
            layer_of: self.layer_of.clone(),
        }
    }

    /// Weakly connected components with the layer indexing of `self`. A
    /// component missing some layer carries no full-depth cycle.
    pub fn components(&self) -> Vec<Reduced> {
        super::weakly_connected_components(&self.graph)
            .iter()
            .map(|c| {
                let mut keep = vec![false; self.graph.universe()];
                for v in c.vertices() {
                    keep[v.index()] = true;
                }
                self.restrict(&keep)
            })
            .collect()
    }
}
