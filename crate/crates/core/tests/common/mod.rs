//! Independent oracles and random inputs shared by the integration tests.
//!
//! Nothing here calls the algorithms under test: paths are enumerated by
//! depth-first search, ranks come from dense Gaussian elimination, and
//! components from a plain union-find.

#![allow(dead_code)]

pub mod strategies;

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use pathhom_core::graph::{Digraph, StratifiedDigraph, Vertex};
use pathhom_core::linalg::Rational;
use pathhom_core::sampling::{rng_for, sample_subgraph};
use rand::Rng;

/// Every allowed path (as a vertex list) of `g`, of every length, by DFS.
pub fn all_paths(g: &Digraph) -> Vec<Vec<Vertex>> {
    fn walk(g: &Digraph, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        out.push(path.clone());
        let last = *path.last().unwrap();
        for &(u, v) in g.edges() {
            if u == last {
                path.push(v);
                walk(g, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for &v in g.vertices() {
        walk(g, &mut vec![v], &mut out);
    }
    out
}

pub fn brute_longest(g: &Digraph) -> usize {
    all_paths(g).iter().map(|p| p.len() - 1).max().unwrap_or(0)
}

/// Vertex set, edge set and layers of a subgraph.
pub type Support = (
    BTreeSet<Vertex>,
    BTreeSet<(Vertex, Vertex)>,
    Vec<BTreeSet<Vertex>>,
);

/// Vertices, edges and `top` layers of the union of all longest paths.
pub fn brute_longest_union(g: &Digraph) -> Support {
    let paths = all_paths(g);
    let ell = brute_longest(g);
    let mut vs = BTreeSet::new();
    let mut es = BTreeSet::new();
    let mut layers = vec![BTreeSet::new(); ell + 1];
    for p in paths.iter().filter(|p| p.len() == ell + 1) {
        for (i, &v) in p.iter().enumerate() {
            vs.insert(v);
            layers[i].insert(v);
        }
        for w in p.windows(2) {
            es.insert((w[0], w[1]));
        }
    }
    (vs, es, layers)
}

pub fn union_find_count(g: &Digraph) -> usize {
    let n = g.universe();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut c = x;
        while parent[c] != r {
            let next = parent[c];
            parent[c] = r;
            c = next;
        }
        r
    }
    for &(u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u.index()), find(&mut parent, v.index()));
        if a != b {
            parent[a] = b;
        }
    }
    let roots: BTreeSet<usize> = g
        .vertices()
        .iter()
        .map(|v| find(&mut parent, v.index()))
        .collect();
    roots.len()
}

/// Rank by dense elimination with explicit pivot search.
pub fn dense_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip();
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = &row[col] * &inv;
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dense `∂_p` on the allowed `p`-paths, rows indexed by every face that
/// occurs (the scalar unit for `p = 0`).
fn dense_boundary(paths: &[Vec<Vertex>]) -> Vec<Vec<Rational>> {
    let mut faces: Vec<Vec<Vertex>> = Vec::new();
    let mut entries = Vec::new();
    for (j, p) in paths.iter().enumerate() {
        if p.len() == 1 {
            entries.push((Vec::new(), j, Rational::one()));
            continue;
        }
        for i in 0..p.len() {
            let mut f = p.clone();
            f.remove(i);
            let c = if i % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            entries.push((f, j, c));
        }
    }
    for (f, _, _) in &entries {
        if !faces.contains(f) {
            faces.push(f.clone());
        }
    }
    let mut m = vec![vec![Rational::zero(); paths.len()]; faces.len()];
    for (f, j, c) in entries {
        let i = faces.iter().position(|x| *x == f).unwrap();
        m[i][j] += c;
    }
    m
}

/// `dim(ker ∂_p ∩ A_p)`, which is `β_p` when `p` is the top dimension of a
/// stratified graph.
pub fn brute_cycle_dim(g: &Digraph, p: usize) -> usize {
    let paths: Vec<Vec<Vertex>> = all_paths(g)
        .into_iter()
        .filter(|x| x.len() == p + 1)
        .collect();
    if paths.is_empty() {
        return 0;
    }
    paths.len() - dense_rank(&dense_boundary(&paths))
}

/// Random DAG on `n` vertices: edges only go from lower to higher ids.
pub fn random_dag(n: usize, density: f64, rng: &mut impl Rng) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Digraph::from_edges(n, &edges).unwrap()
}

/// Random stratified digraph with layer sizes in `1..=max_size`, depth in
/// `1..=max_depth`, and each possible edge present with probability in
/// `[0.3, 0.95]`.
pub fn random_stratified(
    max_size: usize,
    max_depth: usize,
    rng: &mut impl Rng,
) -> StratifiedDigraph {
    let depth = rng.gen_range(1..=max_depth);
    let sizes: Vec<usize> = (0..=depth).map(|_| rng.gen_range(1..=max_size)).collect();
    let density = rng.gen_range(0.3..0.95);
    let full = StratifiedDigraph::fully_connected(&sizes);
    let kept: BTreeSet<(Vertex, Vertex)> = full
        .graph()
        .edges()
        .iter()
        .copied()
        .filter(|_| rng.gen_bool(density))
        .collect();
    full.with_graph_edges(|u, v, _| kept.contains(&(u, v)))
}

/// The criterion corpus: mixed random stratified graphs plus `ρ`-samples of
/// a `[3,3,3,3]` base.
pub fn oracle_corpus(seed: u64) -> Vec<StratifiedDigraph> {
    let mut rng = rng_for(seed, 0);
    let mut out: Vec<StratifiedDigraph> = (0..150)
        .map(|_| random_stratified(4, 3, &mut rng))
        .collect();
    for (k, rho) in [(3, 10), (6, 10), (9, 10)].into_iter().enumerate() {
        let rho = Rational::new(rho.0.into(), rho.1.into());
        for i in 0..20 {
            let stream = 100 + (k as u64) * 20 + i;
            out.push(sample_subgraph(&[3, 3, 3, 3], &rho, &mut rng_for(seed, stream)).unwrap());
        }
    }
    out
}

/// Layers `0..=q` of `g` with the induced edges.
pub fn prefix(g: &StratifiedDigraph, q: usize) -> StratifiedDigraph {
    let mut keep = vec![false; g.graph().universe()];
    for layer in &g.layers()[..=q] {
        for v in layer {
            keep[v.index()] = true;
        }
    }
    let graph = g.graph().induced(&keep);
    StratifiedDigraph::new(graph, g.layers()[..=q].to_vec()).unwrap()
}

/// Disjoint union, relabelling the second graph's vertices after the first.
pub fn disjoint_union(a: &StratifiedDigraph, b: &StratifiedDigraph) -> StratifiedDigraph {
    assert_eq!(a.depth(), b.depth());
    let shift = a.graph().universe() as u32;
    let mut edges: Vec<(u32, u32)> = a.graph().edges().iter().map(|(u, v)| (u.0, v.0)).collect();
    edges.extend(
        b.graph()
            .edges()
            .iter()
            .map(|(u, v)| (u.0 + shift, v.0 + shift)),
    );
    let n = a.graph().universe() + b.graph().universe();
    let layers = a
        .layers()
        .iter()
        .zip(b.layers())
        .map(|(x, y)| {
            x.iter()
                .copied()
                .chain(y.iter().map(|v| Vertex(v.0 + shift)))
                .collect()
        })
        .collect();
    StratifiedDigraph::new(Digraph::from_edges(n, &edges).unwrap(), layers).unwrap()
}
