//! Layer-by-layer recursion for the full-depth cycle space.
//!
//! After layer `p - 1` the state is a list `K+` of admitted vertices, each
//! with a matrix `A_x` whose columns are the coordinates of a basis of the
//! `(p-1)`-cycles ending in `pred(x)`, and a matrix `V` whose columns span
//! `null([A_1 .. A_n])`, stacked in row blocks of height `ncols(A_i)`. A
//! vertex `x` of the next layer is admitted when `V` with the blocks of
//! `pred(x) ∩ K+` removed has a nontrivial null space, which becomes `A_x`.

use num_traits::One;

use crate::chains::Chain;
use crate::graph::{
    extract_longest_subgraph, longest_path_length, trim_removable, Digraph, GraphError, Reduced,
    StratifiedDigraph, Vertex,
};
use crate::homology::{Algorithm, HomologyResult};
use crate::linalg::{null_space_basis_counted, Rational, RationalMatrix};

/// Diagnostics from one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursiveRun {
    pub result: HomologyResult,
    /// `b_p` for `p = 0..=L`; zero from the layer where the recursion stopped.
    pub profile: Vec<usize>,
    /// Layer at which the cycle space vanished, if it did.
    pub stopped_at: Option<usize>,
    /// Elementary row operations spent in elimination.
    pub ops: u64,
    /// `Σ_p |K_{p-1}| |K_p| b_{p-1}^3` over the layers processed.
    pub complexity_bound: u128,
}

struct Admitted {
    vertex: Vertex,
    /// `None` stands for the identity of size `b_{p-1}`.
    a: Option<RationalMatrix>,
    width: usize,
}

struct LayerState {
    admitted: Vec<Admitted>,
    v: RationalMatrix,
    basis: Option<Vec<Chain>>,
}

impl LayerState {
    fn dim(&self) -> usize {
        self.v.ncols()
    }

    fn block_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.admitted.len() + 1);
        let mut acc = 0;
        offsets.push(0);
        for a in &self.admitted {
            acc += a.width;
            offsets.push(acc);
        }
        offsets
    }
}

/// `β_L` and optionally a basis of `H_L = ker ∂_L ∩ A_L`.
pub fn full_depth(g: &StratifiedDigraph, track: bool) -> HomologyResult {
    full_depth_run(g, track).result
}

/// The intermediate `b_p = dim` of the full-depth cycle space of each
/// prefix subgraph.
pub fn betti_profile(g: &StratifiedDigraph) -> Vec<(usize, usize)> {
    full_depth_run(g, false)
        .profile
        .into_iter()
        .enumerate()
        .collect()
}

pub fn full_depth_run(g: &StratifiedDigraph, track: bool) -> RecursiveRun {
    let depth = g.depth();
    let graph = g.graph();
    let mut profile = vec![0usize; depth + 1];
    let mut ops = 0u64;
    let mut bound = 0u128;
    let k0 = g.layer(0);

    let finish = |profile: Vec<usize>, basis: Option<Vec<Chain>>, stopped, ops, bound| {
        let betti = profile[depth];
        RecursiveRun {
            result: HomologyResult {
                betti,
                dimension: depth,
                algorithm: Algorithm::Recursive,
                basis: track.then(|| basis.unwrap_or_default()),
            },
            profile,
            stopped_at: stopped,
            ops,
            complexity_bound: bound,
        }
    };

    if k0.len() == 1 {
        return finish(profile, None, Some(0), ops, bound);
    }

    let n0 = k0.len();
    let v0 = {
        let mut triplets = Vec::with_capacity(2 * (n0 - 1));
        for j in 0..n0 - 1 {
            triplets.push((0, j, -Rational::one()));
            triplets.push((j + 1, j, Rational::one()));
        }
        RationalMatrix::from_triplets(n0, n0 - 1, triplets)
    };
    let basis0 = track.then(|| {
        k0[1..]
            .iter()
            .map(|&x| Chain::vertex(x).sub(&Chain::vertex(k0[0])))
            .collect()
    });
    let mut state = LayerState {
        admitted: k0
            .iter()
            .map(|&x| Admitted {
                vertex: x,
                a: Some(RationalMatrix::identity(1)),
                width: 1,
            })
            .collect(),
        v: v0,
        basis: basis0,
    };
    profile[0] = n0 - 1;

    for p in 1..=depth {
        let b_prev = state.dim();
        bound +=
            (g.layer(p - 1).len() as u128) * (g.layer(p).len() as u128) * (b_prev as u128).pow(3);
        match step(graph, &state, g.layer(p), &mut ops, track) {
            Some(next) => {
                profile[p] = next.dim();
                state = next;
            }
            None => return finish(profile, None, Some(p), ops, bound),
        }
    }
    finish(profile, state.basis, None, ops, bound)
}

/// Advances from layer `p - 1` to layer `p`; `None` when the cycle space
/// of the new prefix vanishes.
fn step(
    graph: &Digraph,
    state: &LayerState,
    layer: &[Vertex],
    ops: &mut u64,
    track: bool,
) -> Option<LayerState> {
    let b = state.dim();
    let offsets = state.block_offsets();
    let n_prev = state.admitted.len();

    let mut admitted = Vec::new();
    for &x in layer {
        let hit: Vec<usize> = state
            .admitted
            .iter()
            .enumerate()
            .filter(|(_, a)| graph.has_edge(a.vertex, x))
            .map(|(i, _)| i)
            .collect();
        if hit.len() == n_prev {
            admitted.push(Admitted {
                vertex: x,
                a: None,
                width: b,
            });
            continue;
        }
        let mut dropped = vec![false; state.v.nrows()];
        for &i in &hit {
            for flag in &mut dropped[offsets[i]..offsets[i + 1]] {
                *flag = true;
            }
        }
        let rows: Vec<_> = state
            .v
            .rows()
            .iter()
            .zip(&dropped)
            .filter(|(_, &d)| !d)
            .map(|(r, _)| r.clone())
            .collect();
        let reduced = RationalMatrix::from_rows(b, rows);
        let a = null_space_basis_counted(&reduced, ops);
        if a.ncols() > 0 {
            admitted.push(Admitted {
                vertex: x,
                width: a.ncols(),
                a: Some(a),
            });
        }
    }
    if admitted.len() <= 1 {
        return None;
    }

    let v = stacked_null_space(&admitted, ops);
    if v.ncols() == 0 {
        return None;
    }
    let next = LayerState {
        basis: None,
        admitted,
        v,
    };
    let basis = if track {
        Some(track_basis(state.basis.as_ref().expect("tracked"), &next))
    } else {
        None
    };
    Some(LayerState { basis, ..next })
}

/// Basis of `null([A_1 .. A_n])`. With an identity block `A_k` the system
/// `Σ A_i v_i = 0` solves as `v_k = -Σ_{i≠k} A_i v_i` with the other blocks
/// free, so no elimination is needed.
fn stacked_null_space(admitted: &[Admitted], ops: &mut u64) -> RationalMatrix {
    let total: usize = admitted.iter().map(|a| a.width).sum();
    let Some(k) = admitted.iter().position(|a| a.a.is_none()) else {
        let blocks: Vec<&RationalMatrix> = admitted
            .iter()
            .map(|a| a.a.as_ref().expect("explicit block"))
            .collect();
        let stacked = RationalMatrix::hstack(&blocks).expect("all blocks have b rows");
        return null_space_basis_counted(&stacked, ops);
    };

    let mut offsets = Vec::with_capacity(admitted.len());
    let mut acc = 0;
    for a in admitted {
        offsets.push(acc);
        acc += a.width;
    }
    let mut triplets = Vec::new();
    let mut col = 0;
    for (i, blk) in admitted.iter().enumerate() {
        if i == k {
            continue;
        }
        let columns = blk.a.as_ref().map(RationalMatrix::columns);
        for j in 0..blk.width {
            triplets.push((offsets[i] + j, col, Rational::one()));
            match &columns {
                None => triplets.push((offsets[k] + j, col, -Rational::one())),
                Some(cols) => {
                    for (r, entry) in &cols[j] {
                        triplets.push((offsets[k] + r, col, -entry));
                    }
                }
            }
            col += 1;
        }
    }
    RationalMatrix::from_triplets(total, col, triplets)
}

/// Column `r` of the new basis is `Σ_i (Σ_k B_k (A_i V_i)[k, r]) x_i`.
fn track_basis(prev: &[Chain], next: &LayerState) -> Vec<Chain> {
    let degree = prev.first().map_or(0, |c| c.degree() + 1);
    let mut out = vec![Chain::zero(degree); next.dim()];
    let offsets = next.block_offsets();
    for (i, blk) in next.admitted.iter().enumerate() {
        let rows: Vec<usize> = (offsets[i]..offsets[i + 1]).collect();
        let v_i = next.v.select_rows(&rows).expect("block rows in range");
        let coeffs = match &blk.a {
            None => v_i,
            Some(a) => a.mul(&v_i).expect("block shapes agree"),
        };
        for (k, row) in coeffs.rows().iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            let joined = prev[k].append_vertex(blk.vertex);
            for (r, c) in row {
                out[*r].add_scaled(&joined, c);
            }
        }
    }
    out
}

/// `H_ℓ(G)` for a DAG, `ℓ` its longest path length. The longest-path
/// subgraph is split into weakly connected components, each is trimmed,
/// and the full-depth results are summed.
pub fn maximal(g: &Digraph, track: bool) -> Result<HomologyResult, GraphError> {
    let ell = longest_path_length(g)?;
    if ell == 0 {
        let vs = g.vertices();
        let basis = track.then(|| {
            vs.iter()
                .skip(1)
                .map(|&v| Chain::vertex(v).sub(&Chain::vertex(vs[0])))
                .collect()
        });
        return Ok(HomologyResult {
            betti: vs.len().saturating_sub(1),
            dimension: 0,
            algorithm: Algorithm::Maximal,
            basis,
        });
    }
    let star = extract_longest_subgraph(g)?;
    let mut betti = 0;
    let mut basis: Vec<Chain> = Vec::new();
    for part in star.components() {
        let Reduced::Graph(component) = part else {
            continue;
        };
        let Reduced::Graph(trimmed) = trim_removable(&component) else {
            continue;
        };
        let r = full_depth(&trimmed, track);
        betti += r.betti;
        if let Some(b) = r.basis {
            basis.extend(b);
        }
    }
    Ok(HomologyResult {
        betti,
        dimension: ell,
        algorithm: Algorithm::Maximal,
        basis: track.then_some(basis),
    })
}
