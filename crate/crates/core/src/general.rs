//! The general path-homology algorithm for arbitrary digraphs.
//!
//! For each dimension `p` the allowed paths `A_p` are enumerated, the
//! boundary matrix `D(p)` is split into the block `D_*` of rows indexed by
//! disallowed faces and the block `E` of rows indexed by `A_{p-1}`, and
//!
//! ```text
//! N(p) = basis of null(D_*)            (coordinates of Omega_p in A_p)
//! N(p-1) B(p) = E N(p)                 (boundary in Omega coordinates)
//! beta_p = dim null(B(p)) - rank B(p+1)
//! ```
//!
//! with `B(0)` the all-ones row, since vertices bound to the scalar unit.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;

use crate::chains::{boundary, enumerate_allowed_paths, extend_paths, Chain, ElementaryPath};
use crate::graph::{Digraph, StratifiedDigraph};
use crate::homology::{Algorithm, HomologyError, HomologyResult};
use crate::linalg::{null_space_basis, pivot_columns, rank, solve_all, Rational, RationalMatrix};

/// Default refusal threshold on the number of allowed paths in a dimension.
pub const DEFAULT_GUARD_LIMIT: u128 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneralConfig {
    pub guard_limit: u128,
    /// Also compute representative cycles of a homology basis.
    pub track: bool,
}

impl Default for GeneralConfig {
    fn default() -> Self {
        Self {
            guard_limit: DEFAULT_GUARD_LIMIT,
            track: false,
        }
    }
}

/// Number of allowed elementary `p`-paths, saturating.
pub fn count_allowed_paths(g: &Digraph, p: usize) -> u128 {
    let mut counts = vec![0u128; g.universe()];
    for v in g.vertices() {
        counts[v.index()] = 1;
    }
    for _ in 0..p {
        let mut next = vec![0u128; g.universe()];
        for &(u, v) in g.edges() {
            next[v.index()] = next[v.index()].saturating_add(counts[u.index()]);
        }
        counts = next;
    }
    counts.iter().fold(0u128, |acc, &c| acc.saturating_add(c))
}

fn check_guard(g: &Digraph, p: usize, limit: u128) -> Result<(), HomologyError> {
    let predicted = count_allowed_paths(g, p);
    if predicted > limit {
        return Err(HomologyError::DimensionGuard {
            p,
            predicted,
            limit,
        });
    }
    Ok(())
}

/// `D(p)` split by row type. Columns are `A_p`; the `e` block has one row
/// per path of `A_{p-1}` (the scalar unit when `p = 0`), the `d_star`
/// block one row per disallowed face that occurs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub p: usize,
    pub columns: Vec<ElementaryPath>,
    pub allowed_rows: Vec<ElementaryPath>,
    pub disallowed_rows: Vec<ElementaryPath>,
    pub d_star: RationalMatrix,
    pub e: RationalMatrix,
}

pub fn boundary_matrix(g: &Digraph, p: usize) -> BoundaryMatrix {
    let columns = enumerate_allowed_paths(g, p);
    let allowed_rows = if p == 0 {
        vec![ElementaryPath::unit()]
    } else {
        enumerate_allowed_paths(g, p - 1)
    };
    split_boundary(g, p, columns, allowed_rows)
}

fn split_boundary(
    g: &Digraph,
    p: usize,
    columns: Vec<ElementaryPath>,
    allowed_rows: Vec<ElementaryPath>,
) -> BoundaryMatrix {
    let mut disallowed: BTreeMap<ElementaryPath, usize> = BTreeMap::new();
    let mut e_triplets = Vec::new();
    let mut d_entries = Vec::new();
    for (j, path) in columns.iter().enumerate() {
        for (face, coeff) in boundary(&Chain::path(path.vertices())).terms() {
            match allowed_rows.binary_search(face) {
                Ok(i) => e_triplets.push((i, j, coeff.clone())),
                Err(_) => {
                    debug_assert!(!face.is_allowed_in(g));
                    disallowed.insert(face.clone(), 0);
                    d_entries.push((face.clone(), j, coeff.clone()));
                }
            }
        }
    }
    for (i, slot) in disallowed.values_mut().enumerate() {
        *slot = i;
    }
    let d_triplets = d_entries
        .into_iter()
        .map(|(face, j, c)| (disallowed[&face], j, c));
    let d_star = RationalMatrix::from_triplets(disallowed.len(), columns.len(), d_triplets);
    let e = RationalMatrix::from_triplets(allowed_rows.len(), columns.len(), e_triplets);
    BoundaryMatrix {
        p,
        columns,
        allowed_rows,
        disallowed_rows: disallowed.into_keys().collect(),
        d_star,
        e,
    }
}

/// Basis of the invariant paths `Omega_p` in coordinates over `A_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaBasis {
    pub p: usize,
    pub paths: Vec<ElementaryPath>,
    pub n_matrix: RationalMatrix,
    pub basis_chains: Option<Vec<Chain>>,
}

impl OmegaBasis {
    pub fn dim(&self) -> usize {
        self.n_matrix.ncols()
    }
}

pub fn omega_basis(g: &Digraph, p: usize, track: bool) -> OmegaBasis {
    let paths = enumerate_allowed_paths(g, p);
    let n_matrix = omega_matrix(g, p, &paths);
    let basis_chains = track.then(|| columns_as_chains(p, &paths, &n_matrix));
    OmegaBasis {
        p,
        paths,
        n_matrix,
        basis_chains,
    }
}

/// `null(D_*)`. Faces of allowed 0- and 1-paths are always allowed, so
/// `Omega_p = A_p` there.
fn omega_matrix(g: &Digraph, p: usize, paths: &[ElementaryPath]) -> RationalMatrix {
    if p <= 1 {
        return RationalMatrix::identity(paths.len());
    }
    let mut rows: BTreeMap<ElementaryPath, usize> = BTreeMap::new();
    let mut entries = Vec::new();
    for (j, path) in paths.iter().enumerate() {
        for (face, coeff) in boundary(&Chain::path(path.vertices())).terms() {
            if !face.is_allowed_in(g) {
                let next = rows.len();
                let i = *rows.entry(face.clone()).or_insert(next);
                entries.push((i, j, coeff.clone()));
            }
        }
    }
    // row order does not change the null space
    null_space_basis(&RationalMatrix::from_triplets(
        rows.len(),
        paths.len(),
        entries,
    ))
}

fn columns_as_chains(p: usize, paths: &[ElementaryPath], m: &RationalMatrix) -> Vec<Chain> {
    m.columns()
        .into_iter()
        .map(|col| {
            Chain::from_terms(
                p as i32,
                col.into_iter().map(|(i, c)| (paths[i].clone(), c)),
            )
        })
        .collect()
}

/// One dimension of the complex: allowed paths and the Omega basis.
struct Stage {
    paths: Vec<ElementaryPath>,
    omega: RationalMatrix,
}

impl Stage {
    fn unit() -> Self {
        Stage {
            paths: vec![ElementaryPath::unit()],
            omega: RationalMatrix::identity(1),
        }
    }

    fn build(g: &Digraph, p: usize, paths: Vec<ElementaryPath>) -> Self {
        let omega = omega_matrix(g, p, &paths);
        Stage { paths, omega }
    }
}

/// `B(p)`, solving `N(p-1) B = E N(p)`.
fn b_matrix(
    g: &Digraph,
    p: usize,
    prev: &Stage,
    cur: &Stage,
) -> Result<RationalMatrix, HomologyError> {
    let split = split_boundary(g, p, cur.paths.clone(), prev.paths.clone());
    let rhs = split.e.mul(&cur.omega)?;
    Ok(solve_all(&prev.omega, &rhs)?)
}

/// The matrices `B(0), ..., B(top)`.
pub fn boundary_matrices(
    g: &Digraph,
    top: usize,
    guard_limit: u128,
) -> Result<Vec<RationalMatrix>, HomologyError> {
    let mut out = Vec::with_capacity(top + 1);
    let mut prev = Stage::unit();
    let mut paths = enumerate_allowed_paths(g, 0);
    for p in 0..=top {
        check_guard(g, p, guard_limit)?;
        let next_paths = extend_paths(g, &paths);
        let cur = Stage::build(g, p, paths);
        out.push(b_matrix(g, p, &prev, &cur)?);
        prev = cur;
        paths = next_paths;
    }
    Ok(out)
}

pub fn betti(g: &Digraph, p: usize) -> Result<HomologyResult, HomologyError> {
    betti_with(g, p, &GeneralConfig::default())
}

/// `beta_p = dim null(B(p)) - rank B(p+1)`.
pub fn betti_with(
    g: &Digraph,
    p: usize,
    config: &GeneralConfig,
) -> Result<HomologyResult, HomologyError> {
    for q in p.saturating_sub(1)..=p + 1 {
        check_guard(g, q, config.guard_limit)?;
    }
    let (prev, paths) = if p == 0 {
        (Stage::unit(), enumerate_allowed_paths(g, 0))
    } else {
        let prev_paths = enumerate_allowed_paths(g, p - 1);
        let paths = extend_paths(g, &prev_paths);
        (Stage::build(g, p - 1, prev_paths), paths)
    };
    let next_paths = extend_paths(g, &paths);
    let cur = Stage::build(g, p, paths);
    let next = Stage::build(g, p + 1, next_paths);
    let b_p = b_matrix(g, p, &prev, &cur)?;
    let b_next = b_matrix(g, p + 1, &cur, &next)?;

    let cycles = null_space_basis(&b_p);
    let boundaries = rank(&b_next);
    let betti = cycles.ncols() - boundaries;

    let basis = config.track.then(|| {
        // cycles not in the span of the boundaries and earlier cycles
        let stacked = RationalMatrix::hstack(&[&b_next, &cycles]).expect("same row count");
        let keep: Vec<usize> = pivot_columns(&stacked)
            .into_iter()
            .filter(|&j| j >= b_next.ncols())
            .map(|j| j - b_next.ncols())
            .collect();
        let reps = cycles.select_cols(&keep).expect("pivot columns in range");
        let coords = cur.omega.mul(&reps).expect("compatible shapes");
        columns_as_chains(p, &cur.paths, &coords)
    });
    debug_assert!(basis.as_ref().is_none_or(|b| b.len() == betti));

    Ok(HomologyResult {
        betti,
        dimension: p,
        algorithm: Algorithm::General,
        basis,
    })
}

/// Checks `dim Omega_p = Σ dim E_{x,y}` over pairs `x ∈ K_i`, `y ∈ K_{i+p}`,
/// where `E_{x,y}` is the space of `(p-2)`-cycles `γ` with `xγy` allowed.
pub fn omega_structure_check(
    g: &StratifiedDigraph,
    p: usize,
    guard_limit: u128,
) -> Result<bool, HomologyError> {
    assert!(p >= 2, "defined for p >= 2");
    let graph = g.graph();
    check_guard(graph, p, guard_limit)?;
    let m_p = omega_matrix(graph, p, &enumerate_allowed_paths(graph, p)).ncols();

    let inner = enumerate_allowed_paths(graph, p - 2);
    let mut total = 0usize;
    let starts = if p <= g.depth() {
        0..g.depth() - p + 1
    } else {
        0..0
    };
    for i in starts {
        for &x in g.layer(i) {
            for &y in g.layer(i + p) {
                let candidates: Vec<&ElementaryPath> = inner
                    .iter()
                    .filter(|path| {
                        graph.has_edge(x, path.first().expect("nonempty"))
                            && graph.has_edge(path.last().expect("nonempty"), y)
                    })
                    .collect();
                total += cycle_dimension(&candidates);
            }
        }
    }
    Ok(total == m_p)
}

/// Dimension of the kernel of the boundary map on the span of `paths`.
fn cycle_dimension(paths: &[&ElementaryPath]) -> usize {
    if paths.is_empty() {
        return 0;
    }
    let chains: Vec<Chain> = paths
        .iter()
        .map(|p| boundary(&Chain::path(p.vertices())))
        .collect();
    let mut faces: BTreeSet<ElementaryPath> = BTreeSet::new();
    for c in &chains {
        faces.extend(c.terms().map(|(f, _)| f.clone()));
    }
    let faces: Vec<ElementaryPath> = faces.into_iter().collect();
    let triplets = chains.iter().enumerate().flat_map(|(j, c)| {
        let faces = &faces;
        c.terms()
            .map(move |(f, v)| (faces.binary_search(f).expect("collected"), j, v.clone()))
    });
    let m = RationalMatrix::from_triplets(faces.len(), chains.len(), triplets);
    chains.len() - rank(&m)
}

/// `B(0)` is the all-ones row.
pub fn b0(g: &Digraph) -> RationalMatrix {
    RationalMatrix::from_triplets(
        1,
        g.vertex_count(),
        (0..g.vertex_count()).map(|j| (0, j, Rational::one())),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::is_cycle;
    use crate::graph::{fixtures, Vertex};
    use crate::linalg::int;

    #[test]
    fn single_edge_boundary() {
        let g = Digraph::from_edges(2, &[(0, 1)]).unwrap();
        let d = boundary_matrix(&g, 1);
        assert_eq!(d.allowed_rows.len(), 2);
        assert_eq!(d.e, RationalMatrix::from_i64(2, 1, &[-1, 1]));
        assert_eq!(d.d_star.nrows(), 0);
    }

    #[test]
    fn diamond_boundary_rows() {
        let d = boundary_matrix(&fixtures::diamond(), 2);
        assert_eq!(
            d.disallowed_rows,
            [ElementaryPath::new(vec![Vertex(0), Vertex(3)])]
        );
        assert_eq!(d.d_star, RationalMatrix::from_i64(1, 2, &[-1, -1]));
        assert_eq!(boundary_matrix(&fixtures::diamond(), 3).columns.len(), 0);
    }

    #[test]
    fn omega_examples() {
        let g = fixtures::diamond();
        let o = omega_basis(&g, 0, false);
        assert_eq!(o.n_matrix, RationalMatrix::identity(4));
        assert_eq!(omega_basis(&g, 1, false).dim(), g.edge_count());
        let o = omega_basis(&g, 2, true);
        assert_eq!(o.dim(), 1);
        let c = &o.basis_chains.unwrap()[0];
        let v = |xs: &[u32]| xs.iter().map(|&x| Vertex(x)).collect::<Vec<_>>();
        let square = Chain::path(&v(&[0, 1, 3])).sub(&Chain::path(&v(&[0, 2, 3])));
        assert!(*c == square || *c == square.scale(&int(-1)));
    }

    #[test]
    fn betti_examples() {
        let single = Digraph::from_edges(1, &[]).unwrap();
        assert_eq!(betti(&single, 0).unwrap().betti, 0);
        assert_eq!(betti(&fixtures::diamond(), 1).unwrap().betti, 0);
        assert_eq!(betti(&fixtures::bipartite(2, 2), 1).unwrap().betti, 1);
        let two = Digraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(betti(&two, 0).unwrap().betti, 1);
    }

    #[test]
    fn tracked_general_basis_is_cycles() {
        let g = fixtures::bipartite(3, 2);
        let cfg = GeneralConfig {
            track: true,
            ..GeneralConfig::default()
        };
        let r = betti_with(&g, 1, &cfg).unwrap();
        assert_eq!(r.betti, 2);
        for c in r.basis.unwrap() {
            assert!(is_cycle(&c, &g));
        }
    }

    #[test]
    fn non_dag_input() {
        // (0,0) is a disallowed face of (0,1,0), so nothing fills the digon
        let g = Digraph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(betti(&g, 1).unwrap().betti, 1);
        let tri = Digraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(betti(&tri, 1).unwrap().betti, 1);
    }

    #[test]
    fn guard_refuses() {
        let g = StratifiedDigraph::fully_connected(&[4, 4, 4]);
        let cfg = GeneralConfig {
            guard_limit: 10,
            track: false,
        };
        assert!(matches!(
            betti_with(g.graph(), 2, &cfg),
            Err(HomologyError::DimensionGuard {
                p: 1,
                predicted: 32,
                limit: 10
            })
        ));
    }

    #[test]
    fn path_counts() {
        let g = StratifiedDigraph::fully_connected(&[2, 3, 4]);
        assert_eq!(count_allowed_paths(g.graph(), 0), 9);
        assert_eq!(count_allowed_paths(g.graph(), 2), 24);
        assert_eq!(count_allowed_paths(g.graph(), 3), 0);
    }

    #[test]
    fn consecutive_b_matrices_compose_to_zero() {
        let g = StratifiedDigraph::fully_connected(&[2, 2, 2, 2]);
        let bs = boundary_matrices(g.graph(), 4, DEFAULT_GUARD_LIMIT).unwrap();
        assert_eq!(bs[0], b0(g.graph()));
        for w in bs.windows(2) {
            assert!(w[0].mul(&w[1]).unwrap().is_zero());
        }
    }

    #[test]
    fn structure_check_small() {
        let g = StratifiedDigraph::fully_connected(&[2, 2, 2]);
        assert!(omega_structure_check(&g, 2, DEFAULT_GUARD_LIMIT).unwrap());
        let g = StratifiedDigraph::fully_connected(&[2, 3, 2, 2]);
        assert!(omega_structure_check(&g, 3, DEFAULT_GUARD_LIMIT).unwrap());
    }
}
