//! Formal linear combinations of elementary paths.
//!
//! A chain of degree `p >= 0` is a finite sum of elementary `p`-paths
//! `(x_0, ..., x_p)` with rational coefficients. Degree `-1` chains are
//! scalars, represented as multiples of the empty path; below that every
//! chain is zero.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Digraph, Vertex};
use crate::linalg::{format_fraction, parse_rational, Rational, RationalMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("term {0} is not an allowed path")]
    DisallowedTerm(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("bad coefficient: {0}")]
    BadCoefficient(String),
    #[error("term of length {len} in a chain of degree {degree}")]
    DegreeMismatch { degree: i32, len: usize },
}

/// A vertex sequence. The empty sequence is the scalar unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementaryPath(Vec<Vertex>);

impl ElementaryPath {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Self(vertices)
    }

    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    /// Path length `p` (vertex count minus one); `-1` for the unit.
    pub fn degree(&self) -> i32 {
        self.0.len() as i32 - 1
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    /// Every consecutive pair is an edge of `g`. Vertices and the unit are
    /// always allowed.
    pub fn is_allowed_in(&self, g: &Digraph) -> bool {
        self.0.windows(2).all(|w| g.has_edge(w[0], w[1])) && self.0.iter().all(|&v| g.contains(v))
    }

    pub fn extended(&self, v: Vertex) -> Self {
        let mut vs = Vec::with_capacity(self.0.len() + 1);
        vs.extend_from_slice(&self.0);
        vs.push(v);
        Self(vs)
    }

    /// Concatenation.
    pub fn join(&self, other: &Self) -> Self {
        let mut vs = Vec::with_capacity(self.0.len() + other.0.len());
        vs.extend_from_slice(&self.0);
        vs.extend_from_slice(&other.0);
        Self(vs)
    }

    /// The face with position `i` deleted.
    pub fn face(&self, i: usize) -> Self {
        let mut vs = self.0.clone();
        vs.remove(i);
        Self(vs)
    }

    pub fn display<'a>(&'a self, g: &'a Digraph) -> impl fmt::Display + 'a {
        PathDisplay { path: self, g }
    }
}

struct PathDisplay<'a> {
    path: &'a ElementaryPath,
    g: &'a Digraph,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.path.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.g.label(*v))?;
        }
        write!(f, ")")
    }
}

/// Chain of a fixed degree; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    degree: i32,
    terms: BTreeMap<ElementaryPath, Rational>,
}

impl Chain {
    pub fn zero(degree: i32) -> Self {
        Self {
            degree: degree.max(-2),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(c: Rational) -> Self {
        Self::from_terms(-1, [(ElementaryPath::unit(), c)])
    }

    /// `1 * (v_0, ..., v_p)`.
    pub fn path(vertices: &[Vertex]) -> Self {
        let path = ElementaryPath::new(vertices.to_vec());
        Self::from_terms(path.degree(), [(path, Rational::one())])
    }

    pub fn vertex(v: Vertex) -> Self {
        Self::path(&[v])
    }

    /// Sums repeated paths. Panics if a path has the wrong length.
    pub fn from_terms<I>(degree: i32, terms: I) -> Self
    where
        I: IntoIterator<Item = (ElementaryPath, Rational)>,
    {
        let mut c = Self::zero(degree);
        for (path, coeff) in terms {
            c.add_term(path, coeff);
        }
        c
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic path order.
    pub fn terms(&self) -> impl Iterator<Item = (&ElementaryPath, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, path: &ElementaryPath) -> Rational {
        self.terms.get(path).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, path: ElementaryPath, coeff: Rational) {
        if self.degree < -1 || coeff.is_zero() {
            return;
        }
        assert_eq!(
            path.degree(),
            self.degree,
            "path length does not match chain degree"
        );
        match self.terms.entry(path) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Chain, c: &Rational) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        assert_eq!(self.degree, other.degree, "degree mismatch");
        for (path, coeff) in &other.terms {
            self.add_term(path.clone(), coeff * c);
        }
    }

    pub fn add(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, c: &Rational) -> Chain {
        if c.is_zero() {
            return Chain::zero(self.degree);
        }
        Chain {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// `self` joined with the single vertex `v`, i.e. every path extended by `v`.
    pub fn append_vertex(&self, v: Vertex) -> Chain {
        Chain {
            degree: (self.degree + 1).max(-2),
            terms: if self.degree < -1 {
                BTreeMap::new()
            } else {
                self.terms
                    .iter()
                    .map(|(p, c)| (p.extended(v), c.clone()))
                    .collect()
            },
        }
    }

    pub fn to_record(&self, g: &Digraph) -> ChainRecord {
        ChainRecord {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermRecord {
                    path: p.0.iter().map(|&v| g.label(v).to_string()).collect(),
                    coeff: format_fraction(c),
                })
                .collect(),
        }
    }
}

/// Serialized chain: `{degree, terms: [{path: [v...], coeff: "num/den"}]}`
/// with terms in lexicographic vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRecord {
    pub degree: i32,
    pub terms: Vec<TermRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub path: Vec<String>,
    pub coeff: String,
}

impl ChainRecord {
    pub fn to_chain(&self, g: &Digraph) -> Result<Chain, ChainError> {
        let mut c = Chain::zero(self.degree);
        for t in &self.terms {
            let vertices = t
                .path
                .iter()
                .map(|l| {
                    g.vertex_by_label(l)
                        .ok_or_else(|| ChainError::UnknownVertex(l.clone()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if vertices.len() as i32 - 1 != self.degree {
                return Err(ChainError::DegreeMismatch {
                    degree: self.degree,
                    len: vertices.len(),
                });
            }
            let coeff =
                parse_rational(&t.coeff).map_err(|e| ChainError::BadCoefficient(e.to_string()))?;
            c.add_term(ElementaryPath::new(vertices), coeff);
        }
        Ok(c)
    }
}

/// `∂(x_0..x_p) = Σ (-1)^i (x_0..x̂_i..x_p)` for `p > 0`, `∂(x) = 1`, and
/// zero below degree 0.
pub fn boundary(c: &Chain) -> Chain {
    let mut out = Chain::zero(c.degree - 1);
    if c.degree < 0 {
        return out;
    }
    for (path, coeff) in &c.terms {
        if c.degree == 0 {
            out.add_term(ElementaryPath::unit(), coeff.clone());
            continue;
        }
        for i in 0..path.0.len() {
            let sign = if i % 2 == 0 { coeff.clone() } else { -coeff };
            out.add_term(path.face(i), sign);
        }
    }
    out
}

/// Bilinear extension of path concatenation; degree `p + q + 1`.
pub fn join(a: &Chain, b: &Chain) -> Chain {
    let mut out = Chain::zero(a.degree + b.degree + 1);
    if a.degree < -1 || b.degree < -1 {
        return out;
    }
    for (pa, ca) in &a.terms {
        for (pb, cb) in &b.terms {
            out.add_term(pa.join(pb), ca * cb);
        }
    }
    out
}

/// All allowed elementary `p`-paths in lexicographic order, built by
/// extending allowed `(p-1)`-paths along out-edges.
pub fn enumerate_allowed_paths(g: &Digraph, p: usize) -> Vec<ElementaryPath> {
    let mut paths: Vec<ElementaryPath> = g
        .vertices()
        .iter()
        .map(|&v| ElementaryPath::new(vec![v]))
        .collect();
    for _ in 0..p {
        paths = extend_paths(g, &paths);
        if paths.is_empty() {
            break;
        }
    }
    paths
}

/// One extension step; preserves lexicographic order.
pub fn extend_paths(g: &Digraph, paths: &[ElementaryPath]) -> Vec<ElementaryPath> {
    paths
        .iter()
        .flat_map(|path| {
            let last = path.last().expect("nonempty path");
            g.succ(last).iter().map(move |&v| path.extended(v))
        })
        .collect()
}

/// The set of `s`-th vertices over the terms; empty outside `0..=degree`.
pub fn cross_section(c: &Chain, s: i64) -> BTreeSet<Vertex> {
    if s < 0 || s > c.degree as i64 {
        return BTreeSet::new();
    }
    c.terms.keys().map(|p| p.0[s as usize]).collect()
}

/// Subgraph of `g` spanned by the vertices and steps of the terms.
pub fn support(c: &Chain, g: &Digraph) -> Result<Digraph, ChainError> {
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for path in c.terms.keys() {
        if !path.is_allowed_in(g) {
            return Err(ChainError::DisallowedTerm(path.display(g).to_string()));
        }
        vertices.extend(path.0.iter().copied());
        edges.extend(path.0.windows(2).map(|w| (w[0], w[1])));
    }
    let vertices: Vec<Vertex> = vertices.into_iter().collect();
    let edges: Vec<(Vertex, Vertex)> = edges.into_iter().collect();
    Ok(g.subgraph(&vertices, &edges))
}

/// Every term allowed and zero boundary.
pub fn is_cycle(c: &Chain, g: &Digraph) -> bool {
    c.terms.keys().all(|p| p.is_allowed_in(g)) && boundary(c).is_zero()
}

/// Splits into the allowed part and the disallowed part.
pub fn split_allowed(c: &Chain, g: &Digraph) -> (Chain, Chain) {
    let mut allowed = Chain::zero(c.degree);
    let mut disallowed = Chain::zero(c.degree);
    for (path, coeff) in &c.terms {
        let target = if path.is_allowed_in(g) {
            &mut allowed
        } else {
            &mut disallowed
        };
        target.add_term(path.clone(), coeff.clone());
    }
    (allowed, disallowed)
}

/// Coefficient matrix of `chains` (one column per chain) over the union of
/// their paths, which label the rows in lexicographic order.
pub fn coefficient_matrix(chains: &[Chain]) -> (Vec<ElementaryPath>, RationalMatrix) {
    let paths: BTreeSet<&ElementaryPath> = chains.iter().flat_map(|c| c.terms.keys()).collect();
    let paths: Vec<ElementaryPath> = paths.into_iter().cloned().collect();
    let index: BTreeMap<&ElementaryPath, usize> =
        paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let index = &index;
    let triplets = chains
        .iter()
        .enumerate()
        .flat_map(|(j, c)| c.terms.iter().map(move |(p, v)| (index[p], j, v.clone())));
    let m = RationalMatrix::from_triplets(paths.len(), chains.len(), triplets);
    (paths, m)
}
