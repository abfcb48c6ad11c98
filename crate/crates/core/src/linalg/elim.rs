//! Gauss-Jordan elimination to reduced row-echelon form.
//!
//! The RREF of a matrix is unique, so every quantity read off it (rank,
//! the null-space basis with one column per free column, solutions of full
//! column-rank systems) is independent of the order rows are processed in.
//! Rows are fed sparsest first, which keeps fill-in low on the very sparse
//! boundary matrices.

use std::collections::BTreeMap;

use num_traits::One;

use super::matrix::{axpy, SparseRow};
use super::{LinalgError, Rational, RationalMatrix};

/// Pivot rows keyed by pivot column. Each row is normalized (pivot entry 1)
/// and has zeros in every other pivot column.
struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

/// A row whose leading entry lies at or beyond the pivot limit.
struct Overflow(SparseRow);

impl Echelon {
    fn build(
        rows: impl IntoIterator<Item = SparseRow>,
        pivot_limit: usize,
        ops: &mut u64,
    ) -> Result<Self, Overflow> {
        let mut rows: Vec<SparseRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        rows.sort_by_key(Vec::len);
        let mut ech = Echelon {
            pivots: BTreeMap::new(),
        };
        for row in rows {
            ech.insert(row, pivot_limit, ops)?;
        }
        Ok(ech)
    }

    fn insert(
        &mut self,
        row: SparseRow,
        pivot_limit: usize,
        ops: &mut u64,
    ) -> Result<(), Overflow> {
        let hits: Vec<(usize, Rational)> = row
            .iter()
            .filter(|(j, _)| self.pivots.contains_key(j))
            .map(|(j, v)| (*j, -v))
            .collect();
        let mut row = row;
        for (col, factor) in &hits {
            let pivot = &self.pivots[col];
            *ops += pivot.len() as u64;
            row = axpy(&row, factor, pivot);
        }
        let Some((lead, lead_val)) = row.first().cloned() else {
            return Ok(());
        };
        if lead >= pivot_limit {
            return Err(Overflow(row));
        }
        if !lead_val.is_one() {
            let inv = lead_val.recip();
            *ops += row.len() as u64;
            for (_, v) in &mut row {
                *v *= &inv;
            }
        }
        for other in self.pivots.values_mut() {
            if let Ok(k) = other.binary_search_by_key(&lead, |(c, _)| *c) {
                let factor = -other[k].1.clone();
                *ops += row.len() as u64;
                *other = axpy(other, &factor, &row);
            }
        }
        self.pivots.insert(lead, row);
        Ok(())
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rank(m: &RationalMatrix) -> usize {
    rank_counted(m, &mut 0)
}

pub fn rank_counted(m: &RationalMatrix, ops: &mut u64) -> usize {
    match Echelon::build(m.rows().iter().cloned(), usize::MAX, ops) {
        Ok(e) => e.rank(),
        Err(_) => unreachable!("no pivot limit"),
    }
}

/// Basis of `{v : m v = 0}` read off the RREF: one column per free column
/// of `m`, in ascending order, with a 1 in that free position.
///
/// A matrix with no columns has the trivial null space (zero basis
/// columns); a matrix with no rows has the whole column space as null space
/// (identity basis).
pub fn null_space_basis(m: &RationalMatrix) -> RationalMatrix {
    null_space_basis_counted(m, &mut 0)
}

pub fn null_space_basis_counted(m: &RationalMatrix, ops: &mut u64) -> RationalMatrix {
    let n = m.ncols();
    let ech = match Echelon::build(m.rows().iter().cloned(), usize::MAX, ops) {
        Ok(e) => e,
        Err(_) => unreachable!("no pivot limit"),
    };
    let mut basis: Vec<SparseRow> = Vec::new();
    let mut free_index = vec![usize::MAX; n];
    for (j, slot) in free_index.iter_mut().enumerate() {
        if !ech.pivots.contains_key(&j) {
            *slot = basis.len();
            basis.push(vec![(j, Rational::one())]);
        }
    }
    for (&pc, row) in &ech.pivots {
        for (j, v) in row.iter().skip(1) {
            basis[free_index[*j]].push((pc, -v));
        }
    }
    RationalMatrix::from_columns(n, &basis)
}

/// Returns `X` with `a X = b`.
///
/// The system is reduced as the augmented matrix `[a | b]` with pivots
/// restricted to the columns of `a`; when `a` has dependent columns the free
/// unknowns are set to zero.
pub fn solve_all(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
    solve_all_counted(a, b, &mut 0)
}

pub fn solve_all_counted(
    a: &RationalMatrix,
    b: &RationalMatrix,
    ops: &mut u64,
) -> Result<RationalMatrix, LinalgError> {
    if a.nrows() != b.nrows() {
        return Err(LinalgError::DimensionMismatch {
            left: (a.nrows(), a.ncols()),
            right: (b.nrows(), b.ncols()),
        });
    }
    let aug = RationalMatrix::hstack(&[a, b])?;
    let k = a.ncols();
    let ech = Echelon::build(aug.into_rows(), k, ops).map_err(|Overflow(row)| {
        LinalgError::Inconsistent {
            column: row[0].0 - k,
        }
    })?;
    let triplets = ech.pivots.iter().flat_map(|(&pc, row)| {
        row.iter()
            .filter(|(j, _)| *j >= k)
            .map(move |(j, v)| (pc, j - k, v.clone()))
    });
    Ok(RationalMatrix::from_triplets(k, b.ncols(), triplets))
}

/// Pivot columns of the RREF, ascending: the lexicographically first
/// maximal independent set of columns.
pub fn pivot_columns(m: &RationalMatrix) -> Vec<usize> {
    match Echelon::build(m.rows().iter().cloned(), usize::MAX, &mut 0) {
        Ok(e) => e.pivots.into_keys().collect(),
        Err(_) => unreachable!("no pivot limit"),
    }
}

/// Dimension of `{v : m v = 0}`.
pub fn nullity(m: &RationalMatrix) -> usize {
    m.ncols() - rank(m)
}
