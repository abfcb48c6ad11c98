use num_traits::{One, Zero};

use super::{LinalgError, Rational};

/// Sorted `(column, value)` pairs with no explicit zeros.
pub type SparseRow = Vec<(usize, Rational)>;

/// Exact matrix stored as sparse rows.
///
/// Rows and columns are addressed by position; callers that need semantic
/// labels (elementary paths, vertices) keep the label list alongside. Either
/// dimension may be zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseRow>,
}

impl RationalMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            nrows: n,
            ncols: n,
            rows: (0..n).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets<I>(nrows: usize, ncols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut rows: Vec<SparseRow> = vec![Vec::new(); nrows];
        for (i, j, v) in triplets {
            assert!(i < nrows && j < ncols, "triplet ({i}, {j}) out of bounds");
            rows[i].push((j, v));
        }
        for row in &mut rows {
            *row = canonical_row(std::mem::take(row));
        }
        Self { nrows, ncols, rows }
    }

    /// Builds from sparse columns given as `(row, value)` lists.
    pub fn from_columns(nrows: usize, columns: &[SparseRow]) -> Self {
        let triplets = columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v.clone())));
        Self::from_triplets(nrows, columns.len(), triplets)
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseRow>) -> Self {
        let rows: Vec<SparseRow> = rows.into_iter().map(canonical_row).collect();
        debug_assert!(rows.iter().all(|r| r.iter().all(|(j, _)| *j < ncols)));
        Self {
            nrows: rows.len(),
            ncols,
            rows,
        }
    }

    pub fn from_dense(nrows: usize, ncols: usize, values: &[Rational]) -> Self {
        assert_eq!(values.len(), nrows * ncols);
        Self::from_triplets(
            nrows,
            ncols,
            values
                .iter()
                .enumerate()
                .map(|(k, v)| (k / ncols.max(1), k % ncols.max(1), v.clone())),
        )
    }

    pub fn from_i64(nrows: usize, ncols: usize, values: &[i64]) -> Self {
        let values: Vec<Rational> = values.iter().map(|&v| super::int(v)).collect();
        Self::from_dense(nrows, ncols, &values)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<SparseRow> {
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        let row = &self.rows[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => row[k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn columns(&self) -> Vec<SparseRow> {
        let mut cols: Vec<SparseRow> = vec![Vec::new(); self.ncols];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                cols[*j].push((i, v.clone()));
            }
        }
        cols
    }

    pub fn column(&self, j: usize) -> SparseRow {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, row)| {
                row.binary_search_by_key(&j, |(c, _)| *c)
                    .ok()
                    .map(|k| (i, row[k].1.clone()))
            })
            .collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        (0..self.nrows)
            .map(|i| (0..self.ncols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self {
            nrows: self.ncols,
            ncols: self.nrows,
            rows: self.columns(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|(j, v)| (*j, -v)).collect())
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.ncols != rhs.nrows {
            return Err(LinalgError::DimensionMismatch {
                left: (self.nrows, self.ncols),
                right: (rhs.nrows, rhs.ncols),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: SparseRow = Vec::new();
                for (k, a) in row {
                    acc = axpy(&acc, a, &rhs.rows[*k]);
                }
                acc
            })
            .collect();
        Ok(Self {
            nrows: self.nrows,
            ncols: rhs.ncols,
            rows,
        })
    }

    /// `[m_1, m_2, ...]`; all blocks must share the row count.
    pub fn hstack(blocks: &[&Self]) -> Result<Self, LinalgError> {
        let Some(first) = blocks.first() else {
            return Ok(Self::zeros(0, 0));
        };
        let nrows = first.nrows;
        let mut rows: Vec<SparseRow> = vec![Vec::new(); nrows];
        let mut offset = 0;
        for b in blocks {
            if b.nrows != nrows {
                return Err(LinalgError::DimensionMismatch {
                    left: (nrows, offset),
                    right: (b.nrows, b.ncols),
                });
            }
            for (dst, src) in rows.iter_mut().zip(&b.rows) {
                dst.extend(src.iter().map(|(j, v)| (j + offset, v.clone())));
            }
            offset += b.ncols;
        }
        Ok(Self {
            nrows,
            ncols: offset,
            rows,
        })
    }

    /// Stacks blocks on top of each other; all blocks must share the column count.
    pub fn vstack(blocks: &[&Self]) -> Result<Self, LinalgError> {
        let Some(first) = blocks.first() else {
            return Ok(Self::zeros(0, 0));
        };
        let ncols = first.ncols;
        let mut rows = Vec::new();
        for b in blocks {
            if b.ncols != ncols {
                return Err(LinalgError::DimensionMismatch {
                    left: (rows.len(), ncols),
                    right: (b.nrows, b.ncols),
                });
            }
            rows.extend(b.rows.iter().cloned());
        }
        Ok(Self {
            nrows: rows.len(),
            ncols,
            rows,
        })
    }

    /// Keeps the given rows, in the given order.
    pub fn select_rows(&self, indices: &[usize]) -> Result<Self, LinalgError> {
        check_labels(indices, self.nrows)?;
        Ok(Self {
            nrows: indices.len(),
            ncols: self.ncols,
            rows: indices.iter().map(|&i| self.rows[i].clone()).collect(),
        })
    }

    /// Removes the given rows, preserving the order of the rest.
    pub fn drop_rows(&self, indices: &[usize]) -> Result<Self, LinalgError> {
        check_labels(indices, self.nrows)?;
        let keep: Vec<usize> = complement(indices, self.nrows);
        self.select_rows(&keep)
    }

    /// Keeps the given columns, in the given order.
    pub fn select_cols(&self, indices: &[usize]) -> Result<Self, LinalgError> {
        check_labels(indices, self.ncols)?;
        let mut new_index = vec![usize::MAX; self.ncols];
        for (new, &old) in indices.iter().enumerate() {
            new_index[old] = new;
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let row: SparseRow = r
                    .iter()
                    .filter(|(j, _)| new_index[*j] != usize::MAX)
                    .map(|(j, v)| (new_index[*j], v.clone()))
                    .collect();
                canonical_row(row)
            })
            .collect();
        Ok(Self {
            nrows: self.nrows,
            ncols: indices.len(),
            rows,
        })
    }

    /// Removes the given columns, preserving the order of the rest.
    pub fn drop_cols(&self, indices: &[usize]) -> Result<Self, LinalgError> {
        check_labels(indices, self.ncols)?;
        let keep = complement(indices, self.ncols);
        self.select_cols(&keep)
    }
}

fn check_labels(indices: &[usize], len: usize) -> Result<(), LinalgError> {
    match indices.iter().find(|&&i| i >= len) {
        Some(&index) => Err(LinalgError::UnknownLabel { index, len }),
        None => Ok(()),
    }
}

fn complement(indices: &[usize], len: usize) -> Vec<usize> {
    let mut dropped = vec![false; len];
    for &i in indices {
        dropped[i] = true;
    }
    (0..len).filter(|&i| !dropped[i]).collect()
}

/// Sorts by column, sums duplicates and drops zeros.
pub(crate) fn canonical_row(mut row: SparseRow) -> SparseRow {
    row.sort_by_key(|(j, _)| *j);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (j, v) in row {
        match out.last_mut() {
            Some((last, acc)) if *last == j => *acc += v,
            _ => out.push((j, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `x + a*y` for sorted sparse rows.
pub(crate) fn axpy(x: &[(usize, Rational)], a: &Rational, y: &[(usize, Rational)]) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut k) = (0, 0);
    while i < x.len() || k < y.len() {
        match (x.get(i), y.get(k)) {
            (Some((jx, vx)), Some((jy, vy))) if jx == jy => {
                let v = vx + a * vy;
                if !v.is_zero() {
                    out.push((*jx, v));
                }
                i += 1;
                k += 1;
            }
            (Some((jx, vx)), Some((jy, _))) if jx < jy => {
                out.push((*jx, vx.clone()));
                i += 1;
            }
            (Some((jx, vx)), None) => {
                out.push((*jx, vx.clone()));
                i += 1;
            }
            (_, Some((jy, vy))) => {
                out.push((*jy, a * vy));
                k += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}
