//! Dense matrices over an exact scalar, with reduced row echelon form,
//! rank and null-space extraction.
//!
//! The row reduction here is fraction-normalizing Gauss-Jordan: pivot rows
//! are divided through, so over rationals every pivot is exactly 1 and the
//! result is *the* canonical RREF of the matrix. That canonicity is what
//! lets two bases of the same subspace be compared by a second RREF pass.

use std::fmt;
use std::ops::{Index, IndexMut};
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix. Zero rows or columns are legal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Builds from explicit rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: nrows, cols: ncols, entries: rows.into_iter().flatten().collect() })
    }

    /// Convenience for small integer test fixtures and block patterns.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix::from_fn(nrows, ncols, |r, c| T::from_int(rows[r][c]))
    }

    /// Column vector from a slice of coordinates.
    pub fn column(coords: Vec<T>) -> Self {
        let rows = coords.len();
        Matrix { rows, cols: 1, entries: coords }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// All entries as one row-major row vector (used for span comparisons).
    pub fn flatten_row(&self) -> Vec<T> {
        self.entries.clone()
    }

    /// Reshapes a row-major entry list into an `rows x cols` matrix.
    pub fn from_flat(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries cannot fill {rows}x{cols}",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Exact matrix product.
    pub fn matmul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, f: &T) -> Matrix<T> {
        Matrix::from_fn(self.rows, self.cols, |r, c| f.clone() * self[(r, c)].clone())
    }

    pub fn add(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |r, c| {
            self[(r, c)].clone() + rhs[(r, c)].clone()
        }))
    }

    /// Reduced row echelon form together with the pivot columns
    /// (strictly increasing).
    ///
    /// Rows are folded into a reduced basis one at a time, which skips the
    /// many zero and near-zero rows of derivation systems without changing
    /// the result: RREF is unique, zero rows sink to the bottom.
    pub fn rref(&self) -> (Matrix<T>, Vec<usize>) {
        let mut pivots: Vec<usize> = Vec::new();
        let mut basis: Vec<Vec<T>> = Vec::new();

        for r in 0..self.rows {
            let mut row = self.row(r).to_vec();

            for (b_row, &p) in basis.iter().zip(pivots.iter()) {
                if row[p].is_zero() {
                    continue;
                }
                let f = std::mem::replace(&mut row[p], T::zero());
                for c in p + 1..self.cols {
                    if !b_row[c].is_zero() {
                        row[c] = row[c].clone() - f.clone() * b_row[c].clone();
                    }
                }
            }

            let Some(lead) = row.iter().position(|x| !x.is_zero()) else {
                continue;
            };

            let pivot = std::mem::replace(&mut row[lead], T::one());
            for c in lead + 1..self.cols {
                if !row[c].is_zero() {
                    row[c] = row[c].clone() / pivot.clone();
                }
            }

            for b_row in basis.iter_mut() {
                if b_row[lead].is_zero() {
                    continue;
                }
                let f = std::mem::replace(&mut b_row[lead], T::zero());
                for c in lead + 1..self.cols {
                    if !row[c].is_zero() {
                        b_row[c] = b_row[c].clone() - f.clone() * row[c].clone();
                    }
                }
            }

            let at = pivots.partition_point(|&q| q < lead);
            pivots.insert(at, lead);
            basis.insert(at, row);
        }

        let mut out = Matrix::zeros(self.rows, self.cols);
        for (i, row) in basis.into_iter().enumerate() {
            for (c, v) in row.into_iter().enumerate() {
                out.entries[i * self.cols + c] = v;
            }
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}` as column vectors, in the canonical
    /// RREF parameterization: one vector per free column, that free
    /// variable set to 1 and all other free variables to 0.
    pub fn null_space(&self) -> Vec<Matrix<T>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut x = vec![T::zero(); self.cols];
            x[free] = T::one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -r[(i, free)].clone();
            }
            out.push(Matrix::column(x));
        }
        out
    }
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of {}x{}", self.rows, self.cols);
        &self.entries[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of {}x{}", self.rows, self.cols);
        &mut self.entries[r * self.cols + c]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> =
                self.entries[r * self.cols..(r + 1) * self.cols].iter().map(T::to_string).collect();
            writeln!(f, "[{}]", line.join(", "))?;
        }
        Ok(())
    }
}

/// Stacks each matrix as one flattened row. All matrices must share a shape.
pub fn stack_flattened<T: Scalar>(mats: &[Matrix<T>]) -> Result<Matrix<T>> {
    let Some(first) = mats.first() else {
        return Ok(Matrix::zeros(0, 0));
    };
    let (r0, c0) = (first.rows(), first.cols());
    let mut rows = Vec::with_capacity(mats.len());
    for m in mats {
        if m.rows() != r0 || m.cols() != c0 {
            return Err(Error::DimensionMismatch("stacked matrices differ in shape".into()));
        }
        rows.push(m.flatten_row());
    }
    Matrix::from_rows(rows)
}

/// Canonical form of the span of a set of equal-shaped matrices: the
/// nonzero rows of the RREF of their flattened stack.
pub fn span_canonical<T: Scalar>(mats: &[Matrix<T>]) -> Result<Matrix<T>> {
    let stacked = stack_flattened(mats)?;
    let (r, pivots) = stacked.rref();
    let mut rows = Vec::with_capacity(pivots.len());
    for i in 0..pivots.len() {
        rows.push(r.row(i).to_vec());
    }
    Matrix::from_rows(rows)
}

/// Do two lists of equal-shaped matrices span the same subspace?
pub fn spans_equal<T: Scalar>(a: &[Matrix<T>], b: &[Matrix<T>]) -> Result<bool> {
    if a.is_empty() && b.is_empty() {
        return Ok(true);
    }
    if a.is_empty() || b.is_empty() {
        // One side has only the zero subspace.
        return Ok(a.iter().chain(b).all(Matrix::is_zero));
    }
    Ok(span_canonical(a)? == span_canonical(b)?)
}

/// Is `d` in the span of `mats`?
pub fn in_span<T: Scalar>(mats: &[Matrix<T>], d: &Matrix<T>) -> Result<bool> {
    if d.is_zero() {
        return Ok(true);
    }
    let base = stack_flattened(mats)?;
    let base_rank = base.rank();
    let mut rows: Vec<Vec<T>> = (0..base.rows()).map(|r| base.row(r).to_vec()).collect();
    rows.push(d.flatten_row());
    Ok(Matrix::from_rows(rows)?.rank() == base_rank)
}

/// Parses one rational-literal CSV row per line; empty input gives `0x0`.
pub fn parse_matrix_csv<T>(text: &str) -> Result<Matrix<T>>
where
    T: Scalar + FromStr,
{
    let mut rows: Vec<Vec<T>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for tok in line.split(',') {
            let tok = tok.trim();
            let v = tok.parse::<T>().map_err(|_| {
                Error::MalformedInput(format!("line {}: bad entry {tok:?}", lineno + 1))
            })?;
            row.push(v);
        }
        rows.push(row);
    }
    Matrix::from_rows(rows)
        .map_err(|_| Error::MalformedInput("rows of unequal length".into()))
}

/// One CSV line per row, entries in the same `p/q` literal form the parser
/// accepts.
pub fn matrix_to_csv<T: fmt::Display>(m: &Matrix<T>) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let line: Vec<String> = (0..m.cols()).map(|c| m[(r, c)].to_string()).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}
