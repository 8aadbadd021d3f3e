use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Sparse matrix in triplet form.
///
/// Entries are keyed by `(row, col)` in a `BTreeMap`, so iteration is always
/// row-major and reproducible. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T = i64> {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{}, {:?})", self.rows, self.cols, self.entries)
    }
}

impl<T> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn check(&self, row: usize, col: usize) -> Result<()> {
        if row >= self.rows || col >= self.cols {
            return Err(Error::OutOfRange {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// Nonzero entries of one row.
    pub fn row(&self, row: usize) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.entries
            .range((row, 0)..(row + 1, 0))
            .map(|(&(_, c), v)| (c, v))
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, mut f: F) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|(&k, v)| (k, f(v)))
                .collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    /// Columns of `self`, each as a list of `(row, value)` pairs.
    pub fn columns(&self) -> Vec<Vec<(usize, T)>> {
        let mut cols = vec![Vec::new(); self.cols];
        for (&(r, c), v) in &self.entries {
            cols[c].push((r, v.clone()));
        }
        cols
    }

    /// The submatrix on the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        let mut row_pos = vec![None; self.rows];
        for (i, &r) in rows.iter().enumerate() {
            if r >= self.rows {
                return Err(Error::OutOfRange {
                    row: r,
                    col: 0,
                    rows: self.rows,
                    cols: self.cols,
                });
            }
            row_pos[r] = Some(i);
        }
        let mut col_pos = vec![None; self.cols];
        for (j, &c) in cols.iter().enumerate() {
            if c >= self.cols {
                return Err(Error::OutOfRange {
                    row: 0,
                    col: c,
                    rows: self.rows,
                    cols: self.cols,
                });
            }
            col_pos[c] = Some(j);
        }
        let mut out = Matrix::zeros(rows.len(), cols.len());
        for (&(r, c), v) in &self.entries {
            if let (Some(i), Some(j)) = (row_pos[r], col_pos[c]) {
                out.entries.insert((i, j), v.clone());
            }
        }
        Ok(out)
    }
}

impl Matrix<i64> {
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), 1);
        }
        m
    }

    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut m = Matrix::zeros(rows, cols);
        for (r, c, v) in triplets {
            m.add_to(r, c, v)?;
        }
        Ok(m)
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::from_triplets(
            rows.len(),
            cols,
            rows.iter()
                .enumerate()
                .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, &v)| (i, j, v))),
        )
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols]; self.rows];
        for (&(r, c), &v) in &self.entries {
            out[r][c] = v;
        }
        out
    }

    pub fn get(&self, row: usize, col: usize) -> Result<i64> {
        self.check(row, col)?;
        Ok(self.entries.get(&(row, col)).copied().unwrap_or(0))
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) -> Result<()> {
        self.check(row, col)?;
        if value == 0 {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    /// Adds `value` to the entry at `(row, col)`.
    pub fn add_to(&mut self, row: usize, col: usize, value: i64) -> Result<()> {
        self.check(row, col)?;
        if value == 0 {
            return Ok(());
        }
        let cur = self.entries.get(&(row, col)).copied().unwrap_or(0);
        let next = cur
            .checked_add(value)
            .ok_or(Error::Overflow("matrix accumulation"))?;
        self.set(row, col, next)
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let left_cols = self.columns();
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for (&(k, j), &b) in &rhs.entries {
            for &(i, a) in &left_cols[k] {
                let p = a.checked_mul(b).ok_or(Error::Overflow("matrix product"))?;
                out.add_to(i, j, p)?;
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = self.clone();
        for (&(r, c), &v) in &rhs.entries {
            out.add_to(r, c, v)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.checked_add(&rhs.scaled(-1)?)
    }

    pub fn scaled(&self, factor: i64) -> Result<Matrix> {
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (&k, &v) in &self.entries {
            let p = v.checked_mul(factor).ok_or(Error::Overflow("scaling"))?;
            if p != 0 {
                out.entries.insert(k, p);
            }
        }
        Ok(out)
    }

    /// True when every column and every row holds exactly one entry, equal to ±1.
    pub fn is_signed_permutation(&self) -> bool {
        if self.rows != self.cols || self.entries.len() != self.rows {
            return false;
        }
        let mut seen_rows = vec![false; self.rows];
        let mut seen_cols = vec![false; self.cols];
        for (&(r, c), &v) in &self.entries {
            if v.abs() != 1 || seen_rows[r] || seen_cols[c] {
                return false;
            }
            seen_rows[r] = true;
            seen_cols[c] = true;
        }
        true
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Matrix> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::Shape("incompatible blocks".into()));
        }
        let mut out = Matrix::zeros(a.rows + c.rows, a.cols + b.cols);
        for (&(r, col), &v) in &a.entries {
            out.entries.insert((r, col), v);
        }
        for (&(r, col), &v) in &b.entries {
            out.entries.insert((r, col + a.cols), v);
        }
        for (&(r, col), &v) in &c.entries {
            out.entries.insert((r + a.rows, col), v);
        }
        for (&(r, col), &v) in &d.entries {
            out.entries.insert((r + a.rows, col + a.cols), v);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn out_of_range_is_an_error() {
        let m = Matrix::zeros(2, 3);
        assert_eq!(m.get(1, 2), Ok(0));
        assert!(matches!(m.get(2, 0), Err(Error::OutOfRange { .. })));
        assert!(matches!(m.get(0, 3), Err(Error::OutOfRange { .. })));
        let mut m = m;
        assert!(m.set(5, 5, 1).is_err());
    }

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_dense(&[vec![1, 2], vec![0, -1]]).unwrap();
        let b = Matrix::from_dense(&[vec![3], vec![4]]).unwrap();
        assert_eq!(a.checked_mul(&b).unwrap().to_dense(), vec![vec![11], vec![-4]]);
        assert_eq!(a.transpose().to_dense(), vec![vec![1, 0], vec![2, -1]]);
        assert!(b.checked_mul(&a).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let a = Matrix::from_dense(&[vec![i64::MAX]]).unwrap();
        assert_eq!(a.checked_add(&a), Err(Error::Overflow("matrix accumulation")));
        assert_eq!(a.scaled(2), Err(Error::Overflow("scaling")));
    }

    #[test]
    fn zero_entries_are_not_stored() {
        let mut m = Matrix::from_dense(&[vec![1, -1]]).unwrap();
        m.add_to(0, 0, -1).unwrap();
        assert_eq!(m.nnz(), 1);
        assert!(!m.is_signed_permutation());
    }
}
