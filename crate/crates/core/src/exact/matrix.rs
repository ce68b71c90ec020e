use alloc::vec::Vec;

use super::{ExactError, Rational};

/// Dense row-major rational matrix. Sized for desk-scale determinant work;
/// construction rejects anything above [`Matrix::SIZE_LIMIT`] unless built
/// through [`Matrix::from_rows_with_limit`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    /// Default cap on rows and columns. Every instance this crate builds is
    /// at most (d+2)×(d+2) with d ≤ 7, so the cap is generous.
    pub const SIZE_LIMIT: usize = 32;

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, ExactError> {
        Self::from_rows_with_limit(rows, Self::SIZE_LIMIT)
    }

    pub fn from_rows_with_limit(
        rows: Vec<Vec<Rational>>,
        limit: usize,
    ) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r > limit || c > limit {
            return Err(ExactError::SizeLimit(r.max(c), limit));
        }
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(ExactError::EntryCount {
                    rows: r,
                    cols: c,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data,
        })
    }

    /// Builds an r×c matrix from an entry function. Panics if the size
    /// exceeds [`Matrix::SIZE_LIMIT`]; callers in this crate are all bounded
    /// well below it.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(rows <= Self::SIZE_LIMIT && cols <= Self::SIZE_LIMIT);
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    /// Submatrix keeping the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}
