//! Dense matrices over an exact field: rank, 2-minors, small linear solves.
//!
//! Rank is computed by Gaussian elimination with full pivoting and exact
//! division; no floating point is involved anywhere.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, Scalar};

/// A dense row-major matrix with entries in one field context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from row-major data, checking that every entry lives
    /// in `field`.
    pub fn new(field: FieldCtx, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::SizeMismatch(data.len(), rows * cols));
        }
        for s in &data {
            if s.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), s.field().to_string()));
            }
        }
        Ok(Matrix { field, rows, cols, data })
    }

    /// Builds a matrix from integer rows.
    pub fn from_int_rows(field: FieldCtx, rows: &[&[i64]]) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::SizeMismatch(row.len(), c));
            }
            data.extend(row.iter().map(|&v| field.from_int(v)));
        }
        Matrix::new(field, r, c, data)
    }

    pub fn identity(field: FieldCtx, n: usize) -> Matrix {
        let mut data = vec![field.zero(); n * n];
        for i in 0..n {
            data[i * n + i] = field.one();
        }
        Matrix { field, rows: n, cols: n, data }
    }

    pub fn field(&self) -> FieldCtx {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field);
        self.data[r * self.cols + c] = v;
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(self.cols, other.rows));
        }
        let mut data = vec![self.field.zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.mul(other.at(k, j));
                    data[i * other.cols + j] = data[i * other.cols + j].add(&t);
                }
            }
        }
        Matrix::new(self.field, self.rows, other.cols, data)
    }

    /// Applies `self` (rows x cols) to a column vector of length `cols`.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch(v.len(), self.cols));
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (i, slot) in out.iter_mut().enumerate() {
            for (j, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    *slot = slot.add(&self.at(i, j).mul(x));
                }
            }
        }
        Ok(out)
    }

    /// Exact rank via Gaussian elimination with full pivoting.
    pub fn rank(&self) -> usize {
        let mut scratch = self.data.clone();
        rank_in_place(&mut scratch, self.rows, self.cols)
    }

    /// Whether a square matrix is invertible.
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// The 2-minor on columns `i` and `j` of a two-row matrix:
    /// `M[0,i]*M[1,j] - M[0,j]*M[1,i]`. Columns are zero-indexed.
    pub fn minor2(&self, i: usize, j: usize) -> Result<Scalar> {
        if self.rows != 2 {
            return Err(Error::UnsupportedShape(format!(
                "minor2 needs a 2-row matrix, got {} rows",
                self.rows
            )));
        }
        for &c in &[i, j] {
            if c >= self.cols {
                return Err(Error::BadIndex { index: c, limit: self.cols });
            }
        }
        let a = self.at(0, i).mul(self.at(1, j));
        let b = self.at(0, j).mul(self.at(1, i));
        Ok(a.sub(&b))
    }

    /// Solves `A x = b` for a matrix with full column rank, returning `None`
    /// when the system is inconsistent. Used for the small coordinate solves
    /// in parameter extraction.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::SizeMismatch(b.len(), self.rows));
        }
        let cols = self.cols + 1;
        let mut aug = Vec::with_capacity(self.rows * cols);
        for (r, rhs) in b.iter().enumerate() {
            for c in 0..self.cols {
                aug.push(self.at(r, c).clone());
            }
            aug.push(rhs.clone());
        }
        // Forward elimination with row pivoting; never pivot on the b column.
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !aug[r * cols + col].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..cols {
                    aug.swap(row * cols + c, p * cols + c);
                }
            }
            let inv = aug[row * cols + col].inv();
            for c in col..cols {
                aug[row * cols + c] = aug[row * cols + c].mul(&inv);
            }
            for r in 0..self.rows {
                if r != row && !aug[r * cols + col].is_zero() {
                    let f = aug[r * cols + col].clone();
                    for c in col..cols {
                        let t = aug[row * cols + c].mul(&f);
                        aug[r * cols + c] = aug[r * cols + c].sub(&t);
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
        }
        // Inconsistent if a zero row has nonzero rhs.
        for r in row..self.rows {
            if !aug[r * cols + self.cols].is_zero() {
                return Ok(None);
            }
        }
        let field = self.field;
        let mut x = vec![field.zero(); self.cols];
        for (r, c) in pivots {
            x[c] = aug[r * cols + self.cols].clone();
        }
        Ok(Some(x))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// In-place rank of a row-major `rows x cols` buffer. Full pivoting: each
/// step searches the entire remaining submatrix for a nonzero pivot.
pub(crate) fn rank_in_place(data: &mut [Scalar], rows: usize, cols: usize) -> usize {
    debug_assert_eq!(data.len(), rows * cols);
    let mut rank = 0;
    let steps = rows.min(cols);
    while rank < steps {
        // Full pivot search over rows rank.., cols rank..
        let mut pivot = None;
        'search: for r in rank..rows {
            for c in rank..cols {
                if !data[r * cols + c].is_zero() {
                    pivot = Some((r, c));
                    break 'search;
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        if pr != rank {
            for c in 0..cols {
                data.swap(rank * cols + c, pr * cols + c);
            }
        }
        if pc != rank {
            for r in 0..rows {
                data.swap(r * cols + rank, r * cols + pc);
            }
        }
        let inv = data[rank * cols + rank].inv();
        for r in rank + 1..rows {
            if data[r * cols + rank].is_zero() {
                continue;
            }
            let f = data[r * cols + rank].mul(&inv);
            for c in rank..cols {
                let t = data[rank * cols + c].mul(&f);
                data[r * cols + c] = data[r * cols + c].sub(&t);
            }
        }
        rank += 1;
    }
    rank
}
