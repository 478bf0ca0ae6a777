//! Projective points and point configurations.
//!
//! A configuration is an `n x m` matrix over a field with no zero column,
//! read as an `m`-tuple of points of projective `(n-1)`-space. Columns are
//! stored in canonical form: scaled so the first nonzero coordinate is 1,
//! which makes projective equality a coordinate comparison.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, Scalar};
use crate::linalg::Matrix;

/// A point of projective space in leading-one canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<Scalar>,
}

impl ProjectivePoint {
    /// Scales a nonzero vector so its first nonzero coordinate is 1.
    ///
    /// Idempotent, and constant on nonzero scalar multiples.
    pub fn normalize(coords: Vec<Scalar>) -> Result<ProjectivePoint> {
        if coords.is_empty() {
            return Err(Error::ZeroPoint);
        }
        let field = coords[0].field();
        for c in &coords {
            if c.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), c.field().to_string()));
            }
        }
        let Some(lead) = coords.iter().position(|c| !c.is_zero()) else {
            return Err(Error::ZeroPoint);
        };
        let inv = coords[lead].inv();
        let coords = coords.iter().map(|c| c.mul(&inv)).collect();
        Ok(ProjectivePoint { coords })
    }

    /// Normalizes an integer vector into the given field.
    pub fn from_ints(field: FieldCtx, coords: &[i64]) -> Result<ProjectivePoint> {
        ProjectivePoint::normalize(coords.iter().map(|&v| field.from_int(v)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn field(&self) -> FieldCtx {
        self.coords[0].field()
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(":"))
    }
}

/// An `m`-tuple of points of projective `(n-1)`-space.
///
/// `m` is capped at 16 so that subsets of the column index set fit in a
/// bitmask table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    field: FieldCtx,
    n: usize,
    m: usize,
    columns: Vec<ProjectivePoint>,
}

impl Configuration {
    pub fn new(field: FieldCtx, n: usize, columns: Vec<ProjectivePoint>) -> Result<Configuration> {
        if n == 0 || columns.is_empty() {
            return Err(Error::UnsupportedShape("need n >= 1 and m >= 1".into()));
        }
        if columns.len() > 16 {
            return Err(Error::UnsupportedShape(format!(
                "m = {} exceeds the bitmask limit of 16 columns",
                columns.len()
            )));
        }
        for col in &columns {
            if col.dim() != n {
                return Err(Error::SizeMismatch(col.dim(), n));
            }
            if col.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), col.field().to_string()));
            }
        }
        let m = columns.len();
        Ok(Configuration { field, n, m, columns })
    }

    /// Builds a configuration from integer column vectors.
    pub fn from_int_columns(field: FieldCtx, n: usize, cols: &[&[i64]]) -> Result<Configuration> {
        let columns = cols
            .iter()
            .map(|c| {
                if c.len() != n {
                    return Err(Error::SizeMismatch(c.len(), n));
                }
                ProjectivePoint::from_ints(field, c)
            })
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(field, n, columns)
    }

    pub fn field(&self) -> FieldCtx {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn columns(&self) -> &[ProjectivePoint] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> &ProjectivePoint {
        &self.columns[i]
    }

    /// The configuration as an `n x m` matrix (columns are the points).
    pub fn as_matrix(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.n * self.m);
        for r in 0..self.n {
            for col in &self.columns {
                data.push(col.coords()[r].clone());
            }
        }
        Matrix::new(self.field, self.n, self.m, data).expect("columns share the field context")
    }

    /// Acts by an invertible `n x n` matrix on every column.
    pub fn transformed(&self, g: &Matrix) -> Result<Configuration> {
        if g.rows() != self.n || g.cols() != self.n {
            return Err(Error::SizeMismatch(g.rows(), self.n));
        }
        let columns = self
            .columns
            .iter()
            .map(|col| ProjectivePoint::normalize(g.apply(col.coords())?))
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(self.field, self.n, columns)
    }

    /// Pads every column with zeros up to dimension `n_new`.
    ///
    /// The ranks of all column subsets, and hence the whole classification
    /// data, are unchanged.
    pub fn embed(&self, n_new: usize) -> Result<Configuration> {
        if n_new < self.n {
            return Err(Error::BadDimension { from: self.n, to: n_new });
        }
        let zero = self.field.zero();
        let columns = self
            .columns
            .iter()
            .map(|col| {
                let mut coords = col.coords().to_vec();
                coords.resize(n_new, zero.clone());
                // Already normalized: padding does not move the leading one.
                ProjectivePoint::normalize(coords)
            })
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(self.field, n_new, columns)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
