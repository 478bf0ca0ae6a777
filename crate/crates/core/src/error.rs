//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by the exact-arithmetic and classification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different field contexts.
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    /// A row or column index is out of range.
    #[error("index {index} out of range (limit {limit})")]
    BadIndex { index: usize, limit: usize },
    /// A projective point was built from the zero vector.
    #[error("zero vector does not define a projective point")]
    ZeroPoint,
    /// Two objects over ground sets of different sizes were combined.
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    /// The splitting is not realized by any configuration in the given dimension.
    #[error("splitting is not in the image of the splitting map for n = {0}")]
    NotInImage(usize),
    /// The splitting class contains more than one orbit, so no single rank
    /// function (or representative-independent datum) is attached to it.
    #[error("splitting class is not a single orbit")]
    NotSingleOrbit,
    /// Embedding into a smaller ambient dimension was requested.
    #[error("cannot embed dimension {from} into smaller dimension {to}")]
    BadDimension { from: usize, to: usize },
    /// The projective-line parameter is one of the three excluded points.
    #[error("parameter must avoid the three special points of the projective line")]
    BadParameter,
    /// A parameter was requested from a configuration outside the rank-2
    /// all-points-distinct stratum.
    #[error("configuration is not in the parameterized stratum")]
    WrongStratum,
    /// The label names a fiber that is not a single orbit.
    #[error("label does not name an orbit")]
    NotAnOrbit,
    /// No dense orbit exists for these (n, m).
    #[error("no open orbit exists for n = {n}, m = {m}")]
    NoOpenOrbit { n: usize, m: usize },
    /// The infinite-family witness needs at least four points.
    #[error("orbit count is finite for m = {m}; no infinite family exists")]
    NotInfiniteRange { m: usize },
    /// The modulus is not prime (or otherwise unusable as a field order).
    #[error("{0} is not a usable field order (must be prime)")]
    BadField(u64),
    /// An enumeration would exceed the configured state budget.
    #[error("state space too large: {states} states exceeds limit {limit}")]
    TooLarge { states: u128, limit: u128 },
    /// The operation does not support this matrix/configuration shape.
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    /// A label string failed to parse.
    #[error("bad label: {0}")]
    BadLabel(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
