//! Existence of a dense orbit and finiteness of the orbit count on m-tuples
//! of points in projective (n-1)-space, with explicit witnesses.

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::param::ProjParam;

/// Whether the diagonal action on m-tuples in projective (n-1)-space has an
/// open (dense) orbit: exactly when `m <= n + 1`.
pub fn has_open_orbit(n: usize, m: usize) -> bool {
    debug_assert!(n >= 2);
    m <= n + 1
}

/// Whether the diagonal action has finitely many orbits: exactly when
/// `m <= 3`.
pub fn is_finite_type(_n: usize, m: usize) -> bool {
    m <= 3
}

/// A configuration whose orbit is dense: the first `min(m, n)` standard
/// basis vectors, followed (when `m = n + 1`) by their sum. Certified open
/// by the stabilizer dimension count `n^2 - stab = (n-1) m`.
pub fn open_orbit_witness(n: usize, m: usize, field: FieldCtx) -> Result<Configuration> {
    if m > n + 1 {
        return Err(Error::NoOpenOrbit { n, m });
    }
    let mut cols: Vec<Vec<i64>> = Vec::with_capacity(m);
    for i in 0..m.min(n) {
        let mut c = vec![0; n];
        c[i] = 1;
        cols.push(c);
    }
    if m == n + 1 {
        cols.push(vec![1; n]);
    }
    let refs: Vec<&[i64]> = cols.iter().map(|c| c.as_slice()).collect();
    Configuration::from_int_columns(field, n, &refs)
}

/// A member of the separating family witnessing infinitely many orbits for
/// `m >= 4`: `[e1, e2, e1+e2, p, p, ..., p]` with `p` in the line spanned
/// by the first two basis vectors. Distinct parameters give distinct
/// orbits.
pub fn infinite_family_witness(n: usize, m: usize, p: &ProjParam) -> Result<Configuration> {
    if m < 4 {
        return Err(Error::NotInfiniteRange { m });
    }
    if n < 2 {
        return Err(Error::UnsupportedShape(format!("need n >= 2, got {n}")));
    }
    let field = p.field();
    let zero = field.zero();
    let pad = |mut v: Vec<crate::field::Scalar>| {
        v.resize(n, zero.clone());
        crate::config::ProjectivePoint::normalize(v)
    };
    let mut cols = vec![
        pad(vec![field.one()])?,
        pad(vec![zero.clone(), field.one()])?,
        pad(vec![field.one(), field.one()])?,
    ];
    let point = pad(vec![p.x().clone(), p.y().clone()])?;
    cols.extend(std::iter::repeat_n(point, m - 3));
    Configuration::new(field, n, cols)
}
