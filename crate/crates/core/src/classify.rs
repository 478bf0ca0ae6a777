//! Classification of quadruples of points in the projective plane.
//!
//! The rank function of a configuration determines its label outright
//! except on the rank-2 all-points-distinct stratum, where a projective-line
//! parameter separates the orbits. Every configuration classifies.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::label::OrbitLabel;
use crate::linalg::Matrix;
use crate::param::ProjParam;
use crate::rankfn::compute_pi;

fn fiber_table() -> &'static HashMap<[u8; 16], OrbitLabel> {
    static TABLE: OnceLock<HashMap<[u8; 16], OrbitLabel>> = OnceLock::new();
    TABLE.get_or_init(|| {
        OrbitLabel::all_labels(None)
            .expect("discrete labels need no parameter")
            .into_iter()
            .map(|l| {
                let mut key = [0u8; 16];
                key.copy_from_slice(l.phi().values());
                (key, l)
            })
            .collect()
    })
}

/// Classifies a configuration of four points in the plane. Inputs with
/// `n < 3` are embedded first; the classification data is unchanged by the
/// embedding.
pub fn classify(cfg: &Configuration) -> Result<OrbitLabel> {
    if cfg.m() != 4 || cfg.n() > 3 {
        return Err(Error::UnsupportedShape(format!(
            "classification covers n <= 3, m = 4; got n = {}, m = {}",
            cfg.n(),
            cfg.m()
        )));
    }
    let embedded;
    let cfg = if cfg.n() < 3 {
        embedded = cfg.embed(3)?;
        &embedded
    } else {
        cfg
    };
    let phi = compute_pi(cfg);
    let mut key = [0u8; 16];
    key.copy_from_slice(phi.values());
    let label = fiber_table()
        .get(&key)
        .unwrap_or_else(|| panic!("rank function {phi} is outside the classified image"));
    match label {
        OrbitLabel::Phi6Fiber => Ok(OrbitLabel::O5(extract_parameter_unchecked(cfg)?)),
        other => Ok(other.clone()),
    }
}

/// Extracts the projective-line parameter of a configuration in the rank-2
/// all-points-distinct stratum.
///
/// Writes `v3 = a v1 + b v2` (both coefficients nonzero on this stratum),
/// rescales `w1 = a v1`, `w2 = b v2` so that `v3 = w1 + w2`, and solves
/// `v4 = p1 w1 + p2 w2`. The result is independent of the group element
/// moving `(v1, v2, v3)` to the normal form, is always primed, and is
/// invariant under the diagonal action.
pub fn extract_parameter(cfg: &Configuration) -> Result<ProjParam> {
    let phi = compute_pi(cfg);
    if phi.values() != OrbitLabel::Phi6Fiber.phi().values() {
        return Err(Error::WrongStratum);
    }
    extract_parameter_unchecked(cfg)
}

fn extract_parameter_unchecked(cfg: &Configuration) -> Result<ProjParam> {
    let field = cfg.field();
    let n = cfg.n();
    let v1 = cfg.column(0).coords();
    let v2 = cfg.column(1).coords();
    let v3 = cfg.column(2).coords();
    let v4 = cfg.column(3).coords();
    let two_cols = |a: &[crate::field::Scalar], b: &[crate::field::Scalar]| {
        let mut data = Vec::with_capacity(2 * n);
        for r in 0..n {
            data.push(a[r].clone());
            data.push(b[r].clone());
        }
        Matrix::new(field, n, 2, data)
    };
    let ab = two_cols(v1, v2)?
        .solve(v3)?
        .ok_or(Error::WrongStratum)?;
    let (a, b) = (&ab[0], &ab[1]);
    if a.is_zero() || b.is_zero() {
        return Err(Error::WrongStratum);
    }
    let w1: Vec<_> = v1.iter().map(|c| c.mul(a)).collect();
    let w2: Vec<_> = v2.iter().map(|c| c.mul(b)).collect();
    let p = two_cols(&w1, &w2)?
        .solve(v4)?
        .ok_or(Error::WrongStratum)?;
    ProjParam::new(p[0].clone(), p[1].clone())
}
