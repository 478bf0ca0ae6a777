//! Infinitesimal stabilizer dimension of a configuration.
//!
//! The stabilizer of an m-tuple of projective points inside the full matrix
//! algebra is the solution space of `X v_i = lambda_i v_i` in the unknowns
//! `(X, lambda_1, ..., lambda_m)`. Each `lambda_i` is determined by `X`
//! (columns are nonzero), so the nullity of the combined system equals the
//! dimension of the stabilizer algebra. The orbit dimension is
//! `n^2 - stabilizer_dim`.

use crate::config::Configuration;
use crate::linalg::rank_in_place;

/// Dimension of the matrix-algebra stabilizer of `cfg`.
pub fn stabilizer_dim(cfg: &Configuration) -> usize {
    let n = cfg.n();
    let m = cfg.m();
    let field = cfg.field();
    let unknowns = n * n + m;
    let rows = n * m;
    let zero = field.zero();
    let mut sys = vec![zero; rows * unknowns];
    for (i, col) in cfg.columns().iter().enumerate() {
        let v = col.coords();
        for r in 0..n {
            let row = i * n + r;
            // Row r of X v_i: sum_c X[r,c] v_i[c].
            for (c, coeff) in v.iter().enumerate() {
                sys[row * unknowns + r * n + c] = coeff.clone();
            }
            // Minus lambda_i v_i[r].
            sys[row * unknowns + n * n + i] = v[r].neg();
        }
    }
    let rank = rank_in_place(&mut sys, rows, unknowns);
    unknowns - rank
}

/// Dimension of the orbit through `cfg` under the diagonal action.
pub fn orbit_dim_of(cfg: &Configuration) -> usize {
    cfg.n() * cfg.n() - stabilizer_dim(cfg)
}
