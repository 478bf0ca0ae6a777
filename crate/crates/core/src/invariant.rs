//! The degree-(1,1,1,1) invariant attached to a projective-line parameter.
//!
//! For a parameter `p = [p1 : p2]` and a 2x4 matrix `x`, writing `|i,j|` for
//! the 2-minor on columns `i` and `j` (1-based here, matching the label
//! grammar),
//!
//! ```text
//! P_p(x) = p2 |1,3||4,2| + p1 |1,4||2,3|
//!        = -p1 |1,2||3,4| + (p2 - p1) |1,3||4,2|
//!        = -p2 |1,2||3,4| + (p1 - p2) |1,4||2,3|
//! ```
//!
//! the three forms agreeing by the quadratic minor identity
//! `|1,2||3,4| + |1,3||4,2| + |1,4||2,3| = 0`. Together with the open
//! condition `|1,2||2,3||3,1| != 0`, the vanishing of `P_p` characterizes
//! membership in the parameterized orbit, and `P_p` is irreducible exactly
//! when `p` is primed.

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{rank_in_place, Matrix};
use crate::param::ProjParam;

fn check_2x4(m: &Matrix) -> Result<()> {
    if m.rows() != 2 || m.cols() != 4 {
        return Err(Error::UnsupportedShape(format!(
            "expected a 2x4 matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn check_field(p: &ProjParam, m: &Matrix) -> Result<()> {
    if p.field() != m.field() {
        return Err(Error::FieldMismatch(p.field().to_string(), m.field().to_string()));
    }
    Ok(())
}

/// Evaluates `P_p` with explicit, unnormalized parameter coordinates.
pub fn eval_pp_raw(p1: &Scalar, p2: &Scalar, m: &Matrix) -> Result<Scalar> {
    check_2x4(m)?;
    let d13 = m.minor2(0, 2)?;
    let d42 = m.minor2(3, 1)?;
    let d14 = m.minor2(0, 3)?;
    let d23 = m.minor2(1, 2)?;
    Ok(p2.mul(&d13.mul(&d42)).add(&p1.mul(&d14.mul(&d23))))
}

/// Evaluates the invariant `P_p` on a 2x4 matrix.
pub fn eval_pp(p: &ProjParam, m: &Matrix) -> Result<Scalar> {
    check_field(p, m)?;
    eval_pp_raw(p.x(), p.y(), m)
}

/// Second algebraic form of `P_p`; agrees with [`eval_pp`] identically.
pub fn eval_pp_form2(p: &ProjParam, m: &Matrix) -> Result<Scalar> {
    check_field(p, m)?;
    check_2x4(m)?;
    let d12 = m.minor2(0, 1)?;
    let d34 = m.minor2(2, 3)?;
    let d13 = m.minor2(0, 2)?;
    let d42 = m.minor2(3, 1)?;
    let first = p.x().neg().mul(&d12.mul(&d34));
    let second = p.y().sub(p.x()).mul(&d13.mul(&d42));
    Ok(first.add(&second))
}

/// Third algebraic form of `P_p`; agrees with [`eval_pp`] identically.
pub fn eval_pp_form3(p: &ProjParam, m: &Matrix) -> Result<Scalar> {
    check_field(p, m)?;
    check_2x4(m)?;
    let d12 = m.minor2(0, 1)?;
    let d34 = m.minor2(2, 3)?;
    let d14 = m.minor2(0, 3)?;
    let d23 = m.minor2(1, 2)?;
    let first = p.y().neg().mul(&d12.mul(&d34));
    let second = p.x().sub(p.y()).mul(&d14.mul(&d23));
    Ok(first.add(&second))
}

/// Whether `P_p` is irreducible: the closed-form criterion
/// `p1 p2 (p1 - p2) != 0`, i.e. `p` is primed.
pub fn is_pp_irreducible(p: &ProjParam) -> bool {
    p.is_primed()
}

/// The 16 multilinear coefficients of `P_p`, indexed by a 4-bit mask whose
/// bit `c` selects row 2 of column `c` in the monomial.
pub fn pp_coefficients(p: &ProjParam) -> [Scalar; 16] {
    let field = p.field();
    let zero = field.zero();
    let one = field.one();
    // A 2-minor |i,j| contributes +1 on "row1 at i, row2 at j" and -1 on
    // the mirrored choice.
    let minor = |i: usize, j: usize| -> Vec<(u32, Scalar)> {
        vec![(1 << j, one.clone()), (1 << i, one.neg())]
    };
    let mut coeffs: Vec<Scalar> = vec![zero; 16];
    let mut add_product = |scale: &Scalar, a: Vec<(u32, Scalar)>, b: Vec<(u32, Scalar)>| {
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let idx = (ma | mb) as usize;
                coeffs[idx] = coeffs[idx].add(&scale.mul(&ca.mul(cb)));
            }
        }
    };
    add_product(p.y(), minor(0, 2), minor(3, 1));
    add_product(p.x(), minor(0, 3), minor(1, 2));
    coeffs.try_into().expect("exactly 16 coefficients")
}

/// Brute-force reducibility test for `P_p`, independent of the closed-form
/// criterion: for every split of the four columns into two nonempty groups,
/// the polynomial factors along the split iff the coefficient tensor
/// reshaped to a (2^a x 2^b) matrix has rank at most 1.
pub fn is_pp_reducible_by_factor_search(p: &ProjParam) -> bool {
    let coeffs = pp_coefficients(p);
    let splits: [u32; 7] = [0b0001, 0b0010, 0b0100, 0b1000, 0b0011, 0b0101, 0b1001];
    for s in splits {
        let comp = 0b1111 & !s;
        let row_masks = submasks(s);
        let col_masks = submasks(comp);
        let mut data = Vec::with_capacity(row_masks.len() * col_masks.len());
        for &rm in &row_masks {
            for &cm in &col_masks {
                data.push(coeffs[(rm | cm) as usize].clone());
            }
        }
        let rank = rank_in_place(&mut data, row_masks.len(), col_masks.len());
        if rank <= 1 {
            return true;
        }
    }
    false
}

fn submasks(mask: u32) -> Vec<u32> {
    let bits: Vec<u32> = (0..4).filter(|b| mask & (1 << b) != 0).collect();
    (0..1u32 << bits.len())
        .map(|k| {
            bits.iter()
                .enumerate()
                .filter(|(j, _)| k & (1 << j) != 0)
                .map(|(_, b)| 1 << b)
                .sum()
        })
        .collect()
}

/// Membership test for the parameterized orbit inside quadruples on the
/// projective line: the first three points are pairwise distinct
/// (`|1,2||2,3||3,1| != 0`) and `P_p` vanishes.
pub fn in_orbit5p(cfg: &Configuration, p: &ProjParam) -> Result<bool> {
    if cfg.n() != 2 || cfg.m() != 4 {
        return Err(Error::UnsupportedShape(format!(
            "orbit membership needs a 2x4 configuration, got {}x{}",
            cfg.n(),
            cfg.m()
        )));
    }
    let m = cfg.as_matrix();
    check_field(p, &m)?;
    let d12 = m.minor2(0, 1)?;
    let d23 = m.minor2(1, 2)?;
    let d31 = m.minor2(2, 0)?;
    if d12.is_zero() || d23.is_zero() || d31.is_zero() {
        return Ok(false);
    }
    Ok(eval_pp(p, &m)?.is_zero())
}
