//! Random generation of field elements, configurations, and group elements
//! for the verification suites and tests.

use rand::Rng;

use crate::config::{Configuration, ProjectivePoint};
use crate::field::{FieldCtx, Scalar};
use crate::label::OrbitLabel;
use crate::linalg::Matrix;
use crate::param::ProjParam;
use crate::s4::Perm4;

/// A scalar with small numerator/denominator over the rationals, or a
/// uniform residue over a prime field.
pub fn random_scalar<R: Rng>(rng: &mut R, field: FieldCtx) -> Scalar {
    match field {
        FieldCtx::Rational => field.from_int(rng.random_range(-4..=4)),
        FieldCtx::Prime(q) => field.from_int(rng.random_range(0..q) as i64),
    }
}

pub fn random_nonzero_scalar<R: Rng>(rng: &mut R, field: FieldCtx) -> Scalar {
    loop {
        let s = random_scalar(rng, field);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_point<R: Rng>(rng: &mut R, field: FieldCtx, n: usize) -> ProjectivePoint {
    loop {
        let coords: Vec<Scalar> = (0..n).map(|_| random_scalar(rng, field)).collect();
        if let Ok(p) = ProjectivePoint::normalize(coords) {
            return p;
        }
    }
}

pub fn random_config<R: Rng>(rng: &mut R, field: FieldCtx, n: usize, m: usize) -> Configuration {
    let cols = (0..m).map(|_| random_point(rng, field, n)).collect();
    Configuration::new(field, n, cols).expect("random columns fit the shape")
}

pub fn random_matrix<R: Rng>(rng: &mut R, field: FieldCtx, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows * cols).map(|_| random_scalar(rng, field)).collect();
    Matrix::new(field, rows, cols, data).expect("scalars share the field")
}

/// Rejection-samples an invertible matrix.
pub fn random_invertible<R: Rng>(rng: &mut R, field: FieldCtx, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, field, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// A primed projective-line parameter; `None` when the field has no primed
/// points (the 2-element field).
pub fn random_primed_param<R: Rng>(rng: &mut R, field: FieldCtx) -> Option<ProjParam> {
    if field == FieldCtx::Prime(2) {
        return None;
    }
    loop {
        let p = ProjParam::new(random_scalar(rng, field), random_scalar(rng, field));
        if let Ok(p) = p {
            if p.is_primed() {
                return Some(p);
            }
        }
    }
}

pub fn random_perm<R: Rng>(rng: &mut R) -> Perm4 {
    let all = Perm4::all();
    all[rng.random_range(0..all.len())]
}

/// A configuration drawn by translating a random label's representative by
/// a random group element, so every stratum is exercised.
pub fn random_stratified_config<R: Rng>(rng: &mut R, field: FieldCtx) -> Configuration {
    let mut labels = OrbitLabel::all_labels(None).expect("discrete labels");
    labels.retain(|l| !matches!(l, OrbitLabel::Phi6Fiber));
    let label = match rng.random_range(0..labels.len() + 5) {
        i if i < labels.len() => labels[i].clone(),
        _ => match random_primed_param(rng, field) {
            Some(p) => OrbitLabel::o5(p).expect("parameter is primed"),
            None => labels[0].clone(),
        },
    };
    let rep = label.representative(field).expect("orbit labels have representatives");
    let g = random_invertible(rng, field, 3);
    rep.transformed(&g).expect("invertible matrices preserve nonzero columns")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_respect_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f5 = FieldCtx::prime(5).unwrap();
        let cfg = random_config(&mut rng, f5, 3, 4);
        assert_eq!((cfg.n(), cfg.m()), (3, 4));
        let g = random_invertible(&mut rng, f5, 3);
        assert!(g.is_invertible());
        let p = random_primed_param(&mut rng, f5).unwrap();
        assert!(p.is_primed());
        assert!(random_primed_param(&mut rng, FieldCtx::Prime(2)).is_none());
        let stratified = random_stratified_config(&mut rng, FieldCtx::Rational);
        assert_eq!((stratified.n(), stratified.m()), (3, 4));
    }
}
