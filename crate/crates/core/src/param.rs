//! Points of the projective line, used as the continuous orbit parameter.

use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, Scalar};

/// A point `[p1 : p2]` of the projective line, normalized so the first
/// nonzero coordinate is 1. In the affine chart `a(p) = p2/p1` the three
/// special points `[1:0]`, `[0:1]`, `[1:1]` are `0`, `infinity`, `1`; a
/// parameter avoiding all three is called *primed*, equivalently
/// `p1 p2 (p1 - p2) != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjParam {
    x: Scalar,
    y: Scalar,
}

impl ProjParam {
    pub fn new(x: Scalar, y: Scalar) -> Result<ProjParam> {
        if x.field() != y.field() {
            return Err(Error::FieldMismatch(x.field().to_string(), y.field().to_string()));
        }
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroPoint);
        }
        if x.is_zero() {
            let one = x.field().one();
            Ok(ProjParam { x, y: one })
        } else {
            let inv = x.inv();
            Ok(ProjParam { y: y.mul(&inv), x: x.field().one() })
        }
    }

    pub fn from_ints(field: FieldCtx, x: i64, y: i64) -> Result<ProjParam> {
        ProjParam::new(field.from_int(x), field.from_int(y))
    }

    /// The parameter with affine coordinate `a`, i.e. `[1 : a]`.
    pub fn from_affine(a: BigRational) -> ProjParam {
        ProjParam { x: FieldCtx::Rational.one(), y: Scalar::Rational(a) }
    }

    pub fn x(&self) -> &Scalar {
        &self.x
    }

    pub fn y(&self) -> &Scalar {
        &self.y
    }

    pub fn field(&self) -> FieldCtx {
        self.x.field()
    }

    /// The affine coordinate `p2/p1`, or `None` for the point at infinity.
    pub fn affine(&self) -> Option<Scalar> {
        if self.x.is_zero() {
            None
        } else {
            Some(self.y.div(&self.x))
        }
    }

    /// Whether the parameter avoids the three special points.
    pub fn is_primed(&self) -> bool {
        !self.x.is_zero() && !self.y.is_zero() && !self.x.sub(&self.y).is_zero()
    }

    /// Applies an integer 2x2 matrix to the column `(p1, p2)` and
    /// renormalizes.
    pub fn apply_int_matrix(&self, m: &[[i64; 2]; 2]) -> Result<ProjParam> {
        let field = self.field();
        let e = |v: i64| field.from_int(v);
        let nx = e(m[0][0]).mul(&self.x).add(&e(m[0][1]).mul(&self.y));
        let ny = e(m[1][0]).mul(&self.x).add(&e(m[1][1]).mul(&self.y));
        ProjParam::new(nx, ny)
    }
}

impl fmt::Display for ProjParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.x, self.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;
    use num_bigint::BigInt;

    #[test]
    fn normalization() {
        let p = ProjParam::from_ints(FieldCtx::Rational, 2, 4).unwrap();
        assert_eq!(p.x(), &rational(1, 1));
        assert_eq!(p.y(), &rational(2, 1));
        let inf = ProjParam::from_ints(FieldCtx::Rational, 0, -7).unwrap();
        assert_eq!(inf.y(), &rational(1, 1));
        assert!(inf.affine().is_none());
    }

    #[test]
    fn primed_predicate() {
        let pr = |x, y| ProjParam::from_ints(FieldCtx::Rational, x, y).unwrap();
        assert!(pr(1, 2).is_primed());
        assert!(pr(3, -1).is_primed());
        assert!(!pr(1, 0).is_primed());
        assert!(!pr(0, 1).is_primed());
        assert!(!pr(1, 1).is_primed());
        assert!(!pr(5, 5).is_primed());
    }

    #[test]
    fn affine_round_trip() {
        let a = BigRational::new(BigInt::from(7), BigInt::from(3));
        let p = ProjParam::from_affine(a.clone());
        assert_eq!(p.affine().unwrap(), Scalar::Rational(a));
        assert_eq!(p.to_string(), "[1:7/3]");
    }

    #[test]
    fn zero_pair_rejected() {
        assert_eq!(
            ProjParam::from_ints(FieldCtx::Rational, 0, 0).unwrap_err(),
            Error::ZeroPoint
        );
    }

    #[test]
    fn matrix_action() {
        let p = ProjParam::from_ints(FieldCtx::Rational, 1, 2).unwrap();
        // [[0,-1],[-1,0]] sends [1:2] to [-2:-1] = [1:1/2].
        let q = p.apply_int_matrix(&[[0, -1], [-1, 0]]).unwrap();
        assert_eq!(q, ProjParam::from_ints(FieldCtx::Rational, 2, 1).unwrap());
    }

    #[test]
    fn prime_field_params() {
        let f5 = FieldCtx::prime(5).unwrap();
        let p = ProjParam::from_ints(f5, 2, 4).unwrap();
        assert_eq!(p, ProjParam::from_ints(f5, 1, 2).unwrap());
        assert!(p.is_primed());
        assert!(!ProjParam::from_ints(f5, 1, 6).unwrap().is_primed());
    }
}
