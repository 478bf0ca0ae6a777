//! Exact field arithmetic: arbitrary-precision rationals and prime fields.
//!
//! Every value carries its field context so that mixed-field arithmetic is
//! caught instead of silently coerced. Rationals are kept in lowest terms
//! with a positive denominator (the representation `BigRational` maintains);
//! prime-field residues are kept in `[0, q)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// The ambient field of a computation: the rationals or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldCtx {
    /// The field of rational numbers.
    Rational,
    /// The prime field with `q` elements.
    Prime(u64),
}

impl FieldCtx {
    /// Builds a prime-field context, checking primality of `q`.
    pub fn prime(q: u64) -> Result<FieldCtx> {
        if is_prime(q) {
            Ok(FieldCtx::Prime(q))
        } else {
            Err(Error::BadField(q))
        }
    }

    /// The additive identity of this field.
    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    /// The multiplicative identity of this field.
    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    /// Embeds a machine integer into the field.
    pub fn from_int(&self, v: i64) -> Scalar {
        match *self {
            FieldCtx::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldCtx::Prime(q) => {
                let r = v.rem_euclid(q as i64) as u64;
                Scalar::Prime { q, val: r }
            }
        }
    }

    /// Parses a field element from its decimal form, `"a"` or `"a/b"` for
    /// rationals and an integer for prime fields.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let bad = || Error::UnsupportedShape(format!("cannot parse scalar {s:?}"));
        match *self {
            FieldCtx::Rational => {
                let r: BigRational = s.trim().parse().map_err(|_| bad())?;
                Ok(Scalar::Rational(r))
            }
            FieldCtx::Prime(q) => {
                let v: i128 = s.trim().parse().map_err(|_| bad())?;
                let r = v.rem_euclid(q as i128) as u64;
                Ok(Scalar::Prime { q, val: r })
            }
        }
    }

    /// All elements of a prime field, `0, 1, ..., q-1`.
    pub fn elements(&self) -> Result<Vec<Scalar>> {
        match *self {
            FieldCtx::Rational => Err(Error::UnsupportedShape(
                "cannot enumerate the rationals".into(),
            )),
            FieldCtx::Prime(q) => Ok((0..q).map(|v| Scalar::Prime { q, val: v }).collect()),
        }
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldCtx::Rational => write!(f, "Q"),
            FieldCtx::Prime(q) => write!(f, "F{q}"),
        }
    }
}

/// An exact field element: a reduced rational or a residue mod a prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Rational(BigRational),
    Prime { q: u64, val: u64 },
}

impl Scalar {
    /// The field this element belongs to.
    pub fn field(&self) -> FieldCtx {
        match self {
            Scalar::Rational(_) => FieldCtx::Rational,
            Scalar::Prime { q, .. } => FieldCtx::Prime(*q),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { val, .. } => *val == 1,
        }
    }

    fn check_same(&self, other: &Scalar) {
        if self.field() != other.field() {
            panic!(
                "scalar arithmetic across field contexts ({} vs {})",
                self.field(),
                other.field()
            );
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check_same(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { q, val: a }, Scalar::Prime { val: b, .. }) => {
                let s = (*a as u128 + *b as u128) % *q as u128;
                Scalar::Prime { q: *q, val: s as u64 }
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.check_same(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Prime { q, val: a }, Scalar::Prime { val: b, .. }) => {
                let s = (*a as u128 + (*q - *b) as u128) % *q as u128;
                Scalar::Prime { q: *q, val: s as u64 }
            }
            _ => unreachable!(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check_same(other);
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { q, val: a }, Scalar::Prime { val: b, .. }) => {
                let p = (*a as u128 * *b as u128) % *q as u128;
                Scalar::Prime { q: *q, val: p as u64 }
            }
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { q, val } => Scalar::Prime {
                q: *q,
                val: if *val == 0 { 0 } else { q - val },
            },
        }
    }

    /// Multiplicative inverse. Panics on zero; callers pivot on nonzero
    /// entries only.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rational(a.recip())
            }
            Scalar::Prime { q, val } => {
                assert!(*val != 0, "inverse of zero");
                Scalar::Prime { q: *q, val: mod_inverse(*val, *q) }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    /// The rational payload, when this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Prime { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Prime { val, .. } => write!(f, "{val}"),
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Scalar {
        Scalar::Rational(r)
    }
}

/// Builds a rational scalar `a/b`.
pub fn rational(a: i64, b: i64) -> Scalar {
    assert!(b != 0, "zero denominator");
    Scalar::Rational(BigRational::new(BigInt::from(a), BigInt::from(b)))
}

/// Checks that `r` is in lowest terms with a positive denominator.
/// `BigRational` maintains this on construction; exposed for tests.
pub fn is_reduced(r: &BigRational) -> bool {
    use num_integer::Integer;
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    if q.is_multiple_of(2) {
        return q == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= q) {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mod_inverse(a: u64, q: u64) -> u64 {
    // Extended Euclid on (a, q); q is prime and a is nonzero mod q.
    let (mut r0, mut r1) = (a as i128, q as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let k = r0 / r1;
        (r0, r1) = (r1, r0 - k * r1);
        (s0, s1) = (s1, s0 - k * s1);
    }
    debug_assert_eq!(r0, 1, "inverse of a nonunit");
    s0.rem_euclid(q as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_ctx_rejects_composites() {
        assert!(FieldCtx::prime(7).is_ok());
        assert!(FieldCtx::prime(2).is_ok());
        assert_eq!(FieldCtx::prime(4), Err(Error::BadField(4)));
        assert_eq!(FieldCtx::prime(1), Err(Error::BadField(1)));
        assert_eq!(FieldCtx::prime(91), Err(Error::BadField(91)));
    }

    #[test]
    fn rational_arithmetic_reduces() {
        let a = rational(2, 4);
        let b = rational(1, 2);
        assert_eq!(a, b);
        let s = a.add(&b);
        assert_eq!(s, rational(1, 1));
        assert!(is_reduced(s.as_rational().unwrap()));
        assert!(is_reduced(rational(-6, -8).as_rational().unwrap()));
    }

    #[test]
    fn prime_arithmetic_wraps() {
        let f5 = FieldCtx::prime(5).unwrap();
        let three = f5.from_int(3);
        let four = f5.from_int(4);
        assert_eq!(three.add(&four), f5.from_int(2));
        assert_eq!(three.mul(&four), f5.from_int(2));
        assert_eq!(three.sub(&four), f5.from_int(4));
        assert_eq!(f5.from_int(-1), f5.from_int(4));
    }

    #[test]
    fn inverses() {
        let f5 = FieldCtx::prime(5).unwrap();
        // 2^{-1} = 3 mod 5
        assert_eq!(f5.from_int(2).inv(), f5.from_int(3));
        for v in 1..5 {
            let x = f5.from_int(v);
            assert!(x.mul(&x.inv()).is_one());
        }
        assert_eq!(rational(3, 4).inv(), rational(4, 3));
    }

    #[test]
    fn parse_scalars() {
        assert_eq!(FieldCtx::Rational.parse("3/4").unwrap(), rational(3, 4));
        assert_eq!(FieldCtx::Rational.parse("-2").unwrap(), rational(-2, 1));
        let f7 = FieldCtx::prime(7).unwrap();
        assert_eq!(f7.parse("10").unwrap(), f7.from_int(3));
        assert_eq!(f7.parse("-1").unwrap(), f7.from_int(6));
        assert!(FieldCtx::Rational.parse("x").is_err());
    }

    #[test]
    #[should_panic(expected = "field contexts")]
    fn mixed_field_arithmetic_panics() {
        let f5 = FieldCtx::prime(5).unwrap();
        let _ = rational(1, 1).add(&f5.from_int(1));
    }
}
