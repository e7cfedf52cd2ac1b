//! Exact coefficient fields: arbitrary-precision rationals and prime fields.
//!
//! Rationals are the default everywhere; a word-sized prime field is offered
//! as a fast mode for randomized computations and is documented as heuristic
//! (several results of the underlying theory require characteristic 0).

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which coefficient field a ring works over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    /// The rational numbers.
    Q,
    /// The prime field with `p` elements, `p` prime.
    Fp(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= p) {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Q => Ok(()),
            FieldSpec::Fp(p) => {
                if is_prime(*p) {
                    Ok(())
                } else {
                    Err(Error::InvalidArgument(format!("{p} is not prime")))
                }
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::zero()),
            FieldSpec::Fp(p) => Scalar::Fp { v: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::one()),
            FieldSpec::Fp(p) => Scalar::Fp { v: 1 % *p, p: *p },
        }
    }

    pub fn from_i64(&self, value: i64) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Q(BigRational::from_integer(BigInt::from(value))),
            FieldSpec::Fp(p) => {
                let r = value.rem_euclid(*p as i64) as u64;
                Scalar::Fp { v: r, p: *p }
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        match self {
            FieldSpec::Q => Ok(Scalar::Q(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            FieldSpec::Fp(_) => {
                let d = self.from_i64(den);
                if d.is_zero() {
                    return Err(Error::InvalidArgument(
                        "denominator vanishes in the prime field".into(),
                    ));
                }
                Ok(self.from_i64(num).mul(&d.inv()))
            }
        }
    }

    /// Uniform nonzero element from the coordinate-change box `[-bound, bound]`
    /// over Q, or a uniform nonzero field element over Fp.
    pub fn random_box(&self, rng: &mut impl Rng, bound: i64) -> Scalar {
        match self {
            FieldSpec::Q => loop {
                let v = rng.gen_range(-bound..=bound);
                if v != 0 {
                    return self.from_i64(v);
                }
            },
            FieldSpec::Fp(p) => {
                let v = rng.gen_range(1..*p);
                Scalar::Fp { v, p: *p }
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Fp(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// An element of one of the supported fields.
///
/// Operations assume both operands come from the same field; ring-level
/// entry points check signatures before any arithmetic happens.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

fn fp_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    base = acc as u64;
    base
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Q,
            Scalar::Fp { p, .. } => FieldSpec::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, p } => *v == 1 % *p,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                debug_assert_eq!(p, q);
                Scalar::Fp {
                    v: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: if *v == 0 { 0 } else { p - v },
                p: *p,
            },
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                debug_assert_eq!(p, q);
                Scalar::Fp {
                    v: (*a as u128 * *b as u128 % *p as u128) as u64,
                    p: *p,
                }
            }
            _ => panic!("mixed coefficient fields"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Q(a.recip())
            }
            Scalar::Fp { v, p } => {
                assert!(*v != 0, "inverse of zero");
                Scalar::Fp {
                    v: fp_pow(*v, p - 2, *p),
                    p: *p,
                }
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inv())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

/// True when the rational is negative (used by the pretty printer).
pub fn scalar_is_negative(s: &Scalar) -> bool {
    match s {
        Scalar::Q(r) => r.is_negative(),
        Scalar::Fp { .. } => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = FieldSpec::Q;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = q.random_box(&mut rng, 1000);
            let b = q.random_box(&mut rng, 1000);
            let ab = a.div(&b);
            let ba = b.div(&a);
            assert!(ab.mul(&ba).is_one());
        }
    }

    #[test]
    fn prime_field_inverse() {
        let p = 2147483647u64;
        FieldSpec::Fp(p).validate().unwrap();
        let f = FieldSpec::Fp(p);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let a = f.random_box(&mut rng, 0);
            assert!(a.mul(&a.inv()).is_one());
        }
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(FieldSpec::Fp(91).validate().is_err());
        assert!(FieldSpec::Fp(2).validate().is_ok());
    }
}
