use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Field elements are stored as rationals. Over a prime field the value is
/// always an integer in `0..p`.
pub type Scalar = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[derive(Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    PrimeField(u64),
}


impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::PrimeField(p) => write!(f, "fp:{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::InvalidField(format!("{p} is not prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.reduce(Scalar::from_integer(BigInt::from(v)))
    }

    /// Maps an arbitrary rational into the field. Fails over 𝔽p when the
    /// denominator is divisible by p.
    pub fn try_reduce(&self, v: Scalar) -> Option<Scalar> {
        match self {
            FieldSpec::Rationals => Some(v),
            FieldSpec::PrimeField(p) => {
                let p = BigInt::from(*p);
                let num = v.numer().mod_floor(&p);
                let den = v.denom().mod_floor(&p);
                if den.is_zero() {
                    return None;
                }
                let inv = mod_inverse(&den, &p)?;
                Some(Scalar::from_integer((num * inv).mod_floor(&p)))
            }
        }
    }

    pub fn reduce(&self, v: Scalar) -> Scalar {
        self.try_reduce(v)
            .expect("denominator divisible by the field characteristic")
    }

    #[inline]
    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => a + b,
            FieldSpec::PrimeField(p) => small_mod(a.numer() + b.numer(), *p),
        }
    }

    #[inline]
    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => a - b,
            FieldSpec::PrimeField(p) => small_mod(a.numer() - b.numer(), *p),
        }
    }

    #[inline]
    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() || b.is_zero() {
            return Scalar::zero();
        }
        match self {
            FieldSpec::Rationals => a * b,
            FieldSpec::PrimeField(p) => small_mod(a.numer() * b.numer(), *p),
        }
    }

    #[inline]
    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => -a,
            FieldSpec::PrimeField(p) => small_mod(-a.numer(), *p),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            FieldSpec::Rationals => Some(a.recip()),
            FieldSpec::PrimeField(p) => {
                let p = BigInt::from(*p);
                mod_inverse(a.numer(), &p).map(Scalar::from_integer)
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    /// Integer representative, used when lifting 𝔽p matrices to ℤ.
    pub fn to_u64(&self, a: &Scalar) -> Option<u64> {
        if a.is_integer() && !a.is_negative() {
            a.numer().to_u64()
        } else {
            None
        }
    }
}

fn small_mod(v: BigInt, p: u64) -> Scalar {
    Scalar::from_integer(v.mod_floor(&BigInt::from(p)))
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(p).extended_gcd(p);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(p))
    } else {
        None
    }
}

/// Parses `3`, `-2`, `5/7`.
pub fn parse_scalar(field: FieldSpec, s: &str) -> Option<Scalar> {
    let s = s.trim();
    let v = if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Scalar::new(n, d)
    } else {
        Scalar::from_integer(s.parse().ok()?)
    };
    field.try_reduce(v)
}
