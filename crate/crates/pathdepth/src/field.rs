//! Coefficient fields for the exact linear algebra underneath homology.
//!
//! Rank computations are generic over [`Field`]; the concrete scalars are
//! the prime fields [`Gf`] and arbitrary-precision rationals
//! ([`num_rational::BigRational`]). All arithmetic is exact.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Scalar bound for the elimination routines. Blanket-implemented for
/// anything with exact field arithmetic, in particular [`Gf`] and
/// [`num_rational::BigRational`].
pub trait Field:
    Clone
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Send
        + Sync
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Div<Output = Self>
{
}

/// The prime field with `P` elements, `P` a prime below 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf<const P: u64>(u64);

impl<const P: u64> Gf<P> {
    pub fn new(value: i64) -> Self {
        Gf(value.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Gf(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat's little theorem.
    pub fn inverse(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in GF({P})");
        self.pow(P - 2)
    }
}

impl<const P: u64> Add for Gf<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Gf((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Gf<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Gf((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Gf<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Gf(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Div for Gf<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse()
    }
}

impl<const P: u64> Neg for Gf<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Gf((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Gf<P> {
    fn zero() -> Self {
        Gf(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Gf<P> {
    fn one() -> Self {
        Gf(1 % P)
    }
}

/// Runtime choice of coefficient field; depth of a Stanley-Reisner ring
/// can depend on the characteristic, so every homology entry point takes
/// one of these explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);

    pub fn is_prime_char(self, p: u64) -> bool {
        self == FieldSpec::Prime(p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts a prime characteristic (`"2"`, `"3"`, ...) or the
    /// rationals as `"Q"` / `"QQ"`, case-insensitive.
    fn from_str(s: &str) -> Result<Self, Error> {
        let trimmed = s.trim();
        if trimmed.eq_ignore_ascii_case("q") || trimmed.eq_ignore_ascii_case("qq") {
            return Ok(FieldSpec::Rationals);
        }
        let inner = trimmed
            .strip_prefix("GF(")
            .and_then(|rest| rest.strip_suffix(')'))
            .unwrap_or(trimmed);
        let p: u64 = inner
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("unrecognized field {s:?}")))?;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => write!(f, "QQ"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf_arithmetic() {
        type F = Gf<5>;
        assert_eq!(F::new(7), F::new(2));
        assert_eq!(F::new(2) + F::new(4), F::new(1));
        assert_eq!(F::new(1) - F::new(3), F::new(3));
        assert_eq!(-F::new(2), F::new(3));
        assert!(F::zero().is_zero());
        assert!(F::one().is_one());
    }

    #[test]
    fn gf_inverse_roundtrip() {
        fn check<const P: u64>() {
            for v in 1..P as i64 {
                let x = Gf::<P>::new(v);
                assert_eq!(x * x.inverse(), Gf::<P>::one());
            }
        }
        check::<2>();
        check::<3>();
        check::<13>();
    }

    #[test]
    fn field_spec_parse_and_display() {
        assert_eq!("2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert_eq!("GF(7)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("qq".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::Prime(3).to_string(), "GF(3)");
        assert_eq!(FieldSpec::Rationals.to_string(), "QQ");
        assert!(matches!("4".parse::<FieldSpec>(), Err(Error::NotPrime(4))));
        assert!("x".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn field_spec_json() {
        let json = serde_json::to_string(&FieldSpec::GF2).unwrap();
        assert_eq!(json, "\"GF(2)\"");
        let back: FieldSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, FieldSpec::GF2);
    }
}
