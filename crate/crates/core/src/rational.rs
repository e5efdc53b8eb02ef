//! Exact rationals in the unit interval and the standard q-effect algebra.
//!
//! [`UnitRational`] is the value domain of every state and of the standard
//! algebra on `[0,1]`: truncated sum, `q(x) = min(2x, 1)` and
//! `d(x) = max(2x - 1, 0)`. All arithmetic is carried out on
//! arbitrary-precision integers.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational `p/q` with `0 <= p/q <= 1`, always in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitRational(BigRational);

impl UnitRational {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::MalformedRational(format!("{numerator}/0")));
        }
        Self::from_big(BigRational::new(numerator.into(), denominator.into()))
    }

    /// Wraps an arbitrary rational, rejecting values outside `[0,1]`.
    pub fn from_big(value: BigRational) -> Result<Self> {
        if value.is_negative() || value > BigRational::one() {
            return Err(Error::OutOfUnitInterval(value.to_string()));
        }
        Ok(UnitRational(value))
    }

    pub fn zero() -> Self {
        UnitRational(BigRational::zero())
    }

    pub fn one() -> Self {
        UnitRational(BigRational::one())
    }

    pub fn half() -> Self {
        UnitRational(BigRational::new(1.into(), 2.into()))
    }

    /// `i / 2^k`.
    pub fn dyadic(i: u64, k: u32) -> Result<Self> {
        let den = BigInt::one() << k;
        Self::from_big(BigRational::new(i.into(), den))
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    pub fn into_big(self) -> BigRational {
        self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// `1 - x`, the supplement in the standard algebra.
    pub fn complement(&self) -> Self {
        UnitRational(BigRational::one() - &self.0)
    }

    /// The partial sum of the standard effect algebra: defined iff `x + y <= 1`.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let s = &self.0 + &other.0;
        (s <= BigRational::one()).then_some(UnitRational(s))
    }

    /// Truncated sum `min(x + y, 1)`.
    pub fn oplus(&self, other: &Self) -> Self {
        let s = &self.0 + &other.0;
        if s > BigRational::one() {
            Self::one()
        } else {
            UnitRational(s)
        }
    }

    /// `max(x + y - 1, 0)`, the dual of [`oplus`](Self::oplus).
    pub fn odot(&self, other: &Self) -> Self {
        let s = &self.0 + &other.0 - BigRational::one();
        if s.is_negative() {
            Self::zero()
        } else {
            UnitRational(s)
        }
    }

    /// `q(x) = x ⊕ x = min(2x, 1)`.
    pub fn std_q(&self) -> Self {
        self.oplus(self)
    }

    /// `d(x) = x ⊙ x = max(2x - 1, 0)`.
    pub fn std_d(&self) -> Self {
        self.odot(self)
    }

    pub fn min<'a>(&'a self, other: &'a Self) -> &'a Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max<'a>(&'a self, other: &'a Self) -> &'a Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

/// Standard-algebra `q`.
pub fn std_q(x: &UnitRational) -> UnitRational {
    x.std_q()
}

/// Standard-algebra `d`.
pub fn std_d(x: &UnitRational) -> UnitRational {
    x.std_d()
}

pub fn oplus(x: &UnitRational, y: &UnitRational) -> UnitRational {
    x.oplus(y)
}

pub fn odot(x: &UnitRational, y: &UnitRational) -> UnitRational {
    x.odot(y)
}

impl fmt::Display for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for UnitRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::MalformedRational(s.to_string());
        let value = match t.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                BigRational::new(p, q)
            }
            None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
        };
        Self::from_big(value)
    }
}

impl Serialize for UnitRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for UnitRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A dyadic rational strictly inside `(0,1)`: the index set of the
/// threshold terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DyadicRational(UnitRational);

impl DyadicRational {
    pub fn new(value: UnitRational) -> Result<Self> {
        let den = value.denom();
        let is_pow2 = den.is_positive() && (den & (den - BigInt::one())).is_zero();
        if !is_pow2 || value.is_zero() || value.is_one() {
            return Err(Error::NotDyadic(value.to_string()));
        }
        Ok(DyadicRational(value))
    }

    /// `i / 2^k` for `0 < i < 2^k`.
    pub fn from_grid(i: u64, k: u32) -> Result<Self> {
        Self::new(UnitRational::dyadic(i, k)?)
    }

    pub fn value(&self) -> &UnitRational {
        &self.0
    }

    /// Binary digits after the point; the last digit is always 1.
    pub fn binary_digits(&self) -> Vec<bool> {
        let mut digits = Vec::new();
        let mut x = self.0.as_big().clone();
        let two = BigRational::from_integer(2.into());
        while !x.is_zero() {
            x *= &two;
            if x >= BigRational::one() {
                digits.push(true);
                x -= BigRational::one();
            } else {
                digits.push(false);
            }
        }
        digits
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> UnitRational {
        s.parse().unwrap()
    }

    #[test]
    fn standard_q_and_d_examples() {
        assert_eq!(r("1/4").std_q(), r("1/2"));
        assert_eq!(r("1/4").std_d(), r("0"));
        assert_eq!(r("0").std_q(), r("0"));
        assert_eq!(r("1").std_d(), r("1"));
        assert_eq!(r("5/6").std_q(), r("1"));
        assert_eq!(r("5/6").std_d(), r("2/3"));
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(r("2/4").to_string(), "1/2");
        assert_eq!(r("1").to_string(), "1");
        assert_eq!(r("0/7").to_string(), "0");
        assert!("3/2".parse::<UnitRational>().is_err());
        assert!("-1/2".parse::<UnitRational>().is_err());
        assert!("1/0".parse::<UnitRational>().is_err());
        assert!("x".parse::<UnitRational>().is_err());
    }

    #[test]
    fn partial_sum_is_defined_up_to_one() {
        assert_eq!(r("1/3").checked_add(&r("2/3")), Some(r("1")));
        assert_eq!(r("1/2").checked_add(&r("2/3")), None);
    }

    #[test]
    fn dyadic_validation() {
        assert!(DyadicRational::new(r("3/4")).is_ok());
        assert!(DyadicRational::new(r("1/3")).is_err());
        assert!(DyadicRational::new(r("0")).is_err());
        assert!(DyadicRational::new(r("1")).is_err());
        let d = DyadicRational::new(r("5/8")).unwrap();
        assert_eq!(d.binary_digits(), vec![true, false, true]);
    }

    #[test]
    fn q_and_d_are_dual_on_a_grid() {
        for j in 0..=64u64 {
            let x = UnitRational::dyadic(j, 6).unwrap();
            assert_eq!(x.complement().std_d(), x.std_q().complement());
        }
    }
}
