//! Exact rational values for counts, main terms and gaps.
//!
//! Every main term in this crate is a half, quarter, sixth or eighth of an
//! integer, so gaps are kept exact until a real-valued normalization is
//! requested.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number. Serializes as `"n"` or `"n/d"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Frac(Ratio<i64>);

impl Frac {
    pub const ZERO: Frac = Frac(Ratio::new_raw(0, 1));

    pub fn new(numer: i64, denom: i64) -> Self {
        Frac(Ratio::new(numer, denom))
    }

    pub fn int(n: i64) -> Self {
        Frac(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.numer())
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    pub fn signum(&self) -> i64 {
        self.numer().signum()
    }

    pub fn abs(&self) -> Self {
        Frac(Ratio::new_raw(self.numer().abs(), self.denom()))
    }

    /// `n/d (decimal)` for human-readable output; integers print bare.
    pub fn display_with_decimal(&self) -> String {
        if self.is_integer() {
            self.to_string()
        } else {
            format!("{} ({})", self, self.to_f64())
        }
    }
}

impl From<i64> for Frac {
    fn from(n: i64) -> Self {
        Frac::int(n)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Frac {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::usage(format!("not a rational number: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                Ok(Frac::new(n, d))
            }
            None => s.parse().map(Frac::int).map_err(|_| bad()),
        }
    }
}

impl Serialize for Frac {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Frac {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for Frac {
    type Output = Frac;
    fn add(self, rhs: Frac) -> Frac {
        Frac(self.0 + rhs.0)
    }
}

impl Sub for Frac {
    type Output = Frac;
    fn sub(self, rhs: Frac) -> Frac {
        Frac(self.0 - rhs.0)
    }
}

impl Mul for Frac {
    type Output = Frac;
    fn mul(self, rhs: Frac) -> Frac {
        Frac(self.0 * rhs.0)
    }
}

impl Neg for Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        assert_eq!(Frac::new(-3, 2).to_string(), "-3/2");
        assert_eq!(Frac::new(6, 3).to_string(), "2");
        assert_eq!("5/2".parse::<Frac>().unwrap(), Frac::new(5, 2));
        assert_eq!("-7".parse::<Frac>().unwrap(), Frac::int(-7));
        assert!("1/0".parse::<Frac>().is_err());
        assert_eq!(Frac::new(5, 2).display_with_decimal(), "5/2 (2.5)");
    }

    #[test]
    fn serde_as_string() {
        let json = serde_json::to_string(&Frac::new(-3, 2)).unwrap();
        assert_eq!(json, "\"-3/2\"");
        let back: Frac = serde_json::from_str(&json).unwrap();
        assert_eq!(back, Frac::new(-3, 2));
    }
}
