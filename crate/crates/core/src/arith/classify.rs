use std::fmt;

use serde::{Deserialize, Serialize};

use super::primes::{is_prime, RANGE_CAP};
use crate::error::{Error, Result};

/// A verified odd prime `3 <= p < 2^32` with its residues mod 4, 8 and 12.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ClassifiedPrime {
    p: u64,
    r4: u8,
    r8: u8,
    r12: u8,
}

impl ClassifiedPrime {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r4(&self) -> u8 {
        self.r4
    }

    pub fn r8(&self) -> u8 {
        self.r8
    }

    pub fn r12(&self) -> u8 {
        self.r12
    }

    /// Labels of the three residue classes, e.g. `["r4=3", "r8=7", "r12=7"]`.
    pub fn class_labels(&self) -> [ResidueClass; 3] {
        [
            ResidueClass::new(4, self.r4),
            ResidueClass::new(8, self.r8),
            ResidueClass::new(12, self.r12),
        ]
    }
}

impl fmt::Display for ClassifiedPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.p)
    }
}

/// Primality-checks `p` and records its residue classes.
pub fn classify(p: u64) -> Result<ClassifiedPrime> {
    if p & 1 == 0 || !is_prime(p) {
        return Err(Error::domain(format!("{p} is not an odd prime")));
    }
    if p >= RANGE_CAP {
        return Err(Error::domain(format!("{p} exceeds the range cap 2^32")));
    }
    Ok(ClassifiedPrime {
        p,
        r4: (p % 4) as u8,
        r8: (p % 8) as u8,
        r12: (p % 12) as u8,
    })
}

/// A residue class `r (mod m)` for `m` in {4, 8, 12}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResidueClass {
    pub modulus: u8,
    pub residue: u8,
}

impl ResidueClass {
    pub fn new(modulus: u8, residue: u8) -> Self {
        ResidueClass { modulus, residue }
    }

    pub fn contains(&self, cp: &ClassifiedPrime) -> bool {
        cp.p % self.modulus as u64 == self.residue as u64
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}={}", self.modulus, self.residue)
    }
}

impl std::str::FromStr for ResidueClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::usage(format!("bad residue class label {s:?}, expected e.g. r8=3"));
        let rest = s.strip_prefix('r').ok_or_else(bad)?;
        let (m, r) = rest.split_once('=').ok_or_else(bad)?;
        let modulus: u8 = m.parse().map_err(|_| bad())?;
        let residue: u8 = r.parse().map_err(|_| bad())?;
        if !matches!(modulus, 4 | 8 | 12) || residue >= modulus {
            return Err(bad());
        }
        Ok(ResidueClass { modulus, residue })
    }
}

impl Serialize for ResidueClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ResidueClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
