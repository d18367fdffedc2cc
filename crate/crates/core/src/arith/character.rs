//! The three quadratic character families `chi_p`, `chi_3 chi_p`, `chi_4 chi_p`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::classify::ClassifiedPrime;
use super::symbols::{chi4, jacobi};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CharKind {
    #[serde(rename = "p")]
    ChiP,
    #[serde(rename = "3p")]
    Chi3P,
    #[serde(rename = "4p")]
    Chi4P,
}

impl fmt::Display for CharKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharKind::ChiP => "p",
            CharKind::Chi3P => "3p",
            CharKind::Chi4P => "4p",
        })
    }
}

impl FromStr for CharKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(CharKind::ChiP),
            "3p" => Ok(CharKind::Chi3P),
            "4p" => Ok(CharKind::Chi4P),
            _ => Err(Error::usage(format!(
                "unknown character family {s:?} (p, 3p, 4p)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// A real character of one of the three families, with its conductor data.
///
/// `discriminant` is the signed fundamental discriminant `D` for which the
/// character coincides with the Kronecker symbol `(D/.)`: negative exactly
/// when the character is odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadCharacter {
    kind: CharKind,
    p: u64,
    modulus: u64,
    discriminant: i64,
    parity: Parity,
}

impl QuadCharacter {
    pub fn new(kind: CharKind, cp: &ClassifiedPrime) -> Result<Self> {
        let p = cp.p();
        let p_odd = cp.r4() == 3;
        let (modulus, parity) = match kind {
            CharKind::ChiP => (p, p_odd),
            CharKind::Chi3P => {
                if p == 3 {
                    return Err(Error::domain("chi_3 chi_p needs p > 3"));
                }
                // chi_3 is odd
                (3 * p, !p_odd)
            }
            // chi_4 is odd
            CharKind::Chi4P => (4 * p, !p_odd),
        };
        let parity = if parity { Parity::Odd } else { Parity::Even };
        let magnitude = modulus as i64;
        let discriminant = match parity {
            Parity::Odd => -magnitude,
            Parity::Even => magnitude,
        };
        Ok(QuadCharacter {
            kind,
            p,
            modulus,
            discriminant,
            parity,
        })
    }

    pub fn kind(&self) -> CharKind {
        self.kind
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn discriminant(&self) -> i64 {
        self.discriminant
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }

    /// `chi(n)`; periodic with period `modulus`.
    pub fn eval(&self, n: i64) -> i8 {
        char_eval(self, n)
    }
}

impl fmt::Display for QuadCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CharKind::ChiP => write!(f, "chi_{}", self.p),
            CharKind::Chi3P => write!(f, "chi_3*chi_{}", self.p),
            CharKind::Chi4P => write!(f, "chi_4*chi_{}", self.p),
        }
    }
}

/// Evaluates a family character as the product of its Legendre factors.
pub fn char_eval(chi: &QuadCharacter, n: i64) -> i8 {
    let p = chi.p;
    let lp = jacobi(n.rem_euclid(p as i64) as u64, p);
    match chi.kind {
        CharKind::ChiP => lp,
        CharKind::Chi3P => lp * jacobi(n.rem_euclid(3) as u64, 3),
        CharKind::Chi4P => lp * chi4(n),
    }
}

/// True if `d` is a fundamental discriminant: `d = 1 (mod 4)` squarefree,
/// or `d = 4m` with `m = 2, 3 (mod 4)` squarefree.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

fn is_squarefree(mut n: u64) -> bool {
    let mut q = 2u64;
    while q * q <= n {
        if n.is_multiple_of(q) {
            n /= q;
            if n.is_multiple_of(q) {
                return false;
            }
        }
        q += if q == 2 { 1 } else { 2 };
    }
    true
}

#[cfg(test)]
mod tests {
    use super::super::classify::classify;
    use super::super::primes::primes_in_range;
    use super::super::symbols::legendre;
    use super::*;

    fn chi(kind: CharKind, p: u64) -> QuadCharacter {
        QuadCharacter::new(kind, &classify(p).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(char_eval(&chi(CharKind::Chi4P, 13), 3), -1);
        assert_eq!(char_eval(&chi(CharKind::ChiP, 13), 13), 0);
        assert_eq!(char_eval(&chi(CharKind::Chi3P, 13), 2), 1);
    }

    #[test]
    fn conductor_data() {
        let c = chi(CharKind::ChiP, 7);
        assert_eq!(
            (c.modulus(), c.discriminant(), c.parity()),
            (7, -7, Parity::Odd)
        );
        let c = chi(CharKind::ChiP, 13);
        assert_eq!((c.discriminant(), c.parity()), (13, Parity::Even));
        let c = chi(CharKind::Chi3P, 13);
        assert_eq!((c.modulus(), c.discriminant()), (39, -39));
        let c = chi(CharKind::Chi4P, 13);
        assert_eq!((c.modulus(), c.discriminant()), (52, -52));
        let c = chi(CharKind::Chi4P, 7);
        assert_eq!((c.discriminant(), c.parity()), (28, Parity::Even));
        assert!(QuadCharacter::new(CharKind::Chi3P, &classify(3).unwrap()).is_err());
    }

    #[test]
    fn odd_characters_have_fundamental_discriminants() {
        for p in primes_in_range(3, 3000).unwrap() {
            let cp = classify(p).unwrap();
            for kind in [CharKind::ChiP, CharKind::Chi3P, CharKind::Chi4P] {
                let Ok(c) = QuadCharacter::new(kind, &cp) else {
                    continue;
                };
                assert!(is_fundamental_discriminant(c.discriminant()), "{c}");
                assert_eq!(c.discriminant() < 0, c.is_odd(), "{c}");
                assert!(matches!(c.discriminant().rem_euclid(4), 0 | 1));
            }
        }
    }

    #[test]
    fn fundamental_discriminants() {
        for d in [-3, -4, -7, -8, -15, -20, -23, -39, -52, 5, 8, 12] {
            assert!(is_fundamental_discriminant(d), "{d}");
        }
        for d in [-12, -16, -27, -2, -1, 0, 1, 9, -36, -75] {
            assert!(!is_fundamental_discriminant(d), "{d}");
        }
    }

    #[test]
    fn period_and_zeros() {
        for p in [5u64, 7, 11, 13, 17, 19] {
            let cp = classify(p).unwrap();
            for kind in [CharKind::ChiP, CharKind::Chi3P, CharKind::Chi4P] {
                let c = QuadCharacter::new(kind, &cp).unwrap();
                let q = c.modulus() as i64;
                for n in -2 * q..2 * q {
                    assert_eq!(c.eval(n), c.eval(n + q));
                    let g = num_integer::gcd(n, q);
                    assert_eq!(c.eval(n) == 0, g > 1, "{c} at {n}");
                }
            }
        }
    }

    #[test]
    fn odd_character_reflection() {
        for p in primes_in_range(5, 400).unwrap() {
            let cp = classify(p).unwrap();
            for kind in [CharKind::ChiP, CharKind::Chi3P, CharKind::Chi4P] {
                let c = QuadCharacter::new(kind, &cp).unwrap();
                let q = c.modulus() as i64;
                let sign = if c.is_odd() { -1 } else { 1 };
                for n in 1..q {
                    if num_integer::gcd(n, q) == 1 {
                        assert_eq!(c.eval(q - n), sign * c.eval(n), "{c} at {n}");
                    }
                }
            }
        }
    }

    #[test]
    fn chi_p_is_legendre() {
        let c = chi(CharKind::ChiP, 23);
        for n in -50..50 {
            assert_eq!(c.eval(n), legendre(n, 23).unwrap());
        }
    }
}
