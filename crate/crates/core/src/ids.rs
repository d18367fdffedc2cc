//! Names of the checked identities and of the claims under adjudication.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::ClassifiedPrime;
use crate::classnum::ClassIdentity;
use crate::error::{Error, Result};

/// An identity that must hold on every prime it applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    /// Vanishing sum over `[1, (p-1)/2]`, `p = 1 (mod 4)`.
    B1,
    /// Vanishing sum over `[1, p/4]`, `p = 3 (mod 8)`.
    B2,
    /// Vanishing sum over `[p/4, p/2]`, `p = 7 (mod 8)`.
    B3,
    W1,
    W2,
    W3,
    W4,
    /// Closed form of `Q(p, S_2)` against brute force.
    C2,
    /// Closed form of `Q(p, S_3)` against brute force.
    C3,
    /// Closed form of `Q(p, S_4)` against brute force.
    C4,
    /// `(p-1)/2` residues and `(p-1)/2` non-residues.
    QN,
    /// Largest interval sum at most `sqrt(p) ln p`.
    PV,
    /// Counting formula for `Q(p, S_k)`, `N(p, S_k)`, `k <= 50`, and its
    /// `sqrt(p) ln p / 2` envelope.
    EXP,
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        IdentityId::B1,
        IdentityId::B2,
        IdentityId::B3,
        IdentityId::W1,
        IdentityId::W2,
        IdentityId::W3,
        IdentityId::W4,
        IdentityId::C2,
        IdentityId::C3,
        IdentityId::C4,
        IdentityId::QN,
        IdentityId::PV,
        IdentityId::EXP,
    ];

    pub fn applies(&self, cp: &ClassifiedPrime) -> bool {
        match self {
            IdentityId::B1 => cp.r4() == 1,
            IdentityId::B2 => cp.r8() == 3,
            IdentityId::B3 => cp.r8() == 7,
            IdentityId::W1 => ClassIdentity::W1.applies(cp),
            IdentityId::W2 => ClassIdentity::W2.applies(cp),
            IdentityId::W3 => ClassIdentity::W3.applies(cp),
            IdentityId::W4 => ClassIdentity::W4.applies(cp),
            IdentityId::C2 | IdentityId::C3 | IdentityId::C4 => cp.p() > 3,
            IdentityId::QN | IdentityId::PV | IdentityId::EXP => true,
        }
    }

    /// Human-readable precondition.
    pub fn precondition(&self) -> &'static str {
        match self {
            IdentityId::B1 => "p = 1 (mod 4)",
            IdentityId::B2 => "p = 3 (mod 8)",
            IdentityId::B3 => "p = 7 (mod 8)",
            IdentityId::W1 | IdentityId::W2 => "p = 3 (mod 4), p > 3",
            IdentityId::W3 | IdentityId::W4 => "p = 1 (mod 4), p > 3",
            IdentityId::C2 | IdentityId::C3 | IdentityId::C4 => "p > 3",
            IdentityId::QN | IdentityId::PV | IdentityId::EXP => "any odd prime",
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::B1 => "B1",
            IdentityId::B2 => "B2",
            IdentityId::B3 => "B3",
            IdentityId::W1 => "W1",
            IdentityId::W2 => "W2",
            IdentityId::W3 => "W3",
            IdentityId::W4 => "W4",
            IdentityId::C2 => "C2",
            IdentityId::C3 => "C3",
            IdentityId::C4 => "C4",
            IdentityId::QN => "QN",
            IdentityId::PV => "PV",
            IdentityId::EXP => "EXP",
        }
    }
}

impl From<ClassIdentity> for IdentityId {
    fn from(w: ClassIdentity) -> Self {
        match w {
            ClassIdentity::W1 => IdentityId::W1,
            ClassIdentity::W2 => IdentityId::W2,
            ClassIdentity::W3 => IdentityId::W3,
            ClassIdentity::W4 => IdentityId::W4,
        }
    }
}

/// Expected relation between a count and its main term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = ">")]
    Greater,
}

impl Relation {
    /// Whether `gap` (left side minus right side) satisfies the relation.
    pub fn holds(&self, gap_sign: i64) -> bool {
        match self {
            Relation::Equal => gap_sign == 0,
            Relation::Greater => gap_sign > 0,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Equal => "=",
            Relation::Greater => ">",
        })
    }
}

/// A theorem-level statement, checked literally as written.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    /// `Q(p, S_2) = (p-1)/4` for `p = 1 (mod 4)`.
    T1_1Exact,
    /// `Q(p, S_2) - (p-1)/4 > 0` for `p = 3 (mod 4)`.
    T1_1Pos,
    /// `(p-1)/4 - R > 0` for `R` in `{N(p, S_2), Q(p, odds)}`, `p = 3 (mod 4)`.
    C1_2Pos,
    /// `Q(p, S_3) - (p-1)/6 > 0` for `p = 1, 11 (mod 12)`.
    T1_3Pos,
    /// `(p-1)/6 - N(p, S_3) > 0` for `p = 1, 11 (mod 12)`.
    C1_4Pos,
    /// `Q(p, S_4) = floor((p-1)/4)/2` for `p = 3 (mod 8)`.
    T1_5Exact,
    /// `Q(p, S_4) - (p-1)/8 > 0` for `p = 1 (mod 4)`.
    T1_5Pos1Mod4,
    /// `Q(p, S_4) - floor((p-1)/4)/2 > 0` for `p = 7 (mod 8)`.
    T1_5Pos7Mod8,
    /// The three `N(p, S_4)` statements, by class of `p`.
    C1_6,
    /// `Q(p, S_2 \ S_4) - floor((p-1)/4)/2 > 0` for `p = 3 (mod 8)`.
    C1_7Pos,
}

impl ClaimId {
    pub const ALL: [ClaimId; 10] = [
        ClaimId::T1_1Exact,
        ClaimId::T1_1Pos,
        ClaimId::C1_2Pos,
        ClaimId::T1_3Pos,
        ClaimId::C1_4Pos,
        ClaimId::T1_5Exact,
        ClaimId::T1_5Pos1Mod4,
        ClaimId::T1_5Pos7Mod8,
        ClaimId::C1_6,
        ClaimId::C1_7Pos,
    ];

    pub fn applies(&self, cp: &ClassifiedPrime) -> bool {
        cp.p() > 3
            && match self {
                ClaimId::T1_1Exact | ClaimId::T1_5Pos1Mod4 => cp.r4() == 1,
                ClaimId::T1_1Pos | ClaimId::C1_2Pos => cp.r4() == 3,
                ClaimId::T1_3Pos | ClaimId::C1_4Pos => matches!(cp.r12(), 1 | 11),
                ClaimId::T1_5Exact | ClaimId::C1_7Pos => cp.r8() == 3,
                ClaimId::T1_5Pos7Mod8 => cp.r8() == 7,
                ClaimId::C1_6 => true,
            }
    }

    /// The relation claimed at `cp`.
    pub fn relation(&self, cp: &ClassifiedPrime) -> Relation {
        match self {
            ClaimId::T1_1Exact | ClaimId::T1_5Exact => Relation::Equal,
            ClaimId::C1_6 if cp.r8() == 3 => Relation::Equal,
            _ => Relation::Greater,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimId::T1_1Exact => "T1.1-exact",
            ClaimId::T1_1Pos => "T1.1-pos",
            ClaimId::C1_2Pos => "C1.2-pos",
            ClaimId::T1_3Pos => "T1.3-pos",
            ClaimId::C1_4Pos => "C1.4-pos",
            ClaimId::T1_5Exact => "T1.5-exact",
            ClaimId::T1_5Pos1Mod4 => "T1.5-pos-1mod4",
            ClaimId::T1_5Pos7Mod8 => "T1.5-pos-7mod8",
            ClaimId::C1_6 => "C1.6",
            ClaimId::C1_7Pos => "C1.7-pos",
        }
    }

    pub fn statement(&self) -> &'static str {
        match self {
            ClaimId::T1_1Exact => "Q(p,S_2) = (p-1)/4 for p = 1 (mod 4)",
            ClaimId::T1_1Pos => "Q(p,S_2) - (p-1)/4 > 0 for p = 3 (mod 4)",
            ClaimId::C1_2Pos => "(p-1)/4 - R > 0, R = N(p,S_2) and R = Q(p,odds), p = 3 (mod 4)",
            ClaimId::T1_3Pos => "Q(p,S_3) - (p-1)/6 > 0 for p = 1, 11 (mod 12)",
            ClaimId::C1_4Pos => "(p-1)/6 - N(p,S_3) > 0 for p = 1, 11 (mod 12)",
            ClaimId::T1_5Exact => "Q(p,S_4) = [(p-1)/4]/2 for p = 3 (mod 8)",
            ClaimId::T1_5Pos1Mod4 => "Q(p,S_4) - (p-1)/8 > 0 for p = 1 (mod 4)",
            ClaimId::T1_5Pos7Mod8 => "Q(p,S_4) - [(p-1)/4]/2 > 0 for p = 7 (mod 8)",
            ClaimId::C1_6 => {
                "N(p,S_4) = [(p-1)/4]/2 (p = 3 mod 8); (p-1)/8 - N > 0 (p = 1 mod 4); [(p-1)/4]/2 - N > 0 (p = 7 mod 8)"
            }
            ClaimId::C1_7Pos => "Q(p,S_2\\S_4) - [(p-1)/4]/2 > 0 for p = 3 (mod 8)",
        }
    }
}

macro_rules! string_serde {
    ($ty:ty, $all:expr, $what:literal) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                $all.into_iter()
                    .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
                    .ok_or_else(|| Error::usage(format!(concat!("unknown ", $what, " {:?}"), s)))
            }
        }

        impl Serialize for $ty {
            fn serialize<S: serde::Serializer>(
                &self,
                s: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(self.as_str())
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(
                d: D,
            ) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

string_serde!(IdentityId, IdentityId::ALL, "identity");
string_serde!(ClaimId, ClaimId::ALL, "claim");

/// Parses `all`, `none`, or a comma-separated list of ids.
pub fn parse_list<T: FromStr<Err = Error> + Copy>(s: &str, all: &[T]) -> Result<Vec<T>> {
    match s.trim() {
        "all" => Ok(all.to_vec()),
        "none" | "" => Ok(Vec::new()),
        list => list.split(',').map(str::parse).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::classify;

    #[test]
    fn names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        }
        for id in ClaimId::ALL {
            assert_eq!(id.to_string().parse::<ClaimId>().unwrap(), id);
        }
        assert!("T9".parse::<ClaimId>().is_err());
        assert_eq!(
            parse_list("B1,W2", &IdentityId::ALL).unwrap(),
            vec![IdentityId::B1, IdentityId::W2]
        );
        assert_eq!(parse_list("all", &ClaimId::ALL).unwrap().len(), 10);
    }

    #[test]
    fn applicability() {
        let p3 = classify(3).unwrap();
        assert!(!IdentityId::W1.applies(&p3));
        assert!(IdentityId::B2.applies(&p3));
        assert!(!ClaimId::C1_6.applies(&p3));
        let p13 = classify(13).unwrap();
        assert!(IdentityId::B1.applies(&p13) && IdentityId::W3.applies(&p13));
        assert!(ClaimId::T1_3Pos.applies(&p13));
        assert!(!ClaimId::T1_3Pos.applies(&classify(17).unwrap()));
        assert_eq!(
            ClaimId::C1_6.relation(&classify(11).unwrap()),
            Relation::Equal
        );
        assert_eq!(ClaimId::C1_6.relation(&p13), Relation::Greater);
    }
}
