//! The class-number evaluations of `S(1, p/2)`, `S(1, p/3)`, `S(1, p/4)`
//! as exact integer identities.
//!
//! Substituting `L(1, chi) = pi h / sqrt|d|` (w = 2) turns each
//! evaluation into an equation between integers:
//!
//! | id | class       | identity                              |
//! |----|-------------|---------------------------------------|
//! | W1 | p = 3 mod 4 | `S(1,p/2) = (2 - (2/p)) h(-p)`        |
//! | W2 | p = 3 mod 4 | `2 S(1,p/3) = (3 - (3/p)) h(-p)`      |
//! | W3 | p = 1 mod 4 | `2 S(1,p/3) = h(-3p)`                 |
//! | W4 | p = 1 mod 4 | `2 S(1,p/4) = h(-4p)`                 |

use std::fmt;

use serde::{Deserialize, Serialize};

use super::ClassNumbers;
use crate::arith::{jacobi, ClassifiedPrime};
use crate::charsum::partial_sum;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassIdentity {
    W1,
    W2,
    W3,
    W4,
}

impl ClassIdentity {
    pub const ALL: [ClassIdentity; 4] = [
        ClassIdentity::W1,
        ClassIdentity::W2,
        ClassIdentity::W3,
        ClassIdentity::W4,
    ];

    pub fn applies(&self, cp: &ClassifiedPrime) -> bool {
        cp.p() > 3
            && match self {
                ClassIdentity::W1 | ClassIdentity::W2 => cp.r4() == 3,
                ClassIdentity::W3 | ClassIdentity::W4 => cp.r4() == 1,
            }
    }

    /// Denominator of the cutoff `p/den` in the partial sum.
    pub fn den(&self) -> u64 {
        match self {
            ClassIdentity::W1 => 2,
            ClassIdentity::W2 | ClassIdentity::W3 => 3,
            ClassIdentity::W4 => 4,
        }
    }

    /// Discriminant whose class number appears on the right.
    pub fn discriminant(&self, p: u64) -> i64 {
        let p = p as i64;
        match self {
            ClassIdentity::W1 | ClassIdentity::W2 => -p,
            ClassIdentity::W3 => -3 * p,
            ClassIdentity::W4 => -4 * p,
        }
    }
}

impl fmt::Display for ClassIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassIdentityOutcome {
    pub id: ClassIdentity,
    pub lhs: i64,
    pub rhs: i64,
}

impl ClassIdentityOutcome {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Checks one identity, computing the partial sum with the Jacobi symbol.
pub fn class_identity<C: ClassNumbers + ?Sized>(
    cp: &ClassifiedPrime,
    id: ClassIdentity,
    h: &C,
) -> Result<ClassIdentityOutcome> {
    check_applicable(cp, id)?;
    let s = partial_sum(cp.p(), 1, id.den())?;
    class_identity_from_sum(cp, id, s, h)
}

/// Checks one identity given `s = S(1, p/den)` for `den = id.den()`.
pub fn class_identity_from_sum<C: ClassNumbers + ?Sized>(
    cp: &ClassifiedPrime,
    id: ClassIdentity,
    s: i64,
    h: &C,
) -> Result<ClassIdentityOutcome> {
    check_applicable(cp, id)?;
    let p = cp.p();
    let hd = h.class_number(id.discriminant(p))? as i64;
    let (lhs, rhs) = match id {
        ClassIdentity::W1 => (s, (2 - jacobi(2, p) as i64) * hd),
        ClassIdentity::W2 => (2 * s, (3 - jacobi(3, p) as i64) * hd),
        ClassIdentity::W3 | ClassIdentity::W4 => (2 * s, hd),
    };
    Ok(ClassIdentityOutcome { id, lhs, rhs })
}

fn check_applicable(cp: &ClassifiedPrime, id: ClassIdentity) -> Result<()> {
    if id.applies(cp) {
        Ok(())
    } else {
        Err(Error::usage(format!(
            "{id} does not apply to p = {} (r4 = {})",
            cp.p(),
            cp.r4()
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{classify, primes_in_range};
    use crate::classnum::FormsOracle;

    fn check(p: u64, id: ClassIdentity) -> ClassIdentityOutcome {
        class_identity(&classify(p).unwrap(), id, &FormsOracle).unwrap()
    }

    #[test]
    fn examples() {
        let o = check(7, ClassIdentity::W1);
        assert_eq!((o.lhs, o.rhs), (1, 1));
        let o = check(11, ClassIdentity::W2);
        assert_eq!((o.lhs, o.rhs), (2, 2));
        let o = check(13, ClassIdentity::W4);
        assert_eq!((o.lhs, o.rhs), (2, 2));
        let o = check(13, ClassIdentity::W3);
        assert_eq!((o.lhs, o.rhs), (4, 4));
    }

    #[test]
    fn wrong_class_is_usage_error() {
        let cp = classify(13).unwrap();
        assert!(matches!(
            class_identity(&cp, ClassIdentity::W1, &FormsOracle),
            Err(Error::Usage(_))
        ));
        let cp = classify(3).unwrap();
        assert!(matches!(
            class_identity(&cp, ClassIdentity::W1, &FormsOracle),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn hold_below_2000() {
        for p in primes_in_range(5, 2000).unwrap() {
            let cp = classify(p).unwrap();
            for id in ClassIdentity::ALL.into_iter().filter(|id| id.applies(&cp)) {
                let o = class_identity(&cp, id, &FormsOracle).unwrap();
                assert!(o.holds(), "{id} at p = {p}: {} != {}", o.lhs, o.rhs);
            }
        }
    }
}
