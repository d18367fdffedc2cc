//! Identity and claim evaluation for one prime.

use serde::{Deserialize, Serialize};

use super::context::PrimeContext;
use crate::arith::{jacobi, ClassifiedPrime};
use crate::charsum::{pv_from_stats, vanishing_check_profile, vanishing_check_with};
use crate::classnum::{class_identity_from_sum, ClassIdentity, ClassNumbers};
use crate::counts::{closed_form, count_formula_profile, CountRecord, SubsetSelector};
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::ids::{ClaimId, IdentityId, Relation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

/// Both sides of a checked (in)equality, at one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub p: u64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityResult {
    pub id: IdentityId,
    pub outcome: Outcome,
    pub witness: Option<Witness>,
}

/// A claim's two sides at one prime; `gap = lhs - rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: ClaimId,
    pub outcome: Outcome,
    pub relation: Relation,
    pub lhs: Frac,
    pub rhs: Frac,
    pub gap: Frac,
}

/// Largest `k` checked by the counting-formula identity.
pub const EXP_MAX_K: u64 = 50;

/// Evaluates each requested identity that applies to `cp`; the others are
/// reported as not applicable.
pub fn verify_prime<C: ClassNumbers + ?Sized>(
    cp: &ClassifiedPrime,
    ids: &[IdentityId],
    h: &C,
) -> Result<Vec<IdentityResult>> {
    let ctx = PrimeContext::new(*cp)?;
    verify_in_context(&ctx, ids, h)
}

pub(crate) fn verify_in_context<C: ClassNumbers + ?Sized>(
    ctx: &PrimeContext,
    ids: &[IdentityId],
    h: &C,
) -> Result<Vec<IdentityResult>> {
    ids.iter()
        .map(|&id| {
            if !id.applies(&ctx.cp) {
                return Ok(IdentityResult {
                    id,
                    outcome: Outcome::NotApplicable,
                    witness: None,
                });
            }
            let (ok, lhs, rhs) = evaluate(ctx, id, h).map_err(|e| e.at(ctx.p(), id.as_str()))?;
            Ok(IdentityResult {
                id,
                outcome: Outcome::from_bool(ok),
                witness: Some(Witness {
                    p: ctx.p(),
                    lhs,
                    rhs,
                }),
            })
        })
        .collect()
}

fn evaluate<C: ClassNumbers + ?Sized>(
    ctx: &PrimeContext,
    id: IdentityId,
    h: &C,
) -> Result<(bool, String, String)> {
    let cp = &ctx.cp;
    let p = cp.p();
    Ok(match id {
        IdentityId::B1 | IdentityId::B2 | IdentityId::B3 => {
            let v = match ctx.profile() {
                Some(prof) => vanishing_check_profile(prof, cp),
                None => vanishing_check_with(ctx.source(), cp),
            };
            (v.holds(), v.sum.to_string(), "0".into())
        }
        IdentityId::W1 | IdentityId::W2 | IdentityId::W3 | IdentityId::W4 => {
            let w = match id {
                IdentityId::W1 => ClassIdentity::W1,
                IdentityId::W2 => ClassIdentity::W2,
                IdentityId::W3 => ClassIdentity::W3,
                _ => ClassIdentity::W4,
            };
            let s = ctx.prefix(p / w.den());
            let o = class_identity_from_sum(cp, w, s, h)?;
            (o.holds(), o.lhs.to_string(), o.rhs.to_string())
        }
        IdentityId::C2 | IdentityId::C3 | IdentityId::C4 => {
            let k = match id {
                IdentityId::C2 => 2,
                IdentityId::C3 => 3,
                _ => 4,
            };
            let sel = SubsetSelector::Multiples(k);
            let cf = closed_form(cp, sel, h)?;
            let brute = ctx.count(sel)?.q as i64;
            (cf.q == brute, cf.q.to_string(), brute.to_string())
        }
        IdentityId::QN => {
            let r = ctx.count(SubsetSelector::Multiples(1))?;
            let half = (p - 1) / 2;
            (
                r.q == half && r.n == half,
                format!("{} {}", r.q, r.n),
                format!("{half} {half}"),
            )
        }
        IdentityId::PV => {
            let e = pv_from_stats(&ctx.stats());
            (e.holds(), e.max_interval.to_string(), e.bound.to_string())
        }
        IdentityId::EXP => evaluate_exp(ctx)?,
    })
}

/// Counting formula against brute force for every `k <= min(p-1, 50)`,
/// plus the envelope `|Q - floor((p-1)/k)/2| <= sqrt(p) ln p / 2`.
fn evaluate_exp(ctx: &PrimeContext) -> Result<(bool, String, String)> {
    let p = ctx.p();
    let envelope = crate::charsum::pv_bound(p) / 2.0;
    let mut widest = Frac::ZERO;
    for k in 1..=(p - 1).min(EXP_MAX_K) {
        let (fq, fn_) = match ctx.profile() {
            Some(prof) => count_formula_profile(prof, k)?,
            None => {
                let sum = ctx.prefix((p - 1) / k);
                let size = ((p - 1) / k) as i64;
                let t = jacobi(k, p) as i64 * sum;
                (((size + t) / 2) as u64, ((size - t) / 2) as u64)
            }
        };
        let brute = ctx.count(SubsetSelector::Multiples(k))?;
        if (fq, fn_) != (brute.q, brute.n) {
            return Ok((
                false,
                format!("k={k} formula Q={fq} N={fn_}"),
                format!("k={k} brute Q={} N={}", brute.q, brute.n),
            ));
        }
        let dev = brute.gap.abs();
        if dev.to_f64() > envelope {
            return Ok((false, format!("k={k} |gap|={dev}"), envelope.to_string()));
        }
        widest = widest.max(dev);
    }
    Ok((true, widest.to_string(), envelope.to_string()))
}

fn claim_sides(ctx: &PrimeContext, id: ClaimId) -> Result<(Frac, Frac)> {
    let p = ctx.p() as i64;
    let cp = &ctx.cp;
    let q = |sel| -> Result<Frac> { Ok(Frac::int(ctx.count(sel)?.q as i64)) };
    let n = |sel| -> Result<Frac> { Ok(Frac::int(ctx.count(sel)?.n as i64)) };
    let s2 = SubsetSelector::Multiples(2);
    let s3 = SubsetSelector::Multiples(3);
    let s4 = SubsetSelector::Multiples(4);
    let quarter = Frac::new(p - 1, 4);
    let sixth = Frac::new(p - 1, 6);
    let eighth = Frac::new(p - 1, 8);
    let half_floor4 = Frac::new((p - 1) / 4, 2);
    Ok(match id {
        ClaimId::T1_1Exact | ClaimId::T1_1Pos => (q(s2)?, quarter),
        ClaimId::C1_2Pos => {
            // both readings of R; report the weaker one
            let via_n = (quarter, n(s2)?);
            let via_odds = (quarter, q(SubsetSelector::Odds)?);
            if via_odds.0 - via_odds.1 < via_n.0 - via_n.1 {
                via_odds
            } else {
                via_n
            }
        }
        ClaimId::T1_3Pos => (q(s3)?, sixth),
        ClaimId::C1_4Pos => (sixth, n(s3)?),
        ClaimId::T1_5Exact | ClaimId::T1_5Pos7Mod8 => (q(s4)?, half_floor4),
        ClaimId::T1_5Pos1Mod4 => (q(s4)?, eighth),
        ClaimId::C1_6 => match (cp.r4(), cp.r8()) {
            (_, 3) => (n(s4)?, half_floor4),
            (1, _) => (eighth, n(s4)?),
            _ => (half_floor4, n(s4)?),
        },
        ClaimId::C1_7Pos => (q(SubsetSelector::S2MinusS4)?, half_floor4),
    })
}

/// Evaluates every claim literally against brute-force counts.
pub fn check_claims(cp: &ClassifiedPrime) -> Result<Vec<ClaimResult>> {
    let ctx = PrimeContext::new(*cp)?;
    claims_in_context(&ctx, &ClaimId::ALL)
}

pub(crate) fn claims_in_context(ctx: &PrimeContext, ids: &[ClaimId]) -> Result<Vec<ClaimResult>> {
    ids.iter()
        .map(|&id| {
            let relation = id.relation(&ctx.cp);
            if !id.applies(&ctx.cp) {
                return Ok(ClaimResult {
                    id,
                    outcome: Outcome::NotApplicable,
                    relation,
                    lhs: Frac::ZERO,
                    rhs: Frac::ZERO,
                    gap: Frac::ZERO,
                });
            }
            let (lhs, rhs) = claim_sides(ctx, id).map_err(|e: Error| e.at(ctx.p(), id.as_str()))?;
            let gap = lhs - rhs;
            Ok(ClaimResult {
                id,
                outcome: Outcome::from_bool(relation.holds(gap.signum())),
                relation,
                lhs,
                rhs,
                gap,
            })
        })
        .collect()
}

/// Brute-force counts of the standard selectors valid at `p`.
pub(crate) fn standard_counts(ctx: &PrimeContext) -> Result<Vec<CountRecord>> {
    SubsetSelector::STANDARD
        .into_iter()
        .filter(|sel| !matches!(sel, SubsetSelector::Multiples(k) if *k >= ctx.p()))
        .map(|sel| ctx.count(sel))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::classify;
    use crate::classnum::FormsOracle;

    fn outcomes(p: u64, ids: &[IdentityId]) -> Vec<Outcome> {
        verify_prime(&classify(p).unwrap(), ids, &FormsOracle)
            .unwrap()
            .into_iter()
            .map(|r| r.outcome)
            .collect()
    }

    #[test]
    fn identity_examples() {
        use IdentityId::*;
        assert!(outcomes(13, &[B1, W3, W4, C4])
            .iter()
            .all(|o| *o == Outcome::Pass));
        assert!(outcomes(11, &[B2, W1, W2, C2, C3])
            .iter()
            .all(|o| *o == Outcome::Pass));
        assert_eq!(outcomes(5, &[W3]), vec![Outcome::Pass]);
        assert_eq!(outcomes(3, &[W1]), vec![Outcome::NotApplicable]);
        assert_eq!(outcomes(13, &[B2, W1]), vec![Outcome::NotApplicable; 2]);
        assert!(outcomes(3, &[QN, PV, EXP, B2])
            .iter()
            .all(|o| *o == Outcome::Pass));
    }

    #[test]
    fn witnesses_carry_both_sides() {
        let r = verify_prime(&classify(13).unwrap(), &[IdentityId::W3], &FormsOracle).unwrap();
        assert_eq!(
            r[0].witness,
            Some(Witness {
                p: 13,
                lhs: "4".into(),
                rhs: "4".into()
            })
        );
    }

    fn claim(p: u64, id: ClaimId) -> ClaimResult {
        check_claims(&classify(p).unwrap())
            .unwrap()
            .into_iter()
            .find(|c| c.id == id)
            .unwrap()
    }

    #[test]
    fn claim_examples() {
        let c = claim(13, ClaimId::T1_1Exact);
        assert_eq!((c.outcome, c.lhs), (Outcome::Pass, Frac::int(3)));
        let c = claim(23, ClaimId::T1_1Pos);
        assert_eq!((c.outcome, c.gap), (Outcome::Pass, Frac::new(3, 2)));
        let c = claim(11, ClaimId::T1_1Pos);
        assert_eq!((c.outcome, c.gap), (Outcome::Fail, Frac::new(-3, 2)));
        let c = claim(19, ClaimId::T1_1Pos);
        assert_eq!((c.outcome, c.gap), (Outcome::Fail, Frac::new(-3, 2)));
        assert_eq!(claim(13, ClaimId::T1_1Pos).outcome, Outcome::NotApplicable);
        let c = claim(11, ClaimId::C1_7Pos);
        assert_eq!((c.outcome, c.gap), (Outcome::Fail, Frac::new(-1, 1)));
        assert_eq!(claim(11, ClaimId::C1_6).outcome, Outcome::Pass);
        assert_eq!(claim(11, ClaimId::T1_3Pos).gap, Frac::new(1, 3));
    }

    #[test]
    fn p3_claims_not_applicable() {
        assert!(check_claims(&classify(3).unwrap())
            .unwrap()
            .iter()
            .all(|c| c.outcome == Outcome::NotApplicable));
    }
}
