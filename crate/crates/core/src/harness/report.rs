//! The serialized verification report and its aggregation.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::checks::{ClaimResult, IdentityResult, Outcome, Witness};
use crate::arith::{ClassifiedPrime, ResidueClass};
use crate::counts::{normalize, CountRecord, SubsetSelector};
use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::ids::{ClaimId, IdentityId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeSpec {
    pub lo: u64,
    pub hi: u64,
}

/// The parts of the run configuration that affect results. Job count and
/// cache location are deliberately absent.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub identities: Vec<IdentityId>,
    pub claims: Vec<ClaimId>,
    pub eps: Vec<f64>,
    pub witness_cap: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PassFail {
    pub pass: u64,
    pub fail: u64,
}

impl PassFail {
    fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Pass => self.pass += 1,
            Outcome::Fail => self.fail += 1,
            Outcome::NotApplicable => {}
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentitySummary {
    pub id: IdentityId,
    pub precondition: String,
    pub applicable: u64,
    pub not_applicable: u64,
    pub pass: u64,
    pub fail: u64,
    /// Failures only, the first `witness_cap` in ascending `p`.
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimWitness {
    pub p: u64,
    pub lhs: Frac,
    pub rhs: Frac,
    pub gap: Frac,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimSummary {
    pub id: ClaimId,
    pub statement: String,
    pub applicable: u64,
    pub pass: u64,
    pub fail: u64,
    pub witnesses: Vec<ClaimWitness>,
    pub by_class: BTreeMap<ResidueClass, PassFail>,
}

/// Normalized-gap statistics of one selector over one residue class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GapStat {
    pub eps: f64,
    pub selector: SubsetSelector,
    pub class: ResidueClass,
    pub count: u64,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub min_abs: f64,
    pub argmin_abs: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub primes: u64,
    /// Wall time, only recorded on request so reports stay reproducible.
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub range: RangeSpec,
    pub config: ReportConfig,
    pub identities: Vec<IdentitySummary>,
    pub claims: Vec<ClaimSummary>,
    pub gap_stats: Vec<GapStat>,
    pub timing: Timing,
}

impl VerificationReport {
    pub fn identity(&self, id: IdentityId) -> Option<&IdentitySummary> {
        self.identities.iter().find(|s| s.id == id)
    }

    pub fn claim(&self, id: ClaimId) -> Option<&ClaimSummary> {
        self.claims.iter().find(|s| s.id == id)
    }

    pub fn identity_failures(&self) -> u64 {
        self.identities.iter().map(|s| s.fail).sum()
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Minimum of `|normalized gap|` per class and selector.
#[derive(Clone, Debug, PartialEq)]
pub struct GapMinimum {
    pub class: ResidueClass,
    pub selector: SubsetSelector,
    pub min_abs: f64,
    pub argmin: u64,
}

/// The lower-envelope table at one `eps` of the report's grid.
pub fn gap_statistics(report: &VerificationReport, eps: f64) -> Result<Vec<GapMinimum>> {
    if !report.config.eps.contains(&eps) {
        return Err(Error::usage(format!(
            "eps = {eps} is not in the report's grid {:?}",
            report.config.eps
        )));
    }
    Ok(report
        .gap_stats
        .iter()
        .filter(|g| g.eps == eps)
        .map(|g| GapMinimum {
            class: g.class,
            selector: g.selector,
            min_abs: g.min_abs,
            argmin: g.argmin_abs,
        })
        .collect())
}

#[derive(Clone, Copy, Debug)]
struct GapAccumulator {
    count: u64,
    min: f64,
    max: f64,
    sum: f64,
    min_abs: f64,
    argmin_abs: u64,
}

impl GapAccumulator {
    fn new() -> Self {
        GapAccumulator {
            count: 0,
            min: f64::INFINITY,
            max: f64::NEG_INFINITY,
            sum: 0.0,
            min_abs: f64::INFINITY,
            argmin_abs: 0,
        }
    }

    fn push(&mut self, p: u64, g: f64) {
        self.count += 1;
        self.min = self.min.min(g);
        self.max = self.max.max(g);
        self.sum += g;
        if g.abs() < self.min_abs {
            self.min_abs = g.abs();
            self.argmin_abs = p;
        }
    }
}

/// Everything evaluated at one prime.
pub(crate) struct PrimeOutcome {
    pub cp: ClassifiedPrime,
    pub identities: Vec<IdentityResult>,
    pub claims: Vec<ClaimResult>,
    pub counts: Vec<CountRecord>,
}

/// Folds per-prime outcomes in ascending `p`.
pub(crate) struct Aggregator {
    config: ReportConfig,
    identities: Vec<IdentitySummary>,
    claims: Vec<ClaimSummary>,
    gaps: BTreeMap<(usize, SubsetSelector, ResidueClass), GapAccumulator>,
    primes: u64,
}

impl Aggregator {
    pub fn new(config: ReportConfig) -> Self {
        let identities = config
            .identities
            .iter()
            .map(|&id| IdentitySummary {
                id,
                precondition: id.precondition().to_string(),
                applicable: 0,
                not_applicable: 0,
                pass: 0,
                fail: 0,
                witnesses: Vec::new(),
            })
            .collect();
        let claims = config
            .claims
            .iter()
            .map(|&id| ClaimSummary {
                id,
                statement: id.statement().to_string(),
                applicable: 0,
                pass: 0,
                fail: 0,
                witnesses: Vec::new(),
                by_class: BTreeMap::new(),
            })
            .collect();
        Aggregator {
            config,
            identities,
            claims,
            gaps: BTreeMap::new(),
            primes: 0,
        }
    }

    pub fn push(&mut self, outcome: PrimeOutcome) {
        self.primes += 1;
        let cap = self.config.witness_cap;
        for (summary, r) in self.identities.iter_mut().zip(outcome.identities) {
            debug_assert_eq!(summary.id, r.id);
            match r.outcome {
                Outcome::NotApplicable => summary.not_applicable += 1,
                Outcome::Pass => {
                    summary.applicable += 1;
                    summary.pass += 1;
                }
                Outcome::Fail => {
                    summary.applicable += 1;
                    summary.fail += 1;
                    if summary.witnesses.len() < cap {
                        summary.witnesses.extend(r.witness);
                    }
                }
            }
        }
        let labels = outcome.cp.class_labels();
        for (summary, r) in self.claims.iter_mut().zip(outcome.claims) {
            debug_assert_eq!(summary.id, r.id);
            if r.outcome == Outcome::NotApplicable {
                continue;
            }
            summary.applicable += 1;
            match r.outcome {
                Outcome::Pass => summary.pass += 1,
                _ => {
                    summary.fail += 1;
                    if summary.witnesses.len() < cap {
                        summary.witnesses.push(ClaimWitness {
                            p: outcome.cp.p(),
                            lhs: r.lhs,
                            rhs: r.rhs,
                            gap: r.gap,
                        });
                    }
                }
            }
            for class in labels {
                summary.by_class.entry(class).or_default().record(r.outcome);
            }
        }
        for rec in &outcome.counts {
            for (i, &eps) in self.config.eps.iter().enumerate() {
                let g = normalize(rec.gap, rec.p, eps);
                for class in labels {
                    self.gaps
                        .entry((i, rec.selector, class))
                        .or_insert_with(GapAccumulator::new)
                        .push(rec.p, g);
                }
            }
        }
    }

    pub fn finish(self, range: RangeSpec, elapsed_ms: Option<u64>) -> VerificationReport {
        let eps = self.config.eps.clone();
        let gap_stats = self
            .gaps
            .into_iter()
            .map(|((i, selector, class), acc)| GapStat {
                eps: eps[i],
                selector,
                class,
                count: acc.count,
                min: acc.min,
                max: acc.max,
                mean: acc.sum / acc.count as f64,
                min_abs: acc.min_abs,
                argmin_abs: acc.argmin_abs,
            })
            .collect();
        VerificationReport {
            range,
            config: self.config,
            identities: self.identities,
            claims: self.claims,
            gap_stats,
            timing: Timing {
                primes: self.primes,
                elapsed_ms,
            },
        }
    }
}
