//! Committed expectations for claim outcomes, per residue class.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::report::VerificationReport;
use crate::arith::ResidueClass;
use crate::error::Result;
use crate::ids::ClaimId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExpectedOutcome {
    /// Every applicable prime of the class passes.
    Pass,
    /// Every applicable prime of the class fails.
    Fail,
}

/// `claim -> class -> outcome`, e.g. `{"T1.1-pos": {"r8=3": "fail"}}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Expectations(pub BTreeMap<ClaimId, BTreeMap<ResidueClass, ExpectedOutcome>>);

impl Expectations {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }
}

/// Mismatches between a report and the expectations, empty if they agree.
///
/// Classes without applicable primes in the report are vacuously met; a
/// claim missing from the report is a mismatch.
pub fn check_expectations(report: &VerificationReport, expected: &Expectations) -> Vec<String> {
    let mut out = Vec::new();
    for (id, classes) in &expected.0 {
        let Some(summary) = report.claim(*id) else {
            out.push(format!("{id}: expected but not evaluated"));
            continue;
        };
        for (class, want) in classes {
            let Some(got) = summary.by_class.get(class) else {
                continue;
            };
            let ok = match want {
                ExpectedOutcome::Pass => got.fail == 0,
                ExpectedOutcome::Fail => got.pass == 0,
            };
            if !ok {
                out.push(format!(
                    "{id} {class}: expected all {want:?}, got {} pass / {} fail",
                    got.pass, got.fail
                ));
            }
        }
    }
    out
}
