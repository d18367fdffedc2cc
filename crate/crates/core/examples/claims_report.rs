//! Adjudicate the residue-count claims prime by prime and by class.
//!
//! cargo run --example claims_report

use qrdist::ids::ClaimId;
use qrdist::{check_claims, classify, run_range, RunConfig};

fn main() -> qrdist::Result<()> {
    for p in [11, 19, 23, 29] {
        let cp = classify(p)?;
        for c in check_claims(&cp)? {
            if c.outcome != qrdist::harness::Outcome::NotApplicable {
                println!(
                    "p = {p}  {:<15} {:?}  gap {}",
                    c.id.to_string(),
                    c.outcome,
                    c.gap.display_with_decimal()
                );
            }
        }
        println!();
    }

    let cfg = RunConfig {
        identities: vec![],
        claims: ClaimId::ALL.to_vec(),
        ..RunConfig::default()
    };
    let report = run_range(5, 10_000, &cfg)?;
    for s in &report.claims {
        let classes: Vec<String> = s
            .by_class
            .iter()
            .map(|(c, pf)| format!("{c}: {}/{}", pf.pass, pf.pass + pf.fail))
            .collect();
        println!("{:<15} {}", s.id.to_string(), classes.join("  "));
        println!("{:<15} {}", "", s.statement);
    }
    Ok(())
}
