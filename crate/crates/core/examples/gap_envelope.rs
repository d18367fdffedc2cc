//! Smallest normalized gaps |Q - main| / p^(1/2 - eps) by subset and class.
//!
//! cargo run --release --example gap_envelope

use qrdist::{gap_statistics, run_range, RunConfig};

fn main() -> qrdist::Result<()> {
    let cfg = RunConfig {
        identities: vec![],
        ..RunConfig::default()
    };
    let report = run_range(5, 50_000, &cfg)?;
    for &eps in &report.config.eps {
        println!("eps = {eps}");
        for m in gap_statistics(&report, eps)? {
            println!(
                "  {:<8} {:<6} min {:.6} at p = {}",
                m.selector.to_string(),
                m.class.to_string(),
                m.min_abs,
                m.argmin
            );
        }
    }
    Ok(())
}
