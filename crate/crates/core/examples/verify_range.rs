//! Run every identity across a range of primes and print the summary.
//!
//! cargo run --release --example verify_range -- 5 100000

use qrdist::{run_range, RunConfig};

fn main() -> qrdist::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<u64>().expect("bound"));
    let lo = args.next().unwrap_or(5);
    let hi = args.next().unwrap_or(20_000);
    let cfg = RunConfig {
        jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        ..RunConfig::default()
    };
    let report = run_range(lo, hi, &cfg)?;
    println!("{} odd primes in [{lo}, {hi})", report.timing.primes);
    for s in &report.identities {
        println!(
            "{:<4} {:>7} applicable  {:>7} pass  {:>3} fail   {}",
            s.id.to_string(),
            s.applicable,
            s.pass,
            s.fail,
            s.precondition
        );
    }
    assert_eq!(report.identity_failures(), 0);
    Ok(())
}
