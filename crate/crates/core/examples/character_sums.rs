//! Partial sums of the Legendre symbol: the vanishing cases, the
//! Pólya-Vinogradov extremum, and a prefix walk.
//!
//! cargo run --example character_sums

use qrdist::charsum::{pv_bound, VanishingCase};
use qrdist::{
    classify, partial_sum, pv_extremum, vanishing_check, PartialSumProfile, ResidueTable,
};

fn main() -> qrdist::Result<()> {
    for p in [13, 29, 11, 43, 7, 31] {
        let cp = classify(p)?;
        let v = vanishing_check(&cp);
        let (a, b) = VanishingCase::for_prime(&cp).bounds(p);
        println!("p = {p:>3}  {:?}: sum over ({a}, {b}] = {}", v.case, v.sum);
    }

    println!();
    for p in [1009, 10007, 100003] {
        let pv = pv_extremum(p)?;
        println!(
            "p = {p:>6}  max interval sum {:>4}  bound {:>8.2}  ratio {:.3}",
            pv.max_interval,
            pv.bound,
            pv.max_interval as f64 / pv_bound(p)
        );
    }

    // S(1, p/2) > 0 for p = 3 mod 4
    let p = 1019;
    println!("\nS(1, {p}/2) = {}", partial_sum(p, 1, 2)?);
    let prof = PartialSumProfile::new(&ResidueTable::new(p)?)?;
    let s = prof.stats();
    println!(
        "prefix range [{}, {}], total {}",
        s.min_prefix, s.max_prefix, s.total
    );
    Ok(())
}
