//! Segmented sieve, Miller-Rabin and residue classes.
//!
//! cargo run --example primes

use qrdist::{classify, is_prime, primes_in_range};

fn main() -> qrdist::Result<()> {
    let ps = primes_in_range(4_294_967_200, 4_294_967_296)?;
    println!("primes just below 2^32: {ps:?}");
    assert!(ps.iter().all(|&p| is_prime(p)));

    let mut by_r8 = [0u32; 8];
    for p in primes_in_range(3, 100_000)? {
        by_r8[classify(p)?.r8() as usize] += 1;
    }
    for r in [1, 3, 5, 7] {
        println!("p = {r} mod 8 below 10^5: {}", by_r8[r]);
    }

    let cp = classify(1_000_003)?;
    println!("{}: {:?}", cp.p(), cp.class_labels().map(|c| c.to_string()));
    Ok(())
}
