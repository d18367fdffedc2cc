//! Partial character sums as exact multiples of class numbers.
//!
//! cargo run --example identities

use qrdist::classnum::ClassIdentity;
use qrdist::{class_identity, classify, FormsOracle};

fn main() -> qrdist::Result<()> {
    for p in [7, 11, 13, 17, 23, 29, 31, 101, 1009, 1019] {
        let cp = classify(p)?;
        for id in ClassIdentity::ALL {
            if !id.applies(&cp) {
                continue;
            }
            let w = class_identity(&cp, id, &FormsOracle)?;
            println!(
                "p = {p:>4}  {id}  d = {:>6}  {} = {}  {}",
                id.discriminant(p),
                w.lhs,
                w.rhs,
                if w.holds() { "ok" } else { "FAIL" }
            );
        }
    }
    Ok(())
}
