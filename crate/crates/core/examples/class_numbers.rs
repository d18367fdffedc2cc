//! Class numbers from reduced forms and from the weighted character sum.
//!
//! cargo run --example class_numbers

use qrdist::classnum::unit_count;
use qrdist::{class_number_forms, class_number_weighted, classify, CharKind, QuadCharacter};

fn main() -> qrdist::Result<()> {
    for d in [-3, -4, -7, -8, -23, -47, -71, -163] {
        println!(
            "h({d}) = {} (w = {})",
            class_number_forms(d)?,
            unit_count(d)
        );
    }

    println!(
        "\n{:>6} {:>6} {:>8} {:>8} {:>8}",
        "p", "kind", "d", "forms", "weighted"
    );
    for p in [5, 7, 13, 23, 29, 103, 1009, 9973] {
        let cp = classify(p)?;
        for kind in [CharKind::ChiP, CharKind::Chi3P, CharKind::Chi4P] {
            let Ok(chi) = QuadCharacter::new(kind, &cp) else {
                continue;
            };
            if !chi.is_odd() {
                continue;
            }
            let d = chi.discriminant();
            let (f, w) = (class_number_forms(d)?, class_number_weighted(&chi)?);
            assert_eq!(f, w);
            println!("{p:>6} {:>6} {d:>8} {f:>8} {w:>8}", kind.to_string());
        }
    }
    Ok(())
}
