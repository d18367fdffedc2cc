//! One count, three ways: brute force, the Legendre-sum formula, and the
//! class-number closed form.
//!
//! cargo run --example residue_counts -- 103

use qrdist::{classify, closed_form, count_brute, count_formula, FormsOracle, SubsetSelector};

fn main() -> qrdist::Result<()> {
    let p: u64 = std::env::args()
        .nth(1)
        .map_or(Ok(103), |s| s.parse())
        .expect("p");
    let cp = classify(p)?;
    println!("p = {p}, {:?}", cp.class_labels().map(|c| c.to_string()));
    println!(
        "{:<8} {:>6} {:>6} {:>10} {:>10} {:>8}",
        "subset", "Q", "N", "main", "gap", "closed"
    );

    for sel in SubsetSelector::STANDARD {
        let rec = count_brute(&cp, sel)?;
        if let SubsetSelector::Multiples(k) = sel {
            assert_eq!(count_formula(&cp, k)?, (rec.q, rec.n));
        }
        let closed = closed_form(&cp, sel, &FormsOracle)?;
        assert_eq!(closed.q as u64, rec.q);
        println!(
            "{:<8} {:>6} {:>6} {:>10} {:>10} {:>8}",
            sel.to_string(),
            rec.q,
            rec.n,
            rec.main_term.to_string(),
            rec.gap.to_string(),
            closed.q
        );
    }
    Ok(())
}
