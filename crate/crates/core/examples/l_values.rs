//! L(1, chi) from the class number against the truncated Dirichlet series.
//!
//! cargo run --example l_values

use qrdist::{classify, l_value_exact, l_value_series, CharKind, FormsOracle, QuadCharacter};

fn main() -> qrdist::Result<()> {
    let cases = [
        (7, CharKind::ChiP),
        (23, CharKind::ChiP),
        (13, CharKind::Chi4P),
        (13, CharKind::Chi3P),
        (9973, CharKind::Chi3P),
    ];
    for (p, kind) in cases {
        let chi = QuadCharacter::new(kind, &classify(p)?)?;
        let mut rec = l_value_exact(&chi, &FormsOracle)?;
        let series = l_value_series(&chi, chi.modulus().max(100_000))?;
        rec.series = Some(series);
        println!(
            "{:<14} d = {:>6}  h = {:>3}  exact {:.9}  series {:.9}  |diff| {:.2e} <= {:.2e}",
            chi.to_string(),
            chi.discriminant(),
            rec.h,
            rec.exact_value,
            series.value,
            (series.value - rec.exact_value).abs(),
            series.tail_bound
        );
        assert_eq!(rec.series_consistent(), Some(true));
    }
    Ok(())
}
