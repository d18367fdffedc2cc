use num_integer::Integer;

use crate::arith::{is_fundamental_discriminant, QuadCharacter};
use crate::error::{Error, Result};

/// Number of roots of unity in the imaginary quadratic order of
/// discriminant `d`.
pub fn unit_count(d: i64) -> u64 {
    match d {
        -3 => 6,
        -4 => 4,
        _ => 2,
    }
}

fn check_discriminant(d: i64) -> Result<()> {
    if d >= 0 {
        return Err(Error::domain(format!("discriminant {d} is not negative")));
    }
    if !is_fundamental_discriminant(d) {
        return Err(Error::domain(format!(
            "{d} is not a fundamental discriminant"
        )));
    }
    Ok(())
}

/// `h(d)` by counting reduced primitive forms `(a, b, c)` with
/// `b^2 - 4ac = d`, `|b| <= a <= c`, and `b >= 0` when `|b| = a` or `a = c`.
pub fn class_number_forms(d: i64) -> Result<u64> {
    check_discriminant(d)?;
    let n = d.unsigned_abs();
    let mut count = 0u64;
    let mut a = 1u64;
    // reduced forms satisfy 3a^2 <= |d|
    while 3 * a * a <= n {
        let mut b = n & 1;
        while b <= a {
            let num = b * b + n;
            if num.is_multiple_of(4 * a) {
                let c = num / (4 * a);
                if c >= a && a.gcd(&b).gcd(&c) == 1 {
                    count += if b == 0 || b == a || a == c { 1 } else { 2 };
                }
            }
            b += 2;
        }
        a += 1;
    }
    Ok(count)
}

/// `h(d)` from the finite class number formula
/// `h = -(w / 2|d|) * sum_{a=1}^{|d|-1} a * chi(a)` for an odd character.
pub fn class_number_weighted(chi: &QuadCharacter) -> Result<u64> {
    if !chi.is_odd() {
        return Err(Error::domain(format!(
            "{chi} is even; the weighted sum needs d < 0"
        )));
    }
    let d = chi.discriminant();
    let n = d.unsigned_abs();
    let sum: i128 = (1..n as i64).map(|a| a as i128 * chi.eval(a) as i128).sum();
    let numer = -(unit_count(d) as i128) * sum;
    let denom = 2 * n as i128;
    if numer % denom != 0 || numer <= 0 {
        return Err(Error::internal(format!(
            "weighted sum {sum} for {chi} is not a positive multiple of 2|d|/w"
        )));
    }
    Ok((numer / denom) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{classify, CharKind};

    fn enumerate_forms(d: i64) -> Vec<(i64, i64, i64)> {
        // brute force over a box, then keep reduced primitive forms
        let n = -d;
        let mut out = Vec::new();
        for a in (1..=n).take_while(|a| a * a <= n) {
            for b in -a..=a {
                if (b * b - d) % (4 * a) != 0 {
                    continue;
                }
                let c = (b * b - d) / (4 * a);
                if c < a || ((b.abs() == a || a == c) && b < 0) {
                    continue;
                }
                if num_integer::gcd(num_integer::gcd(a, b), c) == 1 {
                    out.push((a, b, c));
                }
            }
        }
        out
    }

    #[test]
    fn examples() {
        assert_eq!(class_number_forms(-4).unwrap(), 1);
        assert_eq!(class_number_forms(-3).unwrap(), 1);
        assert_eq!(class_number_forms(-8).unwrap(), 1);
        assert_eq!(class_number_forms(-23).unwrap(), 3);
        assert_eq!(class_number_forms(-39).unwrap(), 4);
        assert_eq!(class_number_forms(-52).unwrap(), 2);
        assert_eq!(enumerate_forms(-23), vec![(1, 1, 6), (2, -1, 3), (2, 1, 3)]);
        assert_eq!(
            enumerate_forms(-39),
            vec![(1, 1, 10), (2, -1, 5), (2, 1, 5), (3, 3, 4)]
        );
        assert_eq!(enumerate_forms(-52), vec![(1, 0, 13), (2, 2, 7)]);
    }

    #[test]
    fn agrees_with_box_enumeration() {
        for d in (-2000i64..0).filter(|&d| is_fundamental_discriminant(d)) {
            assert_eq!(
                class_number_forms(d).unwrap(),
                enumerate_forms(d).len() as u64,
                "d = {d}"
            );
        }
    }

    #[test]
    fn rejects_bad_discriminants() {
        assert!(class_number_forms(5).is_err());
        assert!(class_number_forms(-12).is_err());
        assert!(class_number_forms(-2).is_err());
        assert!(class_number_forms(0).is_err());
    }

    #[test]
    fn weighted_examples() {
        let chi = |k, p| QuadCharacter::new(k, &classify(p).unwrap()).unwrap();
        assert_eq!(class_number_weighted(&chi(CharKind::ChiP, 7)).unwrap(), 1);
        assert_eq!(class_number_weighted(&chi(CharKind::ChiP, 11)).unwrap(), 1);
        assert_eq!(class_number_weighted(&chi(CharKind::Chi4P, 13)).unwrap(), 2);
        assert_eq!(class_number_weighted(&chi(CharKind::Chi3P, 13)).unwrap(), 4);
        // w = 6 at d = -3
        assert_eq!(class_number_weighted(&chi(CharKind::ChiP, 3)).unwrap(), 1);
        assert!(class_number_weighted(&chi(CharKind::ChiP, 13)).is_err());
    }

    #[test]
    fn weighted_sum_sign_convention_small_d() {
        // every family discriminant with |d| <= 200
        for p in crate::arith::primes_in_range(3, 200).unwrap() {
            let cp = classify(p).unwrap();
            for kind in [CharKind::ChiP, CharKind::Chi3P, CharKind::Chi4P] {
                let Ok(chi) = QuadCharacter::new(kind, &cp) else {
                    continue;
                };
                if !chi.is_odd() || chi.modulus() > 200 {
                    continue;
                }
                let d = chi.discriminant();
                assert_eq!(
                    class_number_weighted(&chi).unwrap(),
                    enumerate_forms(d).len() as u64,
                    "d = {d}"
                );
            }
        }
    }
}
