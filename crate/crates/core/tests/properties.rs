use proptest::prelude::*;
use qrdist::harness::Outcome;
use qrdist::ids::ClaimId;
use qrdist::{
    char_eval, check_claims, class_number_forms, class_number_weighted, classify, closed_form,
    count_brute, is_prime, jacobi, legendre, partial_sum, primes_in_range, run_range, CharKind,
    ClassifiedPrime, FormsOracle, Frac, QuadCharacter, RunConfig, SubsetSelector,
    VerificationReport,
};

fn next_prime(mut n: u64) -> u64 {
    n |= 1;
    while !is_prime(n) {
        n += 2;
    }
    n
}

fn prime_above(n: u64) -> ClassifiedPrime {
    classify(next_prime(n.max(5))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn legendre_is_multiplicative(n in 3u64..200_000, a in 1i64..1_000_000, b in 1i64..1_000_000) {
        let p = next_prime(n);
        let ab = legendre(a * b, p).unwrap();
        prop_assert_eq!(ab, legendre(a, p).unwrap() * legendre(b, p).unwrap());
    }

    #[test]
    fn jacobi_reciprocity(m in 1u64..100_000, n in 1u64..100_000) {
        let (m, n) = (2 * m + 1, 2 * n + 1);
        prop_assume!(num_gcd(m, n) == 1);
        let sign = if (m % 4 == 3) && (n % 4 == 3) { -1 } else { 1 };
        prop_assert_eq!(jacobi(m, n) * jacobi(n, m), sign);
    }

    #[test]
    fn odd_characters_reflect(n in 5u64..50_000, m in 1i64..10_000) {
        let cp = prime_above(n);
        for kind in [CharKind::ChiP, CharKind::Chi3P, CharKind::Chi4P] {
            let chi = QuadCharacter::new(kind, &cp).unwrap();
            let sign = if chi.is_odd() { -1 } else { 1 };
            prop_assert_eq!(char_eval(&chi, -m), sign * char_eval(&chi, m));
            prop_assert_eq!(char_eval(&chi, m + chi.modulus() as i64), char_eval(&chi, m));
        }
    }

    #[test]
    fn class_number_of_minus_p_is_odd(n in 5u64..100_000) {
        let mut p = next_prime(n);
        while p % 4 != 3 {
            p = next_prime(p + 2);
        }
        prop_assert_eq!(class_number_forms(-(p as i64)).unwrap() % 2, 1);
    }

    #[test]
    fn closed_forms_match_brute_force(n in 5u64..60_000) {
        let cp = prime_above(n);
        for sel in SubsetSelector::STANDARD {
            let brute = count_brute(&cp, sel).unwrap();
            let closed = closed_form(&cp, sel, &FormsOracle).unwrap();
            prop_assert_eq!(closed.q, brute.q as i64, "{} at p = {}", sel, cp.p());
        }
    }

    #[test]
    fn odds_complement_s2(n in 5u64..100_000) {
        let cp = prime_above(n);
        let s2 = count_brute(&cp, SubsetSelector::Multiples(2)).unwrap();
        let odds = count_brute(&cp, SubsetSelector::Odds).unwrap();
        let half = (cp.p() - 1) / 2;
        prop_assert_eq!(odds.q + odds.n, half);
        // the residues split (p-1)/2 between even and odd members
        prop_assert_eq!(odds.q + s2.q, half);
        if cp.r4() == 3 {
            prop_assert_eq!(odds.q, s2.n);
        }
        let s4 = count_brute(&cp, SubsetSelector::Multiples(4)).unwrap();
        let diff = count_brute(&cp, SubsetSelector::S2MinusS4).unwrap();
        prop_assert_eq!(diff.q, s2.q - s4.q);
    }

    #[test]
    fn forms_and_weighted_agree(n in 5u64..10_000) {
        let cp = prime_above(n);
        for kind in [CharKind::ChiP, CharKind::Chi3P, CharKind::Chi4P] {
            let chi = QuadCharacter::new(kind, &cp).unwrap();
            if chi.is_odd() {
                prop_assert_eq!(
                    class_number_weighted(&chi).unwrap(),
                    class_number_forms(chi.discriminant()).unwrap()
                );
            }
        }
    }

    #[test]
    fn frac_strings_round_trip(a in -1_000_000i64..1_000_000, b in 1i64..1_000) {
        let f = Frac::new(a, b);
        prop_assert_eq!(f.to_string().parse::<Frac>().unwrap(), f);
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<Frac>(&json).unwrap(), f);
    }
}

fn num_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[test]
fn half_sum_positive_for_3_mod_4() {
    for p in primes_in_range(5, 100_000).unwrap() {
        if p % 4 == 3 {
            assert!(partial_sum(p, 1, 2).unwrap() > 0, "p = {p}");
        }
    }
}

#[test]
fn exact_claims_have_zero_gap() {
    for p in primes_in_range(5, 5_000).unwrap() {
        let cp = classify(p).unwrap();
        for c in check_claims(&cp).unwrap() {
            if matches!(c.id, ClaimId::T1_1Exact | ClaimId::T1_5Exact)
                && c.outcome != Outcome::NotApplicable
            {
                assert_eq!(c.gap, Frac::ZERO, "{} at {p}", c.id);
            }
        }
    }
}

#[test]
fn forms_and_weighted_agree_on_all_family_discriminants() {
    for p in primes_in_range(3, 10_000).unwrap() {
        let cp = classify(p).unwrap();
        for kind in [CharKind::ChiP, CharKind::Chi3P, CharKind::Chi4P] {
            let Ok(chi) = QuadCharacter::new(kind, &cp) else {
                continue;
            };
            if chi.is_odd() {
                assert_eq!(
                    class_number_weighted(&chi).unwrap(),
                    class_number_forms(chi.discriminant()).unwrap(),
                    "d = {}",
                    chi.discriminant()
                );
            }
        }
    }
}

#[test]
fn report_json_round_trips() {
    let cfg = RunConfig {
        claims: ClaimId::ALL.to_vec(),
        ..RunConfig::default()
    };
    let report = run_range(3, 2_000, &cfg).unwrap();
    let json = report.to_json().unwrap();
    let back = VerificationReport::from_json(&json).unwrap();
    assert_eq!(back, report);
    assert_eq!(back.to_json().unwrap(), json);
}
