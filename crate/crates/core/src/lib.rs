//! Quadratic residues modulo a prime `p` inside arithmetic subsets of
//! `[1, p-1]`.
//!
//! The crate counts residues in the multiples of `k`, the odd numbers and
//! `S_2 \ S_4` by brute force, by the Legendre-sum counting formula, and by
//! closed forms in the class numbers `h(-p)`, `h(-3p)`, `h(-4p)`. Every
//! character-sum evaluation through `L(1, chi)` is checked as an exact
//! integer identity, and a range harness verifies identities and
//! adjudicates stated residue-count claims prime by prime.
//!
//! | module | contents |
//! |---|---|
//! | [`arith`] | primality, segmented sieve, Jacobi/Legendre, character families |
//! | [`charsum`] | partial and interval sums, vanishing sums, Pólya–Vinogradov |
//! | [`classnum`] | class numbers (forms and weighted sum), `L(1, chi)`, cache |
//! | [`counts`] | brute-force, formula and closed-form counts |
//! | [`harness`] | identities, claims, range runner and reports |
//! | [`cli`] | the `qrdist` command line |
//!
//! ```
//! use qrdist::{classify, count_brute, SubsetSelector};
//!
//! let cp = classify(13).unwrap();
//! let rec = count_brute(&cp, SubsetSelector::Multiples(2)).unwrap();
//! assert_eq!((rec.q, rec.n), (3, 3));
//! ```

pub mod arith;
pub mod charsum;
pub mod classnum;
pub mod cli;
pub mod counts;
mod error;
mod frac;
pub mod harness;
pub mod ids;

pub use arith::{
    char_eval, chi4, classify, is_prime, jacobi, legendre, primes_in_range, CharKind,
    ClassifiedPrime, Parity, QuadCharacter, ResidueClass, ResidueTable,
};
pub use charsum::{interval_sum, partial_sum, pv_extremum, vanishing_check, PartialSumProfile};
pub use classnum::{
    class_identity, class_number_forms, class_number_weighted, l_value_exact, l_value_series,
    ClassIdentity, ClassNumberCache, ClassNumbers, FormsOracle,
};
pub use counts::{
    closed_form, count_brute, count_formula, normalized_gap, qr_table, CountRecord, SubsetSelector,
};
pub use error::{Error, Result};
pub use frac::Frac;
pub use harness::{
    check_claims, gap_statistics, run_range, verify_prime, RunConfig, VerificationReport,
};
pub use ids::{ClaimId, IdentityId};
