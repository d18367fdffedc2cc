//! Class numbers of imaginary quadratic fields and `L(1, chi)`.
//!
//! Two independent class number routes are kept side by side: counting
//! reduced binary quadratic forms, and the finite weighted character sum.
//! The integer identities in [`identity`] relate both to the character sums.

mod cache;
mod forms;
pub mod identity;
mod lvalue;

use serde::{Deserialize, Serialize};

pub use cache::{ClassNumberCache, CACHE_ENV};
pub use forms::{class_number_forms, class_number_weighted, unit_count};
pub use identity::{class_identity, class_identity_from_sum, ClassIdentity, ClassIdentityOutcome};
pub use lvalue::{l_value_exact, l_value_series, tail_bound, LValueRecord, SeriesEstimate};

use crate::error::Result;

/// A source of class numbers `h(d)` for negative fundamental `d`.
pub trait ClassNumbers: Sync {
    fn class_number(&self, d: i64) -> Result<u64>;
}

/// Computes every class number afresh by counting reduced forms.
#[derive(Clone, Copy, Debug, Default)]
pub struct FormsOracle;

impl ClassNumbers for FormsOracle {
    fn class_number(&self, d: i64) -> Result<u64> {
        class_number_forms(d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClassNumberMethod {
    Forms,
    WeightedSum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassNumberRecord {
    pub d: i64,
    pub h: u64,
    pub w: u64,
    pub method: ClassNumberMethod,
}
