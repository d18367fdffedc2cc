use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::forms::unit_count;
use super::ClassNumbers;
use crate::arith::QuadCharacter;
use crate::error::{Error, Result};

/// Truncated Dirichlet series for `L(1, chi)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesEstimate {
    pub value: f64,
    pub terms: u64,
    /// `2 sqrt(q) ln q / terms`, partial summation with the Pólya–Vinogradov bound.
    pub tail_bound: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LValueRecord {
    pub chi: QuadCharacter,
    pub h: u64,
    pub w: u64,
    /// `2 pi h / (w sqrt|d|)`.
    pub exact_value: f64,
    pub series: Option<SeriesEstimate>,
}

impl LValueRecord {
    /// `|exact - series| <= tail_bound`, if a series estimate is attached.
    pub fn series_consistent(&self) -> Option<bool> {
        self.series
            .map(|s| (self.exact_value - s.value).abs() <= s.tail_bound)
    }
}

/// `L(1, chi)` through the class number formula.
pub fn l_value_exact<C: ClassNumbers + ?Sized>(chi: &QuadCharacter, h: &C) -> Result<LValueRecord> {
    if !chi.is_odd() {
        return Err(Error::domain(format!(
            "{chi} is even; L(1) is only evaluated exactly for odd characters"
        )));
    }
    let d = chi.discriminant();
    let h = h.class_number(d)?;
    let w = unit_count(d);
    let exact_value = 2.0 * PI * h as f64 / (w as f64 * (d.unsigned_abs() as f64).sqrt());
    Ok(LValueRecord {
        chi: *chi,
        h,
        w,
        exact_value,
        series: None,
    })
}

pub fn tail_bound(modulus: u64, terms: u64) -> f64 {
    let q = modulus as f64;
    2.0 * q.sqrt() * q.ln() / terms as f64
}

/// `sum_{n=1}^{terms} chi(n)/n`.
pub fn l_value_series(chi: &QuadCharacter, terms: u64) -> Result<SeriesEstimate> {
    let q = chi.modulus();
    if terms < q {
        return Err(Error::usage(format!(
            "need at least {q} terms (the modulus), got {terms}"
        )));
    }
    let period: Vec<i8> = (0..q as i64).map(|n| chi.eval(n)).collect();
    let mut value = 0.0f64;
    // summed from the tail up: smaller terms first
    for n in (1..=terms).rev() {
        let c = period[(n % q) as usize];
        if c != 0 {
            value += c as f64 / n as f64;
        }
    }
    Ok(SeriesEstimate {
        value,
        terms,
        tail_bound: tail_bound(q, terms),
    })
}
