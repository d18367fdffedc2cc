//! Partial sums of `chi_p` over initial segments and intervals, the
//! vanishing-sum cases, and the Pólya–Vinogradov extremal statistic.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::arith::{jacobi, ClassifiedPrime, ResidueTable, TABLE_LIMIT};
use crate::error::{Error, Result};

/// Anything that can evaluate `chi_p(m)` for a fixed odd prime.
pub trait ChiSource {
    fn modulus(&self) -> u64;
    fn chi(&self, m: u64) -> i8;
}

/// `chi_p` through the Jacobi-symbol algorithm, no storage.
#[derive(Clone, Copy, Debug)]
pub struct Legendre {
    p: u64,
}

impl Legendre {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p & 1 == 0 {
            return Err(Error::domain(format!("expected an odd prime, got {p}")));
        }
        Ok(Legendre { p })
    }
}

impl ChiSource for Legendre {
    fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    fn chi(&self, m: u64) -> i8 {
        jacobi(m, self.p)
    }
}

impl ChiSource for ResidueTable {
    fn modulus(&self) -> u64 {
        self.p()
    }

    #[inline]
    fn chi(&self, m: u64) -> i8 {
        ResidueTable::chi(self, m)
    }
}

/// `sum_{m=1}^{n} chi(m)`.
pub fn prefix_sum<S: ChiSource + ?Sized>(src: &S, n: u64) -> i64 {
    (1..=n).map(|m| src.chi(m) as i64).sum()
}

/// Upper summation index for `S(1, p/den) = sum_{1 <= m < p/den} chi(m)`.
///
/// `p/den` is never an integer for prime `p > den`, so `m < p/den` is the
/// same as `m <= floor(p/den)`.
pub fn cutoff(p: u64, num: u64, den: u64) -> Result<u64> {
    if num != 1 || !matches!(den, 2..=4) {
        return Err(Error::usage(format!(
            "only the cutoffs p/2, p/3, p/4 are supported, got {num}p/{den}"
        )));
    }
    if p <= den {
        return Err(Error::usage(format!(
            "cutoff p/{den} needs p > {den}, got {p}"
        )));
    }
    Ok(p / den)
}

/// `S(1, num*p/den)`, evaluated with the Jacobi symbol.
pub fn partial_sum(p: u64, num: u64, den: u64) -> Result<i64> {
    partial_sum_with(&Legendre::new(p)?, num, den)
}

pub fn partial_sum_with<S: ChiSource + ?Sized>(src: &S, num: u64, den: u64) -> Result<i64> {
    let n = cutoff(src.modulus(), num, den)?;
    Ok(prefix_sum(src, n))
}

/// `sum_{m=lo}^{hi} chi_p(m)` with inclusive bounds, `0 <= lo <= hi <= p-1`.
pub fn interval_sum(p: u64, lo: u64, hi: u64) -> Result<i64> {
    interval_sum_with(&Legendre::new(p)?, lo, hi)
}

pub fn interval_sum_with<S: ChiSource + ?Sized>(src: &S, lo: u64, hi: u64) -> Result<i64> {
    let p = src.modulus();
    if lo > hi || hi > p - 1 {
        return Err(Error::usage(format!(
            "interval [{lo}, {hi}] outside 0 <= M <= N <= {}",
            p - 1
        )));
    }
    Ok((lo..=hi).map(|m| src.chi(m) as i64).sum())
}

/// Extremal statistics of the prefix walk `prefix[j] = sum_{m<=j} chi(m)`,
/// `0 <= j <= p-1`, gathered in one streaming pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileStats {
    pub p: u64,
    pub total: i64,
    pub max_prefix: i64,
    pub min_prefix: i64,
    /// `max |sum_{m=M+1}^{N} chi(m)|` over `0 <= M <= N <= p-1`.
    pub max_interval: i64,
}

pub fn profile_stats<S: ChiSource + ?Sized>(src: &S) -> ProfileStats {
    let p = src.modulus();
    let (mut acc, mut hi, mut lo) = (0i64, 0i64, 0i64);
    for m in 1..p {
        acc += src.chi(m) as i64;
        hi = hi.max(acc);
        lo = lo.min(acc);
    }
    ProfileStats {
        p,
        total: acc,
        max_prefix: hi,
        min_prefix: lo,
        max_interval: hi - lo,
    }
}

/// The materialized prefix walk of `chi_p`. Needs `p < 2^26`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSumProfile {
    prefix: Vec<i32>,
    stats: ProfileStats,
}

impl PartialSumProfile {
    pub fn new<S: ChiSource + ?Sized>(src: &S) -> Result<Self> {
        let p = src.modulus();
        if p >= TABLE_LIMIT {
            return Err(Error::usage(format!(
                "profile of length {p} exceeds the materialization limit 2^26"
            )));
        }
        let mut prefix = Vec::with_capacity(p as usize);
        prefix.push(0i32);
        let (mut acc, mut hi, mut lo) = (0i32, 0i32, 0i32);
        for m in 1..p {
            acc += src.chi(m) as i32;
            hi = hi.max(acc);
            lo = lo.min(acc);
            prefix.push(acc);
        }
        let stats = ProfileStats {
            p,
            total: acc as i64,
            max_prefix: hi as i64,
            min_prefix: lo as i64,
            max_interval: (hi - lo) as i64,
        };
        Ok(PartialSumProfile { prefix, stats })
    }

    pub fn p(&self) -> u64 {
        self.stats.p
    }

    pub fn stats(&self) -> &ProfileStats {
        &self.stats
    }

    /// `prefix[j]` for `0 <= j <= p-1`.
    pub fn prefix(&self, j: u64) -> i64 {
        self.prefix[j as usize] as i64
    }

    pub fn prefixes(&self) -> &[i32] {
        &self.prefix
    }

    /// `S(1, num*p/den)` in O(1).
    pub fn partial_sum(&self, num: u64, den: u64) -> Result<i64> {
        Ok(self.prefix(cutoff(self.p(), num, den)?))
    }

    /// Inclusive interval sum in O(1).
    pub fn interval_sum(&self, lo: u64, hi: u64) -> Result<i64> {
        if lo > hi || hi > self.p() - 1 {
            return Err(Error::usage(format!(
                "interval [{lo}, {hi}] outside 0 <= M <= N <= {}",
                self.p() - 1
            )));
        }
        let below = if lo == 0 { 0 } else { self.prefix(lo - 1) };
        Ok(self.prefix(hi) - below)
    }

    /// Writes `m,chi,prefix` rows for `m = 0..p-1`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["m", "chi", "prefix"])?;
        let mut last = 0i32;
        for (m, &value) in self.prefix.iter().enumerate() {
            let chi = value - last;
            last = value;
            w.write_record([m.to_string(), chi.to_string(), value.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// `sqrt(p) * ln p`, the Pólya–Vinogradov bound with the natural logarithm.
pub fn pv_bound(p: u64) -> f64 {
    let p = p as f64;
    p.sqrt() * p.ln()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PvExtremum {
    pub max_interval: i64,
    pub bound: f64,
}

impl PvExtremum {
    pub fn holds(&self) -> bool {
        (self.max_interval as f64) <= self.bound
    }
}

/// Largest interval character sum of `chi_p` against `sqrt(p) ln p`.
///
/// Uses the squaring table below 2^26 and the Jacobi symbol above.
pub fn pv_extremum(p: u64) -> Result<PvExtremum> {
    let stats = if p < TABLE_LIMIT {
        profile_stats(&ResidueTable::new(p)?)
    } else {
        profile_stats(&Legendre::new(p)?)
    };
    Ok(pv_from_stats(&stats))
}

pub fn pv_from_stats(stats: &ProfileStats) -> PvExtremum {
    PvExtremum {
        max_interval: stats.max_interval,
        bound: pv_bound(stats.p),
    }
}

/// The three vanishing sums of Legendre symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VanishingCase {
    /// `p = 1 (mod 4)`: `sum_{n <= (p-1)/2} (n/p) = 0`.
    B1,
    /// `p = 3 (mod 8)`: `sum_{n <= floor(p/4)} (n/p) = 0`.
    B2,
    /// `p = 7 (mod 8)`: `sum_{ceil(p/4) <= n <= floor(p/2)} (n/p) = 0`.
    B3,
}

impl VanishingCase {
    pub fn applies(&self, cp: &ClassifiedPrime) -> bool {
        match self {
            VanishingCase::B1 => cp.r4() == 1,
            VanishingCase::B2 => cp.r8() == 3,
            VanishingCase::B3 => cp.r8() == 7,
        }
    }

    /// Inclusive summation bounds of the case at `p`.
    pub fn bounds(&self, p: u64) -> (u64, u64) {
        match self {
            VanishingCase::B1 => (1, (p - 1) / 2),
            VanishingCase::B2 => (1, p / 4),
            VanishingCase::B3 => (p.div_ceil(4), p / 2),
        }
    }

    /// The one case that applies to `cp`.
    pub fn for_prime(cp: &ClassifiedPrime) -> VanishingCase {
        match (cp.r4(), cp.r8()) {
            (1, _) => VanishingCase::B1,
            (_, 3) => VanishingCase::B2,
            _ => VanishingCase::B3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingOutcome {
    pub case: VanishingCase,
    /// The computed sum; zero when the case holds.
    pub sum: i64,
}

impl VanishingOutcome {
    pub fn holds(&self) -> bool {
        self.sum == 0
    }
}

/// Evaluates whichever vanishing case applies to `cp` (exactly one does).
pub fn vanishing_check(cp: &ClassifiedPrime) -> VanishingOutcome {
    let src = Legendre { p: cp.p() };
    vanishing_check_with(&src, cp)
}

pub fn vanishing_check_with<S: ChiSource + ?Sized>(
    src: &S,
    cp: &ClassifiedPrime,
) -> VanishingOutcome {
    let case = VanishingCase::for_prime(cp);
    let (lo, hi) = case.bounds(cp.p());
    let sum = (lo..=hi).map(|m| src.chi(m) as i64).sum();
    VanishingOutcome { case, sum }
}

pub fn vanishing_check_profile(
    profile: &PartialSumProfile,
    cp: &ClassifiedPrime,
) -> VanishingOutcome {
    let case = VanishingCase::for_prime(cp);
    let (lo, hi) = case.bounds(cp.p());
    let sum = if lo > hi {
        0
    } else {
        profile.prefix(hi) - profile.prefix(lo - 1)
    };
    VanishingOutcome { case, sum }
}
