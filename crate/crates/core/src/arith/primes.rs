//! Deterministic primality and segmented prime enumeration.

use crate::error::{Error, Result};

/// Upper limit (exclusive) for enumerated primes and classified primes.
pub const RANGE_CAP: u64 = 1 << 32;

/// Strong-probable-prime bases that are a complete witness set below 2^64.
const MR_BASES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

const SEGMENT_LEN: u64 = 1 << 16;

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &SMALL_PRIMES {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }

    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &base in &MR_BASES {
        let a = base % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn base_primes(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Iterator over the primes of `[lo, hi)`, one sieved segment at a time.
///
/// Memory is bounded by the segment length plus the base primes up to
/// `sqrt(hi)`.
#[derive(Debug, Clone)]
pub struct PrimeSegments {
    next_lo: u64,
    hi: u64,
    base: Vec<u64>,
    sieve: Vec<bool>,
}

impl PrimeSegments {
    pub fn new(lo: u64, hi: u64) -> Result<Self> {
        if lo > hi {
            return Err(Error::usage(format!("inverted range [{lo}, {hi})")));
        }
        if hi > RANGE_CAP {
            return Err(Error::usage(format!(
                "upper bound {hi} exceeds the range cap 2^32"
            )));
        }
        Ok(PrimeSegments {
            next_lo: lo.max(2),
            hi,
            base: base_primes(isqrt(hi.saturating_sub(1)).max(1)),
            sieve: Vec::with_capacity(SEGMENT_LEN as usize),
        })
    }
}

impl Iterator for PrimeSegments {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.next_lo >= self.hi {
            return None;
        }
        let lo = self.next_lo;
        let hi = (lo + SEGMENT_LEN).min(self.hi);
        self.next_lo = hi;

        self.sieve.clear();
        self.sieve.resize((hi - lo) as usize, true);
        for &q in &self.base {
            if q * q >= hi {
                break;
            }
            let mut start = lo.div_ceil(q) * q;
            if start < q * q {
                start = q * q;
            }
            let mut j = start;
            while j < hi {
                self.sieve[(j - lo) as usize] = false;
                j += q;
            }
        }
        Some(
            self.sieve
                .iter()
                .enumerate()
                .filter(|(_, &alive)| alive)
                .map(|(i, _)| lo + i as u64)
                .collect(),
        )
    }
}

/// All primes in the half-open interval `[lo, hi)`, ascending.
pub fn primes_in_range(lo: u64, hi: u64) -> Result<Vec<u64>> {
    Ok(PrimeSegments::new(lo, hi)?.flatten().collect())
}
