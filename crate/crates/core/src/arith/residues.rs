//! Quadratic-residue membership by direct squaring.

use crate::error::{Error, Result};

/// Largest modulus (exclusive) for which a materialized table is built.
pub const TABLE_LIMIT: u64 = 1 << 26;

/// `chi_p` over `[0, p)` as a byte table, built by marking `x^2 mod p`
/// for `x = 1..=(p-1)/2`. Independent of the Jacobi-symbol route.
#[derive(Clone, Debug)]
pub struct ResidueTable {
    p: u64,
    chi: Vec<i8>,
}

impl ResidueTable {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p & 1 == 0 {
            return Err(Error::domain(format!(
                "residue table needs an odd prime, got {p}"
            )));
        }
        if p >= TABLE_LIMIT {
            return Err(Error::usage(format!(
                "p = {p} exceeds the table limit 2^26; use the streaming routines"
            )));
        }
        let mut chi = vec![-1i8; p as usize];
        chi[0] = 0;
        // (x+1)^2 = x^2 + 2x + 1
        let mut sq = 0u64;
        for x in 0..(p - 1) / 2 {
            sq += 2 * x + 1;
            if sq >= p {
                sq -= p;
            }
            chi[sq as usize] = 1;
        }
        Ok(ResidueTable { p, chi })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn chi(&self, m: u64) -> i8 {
        self.chi[(m % self.p) as usize]
    }

    #[inline]
    pub fn is_residue(&self, m: u64) -> bool {
        self.chi(m) == 1
    }

    /// The residues in `[1, p-1]`, ascending.
    pub fn residues(&self) -> Vec<u64> {
        (1..self.p).filter(|&a| self.is_residue(a)).collect()
    }

    /// `chi(0), ..., chi(p-1)`.
    pub fn as_slice(&self) -> &[i8] {
        &self.chi
    }
}
