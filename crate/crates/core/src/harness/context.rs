//! Per-prime evaluation state shared by the identity and claim checks.

use std::cell::RefCell;
use std::collections::BTreeMap;

use crate::arith::{ClassifiedPrime, ResidueTable, TABLE_LIMIT};
use crate::charsum::{
    prefix_sum, profile_stats, ChiSource, Legendre, PartialSumProfile, ProfileStats,
};
use crate::counts::{count_brute_with, CountRecord, SubsetSelector};
use crate::error::Result;

enum Source {
    Table(ResidueTable),
    Stream(Legendre),
}

impl ChiSource for Source {
    fn modulus(&self) -> u64 {
        match self {
            Source::Table(t) => t.p(),
            Source::Stream(l) => l.modulus(),
        }
    }

    #[inline]
    fn chi(&self, m: u64) -> i8 {
        match self {
            Source::Table(t) => t.chi(m),
            Source::Stream(l) => l.chi(m),
        }
    }
}

/// Residue table and prefix profile of one prime, built once; streaming
/// Jacobi evaluation above the table limit.
pub(crate) struct PrimeContext {
    pub cp: ClassifiedPrime,
    src: Source,
    profile: Option<PartialSumProfile>,
    counts: RefCell<BTreeMap<SubsetSelector, CountRecord>>,
}

impl PrimeContext {
    pub fn new(cp: ClassifiedPrime) -> Result<Self> {
        let (src, profile) = if cp.p() < TABLE_LIMIT {
            let table = ResidueTable::new(cp.p())?;
            let profile = PartialSumProfile::new(&table)?;
            (Source::Table(table), Some(profile))
        } else {
            (Source::Stream(Legendre::new(cp.p())?), None)
        };
        Ok(PrimeContext {
            cp,
            src,
            profile,
            counts: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn p(&self) -> u64 {
        self.cp.p()
    }

    pub fn source(&self) -> &dyn ChiSource {
        &self.src
    }

    /// `sum_{m=1}^{n} chi_p(m)`.
    pub fn prefix(&self, n: u64) -> i64 {
        match &self.profile {
            Some(prof) => prof.prefix(n),
            None => prefix_sum(&self.src, n),
        }
    }

    pub fn profile(&self) -> Option<&PartialSumProfile> {
        self.profile.as_ref()
    }

    pub fn stats(&self) -> ProfileStats {
        match &self.profile {
            Some(prof) => *prof.stats(),
            None => profile_stats(&self.src),
        }
    }

    /// Brute-force count, memoized per selector.
    pub fn count(&self, sel: SubsetSelector) -> Result<CountRecord> {
        if let Some(r) = self.counts.borrow().get(&sel) {
            return Ok(*r);
        }
        let r = count_brute_with(&self.src, &self.cp, sel)?;
        self.counts.borrow_mut().insert(sel, r);
        Ok(r)
    }
}
