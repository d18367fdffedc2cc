//! Range runner over primes: identity suite, claims adjudication, gap
//! statistics, and the deterministic verification report.

mod checks;
mod context;
mod expect;
mod report;

use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;

pub use checks::{
    check_claims, verify_prime, ClaimResult, IdentityResult, Outcome, Witness, EXP_MAX_K,
};
pub use expect::{check_expectations, Expectations, ExpectedOutcome};
pub use report::{
    gap_statistics, ClaimSummary, ClaimWitness, GapMinimum, GapStat, IdentitySummary, PassFail,
    RangeSpec, ReportConfig, Timing, VerificationReport,
};

use crate::arith::{classify, primes_in_range, ClassifiedPrime, RANGE_CAP};
use crate::classnum::{ClassIdentity, ClassNumberCache};
use crate::counts::{check_eps, CountRecord};
use crate::error::{Error, Result};
use crate::ids::{ClaimId, IdentityId};
use checks::{claims_in_context, standard_counts, verify_in_context};
use context::PrimeContext;
use report::{Aggregator, PrimeOutcome};

pub const DEFAULT_EPS: [f64; 3] = [0.1, 0.25, 0.4];
pub const DEFAULT_WITNESS_CAP: usize = 10;

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub identities: Vec<IdentityId>,
    pub claims: Vec<ClaimId>,
    pub eps: Vec<f64>,
    pub jobs: usize,
    pub cache_path: Option<PathBuf>,
    pub witness_cap: usize,
    /// Record wall time in the report (makes it non-reproducible).
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            identities: IdentityId::ALL.to_vec(),
            claims: Vec::new(),
            eps: DEFAULT_EPS.to_vec(),
            jobs: 1,
            cache_path: None,
            witness_cap: DEFAULT_WITNESS_CAP,
            timing: false,
        }
    }
}

impl RunConfig {
    fn validate(&self) -> Result<()> {
        if self.jobs == 0 {
            return Err(Error::usage("jobs must be positive"));
        }
        self.eps.iter().try_for_each(|&e| check_eps(e))
    }
}

/// Discriminants whose class numbers the run will read.
fn needed_discriminants(primes: &[ClassifiedPrime], config: &RunConfig) -> Vec<i64> {
    let wants_h = config.identities.iter().any(|id| {
        !matches!(
            id,
            IdentityId::B1
                | IdentityId::B2
                | IdentityId::B3
                | IdentityId::QN
                | IdentityId::PV
                | IdentityId::EXP
        )
    });
    if !wants_h {
        return Vec::new();
    }
    let mut out = Vec::new();
    for cp in primes.iter().filter(|cp| cp.p() > 3) {
        for w in ClassIdentity::ALL.into_iter().filter(|w| w.applies(cp)) {
            out.push(w.discriminant(cp.p()));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn evaluate_prime(
    cp: ClassifiedPrime,
    config: &RunConfig,
    cache: &ClassNumberCache,
    keep_counts: bool,
) -> Result<PrimeOutcome> {
    let ctx = PrimeContext::new(cp)?;
    let identities = verify_in_context(&ctx, &config.identities, cache)?;
    let claims = claims_in_context(&ctx, &config.claims)?;
    let counts = if !config.eps.is_empty() || keep_counts {
        standard_counts(&ctx)?
    } else {
        Vec::new()
    };
    Ok(PrimeOutcome {
        cp,
        identities,
        claims,
        counts,
    })
}

/// Runs the configured identities and claims over the odd primes of
/// `[lo, hi)` and aggregates the report.
pub fn run_range(lo: u64, hi: u64, config: &RunConfig) -> Result<VerificationReport> {
    Ok(run(lo, hi, config, false)?.0)
}

/// Like [`run_range`], also returning the brute-force count records of the
/// standard selectors, ascending by `p` then selector, normalized at the
/// first `eps` of the grid.
pub fn run_range_with_counts(
    lo: u64,
    hi: u64,
    config: &RunConfig,
) -> Result<(VerificationReport, Vec<CountRecord>)> {
    run(lo, hi, config, true)
}

fn run(
    lo: u64,
    hi: u64,
    config: &RunConfig,
    keep_counts: bool,
) -> Result<(VerificationReport, Vec<CountRecord>)> {
    let start = Instant::now();
    config.validate()?;
    if lo > hi {
        return Err(Error::usage(format!("inverted range [{lo}, {hi})")));
    }
    if hi > RANGE_CAP {
        return Err(Error::usage(format!(
            "upper bound {hi} exceeds the range cap 2^32"
        )));
    }
    let primes: Vec<ClassifiedPrime> = primes_in_range(lo, hi)?
        .into_iter()
        .filter(|&p| p > 2)
        .map(classify)
        .collect::<Result<_>>()?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::internal(format!("thread pool: {e}")))?;

    let mut cache = match &config.cache_path {
        Some(path) => ClassNumberCache::load(path)?,
        None => ClassNumberCache::new(),
    };
    let needed = needed_discriminants(&primes, config);
    let added = pool.install(|| cache.fill(&needed))?;
    if let (Some(path), true) = (&config.cache_path, added > 0) {
        cache.save(path)?;
    }

    let outcomes: Vec<PrimeOutcome> = pool.install(|| {
        primes
            .par_iter()
            .map(|&cp| evaluate_prime(cp, config, &cache, keep_counts))
            .collect::<Result<_>>()
    })?;

    let mut agg = Aggregator::new(ReportConfig {
        identities: config.identities.clone(),
        claims: config.claims.clone(),
        eps: config.eps.clone(),
        witness_cap: config.witness_cap,
    });
    let mut counts = Vec::new();
    for outcome in outcomes {
        if keep_counts {
            for rec in &outcome.counts {
                counts.push(match config.eps.first() {
                    Some(&eps) => rec.with_eps(eps)?,
                    None => *rec,
                });
            }
        }
        agg.push(outcome);
    }
    let elapsed = config.timing.then(|| start.elapsed().as_millis() as u64);
    Ok((agg.finish(RangeSpec { lo, hi }, elapsed), counts))
}
