use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::arith::{is_square_free, primes_between, PrimeInput};
use crate::census::identities::{check_all, IDENTITY_NAMES};
use crate::census::{census, elliptic_baseline, evaluate, type_number_printed_formula, Fault};
use crate::error::{Error, Result};
use crate::quadratic::{class_number_imaginary, smaller_unit_exists};

use super::record::{prime_power, Diagnostic, OutputRecord};

/// Checks run by [`verify`] on top of the per-census identities.
pub const EXTRA_IDENTITIES: [&str; 2] = ["unit-minimality", "imaginary-class-number-sweep"];

/// Primes below this also get the brute-force unit minimality check.
const UNIT_MINIMALITY_BOUND: u64 = 200;

/// Discriminants `-SWEEP_BOUND < d < 0` get both class-number oracles.
const SWEEP_BOUND: i64 = 500;

/// A pool with `jobs` threads, or rayon's default when `None`.
pub fn thread_pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        if n == 0 {
            return Err(Error::Precondition("job count must be positive".into()));
        }
        b = b.num_threads(n);
    }
    b.build().map_err(|e| Error::Precondition(e.to_string()))
}

/// The output record for `q = p^n`.
pub fn record_for(q: u64, diagnostic: bool) -> Result<OutputRecord> {
    let (p, n) = prime_power(q)?;
    if n % 2 == 0 {
        return Ok(OutputRecord::elliptic_only(q, p.get(), n, elliptic_baseline(p)?));
    }
    let mut rec = OutputRecord::from_census(q, n, &census(p)?);
    if diagnostic {
        rec.diagnostic = Some(Diagnostic { type_number_printed_formula: type_number_printed_formula(p)? });
    }
    Ok(rec)
}

/// Records for every prime in `[p_min, p_max]`, in ascending order whatever
/// the thread count.
pub fn census_range(
    p_min: u64,
    p_max: u64,
    jobs: Option<usize>,
    diagnostic: bool,
) -> Result<Vec<OutputRecord>> {
    if p_min > p_max {
        return Err(Error::Precondition(format!("empty range: {p_min} > {p_max}")));
    }
    let primes = primes_between(p_min, p_max);
    thread_pool(jobs)?.install(|| primes.par_iter().map(|p| record_for(p.get(), diagnostic)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyFailure {
    /// `None` for checks not tied to one prime.
    pub p: Option<u64>,
    pub identity: String,
    pub detail: String,
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p {
            Some(p) => write!(f, "FAIL p = {p} identity {}: {}", self.identity, self.detail),
            None => write!(f, "FAIL identity {}: {}", self.identity, self.detail),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub p_max: u64,
    pub primes_checked: usize,
    /// Passing instances per identity, in a fixed order.
    pub counts: Vec<(&'static str, u64)>,
    /// The failure at the smallest prime, if any.
    pub failure: Option<VerifyFailure>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn count(&self, identity: &str) -> Option<u64> {
        self.counts.iter().find(|(n, _)| *n == identity).map(|&(_, c)| c)
    }
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "primes checked: {} (p <= {})", self.primes_checked, self.p_max)?;
        for (name, n) in &self.counts {
            writeln!(f, "{name:<32} {n}")?;
        }
        match &self.failure {
            Some(fail) => writeln!(f, "{fail}"),
            None => writeln!(f, "all identities hold"),
        }
    }
}

/// Which identity an evaluation error belongs to.
fn identity_of(err: &Error) -> String {
    match err {
        Error::InvariantViolation { identity, .. } => identity.clone(),
        Error::OracleDisagreement { quantity, .. } | Error::NonIntegral { quantity, .. } => {
            if quantity.starts_with("zeta") {
                "zeta-siegel-bernoulli"
            } else if quantity.starts_with("unit index") {
                "unit-index-cross-check"
            } else if quantity.starts_with("h(A)") {
                "odd-h-A"
            } else if quantity.starts_with("h(") || quantity.starts_with("Dirichlet") {
                "imaginary-class-number-oracles"
            } else {
                "nonnegative-integers"
            }
            .into()
        }
        Error::Negative { .. } => "nonnegative-integers".into(),
        _ => "evaluation".into(),
    }
}

struct Outcome {
    passed: Vec<&'static str>,
    failure: Option<VerifyFailure>,
}

fn check_prime(p: PrimeInput, fault: Option<Fault>) -> Outcome {
    let fail = |identity: String, detail: String| VerifyFailure { p: Some(p.get()), identity, detail };
    let raw = match evaluate(p, fault) {
        Ok(raw) => raw,
        Err(e) => return Outcome { passed: vec![], failure: Some(fail(identity_of(&e), e.to_string())) },
    };
    let mut passed = Vec::new();
    let mut failure = None;
    for (name, check) in check_all(&raw) {
        match check {
            Ok(()) => passed.push(name),
            Err(detail) => {
                failure.get_or_insert_with(|| fail(name.into(), detail));
            }
        }
    }
    if p.get() < UNIT_MINIMALITY_BOUND {
        if smaller_unit_exists(p, &raw.profile.unit) {
            failure.get_or_insert_with(|| {
                fail(EXTRA_IDENTITIES[0].into(), format!("a unit below {:?} exists", raw.profile.unit))
            });
        } else {
            passed.push(EXTRA_IDENTITIES[0]);
        }
    }
    Outcome { passed, failure }
}

/// Runs every identity for every prime `p ≤ p_max` plus the imaginary class
/// number sweep, in parallel.
pub fn verify(p_max: u64, jobs: Option<usize>, fault: Option<Fault>) -> Result<VerifySummary> {
    let mut counts: BTreeMap<&'static str, u64> = BTreeMap::new();
    let mut failure = None;

    for d in -SWEEP_BOUND + 1..0 {
        if !is_square_free(d) {
            continue;
        }
        match class_number_imaginary(d) {
            Ok(_) => *counts.entry(EXTRA_IDENTITIES[1]).or_default() += 1,
            Err(e) => {
                failure.get_or_insert(VerifyFailure {
                    p: None,
                    identity: EXTRA_IDENTITIES[1].into(),
                    detail: e.to_string(),
                });
            }
        }
    }

    let primes = primes_between(2, p_max);
    let outcomes: Vec<Outcome> =
        thread_pool(jobs)?.install(|| primes.par_iter().map(|&p| check_prime(p, fault)).collect());
    for o in &outcomes {
        for name in &o.passed {
            *counts.entry(name).or_default() += 1;
        }
    }
    if failure.is_none() {
        failure = outcomes.into_iter().find_map(|o| o.failure);
    }

    let counts = IDENTITY_NAMES
        .iter()
        .chain(EXTRA_IDENTITIES.iter())
        .map(|&n| (n, counts.get(n).copied().unwrap_or(0)))
        .collect();
    Ok(VerifySummary { p_max, primes_checked: primes.len(), counts, failure })
}
