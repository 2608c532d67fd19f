//! Sum-free sequences in the distinct-subset sense: no term is a sum of
//! distinct earlier terms.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::fit::log_log_slope;
use crate::numkernel::SumBitset;
use crate::{Error, Result};

/// Largest bitset bound the verifiers will allocate (bits).
pub const MAX_SUM_BOUND: u64 = 1 << 32;

/// Reciprocal sums are kept as exact rationals up to this many terms.
pub const EXACT_RECIPROCAL_TERMS: usize = 64;

/// Result of [`is_sumfree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    SumFree,
    /// Index of the first term that is a sum of distinct earlier terms.
    Violation(usize),
}

fn check_increasing(terms: &[u64]) -> Result<()> {
    if terms.first() == Some(&0) {
        return Err(Error::arg("terms must be positive"));
    }
    if !terms.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::arg("terms must be strictly increasing"));
    }
    Ok(())
}

fn bitset_for(bound: u64) -> Result<SumBitset> {
    if bound > MAX_SUM_BOUND {
        return Err(Error::Resource { what: "sum bitset", requested: bound, cap: MAX_SUM_BOUND });
    }
    Ok(SumBitset::new(bound))
}

/// Incremental check: `terms[k]` must not be reachable from `terms[..k]`.
pub fn is_sumfree(terms: &[u64]) -> Result<Verdict> {
    check_increasing(terms)?;
    let mut reach = bitset_for(terms.last().copied().unwrap_or(0))?;
    for (k, &t) in terms.iter().enumerate() {
        if reach.contains(t) {
            return Ok(Verdict::Violation(k));
        }
        reach.insert(t);
    }
    Ok(Verdict::SumFree)
}

/// A certified sum-free prefix together with its subset sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumFreePrefix {
    terms: Vec<u64>,
    reachable: SumBitset,
}

impl SumFreePrefix {
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        match is_sumfree(&terms)? {
            Verdict::SumFree => {}
            Verdict::Violation(k) => {
                return Err(Error::arg(format!(
                    "term {} at index {k} is a sum of distinct earlier terms",
                    terms[k]
                )))
            }
        }
        let mut reachable = bitset_for(terms.last().copied().unwrap_or(0))?;
        for &t in &terms {
            reachable.insert(t);
        }
        Ok(Self { terms, reachable })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn reachable(&self) -> &SumBitset {
        &self.reachable
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Greedy continuation: append the least integer above the last term that
/// is not a distinct-subset sum, until `limit`.
pub fn greedy_extend(seed: &SumFreePrefix, limit: u64) -> Result<SumFreePrefix> {
    let last = seed.terms.last().copied().unwrap_or(0);
    if limit < last {
        return Err(Error::arg(format!("limit {limit} is below the last seed term {last}")));
    }
    if limit > MAX_SUM_BOUND {
        return Err(Error::Resource { what: "sum bitset", requested: limit, cap: MAX_SUM_BOUND });
    }
    let mut reach = seed.reachable.grown(limit, &seed.terms);
    let mut terms = seed.terms.clone();
    let mut from = last + 1;
    while let Some(next) = reach.first_missing_from(from) {
        terms.push(next);
        reach.insert(next);
        from = next + 1;
    }
    Ok(SumFreePrefix { terms, reachable: reach })
}

/// `sum 1/n_j`, exact for short prefixes.
#[derive(Debug, Clone, PartialEq)]
pub struct ReciprocalSum {
    pub value: f64,
    pub exact: Option<Ratio<BigUint>>,
    /// Absolute bound on the error of `value` (zero beyond f64 rounding when exact).
    pub error_bound: f64,
}

impl ReciprocalSum {
    /// `true` only if the sum is certainly below `limit`.
    pub fn certainly_below(&self, limit: u64) -> bool {
        match &self.exact {
            Some(r) => *r < Ratio::from_integer(BigUint::from(limit)),
            None => self.value + self.error_bound < limit as f64,
        }
    }
}

pub fn reciprocal_sum(prefix: &SumFreePrefix) -> ReciprocalSum {
    reciprocal_sum_of(&prefix.terms)
}

pub(crate) fn reciprocal_sum_of(terms: &[u64]) -> ReciprocalSum {
    if terms.len() <= EXACT_RECIPROCAL_TERMS {
        let exact = terms.iter().fold(Ratio::<BigUint>::zero(), |acc, &t| {
            acc + Ratio::new(BigUint::from(1u32), BigUint::from(t))
        });
        let value = exact.to_f64().unwrap_or(f64::NAN);
        return ReciprocalSum { value, exact: Some(exact), error_bound: value * f64::EPSILON };
    }
    // smallest reciprocals first
    let value: f64 = terms.iter().rev().map(|&t| 1.0 / t as f64).sum();
    let error_bound = 2.0 * terms.len() as f64 * f64::EPSILON * value;
    ReciprocalSum { value, exact: None, error_bound }
}

/// `max_k n_{k+1} / n_k`.
pub fn gap_statistic(prefix: &SumFreePrefix) -> Result<f64> {
    if prefix.len() < 2 {
        return Err(Error::arg("gap statistic needs at least two terms"));
    }
    Ok(prefix
        .terms
        .windows(2)
        .map(|w| w[1] as f64 / w[0] as f64)
        .fold(f64::MIN, f64::max))
}

/// Minimum prefix length accepted by [`growth_exponent`].
pub const MIN_GROWTH_TERMS: usize = 16;

/// Least-squares slope of `ln n_k` against `ln k` over the second half of the prefix.
pub fn growth_exponent(prefix: &SumFreePrefix) -> Result<f64> {
    tail_exponent(&prefix.terms)
}

pub(crate) fn tail_exponent(terms: &[u64]) -> Result<f64> {
    if terms.len() < MIN_GROWTH_TERMS {
        return Err(Error::arg(format!(
            "growth exponent needs at least {MIN_GROWTH_TERMS} terms, got {}",
            terms.len()
        )));
    }
    let start = terms.len() / 2;
    let points: Vec<(f64, f64)> = terms[start..]
        .iter()
        .enumerate()
        .map(|(i, &t)| ((start + i + 1) as f64, t as f64))
        .collect();
    log_log_slope(&points)
}
