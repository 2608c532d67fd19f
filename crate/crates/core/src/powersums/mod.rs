//! Sums of distinct powers: `Pow(A; s)` is the nondecreasing sequence of all
//! `a^k` with `a` in `A` and `k >= s`, and `Sigma(S)` the set of finite sums
//! of distinct elements of `S`.

mod setspec;

pub use setspec::parse_base_set;

use crate::numkernel::{gcd, reachable_sums, SumBitset};
use crate::sumfree::tail_exponent;
use crate::{Error, Result};

/// A base set `A` (strictly increasing, every element >= 2) and minimum exponent `s >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSet {
    bases: Vec<u64>,
    min_exponent: u32,
}

impl PowerSet {
    pub fn new(mut bases: Vec<u64>, min_exponent: u32) -> Result<Self> {
        if min_exponent == 0 {
            return Err(Error::arg("minimum exponent must be >= 1"));
        }
        bases.sort_unstable();
        bases.dedup();
        match bases.first() {
            None => return Err(Error::arg("base set is empty")),
            Some(&a) if a < 2 => return Err(Error::arg("every base must be >= 2")),
            _ => {}
        }
        Ok(Self { bases, min_exponent })
    }

    /// Parses a set specification (see [`parse_base_set`]).
    pub fn parse(spec: &str, min_exponent: u32) -> Result<Self> {
        Self::new(parse_base_set(spec)?, min_exponent)
    }

    pub fn bases(&self) -> &[u64] {
        &self.bases
    }

    pub fn min_exponent(&self) -> u32 {
        self.min_exponent
    }
}

/// How numerically equal powers from different `(a, k)` pairs are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Multiplicity {
    /// Every `(a, k)` pair is its own sequence element.
    #[default]
    Multiset,
    /// Equal values collapse to one element.
    Distinct,
}

pub fn pow_terms(ps: &PowerSet, bound: u64) -> Vec<u64> {
    pow_terms_with(ps, bound, Multiplicity::Multiset)
}

/// All `a^k <= bound` with `k >= s`, sorted.
pub fn pow_terms_with(ps: &PowerSet, bound: u64, mult: Multiplicity) -> Vec<u64> {
    let mut out = Vec::new();
    for &a in &ps.bases {
        let Some(mut v) = a.checked_pow(ps.min_exponent) else {
            // bases ascend, so every later a^s overflows too
            break;
        };
        if v > bound {
            break;
        }
        while v <= bound {
            out.push(v);
            match v.checked_mul(a) {
                Some(next) => v = next,
                None => break,
            }
        }
    }
    out.sort_unstable();
    if mult == Multiplicity::Distinct {
        out.dedup();
    }
    out
}

pub fn sigma_set(ps: &PowerSet, bound: u64) -> SumBitset {
    sigma_set_with(ps, bound, Multiplicity::Multiset)
}

/// `Sigma(Pow(A; s))` truncated at `bound`.
pub fn sigma_set_with(ps: &PowerSet, bound: u64, mult: Multiplicity) -> SumBitset {
    reachable_sums(&pow_terms_with(ps, bound, mult), bound)
}

/// Empirical completeness evidence over `[1, bound]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompletenessReport {
    pub bound: u64,
    /// Least `T` such that every integer in `[T, bound]` is representable,
    /// reported only when that window spans at least the upper half of the
    /// range (`2T <= bound`).
    pub covered_from: Option<u64>,
    /// `|Sigma ∩ [1, bound]| / bound`.
    pub density: f64,
    pub missing_count: u64,
}

pub fn completeness_window(ps: &PowerSet, bound: u64) -> Result<CompletenessReport> {
    completeness_window_with(ps, bound, Multiplicity::Multiset)
}

pub fn completeness_window_with(
    ps: &PowerSet,
    bound: u64,
    mult: Multiplicity,
) -> Result<CompletenessReport> {
    if bound == 0 {
        return Err(Error::arg("bound must be >= 1"));
    }
    Ok(report_for(&sigma_set_with(ps, bound, mult)))
}

pub(crate) fn report_for(sums: &SumBitset) -> CompletenessReport {
    let bound = sums.bound();
    let covered = sums.count_positive();
    let threshold = sums.last_missing().map_or(1, |t| t + 1).max(1);
    CompletenessReport {
        bound,
        covered_from: (threshold.saturating_mul(2) <= bound).then_some(threshold),
        density: covered as f64 / bound as f64,
        missing_count: bound - covered,
    }
}

/// `A = {p*n^2 : 1 <= n <= N} ∪ {p + 1}` with minimum exponent `s`.
pub fn counterexample_set(p: u64, s: u32, truncation: u64) -> Result<PowerSet> {
    let mut bases = setspec::square_family(p, truncation)?;
    bases.push(p + 1);
    PowerSet::new(bases, s)
}

/// `sum 1/(a - 1)`.
pub fn reciprocal_weight(bases: &[u64]) -> Result<f64> {
    check_bases(bases)?;
    let mut sorted = bases.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Ok(sorted.iter().map(|&a| 1.0 / (a - 1) as f64).sum())
}

/// `sum 1/ln a`.
pub fn log_weight(bases: &[u64]) -> Result<f64> {
    check_bases(bases)?;
    let mut sorted = bases.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Ok(sorted.iter().map(|&a| 1.0 / (a as f64).ln()).sum())
}

fn check_bases(bases: &[u64]) -> Result<()> {
    if bases.iter().any(|&a| a < 2) {
        return Err(Error::arg("every base must be >= 2"));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Conjecture1Report {
    pub log_weight: f64,
    /// `sum 1/ln a > ln 2`.
    pub log_weight_exceeds_ln2: bool,
    pub pairwise_coprime: bool,
    /// `gcd` of the whole set is 1 (weaker than pairwise coprimality).
    pub gcd_all_one: bool,
}

impl Conjecture1Report {
    /// Both hypotheses of the positive-density conjecture hold.
    pub fn hypotheses_hold(&self) -> bool {
        self.log_weight_exceeds_ln2 && self.pairwise_coprime
    }
}

pub fn conjecture1_hypotheses(bases: &[u64]) -> Result<Conjecture1Report> {
    let lw = log_weight(bases)?;
    let pairwise = bases
        .iter()
        .enumerate()
        .all(|(i, &a)| bases[i + 1..].iter().all(|&b| gcd(a, b) == 1));
    let all = bases.iter().fold(0, |g, &a| gcd(g, a)) == 1;
    Ok(Conjecture1Report {
        log_weight: lw,
        log_weight_exceeds_ln2: lw > std::f64::consts::LN_2,
        pairwise_coprime: pairwise,
        gcd_all_one: all,
    })
}

/// Leading elements of `Sigma(Pow(A; s))` and their growth exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct JointPowers {
    pub terms: Vec<u64>,
    /// Tail least-squares slope of `ln n_k` on `ln k`; needs 16+ terms.
    pub exponent: Option<f64>,
}

/// The first `count` positive elements of `Sigma(Pow(A; s))` in ascending order.
pub fn joint_power_sequence(ps: &PowerSet, count: usize) -> Result<JointPowers> {
    if count == 0 {
        return Err(Error::arg("count must be >= 1"));
    }
    let mut bound = (2 * count as u64).max(64);
    loop {
        let sums = sigma_set(ps, bound);
        if sums.count_positive() >= count as u64 {
            let terms: Vec<u64> = sums.iter().skip(1).take(count).collect();
            let exponent = tail_exponent(&terms).ok();
            return Ok(JointPowers { terms, exponent });
        }
        if bound >= crate::sumfree::MAX_SUM_BOUND {
            return Err(Error::Resource {
                what: "joint power bitset",
                requested: bound.saturating_mul(2),
                cap: crate::sumfree::MAX_SUM_BOUND,
            });
        }
        bound = bound.saturating_mul(2).min(crate::sumfree::MAX_SUM_BOUND);
    }
}
