//! `(k, l, m)`-numbers: `n` such that the base-`k` digit sum of `n^m` is
//! `l` times the base-`k` digit sum of `n`.

use crate::fit::log_log_slope;
use crate::numkernel::{big_pow, digit_sum, digit_sum_u128};
use crate::par::{self, Exec};
use crate::{Error, Result};

/// Largest scan length accepted by [`enumerate_klm`] and [`count_klm`].
pub const DEFAULT_SCAN_CAP: u64 = 100_000_000;

/// Target exponent `ln 1.6875 / ln 2` for the `(2,1,2)` counting function.
pub fn alpha() -> f64 {
    1.6875f64.ln() / std::f64::consts::LN_2
}

/// `G_k = sqrt(2 ln 2 / (pi (k^2 + k)))`.
pub fn g_k(k: u32) -> f64 {
    let k = k as f64;
    (2.0 * std::f64::consts::LN_2 / (std::f64::consts::PI * (k * k + k))).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KlmParams {
    base: u64,
    multiplier: u64,
    power: u32,
}

impl KlmParams {
    pub fn new(base: u64, multiplier: u64, power: u32) -> Result<Self> {
        if base < 2 {
            return Err(Error::arg("base k must be >= 2"));
        }
        if multiplier < 1 {
            return Err(Error::arg("multiplier l must be >= 1"));
        }
        if power < 2 {
            return Err(Error::arg("power m must be >= 2"));
        }
        Ok(Self { base, multiplier, power })
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn multiplier(&self) -> u64 {
        self.multiplier
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    fn is(&self, k: u64, l: u64, m: u32) -> bool {
        (self.base, self.multiplier, self.power) == (k, l, m)
    }
}

impl std::fmt::Display for KlmParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.base, self.multiplier, self.power)
    }
}

pub fn is_klm(n: u64, params: KlmParams) -> bool {
    let k = params.base;
    let lhs = match (n as u128).checked_pow(params.power) {
        Some(p) => digit_sum_u128(p, k),
        None => digit_sum(&big_pow(n, params.power).expect("power >= 2"), k).expect("base >= 2"),
    };
    lhs == params.multiplier * digit_sum_u128(n as u128, k)
}

fn check_scan(limit: u64) -> Result<()> {
    if limit == 0 {
        return Err(Error::arg("limit must be >= 1"));
    }
    if limit > DEFAULT_SCAN_CAP {
        return Err(Error::Resource { what: "klm scan", requested: limit, cap: DEFAULT_SCAN_CAP });
    }
    Ok(())
}

const SCAN_BLOCK: u64 = 1 << 16;

pub fn enumerate_klm(limit: u64, params: KlmParams) -> Result<Vec<u64>> {
    enumerate_klm_with(limit, params, Exec::default())
}

/// Every `(k,l,m)`-number `<= limit`, ascending.
pub fn enumerate_klm_with(limit: u64, params: KlmParams, exec: Exec) -> Result<Vec<u64>> {
    check_scan(limit)?;
    let chunks = par::map(exec, par::blocks(1..limit + 1, SCAN_BLOCK), |r| {
        r.filter(|&n| is_klm(n, params)).collect::<Vec<_>>()
    });
    Ok(chunks.concat())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KlmRow {
    pub n: u64,
    pub count: u64,
}

/// Counting function `p_(k,l,m)(n)` at checkpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KlmSeries {
    params: KlmParams,
    rows: Vec<KlmRow>,
}

impl KlmSeries {
    /// Validates `n` strictly increasing, counts non-decreasing and `p(n) <= n`.
    pub fn from_rows(params: KlmParams, rows: Vec<KlmRow>) -> Result<Self> {
        for w in rows.windows(2) {
            if w[0].n >= w[1].n || w[0].count > w[1].count {
                return Err(Error::arg("series rows must increase in n with non-decreasing counts"));
            }
        }
        if rows.iter().any(|r| r.count > r.n) {
            return Err(Error::arg("count exceeds n"));
        }
        Ok(Self { params, rows })
    }

    pub fn params(&self) -> KlmParams {
        self.params
    }

    pub fn rows(&self) -> &[KlmRow] {
        &self.rows
    }

    pub fn at(&self, n: u64) -> Option<u64> {
        self.rows.iter().find(|r| r.n == n).map(|r| r.count)
    }
}

pub fn count_klm(checkpoints: &[u64], params: KlmParams) -> Result<KlmSeries> {
    count_klm_with(checkpoints, params, Exec::default())
}

/// Scans `1..=max(checkpoints)` in blocks; per-block tallies merge by addition,
/// so totals do not depend on `exec`.
pub fn count_klm_with(checkpoints: &[u64], params: KlmParams, exec: Exec) -> Result<KlmSeries> {
    if checkpoints.is_empty() {
        return Err(Error::arg("no checkpoints"));
    }
    if !checkpoints.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::arg("checkpoints must be strictly increasing"));
    }
    let limit = *checkpoints.last().expect("non-empty");
    check_scan(limit)?;
    if checkpoints[0] == 0 {
        return Err(Error::arg("checkpoints must be positive"));
    }
    let tallies = par::map(exec, par::blocks(1..limit + 1, SCAN_BLOCK), |r| {
        let mut t = vec![0u64; checkpoints.len()];
        let mut seg = checkpoints.partition_point(|&c| c < r.start);
        for n in r {
            while checkpoints[seg] < n {
                seg += 1;
            }
            if is_klm(n, params) {
                t[seg] += 1;
            }
        }
        t
    });
    let mut totals = vec![0u64; checkpoints.len()];
    for t in tallies {
        for (acc, v) in totals.iter_mut().zip(t) {
            *acc += v;
        }
    }
    let mut running = 0;
    let rows = checkpoints
        .iter()
        .zip(totals)
        .map(|(&n, c)| {
            running += c;
            KlmRow { n, count: running }
        })
        .collect();
    KlmSeries::from_rows(params, rows)
}

/// Checks `B(n (2^nu - 1)) = nu` for `1 <= n < 2^nu`, `nu <= 64`.
pub fn multiplier_identity_check(nu: u32, n: u64) -> Result<bool> {
    if !(1..=64).contains(&nu) {
        return Err(Error::arg(format!("nu = {nu} outside 1..=64")));
    }
    if n == 0 || (nu < 64 && n >> nu != 0) {
        return Err(Error::arg(format!("n = {n} outside 1..2^{nu}")));
    }
    let mult = (1u128 << nu) - 1;
    Ok((n as u128 * mult).count_ones() == nu)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Conjecture3Fit {
    pub slope: f64,
    pub alpha: f64,
}

/// Slope of `ln p(n)` on `ln n` for a `(2,1,2)` series spanning three decades.
pub fn conjecture3_fit(series: &KlmSeries) -> Result<Conjecture3Fit> {
    if !series.params.is(2, 1, 2) {
        return Err(Error::arg(format!("expected (2,1,2) series, got {}", series.params)));
    }
    let rows = series.rows();
    let (Some(first), Some(last)) = (rows.first(), rows.last()) else {
        return Err(Error::arg("empty series"));
    };
    if rows.len() < 2 || last.n < first.n.saturating_mul(1000) {
        return Err(Error::arg("checkpoints must span at least three decades"));
    }
    let points: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.count as f64)).collect();
    Ok(Conjecture3Fit { slope: log_log_slope(&points)?, alpha: alpha() })
}

/// `p(n) sqrt(ln n) / (n G_k)` per checkpoint of a `(2,k,k)` series.
pub fn conjecture4_ratio(series: &KlmSeries, k: u32) -> Result<Vec<(u64, f64)>> {
    if k < 2 {
        return Err(Error::arg("k must be >= 2"));
    }
    if !series.params.is(2, k as u64, k) {
        return Err(Error::arg(format!("expected (2,{k},{k}) series, got {}", series.params)));
    }
    if series.rows.is_empty() {
        return Err(Error::arg("empty series"));
    }
    if series.rows.iter().any(|r| r.n < 1000) {
        return Err(Error::arg("checkpoints must be >= 1000"));
    }
    let g = g_k(k);
    Ok(series
        .rows
        .iter()
        .map(|r| {
            let n = r.n as f64;
            (r.n, r.count as f64 * n.ln().sqrt() / (n * g))
        })
        .collect())
}

/// Exponents of the known bounds for `(2,1,2)`.
pub const LOWER_BOUND_EXPONENT: f64 = 0.025;
pub const SANDOR_UPPER_EXPONENT: f64 = 0.9183;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonitorConfig {
    /// Flag `p(n) < floor * n^(1/2)` when set.
    pub desk_floor: Option<f64>,
    /// Flag `p(n) > C * n^0.9183` for `(2,1,2)` series.
    pub upper_constant: f64,
}

impl Default for MonitorConfig {
    fn default() -> Self {
        Self { desk_floor: None, upper_constant: 1.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    BelowLowerBound,
    BelowDeskFloor,
    AboveSandor,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundFlag {
    pub n: u64,
    pub count: u64,
    pub kind: BoundKind,
}

/// Informational comparison of a series with the known growth bounds.
pub fn bound_monitor(series: &KlmSeries, config: &MonitorConfig) -> Result<Vec<BoundFlag>> {
    if series.rows.is_empty() {
        return Err(Error::arg("empty series"));
    }
    let is_212 = series.params.is(2, 1, 2);
    let mut flags = Vec::new();
    for r in &series.rows {
        let n = r.n as f64;
        let c = r.count as f64;
        let mut flag = |kind| flags.push(BoundFlag { n: r.n, count: r.count, kind });
        if is_212 && c < n.powf(LOWER_BOUND_EXPONENT) {
            flag(BoundKind::BelowLowerBound);
        }
        if let Some(floor) = config.desk_floor {
            if c < floor * n.sqrt() {
                flag(BoundKind::BelowDeskFloor);
            }
        }
        if is_212 && c > config.upper_constant * n.powf(SANDOR_UPPER_EXPONENT) {
            flag(BoundKind::AboveSandor);
        }
    }
    Ok(flags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(k: u64, l: u64, m: u32) -> KlmParams {
        KlmParams::new(k, l, m).unwrap()
    }

    fn string_oracle(n: u64, params: KlmParams) -> bool {
        // independent digit oracle: base-k digits by repeated division on the big value
        let to_digits = |x: &num_bigint::BigUint| -> u64 {
            x.to_radix_le(params.base() as u32).iter().map(|&d| d as u64).sum()
        };
        let big = num_bigint::BigUint::from(n);
        to_digits(&big.pow(params.power())) == params.multiplier() * to_digits(&big)
    }

    #[test]
    fn param_validation() {
        assert!(KlmParams::new(1, 1, 2).is_err());
        assert!(KlmParams::new(2, 0, 2).is_err());
        assert!(KlmParams::new(2, 1, 1).is_err());
        assert_eq!(p(2, 1, 2).to_string(), "(2,1,2)");
    }

    #[test]
    fn predicate_examples() {
        assert!(is_klm(1, p(2, 1, 2)));
        assert!(!is_klm(5, p(2, 1, 2)));
        assert!(is_klm(21, p(2, 2, 2)));
    }

    #[test]
    fn predicate_matches_oracle() {
        for params in [p(2, 1, 2), p(2, 2, 2), p(3, 1, 2), p(10, 2, 3), p(2, 3, 3)] {
            for n in 1..3000 {
                assert_eq!(is_klm(n, params), string_oracle(n, params), "{n} {params}");
            }
        }
        // big path: n^m beyond u128
        let params = p(2, 1, 5);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(1u64 << 40..1 << 62);
            assert_eq!(is_klm(n, params), string_oracle(n, params));
        }
    }

    #[test]
    fn powers_of_base_with_l_one() {
        for e in 0..=60 {
            assert!(is_klm(1 << e, p(2, 1, 2)));
            assert!(is_klm(1 << e, p(2, 1, 7)));
        }
        for e in 0..=20 {
            assert!(is_klm(3u64.pow(e), p(3, 1, 4)));
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_klm(10, p(2, 1, 2)).unwrap(), vec![1, 2, 3, 4, 6, 7, 8]);
        assert!(enumerate_klm(20, p(2, 2, 2)).unwrap().is_empty());
        assert_eq!(enumerate_klm(21, p(2, 2, 2)).unwrap(), vec![21]);
        for params in [p(2, 1, 2), p(3, 1, 3), p(7, 1, 2)] {
            assert_eq!(enumerate_klm(1, params).unwrap(), vec![1]);
        }
        assert!(matches!(enumerate_klm(DEFAULT_SCAN_CAP + 1, p(2, 1, 2)), Err(Error::Resource { .. })));
        assert!(enumerate_klm(0, p(2, 1, 2)).is_err());
    }

    #[test]
    fn counts_match_enumeration() {
        let cps = [10, 100, 1000, 50_000, 200_000];
        for params in [p(2, 1, 2), p(2, 2, 2), p(3, 1, 2)] {
            let seq = count_klm_with(&cps, params, Exec::Sequential).unwrap();
            let par = count_klm_with(&cps, params, Exec::Parallel).unwrap();
            assert_eq!(seq, par);
            for row in seq.rows() {
                assert_eq!(row.count, enumerate_klm(row.n, params).unwrap().len() as u64);
            }
        }
        assert_eq!(count_klm(&[10], p(2, 1, 2)).unwrap().at(10), Some(7));
        assert!(count_klm(&[], p(2, 1, 2)).is_err());
        assert!(count_klm(&[10, 10], p(2, 1, 2)).is_err());
        assert!(count_klm(&[0, 10], p(2, 1, 2)).is_err());
    }

    #[test]
    fn multiplier_identity() {
        assert!(multiplier_identity_check(4, 5).unwrap());
        assert!(multiplier_identity_check(1, 1).unwrap());
        assert!(multiplier_identity_check(64, u64::MAX).unwrap());
        assert!(multiplier_identity_check(4, 16).is_err());
        assert!(multiplier_identity_check(4, 0).is_err());
        assert!(multiplier_identity_check(0, 1).is_err());
        assert!(multiplier_identity_check(65, 1).is_err());
        for nu in 1..=12 {
            for n in 1..1u64 << nu {
                assert!(multiplier_identity_check(nu, n).unwrap(), "nu={nu} n={n}");
            }
        }
    }

    #[test]
    fn constants() {
        assert!((alpha() - 0.754_887_5).abs() < 1e-7);
        // sqrt(2 ln 2 / (6 pi))
        assert!((g_k(2) - 0.271_192_182_872).abs() < 1e-11);
    }

    #[test]
    fn fitter_self_tests() {
        let params = p(2, 1, 2);
        let ident = KlmSeries::from_rows(
            params,
            [10_000u64, 100_000, 1_000_000, 10_000_000].iter().map(|&n| KlmRow { n, count: n }).collect(),
        )
        .unwrap();
        assert!((conjecture3_fit(&ident).unwrap().slope - 1.0).abs() < 1e-6);
        let single = KlmSeries::from_rows(params, vec![KlmRow { n: 10_000, count: 100 }]).unwrap();
        assert!(conjecture3_fit(&single).is_err());
        let short = KlmSeries::from_rows(
            params,
            vec![KlmRow { n: 1_000, count: 10 }, KlmRow { n: 100_000, count: 100 }],
        )
        .unwrap();
        assert!(conjecture3_fit(&short).is_err());
        let wrong = KlmSeries::from_rows(p(2, 2, 2), ident.rows().to_vec()).unwrap();
        assert!(conjecture3_fit(&wrong).is_err());

        let flags = bound_monitor(&ident, &MonitorConfig::default()).unwrap();
        assert!(flags.iter().any(|f| f.kind == BoundKind::AboveSandor));
        let empty = KlmSeries::from_rows(params, vec![]).unwrap();
        assert!(bound_monitor(&empty, &MonitorConfig::default()).is_err());
        assert!(KlmSeries::from_rows(params, vec![KlmRow { n: 5, count: 6 }]).is_err());
    }

    #[test]
    fn ratio_reporting() {
        let s = count_klm(&[1000, 10_000], p(2, 2, 2)).unwrap();
        let r = conjecture4_ratio(&s, 2).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|&(_, v)| v.is_finite() && v > 0.0));
        assert!(conjecture4_ratio(&s, 3).is_err());
        let low = count_klm(&[999], p(2, 2, 2)).unwrap();
        assert!(conjecture4_ratio(&low, 2).is_err());
    }

    #[test]
    fn monitor_floor() {
        let s = count_klm(&[1000, 100_000], p(2, 1, 2)).unwrap();
        assert!(bound_monitor(&s, &MonitorConfig::default()).unwrap().is_empty());
        let strict = MonitorConfig { desk_floor: Some(1e6), ..MonitorConfig::default() };
        let flags = bound_monitor(&s, &strict).unwrap();
        assert_eq!(flags.len(), 2);
        assert!(flags.iter().all(|f| f.kind == BoundKind::BelowDeskFloor));
    }
}
