use crate::fit::{CountingRow, CountingSeries};
use crate::par::{self, Exec};
use crate::{Error, Result};

/// Largest limit [`practical_sieve`] accepts; the factor table costs four bytes per integer.
pub const DEFAULT_SIEVE_CAP: u64 = 300_000_000;

const WORDS_PER_BLOCK: usize = 1024;

/// Practicality flags for `1..=limit` with O(1) prefix counts for both the
/// practical numbers and the smaller members of twin pairs `(m, m + 2)`.
#[derive(Clone)]
pub struct PracticalTable {
    limit: u64,
    flags: Vec<u64>,
    flag_prefix: Vec<u64>,
    twins: Vec<u64>,
    twin_prefix: Vec<u64>,
}

impl std::fmt::Debug for PracticalTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PracticalTable")
            .field("limit", &self.limit)
            .field("count", &self.count_p(self.limit).unwrap_or(0))
            .finish()
    }
}

/// Smallest-prime-factor table over odd integers below `limit` (index `n/2`).
fn odd_spf(limit: u64) -> Vec<u32> {
    let half = (limit / 2 + 1) as usize;
    let mut spf = vec![0u32; half];
    let mut p = 3u64;
    while p * p <= limit {
        if spf[(p / 2) as usize] == 0 {
            let mut j = p * p;
            while j <= limit {
                let slot = &mut spf[(j / 2) as usize];
                if *slot == 0 {
                    *slot = p as u32;
                }
                j += 2 * p;
            }
        }
        p += 2;
    }
    spf
}

fn stewart_from_spf(n: u64, spf: &[u32]) -> bool {
    if n <= 2 {
        return n >= 1;
    }
    if n % 2 == 1 {
        return false;
    }
    let a = n.trailing_zeros();
    let mut m = n >> a;
    let mut prefix_sigma = (1u64 << (a + 1)) - 1;
    while m > 1 {
        let p = match spf[(m / 2) as usize] {
            0 => m,
            p => p as u64,
        };
        if p > prefix_sigma + 1 {
            return false;
        }
        let mut pk_sigma = 1u64;
        let mut pk = 1u64;
        while m.is_multiple_of(p) {
            m /= p;
            pk *= p;
            pk_sigma += pk;
        }
        prefix_sigma *= pk_sigma;
    }
    true
}

/// Builds the table with the default execution mode.
pub fn practical_sieve(limit: u64) -> Result<PracticalTable> {
    practical_sieve_with(limit, Exec::default())
}

/// Sieve of Stewart flags: one shared odd smallest-prime-factor table, then
/// independent word blocks evaluated per `exec`.
pub fn practical_sieve_with(limit: u64, exec: Exec) -> Result<PracticalTable> {
    if limit == 0 {
        return Err(Error::arg("sieve limit must be >= 1"));
    }
    if limit > DEFAULT_SIEVE_CAP {
        return Err(Error::Resource {
            what: "practical sieve",
            requested: limit,
            cap: DEFAULT_SIEVE_CAP,
        });
    }
    let spf = odd_spf(limit);
    let nwords = (limit / 64 + 1) as usize;
    let mut flags = vec![0u64; nwords];
    par::for_each_chunk_mut(exec, &mut flags, WORDS_PER_BLOCK, |block, words| {
        let base = (block * WORDS_PER_BLOCK) as u64 * 64;
        for (i, word) in words.iter_mut().enumerate() {
            let lo = base + i as u64 * 64;
            let mut w = 0u64;
            for b in 0..64u64 {
                let n = lo + b;
                if n >= 1 && n <= limit && stewart_from_spf(n, &spf) {
                    w |= 1 << b;
                }
            }
            *word = w;
        }
    });
    let twins: Vec<u64> = (0..nwords)
        .map(|i| {
            let next = flags.get(i + 1).copied().unwrap_or(0);
            flags[i] & (flags[i] >> 2 | next << 62)
        })
        .collect();
    Ok(PracticalTable {
        limit,
        flag_prefix: prefix(&flags),
        twin_prefix: prefix(&twins),
        flags,
        twins,
    })
}

fn prefix(words: &[u64]) -> Vec<u64> {
    let mut acc = 0u64;
    words
        .iter()
        .map(|w| {
            let before = acc;
            acc += w.count_ones() as u64;
            before
        })
        .collect()
}

fn count_through(words: &[u64], prefix: &[u64], x: u64) -> u64 {
    let w = (x / 64) as usize;
    let b = x % 64;
    let mask = if b == 63 { u64::MAX } else { (1u64 << (b + 1)) - 1 };
    prefix[w] + (words[w] & mask).count_ones() as u64
}

impl PracticalTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Flag for `n`, assuming `1 <= n <= limit`; `n = 0` reads as not practical.
    #[inline]
    pub(crate) fn flag(&self, n: u64) -> bool {
        self.flags[(n / 64) as usize] >> (n % 64) & 1 == 1
    }

    pub fn is_practical(&self, n: u64) -> Result<bool> {
        if n == 0 || n > self.limit {
            return Err(Error::Range { x: n, limit: self.limit });
        }
        Ok(self.flag(n))
    }

    /// `P(x)`: practical numbers `<= x`.
    pub fn count_p(&self, x: u64) -> Result<u64> {
        if x > self.limit {
            return Err(Error::Range { x, limit: self.limit });
        }
        Ok(count_through(&self.flags, &self.flag_prefix, x))
    }

    /// `P2(x)`: practical `m <= x` with `m + 2` practical. Needs `x + 2 <= limit`.
    pub fn count_p2(&self, x: u64) -> Result<u64> {
        if x.saturating_add(2) > self.limit {
            return Err(Error::Range { x: x.saturating_add(2), limit: self.limit });
        }
        Ok(count_through(&self.twins, &self.twin_prefix, x))
    }

    /// Practical numbers in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.flags.iter().enumerate().flat_map(|(i, &w)| {
            let base = i as u64 * 64;
            (0..64u64).filter(move |b| w >> b & 1 == 1).map(move |b| base + b)
        })
    }
}

/// Free-function form of [`PracticalTable::count_p`].
pub fn count_p(table: &PracticalTable, x: u64) -> Result<u64> {
    table.count_p(x)
}

/// Free-function form of [`PracticalTable::count_p2`].
pub fn count_p2(table: &PracticalTable, x: u64) -> Result<u64> {
    table.count_p2(x)
}

/// `P(x) ln x / x` and `P2(x) (ln x)^2 / x` per checkpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaSeries {
    pub p: CountingSeries,
    pub p2: CountingSeries,
}

pub fn lambda_estimates(table: &PracticalTable, checkpoints: &[u64]) -> Result<LambdaSeries> {
    let mut p = Vec::with_capacity(checkpoints.len());
    let mut p2 = Vec::with_capacity(checkpoints.len());
    for &x in checkpoints {
        if x == 0 {
            return Err(Error::arg("checkpoints must be positive"));
        }
        let ln = (x as f64).ln();
        let c1 = table.count_p(x)?;
        let c2 = table.count_p2(x)?;
        p.push(CountingRow { x, count: c1, ratio: c1 as f64 * ln / x as f64 });
        p2.push(CountingRow { x, count: c2, ratio: c2 as f64 * ln * ln / x as f64 });
    }
    Ok(LambdaSeries {
        p: CountingSeries::new(p)?,
        p2: CountingSeries::new(p2)?,
    })
}

/// `P(2x) / P(x)`.
pub fn erdos_ratio(table: &PracticalTable, x: u64) -> Result<f64> {
    if x == 0 {
        return Err(Error::arg("x must be >= 1"));
    }
    let doubled = x.checked_mul(2).ok_or(Error::Overflow("erdos ratio"))?;
    Ok(table.count_p(doubled)? as f64 / table.count_p(x)? as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::practical::{is_practical_oracle, is_practical_stewart};

    #[test]
    fn small_tables() {
        let t = practical_sieve(10).unwrap();
        assert_eq!(t.iter().collect::<Vec<_>>(), vec![1, 2, 4, 6, 8]);
        assert_eq!(t.count_p(10).unwrap(), 5);
        let t1 = practical_sieve(1).unwrap();
        assert_eq!(t1.iter().collect::<Vec<_>>(), vec![1]);
        assert!(practical_sieve(0).is_err());
        assert!(matches!(practical_sieve(DEFAULT_SIEVE_CAP + 1), Err(Error::Resource { .. })));
    }

    #[test]
    fn counts_against_oracle_scan() {
        let t = practical_sieve(200).unwrap();
        let oracle: Vec<u64> = (1..=200).filter(|&n| is_practical_oracle(n).unwrap()).collect();
        assert_eq!(t.iter().collect::<Vec<_>>(), oracle);
        assert_eq!(t.count_p(100).unwrap(), 30);
        assert_eq!(t.count_p2(20).unwrap(), 5);
        assert_eq!(t.count_p2(1).unwrap(), 0);
        for x in 0..=198 {
            let want = oracle.iter().filter(|&&m| m <= x && oracle.contains(&(m + 2))).count() as u64;
            assert_eq!(t.count_p2(x).unwrap(), want, "x={x}");
        }
        assert!(matches!(t.count_p2(199), Err(Error::Range { .. })));
        assert!(matches!(t.count_p(201), Err(Error::Range { .. })));
    }

    #[test]
    fn sieve_matches_stewart_and_modes_agree() {
        let limit = 200_000;
        let seq = practical_sieve_with(limit, Exec::Sequential).unwrap();
        let par = practical_sieve_with(limit, Exec::Parallel).unwrap();
        assert_eq!(seq.flags, par.flags);
        for n in 1..=limit {
            assert_eq!(seq.flag(n), is_practical_stewart(n), "n={n}");
        }
        assert_eq!(seq.count_p(limit).unwrap(), seq.iter().count() as u64);
        // every practical beyond 2 is even
        assert!(seq.iter().skip(1).all(|m| m % 2 == 0));
    }

    #[test]
    fn twin_bits_cross_word_edges() {
        let t = practical_sieve(1000).unwrap();
        for m in 1..=998 {
            assert_eq!(
                t.twins[(m / 64) as usize] >> (m % 64) & 1 == 1,
                t.flag(m) && t.flag(m + 2),
                "m={m}"
            );
        }
    }

    #[test]
    fn ratios() {
        let t = practical_sieve(100).unwrap();
        let s = lambda_estimates(&t, &[10]).unwrap();
        assert!((s.p.rows()[0].ratio - 5.0 * 10f64.ln() / 10.0).abs() < 1e-12);
        assert!((erdos_ratio(&t, 10).unwrap() - 9.0 / 5.0).abs() < 1e-12);
        assert_eq!(erdos_ratio(&t, 1).unwrap(), 2.0);
        assert!(erdos_ratio(&t, 51).is_err());
        assert!(lambda_estimates(&t, &[99]).is_err());
    }
}
