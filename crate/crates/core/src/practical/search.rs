use super::{is_practical_stewart, PracticalTable};
use crate::numkernel::gcd;
use crate::par::{self, Exec};
use crate::{Error, Result};

/// `N = m1 + m2` with both parts practical and `m1` as small as possible,
/// decided by the Stewart criterion directly (no table needed).
pub fn goldbach_decompose(n: u64) -> Result<(u64, u64)> {
    check_even(n)?;
    std::iter::once(1)
        .chain((2..n).step_by(2))
        .find(|&m1| is_practical_stewart(m1) && is_practical_stewart(n - m1))
        .map(|m1| (m1, n - m1))
        .ok_or_else(|| Error::NotFound(format!("no practical decomposition of {n}")))
}

fn check_even(n: u64) -> Result<()> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::arg(format!("{n} is not an even integer >= 2")));
    }
    Ok(())
}

impl PracticalTable {
    /// Table-backed [`goldbach_decompose`]: ascending practical `m1`, membership check of `N - m1`.
    pub fn goldbach(&self, n: u64) -> Result<(u64, u64)> {
        check_even(n)?;
        if n > self.limit() {
            return Err(Error::Range { x: n, limit: self.limit() });
        }
        self.iter()
            .take_while(|&m1| m1 < n)
            .find(|&m1| self.flag(n - m1))
            .map(|m1| (m1, n - m1))
            .ok_or_else(|| Error::NotFound(format!("no practical decomposition of {n}")))
    }
}

/// Outcome of decomposing every even `N` in `2..=max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldbachSummary {
    pub checked: u64,
    /// Even numbers with no decomposition; empty if the theorem holds in range.
    pub failures: Vec<u64>,
    /// Largest smallest-witness `m1` seen, with its `N`.
    pub largest_witness: (u64, u64),
}

pub fn goldbach_exhaustive(table: &PracticalTable, max_n: u64, exec: Exec) -> Result<GoldbachSummary> {
    if max_n > table.limit() {
        return Err(Error::Range { x: max_n, limit: table.limit() });
    }
    let parts = par::map(exec, par::blocks(1..max_n / 2 + 1, 4096), |half| {
        let mut failures = Vec::new();
        let mut largest = (0u64, 0u64);
        for h in half.clone() {
            let n = 2 * h;
            match table.goldbach(n) {
                Ok((m1, _)) if m1 > largest.0 => largest = (m1, n),
                Ok(_) => {}
                Err(_) => failures.push(n),
            }
        }
        (half.end - half.start, failures, largest)
    });
    let mut summary = GoldbachSummary { checked: 0, failures: Vec::new(), largest_witness: (0, 0) };
    for (count, failures, largest) in parts {
        summary.checked += count;
        summary.failures.extend(failures);
        if largest.0 > summary.largest_witness.0 {
            summary.largest_witness = largest;
        }
    }
    Ok(summary)
}

/// Checks that `m * n` is practical for practical `m` and `1 <= n <= 2m`.
/// The returned flag must always be `true`.
pub fn verify_product_corollary(m: u64, n: u64) -> Result<bool> {
    if !is_practical_stewart(m) {
        return Err(Error::arg(format!("{m} is not practical")));
    }
    if n == 0 || n > m.saturating_mul(2) {
        return Err(Error::arg(format!("multiplier {n} outside 1..=2*{m}")));
    }
    let product = m.checked_mul(n).ok_or(Error::Overflow("product corollary"))?;
    Ok(is_practical_stewart(product))
}

/// Centers `m <= limit` with `m + o` practical for every offset `o`.
pub fn find_pattern_tuples(table: &PracticalTable, offsets: &[i64], limit: u64) -> Result<Vec<u64>> {
    if !offsets.windows(2).all(|w| w[0] < w[1]) || !offsets.contains(&0) {
        return Err(Error::arg("offsets must be strictly increasing and contain 0"));
    }
    let max_off = *offsets.last().expect("contains 0");
    let reach = limit.checked_add_signed(max_off).ok_or(Error::Overflow("tuple reach"))?;
    if reach > table.limit() {
        return Err(Error::Range { x: reach, limit: table.limit() });
    }
    Ok((1..=limit)
        .filter(|&m| {
            offsets.iter().all(|&o| match m.checked_add_signed(o) {
                Some(v) if v >= 1 => table.flag(v),
                _ => false,
            })
        })
        .collect())
}

/// Twin construction from a pair of practical numbers: the lexicographically
/// least `(r, s)` with `r <= 2*m1`, `s <= 2*m2`, `|m1*r - m2*s| = 2` and both
/// products practical.
///
/// Requires `gcd(m1, m2) = 2` and `1/2 < m1/m2 < 2`; a not-found error here
/// would be a counterexample to the construction.
pub fn twin_from_pair(m1: u64, m2: u64) -> Result<(u64, u64)> {
    for m in [m1, m2] {
        if !is_practical_stewart(m) {
            return Err(Error::arg(format!("{m} is not practical")));
        }
    }
    if gcd(m1, m2) != 2 {
        return Err(Error::arg(format!("gcd({m1}, {m2}) != 2")));
    }
    if m1 >= m2.saturating_mul(2) || m2 >= m1.saturating_mul(2) {
        return Err(Error::arg(format!("{m1}/{m2} outside (1/2, 2)")));
    }
    twin_search(m1, m2)?.ok_or_else(|| {
        Error::NotFound(format!("no twin multiples of ({m1}, {m2}) within bounds"))
    })
}

/// The search behind [`twin_from_pair`], without its preconditions.
pub fn twin_search(m1: u64, m2: u64) -> Result<Option<(u64, u64)>> {
    if m1 == 0 || m2 == 0 {
        return Err(Error::arg("factors must be positive"));
    }
    let r_max = m1.checked_mul(2).ok_or(Error::Overflow("twin search"))?;
    let s_max = m2.checked_mul(2).ok_or(Error::Overflow("twin search"))?;
    for r in 1..=r_max {
        let a = m1.checked_mul(r).ok_or(Error::Overflow("twin search"))?;
        let mut a_practical = None;
        for b in [a.checked_sub(2), a.checked_add(2)].into_iter().flatten() {
            if b == 0 || b % m2 != 0 {
                continue;
            }
            let s = b / m2;
            if s > s_max {
                continue;
            }
            if !*a_practical.get_or_insert_with(|| is_practical_stewart(a)) {
                break;
            }
            if is_practical_stewart(b) {
                return Ok(Some((r, s)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::practical::practical_sieve;

    #[test]
    fn goldbach_examples() {
        assert_eq!(goldbach_decompose(4).unwrap(), (2, 2));
        assert_eq!(goldbach_decompose(100).unwrap(), (4, 96));
        assert_eq!(goldbach_decompose(2).unwrap(), (1, 1));
        assert!(goldbach_decompose(7).is_err());
        assert!(goldbach_decompose(0).is_err());
        let t = practical_sieve(1000).unwrap();
        for n in (2..=1000).step_by(2) {
            assert_eq!(t.goldbach(n).unwrap(), goldbach_decompose(n).unwrap());
        }
    }

    #[test]
    fn goldbach_exhaustive_small() {
        let t = practical_sieve(20_000).unwrap();
        let s = goldbach_exhaustive(&t, 20_000, Exec::Parallel).unwrap();
        assert_eq!(s.checked, 10_000);
        assert!(s.failures.is_empty());
        assert_eq!(s, goldbach_exhaustive(&t, 20_000, Exec::Sequential).unwrap());
    }

    #[test]
    fn product_corollary_examples() {
        assert!(verify_product_corollary(2, 4).unwrap());
        assert!(verify_product_corollary(6, 7).unwrap());
        assert!(verify_product_corollary(16, 32).unwrap());
        assert!(verify_product_corollary(10, 2).is_err());
        assert!(verify_product_corollary(6, 13).is_err());
        assert!(verify_product_corollary(6, 0).is_err());
    }

    #[test]
    fn tuple_examples() {
        let t = practical_sieve(200).unwrap();
        let triples = find_pattern_tuples(&t, &[-2, 0, 2], 10).unwrap();
        assert_eq!(triples.first(), Some(&4));
        let quint = find_pattern_tuples(&t, &[-6, -2, 0, 2, 6], 100).unwrap();
        assert!(quint.contains(&18));
        assert_eq!(find_pattern_tuples(&t, &[0], 10).unwrap(), vec![1, 2, 4, 6, 8]);
        assert!(find_pattern_tuples(&t, &[2, 0], 10).is_err());
        assert!(find_pattern_tuples(&t, &[-2, 2], 10).is_err());
        assert!(matches!(find_pattern_tuples(&t, &[0, 6], 199), Err(Error::Range { .. })));
    }

    #[test]
    fn twin_examples() {
        // (1, 1) already gives the twins (4, 6); (4, 3) -> (16, 18) is a later solution
        assert_eq!(twin_from_pair(4, 6).unwrap(), (1, 1));
        assert!(is_practical_stewart(16) && is_practical_stewart(18));
        // ratio exactly 1/2 is outside the lemma; the bare search still works
        assert!(twin_from_pair(2, 4).is_err());
        assert_eq!(twin_search(2, 4).unwrap(), Some((1, 1)));
        assert!(twin_from_pair(4, 8).is_err());
        assert!(twin_from_pair(10, 6).is_err());
    }
}
