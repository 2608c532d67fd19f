use crate::numkernel::{divisors, factor, reachable_sums, Factorization};
use crate::Result;

/// Structural test: `n = 1`, or the least prime of `n` is 2 and every later
/// prime `q_i` satisfies `q_i <= sigma(q_1^a_1 ... q_{i-1}^a_{i-1}) + 1`.
pub fn is_practical_stewart(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let f = factor(n).expect("n >= 1 always factors");
    satisfies_stewart(&f)
}

/// The criterion applied to an existing factorization.
pub fn satisfies_stewart(f: &Factorization) -> bool {
    let factors = f.factors();
    let Some(&(first, _)) = factors.first() else {
        return true;
    };
    if first != 2 {
        return false;
    }
    // sigma of the running prefix; u128 holds sigma(n) for any 64-bit n
    let mut prefix_sigma: u128 = 1;
    for &(q, e) in factors {
        if q as u128 > prefix_sigma + 1 {
            return false;
        }
        prefix_sigma *= prime_power_sigma_wide(q, e);
    }
    true
}

fn prime_power_sigma_wide(p: u64, e: u32) -> u128 {
    let p = p as u128;
    let mut term = 1u128;
    let mut sum = 1u128;
    for _ in 0..e {
        term *= p;
        sum += term;
    }
    sum
}

/// Definitional test: every `1 <= t < n` is a sum of distinct divisors of `n`.
///
/// Fails with a resource error when `n` has more divisors than the default cap.
pub fn is_practical_oracle(n: u64) -> Result<bool> {
    if n == 0 {
        return Ok(false);
    }
    if n == 1 {
        return Ok(true);
    }
    let divs = divisors(&factor(n)?)?;
    let sums = reachable_sums(&divs, n - 1);
    Ok(sums.count_positive() == n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stewart_examples() {
        assert!(is_practical_stewart(18));
        assert!(!is_practical_stewart(10));
        assert!(!is_practical_stewart(3));
        assert!(is_practical_stewart(1));
        assert!(is_practical_stewart(2));
    }

    #[test]
    fn oracle_examples() {
        assert!(is_practical_oracle(18).unwrap());
        assert!(!is_practical_oracle(10).unwrap());
        assert!(is_practical_oracle(1).unwrap());
    }

    #[test]
    fn criterion_matches_oracle_to_3000() {
        for n in 1..=3000 {
            assert_eq!(is_practical_stewart(n), is_practical_oracle(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn large_inputs_do_not_overflow() {
        // 2^62 * 3 lies just under the 64-bit domain
        assert!(is_practical_stewart(3 << 62));
        assert!(is_practical_stewart(1 << 63));
        assert!(!is_practical_stewart((1 << 62) + 1));
    }
}
