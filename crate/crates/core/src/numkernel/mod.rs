//! Shared arithmetic: factorization, divisor sums, subset-sum reachability,
//! exact powers and digit sums.

mod bigint;
mod bitset;
mod factor;

pub use bigint::{big_pow, digit_sum, digit_sum_u128, BigUInt};
pub use bitset::{reachable_sums, SumBitset};
pub use factor::{
    divisors, divisors_capped, factor, is_prime, sigma, Factorization, DEFAULT_DIVISOR_CAP,
    TRIAL_DIVISION_BOUND,
};

/// `gcd` on machine integers.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::Integer::gcd(&a, &b)
}
