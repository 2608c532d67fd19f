//! Practical numbers: every `t < m` is a sum of distinct divisors of `m`.

mod criterion;
mod search;
mod sieve;

pub use criterion::{is_practical_oracle, is_practical_stewart, satisfies_stewart};
pub use search::{
    find_pattern_tuples, goldbach_decompose, goldbach_exhaustive, twin_from_pair, twin_search,
    verify_product_corollary, GoldbachSummary,
};
pub use sieve::{
    count_p, count_p2, erdos_ratio, lambda_estimates, practical_sieve, practical_sieve_with,
    LambdaSeries, PracticalTable, DEFAULT_SIEVE_CAP,
};
