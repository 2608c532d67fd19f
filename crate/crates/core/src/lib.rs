//! Experimental number theory workbench.
//!
//! Four families of integer sequences share one arithmetic kernel:
//!
//! * [`practical`]: practical numbers, their sieve and counting functions,
//!   Goldbach decompositions, tuple patterns and twin constructions.
//! * [`sumfree`]: sequences in which no term is a sum of distinct earlier terms.
//! * [`powersums`]: sums of distinct powers `a^k` (`a` in a base set, `k >= s`)
//!   and empirical completeness.
//! * [`digitpow`]: `(k, l, m)`-numbers, whose base-`k` digit sum of `n^m` is
//!   `l` times that of `n`.
//!
//! [`numkernel`] holds factorization, divisor sums, the subset-sum bitset and
//! big-integer digit sums they all build on.

pub mod digitpow;
mod error;
pub mod fit;
pub mod numkernel;
pub mod par;
pub mod powersums;
pub mod practical;
pub mod sumfree;

pub use error::{Error, Result};
pub use par::Exec;
