//! Exact powers and base-k digit sums.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Arbitrary-precision non-negative integer.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigUInt(BigUint);

impl BigUInt {
    pub fn zero() -> Self {
        Self(BigUint::zero())
    }

    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }
}

impl From<u64> for BigUInt {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<u128> for BigUInt {
    fn from(v: u128) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<BigUint> for BigUInt {
    fn from(v: BigUint) -> Self {
        Self(v)
    }
}

impl fmt::Display for BigUInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for BigUInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for BigUInt {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BigUint::from_str(s)
            .map(Self)
            .map_err(|e| Error::arg(format!("bad integer {s:?}: {e}")))
    }
}

/// `n^m` exactly.
pub fn big_pow(n: u64, m: u32) -> Result<BigUInt> {
    if m == 0 {
        return Err(Error::arg("exponent must be >= 1"));
    }
    Ok(BigUInt(BigUint::from(n).pow(m)))
}

/// Sum of the base-`base` digits of `x`.
pub fn digit_sum(x: &BigUInt, base: u64) -> Result<u64> {
    if base < 2 {
        return Err(Error::arg("base must be >= 2"));
    }
    if let Some(small) = x.to_u128() {
        return Ok(digit_sum_u128(small, base));
    }
    if base == 2 {
        return Ok(x.0.iter_u64_digits().map(|w| w.count_ones() as u64).sum());
    }
    if base <= 256 {
        return Ok(x.0.to_radix_le(base as u32).iter().map(|&d| d as u64).sum());
    }
    let big_base = BigUint::from(base);
    let mut rest = x.0.clone();
    let mut sum = 0u64;
    while !rest.is_zero() {
        let (q, r) = num_integer::Integer::div_rem(&rest, &big_base);
        sum += r.to_u64().expect("remainder below base");
        rest = q;
    }
    Ok(sum)
}

/// Digit sum of a machine integer; `base >= 2` is the caller's contract.
#[inline]
pub fn digit_sum_u128(mut x: u128, base: u64) -> u64 {
    debug_assert!(base >= 2);
    if base == 2 {
        return x.count_ones() as u64;
    }
    let b = base as u128;
    let mut sum = 0u64;
    while x > 0 {
        sum += (x % b) as u64;
        x /= b;
    }
    sum
}
