//! 64-bit factorization: trial division, Miller-Rabin, Pollard rho (Brent).

use crate::{Error, Result};

/// Trial division runs up to this bound before switching to Pollard rho.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// Default cap on the number of divisors [`divisors`] will materialize.
pub const DEFAULT_DIVISOR_CAP: usize = 1 << 20;

/// Canonical factorization: `(prime, exponent)` pairs, ascending by prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factorization of 1.
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds a factorization from explicit pairs, checking that primes are
    /// strictly increasing, prime, and carry positive exponents.
    pub fn from_pairs(pairs: Vec<(u64, u32)>) -> Result<Self> {
        for (i, &(p, e)) in pairs.iter().enumerate() {
            if e == 0 {
                return Err(Error::arg(format!("exponent of {p} is zero")));
            }
            if !is_prime(p) {
                return Err(Error::arg(format!("{p} is not prime")));
            }
            if i > 0 && pairs[i - 1].0 >= p {
                return Err(Error::arg("primes must be strictly increasing"));
            }
        }
        Ok(Self { factors: pairs })
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// The integer this factorization represents.
    pub fn value(&self) -> Result<u64> {
        self.factors.iter().try_fold(1u64, |acc, &(p, e)| {
            p.checked_pow(e)
                .and_then(|pe| acc.checked_mul(pe))
                .ok_or(Error::Overflow("factorization value"))
        })
    }

    /// Number of divisors, `prod (e_i + 1)`.
    pub fn divisor_count(&self) -> u128 {
        self.factors.iter().map(|&(_, e)| e as u128 + 1).product()
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "{p}^{e}")?;
        }
        Ok(())
    }
}

/// Factors `n >= 1`. `factor(1)` is the empty product.
pub fn factor(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::arg("cannot factor 0"));
    }
    let mut primes = Vec::new();
    let mut rest = n;
    for p in [2u64, 3] {
        while rest.is_multiple_of(p) {
            rest /= p;
            primes.push(p);
        }
    }
    let mut d = 5u64;
    let mut step = 2u64;
    while d <= TRIAL_DIVISION_BOUND && d * d <= rest {
        while rest.is_multiple_of(d) {
            rest /= d;
            primes.push(d);
        }
        d += step;
        step = 6 - step;
    }
    if rest > 1 {
        if d * d > rest {
            primes.push(rest);
        } else {
            split_large(rest, &mut primes);
        }
    }
    primes.sort_unstable();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { factors })
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    // Deterministic sequence of polynomial constants; a composite with no
    // factor below 10^6 always splits for some small c in practice.
    let d = (1..)
        .find_map(|c| pollard_brent(n, c))
        .expect("rho constants exhausted");
    split_large(d, out);
    split_large(n / d, out);
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// One Brent cycle search with `x -> x^2 + c`; returns a proper divisor.
fn pollard_brent(n: u64, c: u64) -> Option<u64> {
    use num_integer::Integer;
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
    let mut x = y;
    let mut ys = y;
    let mut g = 1u64;
    const BATCH: u64 = 128;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += BATCH;
        }
        r *= 2;
        if r > 1 << 26 {
            return None;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

/// Sum of divisors via `prod (q^(a+1) - 1) / (q - 1)`; overflow is an error.
pub fn sigma(f: &Factorization) -> Result<u64> {
    f.factors.iter().try_fold(1u64, |acc, &(p, e)| {
        acc.checked_mul(prime_power_sigma(p, e)?)
            .ok_or(Error::Overflow("sigma"))
    })
}

/// `1 + p + ... + p^e`.
fn prime_power_sigma(p: u64, e: u32) -> Result<u64> {
    let mut term = 1u64;
    let mut sum = 1u64;
    for _ in 0..e {
        term = term.checked_mul(p).ok_or(Error::Overflow("sigma"))?;
        sum = sum.checked_add(term).ok_or(Error::Overflow("sigma"))?;
    }
    Ok(sum)
}

/// All divisors in ascending order, refusing more than [`DEFAULT_DIVISOR_CAP`].
pub fn divisors(f: &Factorization) -> Result<Vec<u64>> {
    divisors_capped(f, DEFAULT_DIVISOR_CAP)
}

pub fn divisors_capped(f: &Factorization, cap: usize) -> Result<Vec<u64>> {
    let count = f.divisor_count();
    if count > cap as u128 {
        return Err(Error::Resource {
            what: "divisor list",
            requested: count.min(u64::MAX as u128) as u64,
            cap: cap as u64,
        });
    }
    let mut divs = Vec::with_capacity(count as usize);
    divs.push(1u64);
    for &(p, e) in &f.factors {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk = pk.checked_mul(p).ok_or(Error::Overflow("divisors"))?;
            for i in 0..len {
                let d = divs[i].checked_mul(pk).ok_or(Error::Overflow("divisors"))?;
                divs.push(d);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}
