//! Factorization by trial division plus Brent's variant of Pollard rho,
//! and the divisor-level helpers built on top of it.

use crate::primality::is_prime_u64;
use crate::{Error, Natural, Result};
use num_bigint::BigUint;
use num_traits::One;

/// Canonical factorization: strictly increasing primes with exponents >= 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorMap {
    pairs: Vec<(u64, u32)>,
}

impl FactorMap {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.pairs
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    /// Product of prime^exponent, reconstructing the factored value.
    pub fn value(&self) -> Natural {
        let mut v = BigUint::one();
        for &(p, e) in &self.pairs {
            v *= BigUint::from(p).pow(e);
        }
        v
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Brent's cycle-finding variant of Pollard rho; `n` must be odd composite.
fn pollard_brent(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Complete factorization of `n >= 2`.
pub fn factorize(n: u64) -> Result<FactorMap> {
    if n < 2 {
        return Err(Error::Domain("factorize requires n >= 2"));
    }
    let mut rest = n;
    let mut primes = Vec::new();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        while rest % p == 0 {
            primes.push(p);
            rest /= p;
        }
    }
    factor_into(rest, &mut primes);
    primes.sort_unstable();
    let mut pairs: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match pairs.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => pairs.push((p, 1)),
        }
    }
    Ok(FactorMap { pairs })
}

/// Number of positive divisors.
pub fn divisor_count(n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    factorize(n)
        .unwrap()
        .pairs()
        .iter()
        .map(|&(_, e)| u64::from(e) + 1)
        .product()
}

/// Sum of positive divisors (1 and n included).
pub fn divisor_sum(n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    factorize(n)
        .unwrap()
        .pairs()
        .iter()
        .map(|&(p, e)| {
            let mut s = 1u64;
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                s += pk;
            }
            s
        })
        .product()
}

/// All positive divisors of `n`, increasing.
pub fn divisors(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    let fm = factorize(n).unwrap();
    let mut out = vec![1u64];
    for &(p, e) in fm.pairs() {
        let prev = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Largest prime dividing `n >= 2`.
pub fn largest_prime_factor(n: u64) -> u64 {
    factorize(n).unwrap().pairs().last().unwrap().0
}

/// Number of distinct primes dividing `n`.
pub fn distinct_prime_count(n: u64) -> usize {
    if n == 1 {
        return 0;
    }
    factorize(n).unwrap().pairs().len()
}

/// Largest divisor of `n` smaller than `n` itself; 1 maps to 1.
pub fn greatest_proper_divisor(n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let p = factorize(n).unwrap().pairs()[0].0;
    n / p
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut phi = n;
    for &(p, _) in factorize(n).unwrap().pairs() {
        phi = phi / p * (p - 1);
    }
    phi
}
