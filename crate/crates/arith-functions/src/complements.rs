//! Multiplicative and additive complements: the least k turning n (by some
//! law) into a member of a target range (factorials, double factorials,
//! perfect powers, primes).

use crate::smarandache::smarandache_s;
use crate::{FnError, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use numeric_core::{factorize, is_prime_u64, Natural};

/// Least k with n * k a factorial; equals S(n)!/n.
pub fn quotient(n: u64) -> Natural {
    assert!(n >= 1);
    let m = smarandache_s(n);
    let mut f = BigUint::one();
    for i in 2..=m {
        f *= BigUint::from(i);
    }
    f / BigUint::from(n)
}

fn double_factorials() -> impl Iterator<Item = (u64, Natural)> {
    // 1!!, 2!!, 3!!, ... as (m, m!!)
    let mut vals = [BigUint::one(), BigUint::one()]; // odd acc, even acc
    let mut m = 0u64;
    std::iter::from_fn(move || {
        m += 1;
        let idx = (m % 2) as usize;
        vals[idx] = &vals[idx] * BigUint::from(m);
        Some((m, vals[idx].clone()))
    })
}

/// Least m with n dividing m!!.
pub fn double_factorial_df(n: u64) -> u64 {
    assert!(n >= 1);
    let big_n = BigUint::from(n);
    for (m, df) in double_factorials() {
        if (df % &big_n).is_zero() {
            return m;
        }
    }
    unreachable!()
}

/// Least k with n * k equal to some m!!.
pub fn double_factorial_complement(n: u64) -> Natural {
    assert!(n >= 1);
    let big_n = BigUint::from(n);
    for (_, df) in double_factorials() {
        if (&df % &big_n).is_zero() {
            return df / &big_n;
        }
    }
    unreachable!()
}

/// Least k >= 1 with n * k a perfect m-power; k is itself m-power free.
pub fn power_complement(n: u64, m: u32) -> Result<u64> {
    if m < 2 {
        return Err(FnError::Domain("power complement needs m >= 2"));
    }
    if n == 0 {
        return Err(FnError::Domain("power complement needs n >= 1"));
    }
    if n == 1 {
        return Ok(1);
    }
    let mut k = 1u64;
    for &(p, e) in factorize(n).unwrap().pairs() {
        let rem = e % m;
        if rem != 0 {
            k *= p.pow(m - rem);
        }
    }
    Ok(k)
}

/// Least k >= 0 with n + k prime.
pub fn prime_additive_complement(n: u64) -> u64 {
    let mut k = 0u64;
    while !is_prime_u64(n + k) {
        k += 1;
    }
    k
}

/// Strictly increasing target ranges for the generic complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IncreasingRange {
    Squares,
    Cubes,
    Primes,
    Factorials,
    DoubleFactorials,
}

impl IncreasingRange {
    fn contains(&self, v: &Natural) -> bool {
        use num_traits::ToPrimitive;
        match self {
            IncreasingRange::Squares => numeric_core::integer_root(v, 2).pow(2) == *v,
            IncreasingRange::Cubes => numeric_core::integer_root(v, 3).pow(3) == *v,
            IncreasingRange::Primes => match v.to_u64() {
                Some(x) => is_prime_u64(x),
                None => numeric_core::is_prime(v, 40),
            },
            IncreasingRange::Factorials => {
                let mut f = BigUint::one();
                let mut i = 1u64;
                while f < *v {
                    i += 1;
                    f *= BigUint::from(i);
                }
                f == *v
            }
            IncreasingRange::DoubleFactorials => {
                for (_, df) in double_factorials() {
                    if df == *v {
                        return true;
                    }
                    if df > *v {
                        return false;
                    }
                }
                false
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplementLaw {
    Add,
    Mul,
}

/// Least k such that x ~ k lands in the range of g; the additive law starts
/// the search at k = 0, the multiplicative at k = 1.
pub fn smarandacheian_complement(
    g: IncreasingRange,
    law: ComplementLaw,
    x: u64,
    bound: u64,
) -> Result<u64> {
    let start = match law {
        ComplementLaw::Add => 0u64,
        ComplementLaw::Mul => 1u64,
    };
    for k in start..=bound {
        let candidate = match law {
            ComplementLaw::Add => BigUint::from(x) + BigUint::from(k),
            ComplementLaw::Mul => BigUint::from(x) * BigUint::from(k),
        };
        if candidate.is_zero() {
            continue;
        }
        if g.contains(&candidate) {
            return Ok(k);
        }
    }
    Err(FnError::SearchBound(bound))
}
