//! The named search functions: SP (power function), ceil functions, the
//! left-factorial and factorial-sum divisibility searches, and the
//! near-to-primorial function.

use crate::{FnError, Result};
use num_bigint::BigUint;
use num_traits::Zero;
use numeric_core::{factorize, is_prime_u64};

/// Least m with n dividing m^m.
pub fn sp_power(n: u64) -> u64 {
    assert!(n >= 1);
    if n == 1 {
        return 1;
    }
    let big_n = BigUint::from(n);
    for m in 1..=n {
        let mm = BigUint::from(m).modpow(&BigUint::from(m), &big_n);
        if mm.is_zero() {
            return m;
        }
    }
    n
}

/// Least m with n dividing m^k: raise each prime to ceil(e/k).
pub fn ceil_k(n: u64, k: u32) -> Result<u64> {
    if k < 1 {
        return Err(FnError::Domain("ceil function needs k >= 1"));
    }
    if n == 0 {
        return Err(FnError::Domain("ceil function needs n >= 1"));
    }
    if n == 1 {
        return Ok(1);
    }
    Ok(factorize(n)
        .unwrap()
        .pairs()
        .iter()
        .map(|&(p, e)| p.pow(e.div_ceil(k)))
        .product())
}

/// Least m with p dividing 0! + 1! + ... + (m-1)!, within `bound`.
pub fn smarandache_kurepa(p: u64, bound: u64) -> Result<u64> {
    if !is_prime_u64(p) {
        return Err(FnError::Domain("left-factorial search expects a prime"));
    }
    let mut sum = 0u64; // running left factorial mod p
    let mut fact = 1u64; // i! mod p
    for m in 1..=bound {
        // after adding (m-1)!: sum = !m mod p
        sum = (sum + fact) % p;
        if sum == 0 {
            return Ok(m);
        }
        fact = fact % p * (m % p) % p;
    }
    Err(FnError::SearchBound(bound))
}

/// Least m with p dividing 1! + 2! + ... + m!, within `bound`.
pub fn smarandache_wagstaff(p: u64, bound: u64) -> Result<u64> {
    if !is_prime_u64(p) {
        return Err(FnError::Domain("factorial-sum search expects a prime"));
    }
    let mut sum = 0u64;
    let mut fact = 1u64;
    for m in 1..=bound {
        fact = fact % p * (m % p) % p;
        sum = (sum + fact) % p;
        if sum == 0 {
            return Ok(m);
        }
    }
    Err(FnError::SearchBound(bound))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SntpOutcome {
    Prime(u64),
    /// No qualifying prime at or below the bound.
    UnknownWithin(u64),
}

/// Smallest prime q whose primorial q* satisfies n | q*-1, q* or q*+1.
pub fn sntp(n: u64, bound: u64) -> SntpOutcome {
    assert!(n >= 1);
    let mut primorial = BigUint::from(1u8);
    let big_n = BigUint::from(n);
    let mut q = 2u64;
    while q <= bound {
        primorial *= BigUint::from(q);
        let r = (&primorial % &big_n)
            .try_into()
            .unwrap_or(u64::MAX);
        if r == 0 || r == 1 || r + 1 == n || n == 1 {
            return SntpOutcome::Prime(q);
        }
        q = numeric_core::next_prime(q);
    }
    SntpOutcome::UnknownWithin(bound)
}
