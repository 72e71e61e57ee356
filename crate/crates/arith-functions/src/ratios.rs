//! Ratio and sum functions derived from S(n).

use crate::prime_table::PrimeTable;
use crate::smarandache::{s_p, smarandache_s};
use crate::{FnError, Result};
use num_rational::Ratio;
use numeric_core::factorize;

/// 1 / S(n) for n >= 2.
pub fn s1(n: u64) -> Result<Ratio<u64>> {
    if n < 2 {
        return Err(FnError::Domain("s1 defined for n >= 2"));
    }
    Ok(Ratio::new(1, smarandache_s(n)))
}

/// S(n) / n.
pub fn s2(n: u64) -> Result<Ratio<u64>> {
    if n < 1 {
        return Err(FnError::Domain("s2 defined for n >= 1"));
    }
    Ok(Ratio::new(smarandache_s(n), n))
}

/// n / S(n) for n >= 2.
pub fn s3(n: u64) -> Result<Ratio<u64>> {
    if n < 2 {
        return Err(FnError::Domain("s3 defined for n >= 2"));
    }
    Ok(Ratio::new(n, smarandache_s(n)))
}

/// Sum of S(p^x) over primes p <= x.
pub fn fs_sum(table: &PrimeTable, x: u64) -> Result<u64> {
    if x < 2 {
        return Err(FnError::Domain("fs defined for x >= 2"));
    }
    Ok(table
        .up_to(x)
        .into_iter()
        .map(|p| s_p(p, x).unwrap())
        .sum())
}

/// Sum of S(p^x) over primes p dividing x.
pub fn theta(x: u64) -> Result<u64> {
    if x < 1 {
        return Err(FnError::Domain("theta defined for x >= 1"));
    }
    if x == 1 {
        return Ok(0);
    }
    Ok(factorize(x)
        .unwrap()
        .pairs()
        .iter()
        .map(|&(p, _)| s_p(p, x).unwrap())
        .sum())
}

/// Sum of S(p^x) over primes p <= x that do not divide x.
pub fn theta_bar(table: &PrimeTable, x: u64) -> Result<u64> {
    if x < 1 {
        return Err(FnError::Domain("theta_bar defined for x >= 1"));
    }
    Ok(table
        .up_to(x)
        .into_iter()
        .filter(|&p| x % p != 0)
        .map(|p| s_p(p, x).unwrap())
        .sum())
}
