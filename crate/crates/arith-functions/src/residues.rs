//! m-power residues, p-adic exponents, and the reduced-residue product.

use crate::{FnError, Result};
use num_bigint::BigInt;
use numeric_core::factorize;

/// Largest m-power-free divisor: cap every factor exponent at m - 1.
pub fn m_power_residue(n: u64, m: u32) -> Result<u64> {
    if m < 2 {
        return Err(FnError::Domain("residue needs m >= 2"));
    }
    if n == 0 {
        return Err(FnError::Domain("residue needs n >= 1"));
    }
    if n == 1 {
        return Ok(1);
    }
    Ok(factorize(n)
        .unwrap()
        .pairs()
        .iter()
        .map(|&(p, e)| p.pow(e.min(m - 1)))
        .product())
}

/// p-adic valuation: the k with p^k | n but p^(k+1) not.
pub fn exponent(n: u64, p: u64) -> Result<u64> {
    if p < 2 {
        return Err(FnError::Domain("exponent base must be >= 2"));
    }
    if n == 0 {
        return Err(FnError::Domain("exponent of zero undefined"));
    }
    let mut k = 0u64;
    let mut rest = n;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    Ok(k)
}

/// Product over the reduced residue system mod m of (x + c).
pub fn residual_l(x: i64, m: u64) -> Result<BigInt> {
    if m < 2 {
        return Err(FnError::Domain("residual product needs m >= 2"));
    }
    let mut prod = BigInt::from(1);
    for c in 1..m {
        if gcd(c, m) == 1 {
            prod *= BigInt::from(x) + BigInt::from(c);
        }
    }
    Ok(prod)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
