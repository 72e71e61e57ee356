//! Digit-block palindromes, the wrong-number iteration, and divisor-product
//! classifiers.

use crate::factor::divisors;
use crate::{Error, Natural, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Product of all positive divisors of `n` except `n` itself.
pub fn proper_divisor_product(n: u64) -> Natural {
    let mut p = BigUint::one();
    for d in divisors(n) {
        if d != n {
            p *= BigUint::from(d);
        }
    }
    p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisorProductFlags {
    /// Product of proper divisors <= n.
    pub simple: bool,
    /// Product of proper divisors < n.
    pub impotent: bool,
}

/// Classify `n >= 2` by the product of its proper divisors.
pub fn classify_by_proper_divisor_product(n: u64) -> Result<DivisorProductFlags> {
    if n < 2 {
        return Err(Error::Domain("divisor-product classes start at n = 2"));
    }
    let p = proper_divisor_product(n);
    let n_big = BigUint::from(n);
    Ok(DivisorProductFlags {
        simple: p <= n_big,
        impotent: p < n_big,
    })
}

/// Generalized digit-block palindrome test.
///
/// True iff the decimal digits split into blocks B1..Bk Bk..B1 (k >= 1) or
/// B1..B(k-1) Bk B(k-1)..B1 (k >= 2); blocks are positive integers, so no
/// block may start with 0 (a middle block must also be zero-free at its
/// front, and the single digit 0 is not a positive integer).
pub fn gsp_check(n: &Natural) -> Result<bool> {
    if *n < BigUint::from(10u8) {
        return Err(Error::Domain("block palindromes need at least two digits"));
    }
    let s = n.to_radix_be(10);
    Ok(gsp_rec(&s, 0, s.len(), 0))
}

fn gsp_rec(s: &[u8], lo: usize, hi: usize, pairs: usize) -> bool {
    if lo >= hi {
        // Even form: all blocks paired; needs at least one pair.
        return pairs >= 1;
    }
    // Remaining middle as the (unpaired) center block of the odd form.
    if pairs >= 1 && s[lo] != 0 {
        return true;
    }
    let remaining = hi - lo;
    for len in 1..=(remaining / 2) {
        if s[lo] == 0 {
            break; // every front block would carry a leading zero
        }
        if s[hi - len] == 0 {
            continue; // paired back block would carry a leading zero
        }
        if s[lo..lo + len] == s[hi - len..hi] && gsp_rec(s, lo + len, hi - len, pairs + 1) {
            return true;
        }
    }
    false
}

/// Wrong-number iteration: seed with the digits of `n` (k >= 2 digits), each
/// subsequent term the product of the previous k terms; true iff the
/// sequence ever hits `n`. A term above `n` ends the search, as does a zero
/// (the window then stays zero forever).
pub fn wrong_number_check(n: &Natural) -> Result<bool> {
    if *n < BigUint::from(10u8) {
        return Err(Error::Domain("wrong-number test needs at least two digits"));
    }
    let digits = n.to_radix_be(10);
    let _k = digits.len();
    let mut window: Vec<Natural> = digits.iter().map(|&d| BigUint::from(d)).collect();
    if window.contains(n) {
        return Ok(true);
    }
    loop {
        let next: Natural = window.iter().fold(BigUint::one(), |acc, t| acc * t);
        if next == *n {
            return Ok(true);
        }
        if next.is_zero() || next > *n {
            return Ok(false);
        }
        // A window of all-ones never grows.
        window.remove(0);
        window.push(next);
        if window.iter().all(|t| t.is_one()) {
            return Ok(false);
        }
    }
}
