//! Digit-count sequences over a source stream, and subsequences writable
//! with exactly a prescribed digit set.

use crate::{Result, SeqError};
use num_bigint::BigUint;
use numeric_core::{counter, Natural};

/// Sources for digit-count sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DigitCountSource {
    Primes,
    Factorials,
    /// n^n.
    Tower,
}

impl DigitCountSource {
    fn nth(&self, n: u64) -> Natural {
        match self {
            DigitCountSource::Primes => {
                let mut p = 2u64;
                for _ in 1..n {
                    p = numeric_core::next_prime(p);
                }
                BigUint::from(p)
            }
            DigitCountSource::Factorials => (1..=n).fold(BigUint::from(1u8), |a, i| a * i),
            DigitCountSource::Tower => BigUint::from(n).pow(n as u32),
        }
    }
}

/// Count of digit d in the n-th source term.
pub fn digit_count_sequence(source: DigitCountSource, d: u8, n: u64) -> Result<usize> {
    if n < 1 {
        return Err(SeqError::Domain("digit-count sequences are 1-indexed"));
    }
    if d > 9 {
        return Err(SeqError::Domain("d must be a decimal digit"));
    }
    Ok(counter(d, &source.nth(n)))
}

/// Membership sources for the digit-set subsequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceSet {
    Naturals,
    Primes,
    MultiplesOf(u64),
    Squares,
}

impl SourceSet {
    pub fn contains(&self, n: &Natural) -> bool {
        match self {
            SourceSet::Naturals => true,
            SourceSet::Primes => numeric_core::is_prime(n, 40),
            SourceSet::MultiplesOf(k) => (n % BigUint::from(*k)) == BigUint::from(0u8),
            SourceSet::Squares => numeric_core::integer_root(n, 2).pow(2) == *n,
        }
    }
}

/// Increasing members of the source whose decimal digits use exactly the
/// given set (every digit from the set appears, none from outside it).
pub fn digit_only_subsequence(
    source: &SourceSet,
    digits: &[u8],
    count: usize,
) -> Result<Vec<Natural>> {
    if digits.is_empty() {
        return Err(SeqError::Domain("digit set must be non-empty"));
    }
    if digits.iter().any(|&d| d > 9) {
        return Err(SeqError::Domain("digit set holds decimal digits"));
    }
    let mut set: Vec<u8> = digits.to_vec();
    set.sort_unstable();
    set.dedup();
    if set == [0] {
        return Err(SeqError::Domain("zero alone cannot lead a number"));
    }

    // Enumerate candidates over the digit set in increasing order (by
    // length, then lexicographically), testing set coverage and membership.
    let mut out = Vec::with_capacity(count);
    let mut len = 1usize;
    while out.len() < count {
        let leading: Vec<u8> = set.iter().copied().filter(|&d| d != 0).collect();
        let mut level: Vec<Vec<u8>> = leading.iter().map(|&d| vec![d]).collect();
        for _ in 1..len {
            let mut next = Vec::with_capacity(level.len() * set.len());
            for prefix in &level {
                for &d in &set {
                    let mut s = prefix.clone();
                    s.push(d);
                    next.push(s);
                }
            }
            level = next;
        }
        for digits_vec in &level {
            if out.len() == count {
                break;
            }
            let uses_all = set.iter().all(|d| digits_vec.contains(d));
            if !uses_all {
                continue;
            }
            let value = BigUint::from_radix_be(digits_vec, 10).expect("digits");
            if source.contains(&value) {
                out.push(value);
            }
        }
        len += 1;
        if len > 24 {
            return Err(SeqError::Domain("digit-set search exceeded 24 digits"));
        }
    }
    Ok(out)
}
