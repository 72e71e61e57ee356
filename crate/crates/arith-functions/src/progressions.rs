//! Prime counts in parameterized progressions, with witnesses.

use crate::prime_table::PrimeTable;
use crate::{FnError, Result};
use num_bigint::BigUint;
use numeric_core::{is_prime, Natural};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProgressionKind {
    /// a * p_n + b over the primes, gcd(a, b) = 1.
    PrimeLinear { a: u64, b: u64 },
    /// a^n + b with a outside {-1, 0, 1} and gcd(a, b) = 1.
    Geometric { a: u64, b: u64 },
    /// n^n + 1.
    TowerPlus1,
    /// n^n - 1.
    TowerMinus1,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Count of prime terms with index 1..=limit, plus the prime terms themselves.
pub fn prime_count_in_progression(
    kind: &ProgressionKind,
    limit: usize,
    table: &PrimeTable,
) -> Result<(usize, Vec<Natural>)> {
    match kind {
        ProgressionKind::PrimeLinear { a, b } => {
            if gcd(*a, *b) != 1 {
                return Err(FnError::Domain("need gcd(a, b) = 1"));
            }
        }
        ProgressionKind::Geometric { a, b } => {
            if *a <= 1 {
                return Err(FnError::Domain("geometric progression needs a >= 2"));
            }
            if gcd(*a, *b) != 1 {
                return Err(FnError::Domain("need gcd(a, b) = 1"));
            }
        }
        _ => {}
    }
    let mut hits = Vec::new();
    for n in 1..=limit {
        let term: Natural = match kind {
            ProgressionKind::PrimeLinear { a, b } => {
                BigUint::from(*a) * BigUint::from(table.nth(n)) + BigUint::from(*b)
            }
            ProgressionKind::Geometric { a, b } => {
                BigUint::from(*a).pow(n as u32) + BigUint::from(*b)
            }
            ProgressionKind::TowerPlus1 => BigUint::from(n).pow(n as u32) + 1u8,
            ProgressionKind::TowerMinus1 => BigUint::from(n).pow(n as u32) - 1u8,
        };
        if is_prime(&term, 40) {
            hits.push(term);
        }
    }
    Ok((hits.len(), hits))
}
