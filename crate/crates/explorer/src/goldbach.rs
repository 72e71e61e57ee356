//! Two- and three-summand odd-prime tables and the derived scalar rows.

use crate::{ExploreError, Result};
use arith_functions::PrimeTable;

/// Largest even number such that every even number from 6 up to it is a sum
/// of two of the first n odd primes.
pub fn goldbach_t(table: &PrimeTable, n: usize) -> Result<u64> {
    if n < 1 {
        return Err(ExploreError::Domain("table rows are 1-indexed"));
    }
    let primes: Vec<u64> = (1..=n).map(|i| table.nth_odd(i)).collect();
    let sums: std::collections::BTreeSet<u64> = primes
        .iter()
        .flat_map(|&p| primes.iter().map(move |&q| p + q))
        .collect();
    let mut t = 6;
    while sums.contains(&(t + 2)) {
        t += 2;
    }
    if !sums.contains(&6) {
        return Err(ExploreError::Domain("even base case missing"));
    }
    Ok(t)
}

/// Largest odd number such that every odd number from 9 up to it is a sum of
/// three of the first n odd primes.
pub fn vinogradov_v(table: &PrimeTable, n: usize) -> Result<u64> {
    if n < 1 {
        return Err(ExploreError::Domain("table rows are 1-indexed"));
    }
    let primes: Vec<u64> = (1..=n).map(|i| table.nth_odd(i)).collect();
    let mut sums = std::collections::BTreeSet::new();
    for &p in &primes {
        for &q in &primes {
            for &r in &primes {
                sums.insert(p + q + r);
            }
        }
    }
    let mut v = 9;
    while sums.contains(&(v + 2)) {
        v += 2;
    }
    if !sums.contains(&9) {
        return Err(ExploreError::Domain("odd base case missing"));
    }
    Ok(v)
}

/// Upper-triangular addition table over the first n odd primes.
pub fn pair_table(table: &PrimeTable, n: usize) -> Vec<Vec<Option<u64>>> {
    let primes: Vec<u64> = (1..=n).map(|i| table.nth_odd(i)).collect();
    primes
        .iter()
        .map(|&p| {
            primes
                .iter()
                .map(|&q| if q >= p { Some(p + q) } else { None })
                .collect()
        })
        .collect()
}

/// One plane (fixed first summand) of the three-summand table.
pub fn triple_plane_table(table: &PrimeTable, plane: u64, n: usize) -> Vec<Vec<Option<u64>>> {
    pair_table(table, n)
        .into_iter()
        .map(|row| row.into_iter().map(|c| c.map(|s| s + plane)).collect())
        .collect()
}

/// Number of combinations writing odd m as a sum of three odd primes, with
/// an ordered first summand (the plane) and an unordered remaining pair.
pub fn vinogradov_a(table: &PrimeTable, m: u64) -> Result<u64> {
    if m % 2 == 0 {
        return Err(ExploreError::Domain("counts are defined for odd numbers"));
    }
    let primes = table.up_to(m);
    let odd_primes: Vec<u64> = primes.into_iter().filter(|&p| p > 2).collect();
    let mut count = 0u64;
    for &i in &odd_primes {
        if i >= m {
            break;
        }
        let rest = m - i;
        for &j in &odd_primes {
            if 2 * j > rest {
                break;
            }
            let k = rest - j;
            if k >= j && odd_primes.binary_search(&k).is_ok() {
                count += 1;
            }
        }
    }
    Ok(count)
}
