//! Windowed relationships over S(n), and the consecutive-value searches.

use crate::{ExploreError, Result};
use arith_functions::smarandache::s_table;
use numeric_core::is_prime_u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationLaw {
    Add,
    Sub,
    Mul,
}

/// All window starts s in `range` with
/// f(s) o ... o f(s+p-1) = f(s+p) o ... o f(s+p+q-1), f = S.
pub fn relationship_search(
    p: usize,
    q: usize,
    law: RelationLaw,
    range: std::ops::RangeInclusive<u64>,
) -> Result<Vec<u64>> {
    if p < 1 || q < 1 {
        return Err(ExploreError::Domain("window sizes must be positive"));
    }
    let hi = *range.end() + (p + q) as u64;
    let table = s_table(hi);
    let f = |x: u64| table[x as usize] as i128;
    let combine = |vals: &mut dyn Iterator<Item = i128>| -> i128 {
        match law {
            RelationLaw::Add => vals.sum(),
            RelationLaw::Sub => {
                let first = vals.next().unwrap();
                vals.fold(first, |acc, v| acc - v)
            }
            RelationLaw::Mul => vals.product(),
        }
    };
    let mut hits = Vec::new();
    for s in range {
        let left = combine(&mut (s..s + p as u64).map(f));
        let right = combine(&mut (s + p as u64..s + (p + q) as u64).map(f));
        if left == right {
            hits.push(s);
        }
    }
    Ok(hits)
}

/// n with S(n) = S(n-1) + S(n-2), scanning from n = 4.
///
/// With S(1) = 1 the window at n = 3 reads 3 = 2 + 1 and qualifies
/// vacuously; the published search used the S(1) = 0 convention for the
/// seed term, so the scan starts past that window.
pub fn triplet_search(limit: u64) -> Result<Vec<u64>> {
    if limit < 4 {
        return Err(ExploreError::Domain("triplet scan starts at n = 4"));
    }
    let table = s_table(limit);
    Ok((4..=limit)
        .filter(|&n| {
            table[n as usize] == table[(n - 1) as usize] + table[(n - 2) as usize]
        })
        .collect())
}

/// n such that no prime lies in the closed interval between S(n) and
/// S(n+1).
pub fn duplet_search(limit: u64) -> Result<Vec<u64>> {
    if limit < 1 {
        return Err(ExploreError::Domain("duplets start at n = 1"));
    }
    let table = s_table(limit + 1);
    Ok((1..=limit)
        .filter(|&n| {
            let a = table[n as usize];
            let b = table[(n + 1) as usize];
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            !(lo..=hi).any(is_prime_u64)
        })
        .collect())
}
