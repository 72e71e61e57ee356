//! Indicator functions, the factorial-threshold analogue, the largest-prime
//! coincidence set, AP-free subset cardinality, and the max-multiplicativity
//! checker.

use crate::smarandache::smarandache_s;
use crate::{FnError, Result};
use numeric_core::{is_prime_u64, largest_prime_factor};

/// 0 if n is prime, 1 otherwise.
pub fn anti_prime(n: u64) -> u8 {
    u8::from(!is_prime_u64(n))
}

/// 0 if the k values are pairwise-setwise coprime (gcd of all = 1 pairwise),
/// 1 otherwise.
pub fn anti_coprime(values: &[u64], k: usize) -> Result<u8> {
    if values.len() != k || k < 2 {
        return Err(FnError::Domain("anti_coprime takes exactly k >= 2 values"));
    }
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if gcd(values[i], values[j]) != 1 {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

/// Smallest m >= 1 with n <= m!.
pub fn analogue_a(n: u64) -> u64 {
    assert!(n >= 1);
    let mut m = 1u64;
    let mut fact = 1u128;
    while fact < u128::from(n) {
        m += 1;
        fact *= u128::from(m);
    }
    m
}

/// Whether the largest prime factor of n equals S(n).
pub fn erdos_smarandache_test(n: u64) -> Result<bool> {
    if n < 2 {
        return Err(FnError::Domain("test needs n >= 2"));
    }
    Ok(largest_prime_factor(n) == smarandache_s(n))
}

/// Maximum size of a subset of 1..=n with no m-term arithmetic progression,
/// by depth-first search with a feasibility cap on n.
pub fn cardinality_s(n: u64, m: u64) -> Result<u64> {
    if n < 1 || m < 3 {
        return Err(FnError::Domain("cardinality needs n >= 1, m >= 3"));
    }
    if n > 34 {
        return Err(FnError::Domain(
            "cardinality search capped at n = 34 (exponential beyond)",
        ));
    }
    let n = n as usize;
    let m = m as usize;
    let mut chosen: Vec<usize> = Vec::new();
    let mut best = 0usize;

    fn extends_ap(chosen: &[usize], cand: usize, m: usize) -> bool {
        // Would adding cand complete an m-term AP inside chosen + cand?
        // Check every difference d: the AP must end at cand.
        for &prev in chosen {
            let d = cand - prev;
            if d == 0 {
                continue;
            }
            let mut run = 2usize;
            let mut back = prev;
            while run < m {
                if back < d || !chosen.contains(&(back - d)) {
                    break;
                }
                back -= d;
                run += 1;
            }
            if run >= m {
                return true;
            }
        }
        false
    }

    fn dfs(next: usize, n: usize, m: usize, chosen: &mut Vec<usize>, best: &mut usize) {
        if next > n {
            *best = (*best).max(chosen.len());
            return;
        }
        if chosen.len() + (n - next + 1) <= *best {
            return; // cannot beat the best even taking everything
        }
        if !extends_ap(chosen, next, m) {
            chosen.push(next);
            dfs(next + 1, n, m, chosen, best);
            chosen.pop();
        }
        dfs(next + 1, n, m, chosen, best);
    }

    dfs(1, n, m, &mut chosen, &mut best);
    Ok(best as u64)
}

/// All coprime pairs (a, b) with a*b <= values.len() where
/// f(ab) != max(f(a), f(b)); empty means max-multiplicative on the range.
/// `values[i]` holds f(i+1).
pub fn s_multiplicative_check(values: &[u64]) -> Vec<(u64, u64)> {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    let n = values.len() as u64;
    let f = |x: u64| values[(x - 1) as usize];
    let mut violations = Vec::new();
    for a in 1..=n {
        for b in a..=n {
            let ab = match a.checked_mul(b) {
                Some(p) if p <= n => p,
                _ => continue,
            };
            if gcd(a, b) == 1 && f(ab) != f(a).max(f(b)) {
                violations.push((a, b));
            }
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smarandache::s_table;

    #[test]
    fn indicator_functions() {
        assert_eq!(anti_prime(7), 0);
        assert_eq!(anti_prime(4), 1);
        assert_eq!(anti_prime(0), 1);
        assert_eq!(anti_prime(1), 1);
        assert_eq!(anti_coprime(&[4, 9], 2).unwrap(), 0);
        assert_eq!(anti_coprime(&[4, 6], 2).unwrap(), 1);
        assert!(anti_coprime(&[4], 1).is_err());
    }

    #[test]
    fn analogue_examples() {
        assert_eq!(analogue_a(1), 1);
        assert_eq!(analogue_a(2), 2);
        assert_eq!(analogue_a(25), 5);
        let prefix: Vec<u64> = (1..=25).map(analogue_a).collect();
        assert_eq!(
            prefix,
            vec![1, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 5]
        );
    }

    #[test]
    fn largest_prime_coincidence() {
        assert!(erdos_smarandache_test(6).unwrap());
        assert!(!erdos_smarandache_test(8).unwrap());
        let members: Vec<u64> = (2..=35)
            .filter(|&n| erdos_smarandache_test(n).unwrap())
            .collect();
        assert_eq!(
            members,
            vec![
                2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 20, 21, 22, 23, 26, 28, 29, 30, 31,
                33, 34, 35
            ]
        );
    }

    #[test]
    fn cardinality_examples() {
        assert_eq!(cardinality_s(2, 3).unwrap(), 2);
        assert_eq!(cardinality_s(4, 3).unwrap(), 3);
        assert_eq!(cardinality_s(5, 3).unwrap(), 4);
        // Classical values of the 3-AP-free maximum for n = 1..14.
        let expected = [1u64, 2, 2, 3, 4, 4, 4, 4, 5, 5, 6, 6, 7, 8];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(cardinality_s((i + 1) as u64, 3).unwrap(), e, "n={}", i + 1);
        }
        assert!(cardinality_s(100, 3).is_err());
    }

    #[test]
    fn s_is_max_multiplicative() {
        let mut table = s_table(10_000);
        table.remove(0); // drop index 0 so values[i] = S(i+1)
        assert!(s_multiplicative_check(&table).is_empty());
    }

    #[test]
    fn identity_is_not_max_multiplicative() {
        let values: Vec<u64> = (1..=20).collect();
        let v = s_multiplicative_check(&values);
        assert!(v.contains(&(2, 3)));
    }

    #[test]
    fn constant_one_is_max_multiplicative() {
        let values = vec![1u64; 50];
        assert!(s_multiplicative_check(&values).is_empty());
    }
}
