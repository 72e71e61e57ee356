//! Primality testing: deterministic Miller-Rabin below 2^64, randomized-base
//! Miller-Rabin (derived deterministically from the candidate) above it.

use crate::Natural;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

/// Rounds used by [`is_prime`] above 2^64 when the caller does not choose.
/// Error bound for a composite surviving r rounds is 4^-r.
pub const DEFAULT_ROUNDS: u32 = 40;

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for `n < 2^64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    // This base set decides primality for every n < 2^64.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Miller-Rabin for arbitrary-precision candidates.
///
/// Below 2^64 the answer is exact. Above, `rounds` bases are drawn from a
/// stream seeded by the candidate itself, so repeated calls agree; a
/// composite survives with probability at most 4^-rounds.
pub fn is_prime(n: &Natural, rounds: u32) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let two = BigUint::from(2u8);
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;

    let mut seed = n.iter_u64_digits().fold(0u64, |acc, w| acc ^ w.rotate_left(17));
    'witness: for _ in 0..rounds {
        let raw = splitmix64(&mut seed);
        let a = BigUint::from(raw % u64::MAX) % (n - &two) + &two;
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes up to and including `limit`, by sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(mut n: u64) -> u64 {
    loop {
        n += 1;
        if is_prime_u64(n) {
            return n;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn small_cases() {
        assert!(is_prime_u64(2357));
        assert!(!is_prime_u64(30031)); // 59 * 509
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(0));
        assert!(is_prime_u64(2));
    }

    #[test]
    fn agrees_with_trial_division() {
        let trial = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..20_000u64 {
            assert_eq!(is_prime_u64(n), trial(n), "disagreement at {n}");
        }
    }

    #[test]
    fn sieve_matches_miller_rabin() {
        let primes = primes_up_to(10_000);
        let from_mr: Vec<u64> = (2..=10_000).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(primes, from_mr);
    }

    #[test]
    fn big_inputs() {
        // 2^89 - 1 is a Mersenne prime.
        let m89 = (BigUint::from(1u8) << 89) - 1u8;
        assert!(is_prime(&m89, 40));
        let m89_plus_2 = &m89 + 2u8;
        assert!(!is_prime(&m89_plus_2, 40));
    }
}
