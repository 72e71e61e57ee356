//! Checkable congruence and inequality statements.

use crate::{FnError, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use numeric_core::euler_phi;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// a^(phi(b)+1) + b^(phi(a)+1) ≡ a + b (mod ab) for coprime a, b.
pub fn coprime_criterion(a: u64, b: u64) -> Result<bool> {
    if a == 0 || b == 0 {
        return Err(FnError::Domain("criterion needs strictly positive inputs"));
    }
    if gcd(a, b) != 1 {
        return Err(FnError::Domain("criterion applies to coprime pairs only"));
    }
    let modulus = BigUint::from(a) * BigUint::from(b);
    let lhs = (BigUint::from(a).modpow(&BigUint::from(euler_phi(b) + 1), &modulus)
        + BigUint::from(b).modpow(&BigUint::from(euler_phi(a) + 1), &modulus))
        % &modulus;
    let rhs = (BigUint::from(a) + BigUint::from(b)) % &modulus;
    Ok(lhs == rhs)
}

/// Outcome of the totient-generalization splitting run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerSplit {
    pub m_s: u64,
    pub s: u64,
    pub verified: bool,
}

/// Split m by repeatedly dividing out the part not coprime to a, then check
/// a^(phi(m_s)+s) ≡ a^s (mod m).
pub fn generalized_euler(a: u64, m: u64) -> Result<EulerSplit> {
    if m == 0 {
        return Err(FnError::Domain("modulus must be nonzero"));
    }
    if a == 0 {
        return Err(FnError::Domain("base must be nonzero"));
    }
    let mut d = gcd(a, m);
    let mut m_cur = m / d;
    let mut s = 0u64;
    while d != 1 {
        s += 1;
        d = gcd(d, m_cur);
        m_cur /= d;
    }
    let modulus = BigUint::from(m);
    let lhs = BigUint::from(a).modpow(&BigUint::from(euler_phi(m_cur) + s), &modulus);
    let rhs = BigUint::from(a).modpow(&BigUint::from(s), &modulus);
    Ok(EulerSplit {
        m_s: m_cur,
        s,
        verified: lhs == rhs,
    })
}

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// n! > k^(n-k+1) * prod over i of floor((n-i)/k)!, quotients floored.
pub fn inequality_check(n: u64, k: u64) -> Result<bool> {
    if n == 0 || k == 0 {
        return Err(FnError::Domain("inequality takes non-null n and k"));
    }
    let lhs = factorial(n);
    let mut rhs = BigUint::from(k).pow(
        u32::try_from(n.saturating_sub(k) + 1).map_err(|_| FnError::Domain("exponent too large"))?,
    );
    for i in 0..k {
        rhs *= factorial((n - i.min(n)) / k);
    }
    Ok(lhs > rhs)
}

/// m divides (a^m - a)(m-1)! for m > 0.
pub fn divisibility_check(a: u64, m: u64) -> Result<bool> {
    if m == 0 {
        return Err(FnError::Domain("divisibility check needs m > 0"));
    }
    let am = BigUint::from(a).pow(
        u32::try_from(m).map_err(|_| FnError::Domain("modulus too large for exponent"))?,
    );
    let value = (am - BigUint::from(a)) * factorial(m - 1);
    Ok((value % BigUint::from(m)).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criterion_examples() {
        assert!(coprime_criterion(2, 3).unwrap());
        assert!(coprime_criterion(4, 9).unwrap());
        assert!(coprime_criterion(2, 4).is_err());
    }

    #[test]
    fn criterion_holds_for_all_small_coprime_pairs() {
        for a in 1..=60u64 {
            for b in 1..=60u64 {
                if gcd(a, b) == 1 {
                    assert!(coprime_criterion(a, b).unwrap(), "fails at ({a}, {b})");
                }
            }
        }
    }

    #[test]
    fn euler_split_example() {
        let r = generalized_euler(2, 12).unwrap();
        assert_eq!(r.m_s, 3);
        assert_eq!(r.s, 2);
        assert!(r.verified);
    }

    #[test]
    fn euler_split_verifies_on_grid() {
        for a in 2..=20u64 {
            for m in 2..=50u64 {
                let r = generalized_euler(a, m).unwrap();
                assert!(r.verified, "congruence fails at ({a}, {m})");
            }
        }
    }

    #[test]
    fn divisibility_examples() {
        assert!(divisibility_check(2, 4).unwrap());
        assert!(divisibility_check(3, 6).unwrap());
        for a in 0..=30u64 {
            for m in 1..=30u64 {
                assert!(divisibility_check(a, m).unwrap(), "fails at ({a}, {m})");
            }
        }
    }

    #[test]
    fn inequality_example() {
        assert!(inequality_check(7, 2).unwrap());
        // The k = 2 display for a few odd n.
        for n in [5u64, 7, 9, 11, 21] {
            assert!(inequality_check(n, 2).unwrap(), "n = {n}");
        }
    }
}
