//! Integer roots and perfect-power detection.

use crate::Natural;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Largest `r` with `r^m <= n`, for `m >= 2`.
pub fn integer_root(n: &Natural, m: u32) -> Natural {
    assert!(m >= 2, "integer_root takes m >= 2");
    if n.is_zero() || n.is_one() {
        return n.clone();
    }
    // Newton iteration on r -> ((m-1)r + n / r^(m-1)) / m, seeded from bit length.
    let bits = n.bits();
    let mut r = BigUint::one() << (bits / u64::from(m) + 1);
    loop {
        let rm1 = r.pow(m - 1);
        let next = ((&r * (m - 1)) + n / &rm1) / m;
        if next >= r {
            break;
        }
        r = next;
    }
    while r.pow(m) > *n {
        r -= 1u8;
    }
    r
}

/// `integer_root` over machine integers.
pub fn integer_root_u64(n: u64, m: u32) -> u64 {
    integer_root(&BigUint::from(n), m).to_u64().unwrap()
}

/// Canonical perfect-power representation `n = b^e` with `e >= 2`, if any.
///
/// The reported pair has minimal base and hence maximal exponent, so the
/// base is never itself a perfect power (64 reports as (2, 6)).
pub fn is_perfect_power(n: &Natural) -> Option<(Natural, u32)> {
    if n.is_zero() || n.is_one() {
        return None;
    }
    let bits = n.bits() as u32;
    let mut best: Option<(Natural, u32)> = None;
    for e in 2..=bits.max(2) {
        let r = integer_root(n, e);
        if r <= BigUint::one() {
            break;
        }
        if r.pow(e) == *n {
            best = Some((r, e));
        }
    }
    best
}

/// `is_perfect_power` over machine integers.
pub fn is_perfect_power_u64(n: u64) -> Option<(u64, u32)> {
    is_perfect_power(&BigUint::from(n)).map(|(b, e)| (b.to_u64().unwrap(), e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digits::nat;

    #[test]
    fn root_examples() {
        assert_eq!(integer_root_u64(8, 2), 2);
        assert_eq!(integer_root_u64(0, 3), 0);
        assert_eq!(integer_root_u64(63, 2), 7);
        assert_eq!(integer_root_u64(64, 2), 8);
    }

    #[test]
    fn square_root_repetition_counts() {
        // Each value r occurs exactly 2r+1 times among floor sqrt.
        let mut counts = std::collections::HashMap::new();
        for n in 0..=10_000u64 {
            *counts.entry(integer_root_u64(n, 2)).or_insert(0u64) += 1;
        }
        for r in 0..=99u64 {
            assert_eq!(counts[&r], 2 * r + 1, "bad multiplicity at {r}");
        }
    }

    #[test]
    fn perfect_power_examples() {
        assert_eq!(is_perfect_power_u64(64), Some((2, 6)));
        assert_eq!(is_perfect_power_u64(12), None);
        assert_eq!(is_perfect_power_u64(14916), None);
        assert_eq!(is_perfect_power_u64(8), Some((2, 3)));
        assert_eq!(is_perfect_power_u64(36), Some((6, 2)));
        assert_eq!(is_perfect_power(&nat(0)), None);
        assert_eq!(is_perfect_power(&nat(1)), None);
    }

    #[test]
    fn exhaustive_perfect_powers_small() {
        let naive = |n: u64| -> bool {
            for b in 2..=n {
                if b * b > n {
                    break;
                }
                let mut v = b * b;
                loop {
                    if v == n {
                        return true;
                    }
                    if v > n / b {
                        break;
                    }
                    v *= b;
                }
            }
            false
        };
        for n in 2..=5_000u64 {
            assert_eq!(is_perfect_power_u64(n).is_some(), naive(n), "at {n}");
        }
    }
}
