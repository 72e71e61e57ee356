//! Counted self-map iteration: to a fixed point, up past a threshold, or
//! down below one.

use crate::{FnError, Result};
use numeric_core::{
    distinct_prime_count, divisor_count, divisor_sum, greatest_proper_divisor,
    largest_prime_factor, primes_up_to,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelfMap {
    /// Number of divisors d(n).
    DivisorCount,
    /// Sum of divisors sigma(n).
    DivisorSum,
    /// Greatest proper divisor.
    GreatestProperDivisor,
    /// Prime counting pi(n).
    PrimeCount,
    /// Largest prime factor.
    LargestPrimeFactor,
    /// Number of distinct prime factors omega(n).
    DistinctPrimeCount,
}

impl SelfMap {
    pub fn apply(&self, x: u64) -> u64 {
        match self {
            SelfMap::DivisorCount => divisor_count(x),
            SelfMap::DivisorSum => divisor_sum(x),
            SelfMap::GreatestProperDivisor => greatest_proper_divisor(x),
            SelfMap::PrimeCount => primes_up_to(x).len() as u64,
            SelfMap::LargestPrimeFactor => {
                if x <= 1 {
                    x
                } else {
                    largest_prime_factor(x)
                }
            }
            SelfMap::DistinctPrimeCount => distinct_prime_count(x) as u64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IterationKind {
    /// Iterate a non-increasing map until its value is a fixed point.
    FirstKind,
    /// Iterate an increasing map until the value reaches `threshold`.
    SecondKind { threshold: u64 },
    /// Iterate a decreasing map until the value drops to `threshold`.
    ThirdKind { threshold: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IterationSpec {
    pub map: SelfMap,
    pub kind: IterationKind,
}

/// Smallest iteration count satisfying the spec's stopping rule.
pub fn iterate(spec: &IterationSpec, x: u64) -> Result<u64> {
    match spec.kind {
        IterationKind::FirstKind => {
            let mut cur = x;
            let mut k = 0u64;
            loop {
                let next = spec.map.apply(cur);
                if next > cur {
                    return Err(FnError::NotMonotone(cur));
                }
                k += 1;
                if spec.map.apply(next) == next {
                    return Ok(k);
                }
                cur = next;
            }
        }
        IterationKind::SecondKind { threshold } => {
            if threshold <= x {
                return Err(FnError::Domain("threshold must exceed the start"));
            }
            let mut cur = x;
            let mut k = 0u64;
            loop {
                let next = spec.map.apply(cur);
                if next <= cur {
                    return Err(FnError::NotMonotone(cur));
                }
                k += 1;
                if next >= threshold {
                    return Ok(k);
                }
                cur = next;
            }
        }
        IterationKind::ThirdKind { threshold } => {
            if threshold >= x {
                return Err(FnError::Domain("threshold must be below the start"));
            }
            let mut cur = x;
            let mut k = 0u64;
            loop {
                let next = spec.map.apply(cur);
                if next >= cur {
                    return Err(FnError::NotMonotone(cur));
                }
                k += 1;
                if next <= threshold {
                    return Ok(k);
                }
                cur = next;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_kind_divisor_count() {
        // d(d(d(6))) = d(d(4)) = d(3) = 2, a fixed point: three steps.
        let spec = IterationSpec {
            map: SelfMap::DivisorCount,
            kind: IterationKind::FirstKind,
        };
        assert_eq!(iterate(&spec, 6).unwrap(), 3);
        assert_eq!(iterate(&spec, 5).unwrap(), 1);
    }

    #[test]
    fn second_kind_divisor_sum() {
        // sigma(sigma(sigma(4))) = sigma(sigma(7)) = sigma(8) = 15 >= 11.
        let spec = IterationSpec {
            map: SelfMap::DivisorSum,
            kind: IterationKind::SecondKind { threshold: 11 },
        };
        assert_eq!(iterate(&spec, 4).unwrap(), 3);
    }

    #[test]
    fn third_kind_greatest_proper_divisor() {
        // gd chain 60 -> 30 -> 15 -> 5 -> 1 <= 3: four steps.
        let spec = IterationSpec {
            map: SelfMap::GreatestProperDivisor,
            kind: IterationKind::ThirdKind { threshold: 3 },
        };
        assert_eq!(iterate(&spec, 60).unwrap(), 4);
    }

    #[test]
    fn monotonicity_violations_are_reported() {
        // DivisorSum grows, so FirstKind must refuse it at some point.
        let spec = IterationSpec {
            map: SelfMap::DivisorSum,
            kind: IterationKind::FirstKind,
        };
        assert!(matches!(iterate(&spec, 4), Err(FnError::NotMonotone(_))));
        // DivisorCount shrinks, so SecondKind must refuse it.
        let spec = IterationSpec {
            map: SelfMap::DivisorCount,
            kind: IterationKind::SecondKind { threshold: 100 },
        };
        assert!(matches!(iterate(&spec, 50), Err(FnError::NotMonotone(_))));
    }
}
