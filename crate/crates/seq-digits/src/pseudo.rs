//! Permutation-based pseudo classifiers, the almost-prime constructions,
//! and the all-digits digital filter.

use crate::{Result, SeqError};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use numeric_core::{digit_permutations, Natural};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PseudoProperty {
    Prime,
    Square,
    Cube,
    MPower(u32),
    Factorial,
    Odd,
    Even,
    Triangular,
    MultipleOf(u64),
    DivisorOf(u64),
}

impl PseudoProperty {
    pub fn holds(&self, n: &Natural) -> bool {
        match self {
            PseudoProperty::Prime => numeric_core::is_prime(n, 40),
            PseudoProperty::Square => numeric_core::integer_root(n, 2).pow(2) == *n,
            PseudoProperty::Cube => numeric_core::integer_root(n, 3).pow(3) == *n,
            PseudoProperty::MPower(m) => numeric_core::integer_root(n, *m).pow(*m) == *n,
            PseudoProperty::Factorial => {
                let mut f = BigUint::from(1u8);
                let mut k = 1u64;
                while f < *n {
                    k += 1;
                    f *= BigUint::from(k);
                }
                f == *n
            }
            PseudoProperty::Odd => n % 2u8 == BigUint::from(1u8),
            PseudoProperty::Even => n % 2u8 == BigUint::from(0u8),
            PseudoProperty::Triangular => match n.to_u64() {
                Some(v) => {
                    let m = ((8 * v + 1) as f64).sqrt() as u64;
                    (m * (m + 1) / 2 == v) || ((m - 1) * m / 2 == v) || ((m + 1) * (m + 2) / 2 == v)
                }
                None => false,
            },
            PseudoProperty::MultipleOf(p) => (n % BigUint::from(*p)) == BigUint::from(0u8),
            PseudoProperty::DivisorOf(m) => match n.to_u64() {
                Some(v) if v >= 1 => m % v == 0,
                _ => false,
            },
        }
    }

    /// Decimal digits satisfying the digit-level form, where one exists.
    fn digit_form(&self) -> Option<&'static [u8]> {
        match self {
            PseudoProperty::Square => Some(&[0, 1, 4, 9]),
            PseudoProperty::Cube => Some(&[0, 1, 8]),
            PseudoProperty::Prime => Some(&[2, 3, 5, 7]),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PseudoFlags {
    /// Some permutation, including the identity, satisfies the property.
    pub first: bool,
    /// n itself fails the property, but some permutation satisfies it.
    pub second: bool,
    /// Some nontrivial position permutation satisfies it.
    pub third: bool,
}

/// Classify n by the behavior of its digit permutations under `p`.
pub fn pseudo_classify(p: &PseudoProperty, n: &Natural) -> PseudoFlags {
    let holds_self = p.holds(n);
    let nontrivial = digit_permutations(n, true);
    let any_nontrivial = nontrivial.iter().any(|v| p.holds(v));
    let first = holds_self || any_nontrivial;
    PseudoFlags {
        first,
        second: !holds_self && any_nontrivial,
        third: any_nontrivial,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlmostPrimeKind {
    /// Next term not divisible by any previous term.
    First,
    /// Next term coprime with every previous term.
    Second,
}

/// Greedy smallest-next construction from a1 >= 2.
pub fn almost_primes(kind: AlmostPrimeKind, a1: u64, count: usize) -> Result<Vec<u64>> {
    if a1 < 2 {
        return Err(SeqError::Domain("almost primes start at a1 >= 2"));
    }
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    let mut terms = vec![a1];
    let mut candidate = a1;
    while terms.len() < count {
        candidate += 1;
        let ok = match kind {
            AlmostPrimeKind::First => terms.iter().all(|&t| candidate % t != 0),
            AlmostPrimeKind::Second => terms.iter().all(|&t| gcd(candidate, t) == 1),
        };
        if ok {
            terms.push(candidate);
        }
    }
    Ok(terms)
}

/// n satisfies p and every decimal digit of n satisfies p's digit form.
pub fn full_digital_filter(p: &PseudoProperty, n: &Natural) -> Result<bool> {
    let allowed = p
        .digit_form()
        .ok_or(SeqError::Domain("property has no digit-level form"))?;
    if !p.holds(n) {
        return Ok(false);
    }
    let digits = if *n == BigUint::from(0u8) {
        vec![0u8]
    } else {
        n.to_radix_be(10)
    };
    Ok(digits.iter().all(|d| allowed.contains(d)))
}
