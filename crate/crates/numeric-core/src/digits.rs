//! Positional digit representations and digit-level queries.

use crate::{Error, Natural, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Digit expansion of a natural number in a fixed base, most significant
/// digit first. The single digit `0` is the expansion of zero; otherwise the
/// leading digit is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    base: u32,
    digits: Vec<u8>,
}

impl DigitString {
    pub fn new(base: u32, digits: Vec<u8>) -> Result<Self> {
        if base < 2 {
            return Err(Error::BadBase(base));
        }
        if digits.is_empty() {
            return Err(Error::Domain("digit string must hold at least one digit"));
        }
        if digits.iter().any(|&d| u32::from(d) >= base) {
            return Err(Error::Domain("digit out of range for base"));
        }
        if digits.len() > 1 && digits[0] == 0 {
            return Err(Error::Domain("leading zero in digit string"));
        }
        Ok(DigitString { base, digits })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl std::fmt::Display for DigitString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &d in &self.digits {
            if self.base <= 10 {
                write!(f, "{d}")?;
            } else {
                write!(f, "[{d}]")?;
            }
        }
        Ok(())
    }
}

/// Positional expansion of `n` in `base`, most significant digit first.
pub fn digits_of(n: &Natural, base: u32) -> Result<DigitString> {
    if base < 2 {
        return Err(Error::BadBase(base));
    }
    if n.is_zero() {
        return DigitString::new(base, vec![0]);
    }
    let mut digits = n.to_radix_be(base);
    // to_radix_be never emits leading zeros for nonzero input
    debug_assert!(digits[0] != 0);
    if digits.is_empty() {
        digits.push(0);
    }
    DigitString::new(base, digits)
}

/// Inverse of [`digits_of`].
pub fn value_of(ds: &DigitString) -> Natural {
    BigUint::from_radix_be(ds.digits(), ds.base()).expect("digits validated on construction")
}

/// Number of digits of `n` in `base`; zero counts as one digit.
pub fn digit_count(n: &Natural, base: u32) -> usize {
    if n.is_zero() {
        1
    } else {
        n.to_radix_be(base).len()
    }
}

/// Decimal juxtaposition of `a` then `b`.
pub fn concat(a: &Natural, b: &Natural) -> Natural {
    concat_in_base(a, b, 10)
}

/// Juxtaposition of the base-`base` digit strings of `a` then `b`.
pub fn concat_in_base(a: &Natural, b: &Natural, base: u32) -> Natural {
    let width = digit_count(b, base);
    let mut shifted = a.clone();
    let big_base = BigUint::from(base);
    for _ in 0..width {
        shifted *= &big_base;
    }
    shifted + b
}

/// Multiplicity of the decimal digit `a` in `b`.
pub fn counter(a: u8, b: &Natural) -> usize {
    assert!(a < 10, "counter takes a decimal digit");
    if b.is_zero() {
        return usize::from(a == 0);
    }
    b.to_radix_be(10).iter().filter(|&&d| d == a).count()
}

/// Largest `i` such that `k` is the 10^i-th digit of `n`, or -1 when absent.
pub fn digit_position(n: &Natural, k: u8) -> i64 {
    assert!(k < 10, "digit_position takes a decimal digit");
    let ds = if n.is_zero() {
        vec![0]
    } else {
        n.to_radix_be(10)
    };
    let len = ds.len();
    for (i, &d) in ds.iter().enumerate() {
        if d == k {
            // most significant first: power = len - 1 - i
            return (len - 1 - i) as i64;
        }
    }
    -1
}

/// Distinct decimal digits of `n`, the number of maximal prefix groups that
/// each contain every distinct digit, and the count of distinct digits.
pub fn generalized_period(n: &Natural) -> (Vec<u8>, usize, usize) {
    let ds = if n.is_zero() {
        vec![0]
    } else {
        n.to_radix_be(10)
    };
    let mut present = [false; 10];
    for &d in &ds {
        present[d as usize] = true;
    }
    let set: Vec<u8> = (0..10u8).filter(|&d| present[d as usize]).collect();
    let needed = set.len();

    // Greedy scan: close a group as soon as it has seen every distinct digit.
    let mut groups = 0usize;
    let mut seen = [false; 10];
    let mut seen_count = 0usize;
    for &d in &ds {
        if !seen[d as usize] {
            seen[d as usize] = true;
            seen_count += 1;
        }
        if seen_count == needed {
            groups += 1;
            seen = [false; 10];
            seen_count = 0;
        }
    }
    (set, groups, needed)
}

/// Decimal reverse of `n` (leading zeros of the reverse vanish numerically).
pub fn reverse_number(n: &Natural) -> Natural {
    if n.is_zero() {
        return BigUint::zero();
    }
    let mut ds = n.to_radix_be(10);
    ds.reverse();
    while ds.len() > 1 && ds[0] == 0 {
        ds.remove(0);
    }
    BigUint::from_radix_be(&ds, 10).unwrap()
}

/// Whether the decimal expansion of `n` reads the same in both directions.
pub fn is_palindrome(n: &Natural) -> bool {
    let ds = if n.is_zero() {
        vec![0]
    } else {
        n.to_radix_be(10)
    };
    ds.iter().eq(ds.iter().rev())
}

/// Convenience: `n` as a `Natural` from a primitive.
pub fn nat(n: u64) -> Natural {
    BigUint::from(n)
}

/// Parse a decimal literal into a `Natural`; panics on malformed input.
pub fn nat_str(s: &str) -> Natural {
    s.parse().expect("valid decimal literal")
}

/// Digit sum of `n` in base 10.
pub fn digit_sum(n: &Natural) -> u64 {
    if n.is_zero() {
        return 0;
    }
    n.to_radix_be(10).iter().map(|&d| u64::from(d)).sum()
}

/// Digit product of `n` in base 10.
pub fn digit_product(n: &Natural) -> Natural {
    if n.is_zero() {
        return BigUint::zero();
    }
    let mut p = BigUint::one();
    for d in n.to_radix_be(10) {
        p *= BigUint::from(d);
    }
    p
}
