//! Partial-digital splits: digit strings cut into contiguous groups, each
//! group satisfying a predicate, or exactly two groups tied by a function.

use crate::{Result, SeqError};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use numeric_core::Natural;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartialPredicate {
    Square,
    Cube,
    Prime,
    Lucas,
    Fibonacci,
}

impl PartialPredicate {
    fn holds(&self, v: &Natural) -> bool {
        match self {
            PartialPredicate::Square => numeric_core::integer_root(v, 2).pow(2) == *v,
            PartialPredicate::Cube => numeric_core::integer_root(v, 3).pow(3) == *v,
            PartialPredicate::Prime => numeric_core::is_prime(v, 40),
            PartialPredicate::Lucas => in_lucas(v),
            PartialPredicate::Fibonacci => in_fibonacci(v),
        }
    }
}

fn in_lucas(v: &Natural) -> bool {
    // 2, 1, 3, 4, 7, 11, ...
    let (mut a, mut b) = (BigUint::from(2u8), BigUint::from(1u8));
    loop {
        if a == *v || b == *v {
            return true;
        }
        if a > *v && b > *v {
            return false;
        }
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
}

fn in_fibonacci(v: &Natural) -> bool {
    let (mut a, mut b) = (BigUint::from(1u8), BigUint::from(1u8));
    loop {
        if a == *v {
            return true;
        }
        if a > *v {
            return false;
        }
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
}

/// Split the digits of n (n >= 10) into two or more contiguous groups, each
/// group satisfying the predicate. Multi-digit groups may not start with 0;
/// the single digit 0 is allowed as a group. Returns one witnessing
/// partition, preferring longer first groups.
pub fn partial_digital_filter(
    p: PartialPredicate,
    n: &Natural,
) -> Result<Option<Vec<Natural>>> {
    if *n < BigUint::from(10u8) {
        return Err(SeqError::Domain("partial splits need at least two digits"));
    }
    let digits = n.to_radix_be(10);
    let mut groups = Vec::new();
    if split_rec(&digits, 0, p, false, &mut groups) {
        return Ok(Some(groups));
    }
    Ok(None)
}

fn split_rec(
    digits: &[u8],
    at: usize,
    p: PartialPredicate,
    cut_made: bool,
    groups: &mut Vec<Natural>,
) -> bool {
    if at == digits.len() {
        return cut_made; // at least two groups overall
    }
    let longest = digits.len() - at;
    for len in (1..=longest).rev() {
        if at + len == digits.len() && !cut_made {
            continue; // the whole remainder as a single first group
        }
        if digits[at] == 0 && len > 1 {
            continue; // multi-digit group with a leading zero
        }
        let value = BigUint::from_radix_be(&digits[at..at + len], 10).expect("digits");
        if p.holds(&value) {
            groups.push(value);
            if split_rec(digits, at + len, p, true, groups) {
                return true;
            }
            groups.pop();
        }
    }
    false
}

/// Functions usable on the two-group split g2 = f(g1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FDigitalFunc {
    /// g2 = 2 * g1.
    Double,
    /// g2 = the g1-th lucky number.
    LuckyIndex,
    /// g2 = g1 squared.
    Square,
}

impl FDigitalFunc {
    fn apply(&self, g1: &Natural) -> Option<Natural> {
        match self {
            FDigitalFunc::Double => Some(g1 * 2u8),
            FDigitalFunc::Square => Some(g1 * g1),
            FDigitalFunc::LuckyIndex => {
                let idx = g1.to_usize()?;
                if idx == 0 {
                    return None;
                }
                let lucky = lucky_numbers(idx);
                lucky.get(idx - 1).map(|&v| BigUint::from(v))
            }
        }
    }
}

/// First `count` lucky numbers, by the standard lucky sieve.
pub fn lucky_numbers(count: usize) -> Vec<u64> {
    // Generous bound: the k-th lucky number sits near k ln k.
    let mut bound = 100.max(count * 20);
    loop {
        let mut lst: Vec<u64> = (1..=bound as u64).step_by(2).collect();
        let mut i = 1usize;
        while i < lst.len() {
            let step = lst[i] as usize;
            if step > lst.len() {
                break;
            }
            let mut keep = Vec::with_capacity(lst.len());
            for (pos, &v) in lst.iter().enumerate() {
                if (pos + 1) % step != 0 {
                    keep.push(v);
                }
            }
            lst = keep;
            i += 1;
        }
        if lst.len() >= count {
            lst.truncate(count);
            return lst;
        }
        bound *= 2;
    }
}

/// Split n (n >= 10) into exactly two groups with g2 = f(g1).
pub fn f_digital_filter(f: FDigitalFunc, n: &Natural) -> Result<Option<(Natural, Natural)>> {
    if *n < BigUint::from(10u8) {
        return Err(SeqError::Domain("two-group splits need at least two digits"));
    }
    let digits = n.to_radix_be(10);
    for cut in 1..digits.len() {
        if digits[cut] == 0 && digits.len() - cut > 1 {
            continue; // g2 with a leading zero
        }
        let g1 = BigUint::from_radix_be(&digits[..cut], 10).expect("digits");
        let g2 = BigUint::from_radix_be(&digits[cut..], 10).expect("digits");
        if f.apply(&g1) == Some(g2.clone()) {
            return Ok(Some((g1, g2)));
        }
    }
    Ok(None)
}
