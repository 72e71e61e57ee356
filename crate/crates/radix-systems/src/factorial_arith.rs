//! Addition and subtraction directly on factorial-base numerals: position i
//! (least significant = 0) carries and borrows at radix i + 2.

use crate::base::{GeneralizedBase, RadixNumeral};
use crate::{RadixError, Result};

fn check_factorial(x: &RadixNumeral) -> Result<()> {
    if x.base != GeneralizedBase::Factorials {
        return Err(RadixError::Domain("operands must be factorial-base numerals"));
    }
    for (i, &d) in x.digits.iter().enumerate() {
        let bound = (i + 1) as u64;
        if d > bound {
            return Err(RadixError::DigitBound {
                position: i,
                digit: d,
                bound,
            });
        }
    }
    Ok(())
}

pub fn factorial_add(x: &RadixNumeral, y: &RadixNumeral) -> Result<RadixNumeral> {
    check_factorial(x)?;
    check_factorial(y)?;
    let len = x.digits.len().max(y.digits.len()) + 1;
    let mut digits = vec![0u64; len];
    let mut carry = 0u64;
    for i in 0..len {
        let radix = (i + 2) as u64;
        let sum = x.digits.get(i).copied().unwrap_or(0)
            + y.digits.get(i).copied().unwrap_or(0)
            + carry;
        digits[i] = sum % radix;
        carry = sum / radix;
    }
    debug_assert_eq!(carry, 0);
    while digits.len() > 1 && *digits.last().unwrap() == 0 {
        digits.pop();
    }
    Ok(RadixNumeral {
        base: GeneralizedBase::Factorials,
        digits,
    })
}

pub fn factorial_sub(x: &RadixNumeral, y: &RadixNumeral) -> Result<RadixNumeral> {
    check_factorial(x)?;
    check_factorial(y)?;
    let len = x.digits.len().max(y.digits.len());
    let mut digits = vec![0u64; len];
    let mut borrow = 0i64;
    for i in 0..len {
        let radix = (i + 2) as i64;
        let mut d = x.digits.get(i).copied().unwrap_or(0) as i64
            - y.digits.get(i).copied().unwrap_or(0) as i64
            - borrow;
        if d < 0 {
            d += radix;
            borrow = 1;
        } else {
            borrow = 0;
        }
        digits[i] = d as u64;
    }
    if borrow != 0 {
        return Err(RadixError::Negative);
    }
    while digits.len() > 1 && *digits.last().unwrap() == 0 {
        digits.pop();
    }
    Ok(RadixNumeral {
        base: GeneralizedBase::Factorials,
        digits,
    })
}
