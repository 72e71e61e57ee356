//! Running products plus one, and partial products of reciprocal series.

use crate::{ExploreError, Result};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use numeric_core::Natural;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductKind {
    Prime,
    Square,
    Cubic,
    Factorial,
    Custom(Vec<u64>),
}

impl ProductKind {
    fn nth(&self, k: u64) -> Result<Natural> {
        Ok(match self {
            ProductKind::Prime => {
                let mut p = 2u64;
                for _ in 1..k {
                    p = numeric_core::next_prime(p);
                }
                BigUint::from(p)
            }
            ProductKind::Square => BigUint::from(k * k),
            ProductKind::Cubic => BigUint::from(k * k * k),
            ProductKind::Factorial => (1..=k).fold(BigUint::one(), |a, i| a * i),
            ProductKind::Custom(v) => BigUint::from(
                *v.get((k - 1) as usize)
                    .ok_or(ExploreError::Domain("custom series exhausted"))?,
            ),
        })
    }
}

/// 1 + u1 u2 ... un, with a primality flag on the result.
pub fn product_sequence(kind: &ProductKind, n: u64) -> Result<(Natural, bool)> {
    if n < 1 {
        return Err(ExploreError::Domain("product terms are 1-indexed"));
    }
    let mut product = BigUint::one();
    for k in 1..=n {
        product *= kind.nth(k)?;
    }
    let value = product + BigUint::one();
    let prime = numeric_core::is_prime(&value, 40);
    Ok((value, prime))
}

/// Series available to the reciprocal partial product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductSeries {
    /// Divisor products P_d(n).
    DivisorProducts,
    /// Constant 1.
    Ones,
    /// 2^n.
    PowersOfTwo,
    /// S(n): least m with n | m!.
    FactorialThreshold,
}

impl ProductSeries {
    fn nth(&self, n: u64) -> Natural {
        match self {
            ProductSeries::DivisorProducts => {
                let mut p = BigUint::one();
                for d in numeric_core::divisors(n.max(1)) {
                    p *= BigUint::from(d);
                }
                p
            }
            ProductSeries::Ones => BigUint::one(),
            ProductSeries::PowersOfTwo => BigUint::from(2u8).pow(n as u32),
            ProductSeries::FactorialThreshold => {
                BigUint::from(arith_functions::smarandache_s(n.max(1)))
            }
        }
    }
}

/// Exact partial product of 1/a(n) for n = 1..=limit, plus the magnitude of
/// the last reciprocal as a convergence indicator. No limit value is
/// asserted.
pub fn infinite_product_partial(series: &ProductSeries, limit: u64) -> Result<(BigRational, f64)> {
    if limit < 1 {
        return Err(ExploreError::Domain("partial products are 1-indexed"));
    }
    let mut acc = BigRational::one();
    let mut last = 1.0f64;
    for n in 1..=limit {
        let term = series.nth(n);
        if term.is_zero() {
            return Err(ExploreError::Domain("series term is zero"));
        }
        let recip = BigRational::new(BigUint::one().into(), term.clone().into());
        last = 1.0
            / term
                .to_string()
                .parse::<f64>()
                .unwrap_or(f64::INFINITY);
        acc *= recip;
    }
    Ok((acc, last))
}

#[cfg(test)]
mod tests {
    use super::*;
    use numeric_core::digits::{nat, nat_str};

    #[test]
    fn prime_products() {
        let (v, prime) = product_sequence(&ProductKind::Prime, 4).unwrap();
        assert_eq!(v, nat(211));
        assert!(prime);
        // Published prefix: 2, 7, 31, 211, 2311, 30031, ...
        let prefix: Vec<Natural> = (1..=6)
            .map(|n| product_sequence(&ProductKind::Prime, n).unwrap().0)
            .collect();
        assert_eq!(
            prefix,
            vec![nat(3), nat(7), nat(31), nat(211), nat(2311), nat(30031)]
        );
    }

    #[test]
    fn square_and_factorial_products() {
        let (v, _) = product_sequence(&ProductKind::Square, 5).unwrap();
        assert_eq!(v, nat(14401));
        let (v, prime) = product_sequence(&ProductKind::Factorial, 4).unwrap();
        assert_eq!(v, nat(289));
        assert!(!prime); // 17^2
        let (v, _) = product_sequence(&ProductKind::Cubic, 4).unwrap();
        assert_eq!(v, nat(13825));
        let (v, _) = product_sequence(&ProductKind::Cubic, 8).unwrap();
        assert_eq!(v, nat_str("65548320768001"));
    }

    #[test]
    fn reciprocal_partials() {
        let (v, _) = infinite_product_partial(&ProductSeries::DivisorProducts, 3).unwrap();
        assert_eq!(v, BigRational::new(1.into(), 6.into()));
        let (v, _) = infinite_product_partial(&ProductSeries::Ones, 17).unwrap();
        assert_eq!(v, BigRational::one());
        let (v, _) = infinite_product_partial(&ProductSeries::PowersOfTwo, 10).unwrap();
        assert_eq!(
            v,
            BigRational::new(1.into(), BigUint::from(2u8).pow(55).into())
        );
    }
}
