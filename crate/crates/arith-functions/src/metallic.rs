//! Metallic means: positive roots of x^2 - nx - 1 and x^2 - x - n, with
//! continued-fraction convergents from exact quadratic-surd arithmetic.

use crate::{FnError, Result};
use num_bigint::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetallicForm {
    /// x^2 - nx - 1 = 0; continued fraction [n; n, n, ...].
    MinusNxMinus1,
    /// x^2 - x - n = 0.
    MinusXMinusN,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetallicMean {
    pub root: f64,
    /// Continued-fraction convergents (numerator, denominator).
    pub convergents: Vec<(BigInt, BigInt)>,
    /// Continued-fraction terms used.
    pub cf_terms: Vec<u64>,
}

/// Positive root plus the first `count` continued-fraction convergents.
pub fn metallic_mean(n: u64, form: MetallicForm, count: usize) -> Result<MetallicMean> {
    if n < 1 {
        return Err(FnError::Domain("metallic means start at n = 1"));
    }
    let (root, disc, p0, q0) = match form {
        // (n + sqrt(n^2+4)) / 2
        MetallicForm::MinusNxMinus1 => {
            let d = n * n + 4;
            ((n as f64 + (d as f64).sqrt()) / 2.0, d, n as i64, 2u64)
        }
        // (1 + sqrt(1+4n)) / 2
        MetallicForm::MinusXMinusN => {
            let d = 1 + 4 * n;
            ((1.0 + (d as f64).sqrt()) / 2.0, d, 1i64, 2u64)
        }
    };
    let cf_terms = surd_cf_terms(p0, q0, disc, count);
    let mut convergents = Vec::with_capacity(cf_terms.len());
    let mut p_prev = BigInt::from(0);
    let mut p = BigInt::from(1);
    let mut q_prev = BigInt::from(1);
    let mut q = BigInt::from(0);
    for &a in &cf_terms {
        let pn = BigInt::from(a) * &p + &p_prev;
        let qn = BigInt::from(a) * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, pn);
        q_prev = std::mem::replace(&mut q, qn);
        convergents.push((p.clone(), q.clone()));
    }
    Ok(MetallicMean {
        root,
        convergents,
        cf_terms,
    })
}

/// Continued fraction terms of (p + sqrt(d)) / q, exactly.
/// Requires q | (d - p^2), which both metallic forms satisfy.
fn surd_cf_terms(p0: i64, q0: u64, d: u64, count: usize) -> Vec<u64> {
    let mut terms = Vec::with_capacity(count);
    if count == 0 {
        return terms;
    }
    let sqrt_d = (d as f64).sqrt();
    let mut p = p0 as i128;
    let mut q = q0 as i128;
    let d = d as i128;
    // Perfect-square discriminant: the root is rational, finite expansion.
    let isqrt = (sqrt_d.round()) as i128;
    if isqrt * isqrt == d {
        let mut num = p + isqrt;
        let mut den = q;
        while terms.len() < count && den != 0 {
            let a = num.div_euclid(den);
            terms.push(a as u64);
            let rem = num - a * den;
            if rem == 0 {
                break;
            }
            num = den;
            den = rem;
        }
        return terms;
    }
    for _ in 0..count {
        let a = (((p as f64) + sqrt_d) / (q as f64)).floor() as i128;
        terms.push(a as u64);
        p = a * q - p;
        q = (d - p * p) / q;
    }
    terms
}
