//! Folded products and sums over the index set n - k*i.

use crate::{RadixError, Result};
use num_bigint::BigInt;

/// Index-set bound for the folds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoldBound {
    /// Base form: i ranges while 0 < |n - k*i| <= n.
    Standard,
    /// Generalized product: factors bounded by |n - k*i| <= m.
    Magnitude(u64),
    /// Generalized sum: i ranges 0..=floor((n + m) / k).
    IndexCap(u64),
}

fn check(n: u64, k: u64) -> Result<()> {
    if !(k >= 1 && n > k) {
        return Err(RadixError::Domain("folds need n > k >= 1"));
    }
    Ok(())
}

/// Signed product of n - k*i over the index set.
pub fn smarandacheial(n: u64, k: u64, bound: FoldBound) -> Result<BigInt> {
    check(n, k)?;
    let terms = fold_terms(n, k, bound)?;
    let mut product = BigInt::from(1);
    for t in terms {
        if t != 0 {
            product *= BigInt::from(t);
        }
    }
    Ok(product)
}

/// Signed sum of n - k*i over the index set.
pub fn summant_signed(n: u64, k: u64, bound: FoldBound) -> Result<BigInt> {
    check(n, k)?;
    Ok(fold_terms(n, k, bound)?
        .into_iter()
        .map(BigInt::from)
        .sum())
}

/// Sum of |n - k*i| over the index set.
pub fn summant_absolute(n: u64, k: u64, bound: FoldBound) -> Result<BigInt> {
    check(n, k)?;
    Ok(fold_terms(n, k, bound)?
        .into_iter()
        .map(|t| BigInt::from(t.abs()))
        .sum())
}

fn fold_terms(n: u64, k: u64, bound: FoldBound) -> Result<Vec<i64>> {
    let n = i64::try_from(n).map_err(|_| RadixError::Domain("n too large"))?;
    let k = i64::try_from(k).map_err(|_| RadixError::Domain("k too large"))?;
    let mut out = Vec::new();
    match bound {
        FoldBound::Standard => {
            let mut i = 0i64;
            loop {
                let t = n - k * i;
                if t.abs() > n {
                    break;
                }
                if t != 0 {
                    out.push(t);
                }
                i += 1;
            }
        }
        FoldBound::Magnitude(m) => {
            let m = i64::try_from(m).map_err(|_| RadixError::Domain("bound too large"))?;
            let mut i = 0i64;
            loop {
                let t = n - k * i;
                if t < -m {
                    break;
                }
                if t != 0 && t.abs() <= m {
                    out.push(t);
                }
                i += 1;
            }
        }
        FoldBound::IndexCap(m) => {
            let m = i64::try_from(m).map_err(|_| RadixError::Domain("bound too large"))?;
            let top = (n + m) / k;
            for i in 0..=top {
                out.push(n - k * i);
            }
        }
    }
    Ok(out)
}
