//! Bounded conjecture scans: cube-minus-square representability, the
//! two-primes-minus-one conjecture, power-sum partitions, prime expressions,
//! and the Wilson-quotient simultaneity test.

use crate::{ExploreError, Result};
use arith_functions::PrimeTable;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use numeric_core::Natural;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadNumberReport {
    /// a -> (x, y) with a = |x^3 - y^2|.
    pub witnesses: std::collections::BTreeMap<u64, (u64, u64)>,
    /// Candidates <= a_limit with no representation inside the bounds.
    pub unrepresented: Vec<u64>,
}

/// Scan |x^3 - y^2| over x <= x_limit, y <= y_limit, recording witnesses for
/// every a <= a_limit.
pub fn bad_number_scan(a_limit: u64, x_limit: u64, y_limit: u64) -> Result<BadNumberReport> {
    if a_limit < 1 || x_limit < 1 || y_limit < 1 {
        return Err(ExploreError::Domain("bounds must be positive"));
    }
    let mut witnesses = std::collections::BTreeMap::new();
    for x in 1..=x_limit {
        let x3 = match x.checked_mul(x).and_then(|v| v.checked_mul(x)) {
            Some(v) => v as i128,
            None => break,
        };
        // |x^3 - y^2| <= a_limit only near y ~ x^(3/2); walk a window.
        let y_center = (x3 as f64).sqrt() as u64;
        let lo = y_center.saturating_sub(a_limit + 2).max(1);
        let hi = (y_center + a_limit + 2).min(y_limit);
        for y in lo..=hi {
            let diff = (x3 - (y as i128) * (y as i128)).unsigned_abs() as u64;
            if diff >= 1 && diff <= a_limit {
                witnesses.entry(diff).or_insert((x, y));
            }
        }
    }
    let unrepresented = (1..=a_limit)
        .filter(|a| !witnesses.contains_key(a))
        .collect();
    Ok(BadNumberReport {
        witnesses,
        unrepresented,
    })
}

/// Count (p, q, r) with p <= q, all prime <= bound, m = p + q - r, r != q
/// (the trivial p = p + q - q solution is excluded). Witnesses capped at 16.
pub fn prime_conjecture_count(
    m: i64,
    bound: u64,
    table: &PrimeTable,
) -> Result<(u64, Vec<(u64, u64, u64)>)> {
    if m % 2 == 0 {
        return Err(ExploreError::Domain("odd targets only"));
    }
    let primes = table.up_to(bound);
    let prime_set: std::collections::BTreeSet<u64> = primes.iter().copied().collect();
    let mut count = 0u64;
    let mut witnesses = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i..] {
            let r = p as i64 + q as i64 - m;
            if r < 2 {
                continue;
            }
            let r = r as u64;
            if r <= bound && r != q && prime_set.contains(&r) {
                count += 1;
                if witnesses.len() < 16 {
                    witnesses.push((p, q, r));
                }
            }
        }
    }
    Ok((count, witnesses))
}

/// Number of multisets of positive m-th powers summing to n (m = 2 or 3).
pub fn partition_count(n: u64, m: u32) -> Result<u64> {
    if !(2..=3).contains(&m) {
        return Err(ExploreError::Domain("powers 2 and 3 are supported"));
    }
    if n < 1 {
        return Err(ExploreError::Domain("partitions of positive integers"));
    }
    let mut parts = Vec::new();
    let mut k = 1u64;
    loop {
        let p = k.pow(m);
        if p > n {
            break;
        }
        parts.push(p);
        k += 1;
    }
    // Multiset counting: standard coin-partition table.
    let mut ways = vec![0u64; (n + 1) as usize];
    ways[0] = 1;
    for &p in &parts {
        for v in p..=n {
            ways[v as usize] += ways[(v - p) as usize];
        }
    }
    Ok(ways[n as usize])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpressionForm {
    /// x^y + y^x over coprime x, y >= 2.
    TwoTerm,
    /// x1^x2 + x2^x3 + ... + xn^x1 over a tuple with overall gcd 1.
    Cycle(Vec<u64>),
}

/// Prime hits of the expression at desk scale. For `TwoTerm`, all coprime
/// pairs 2 <= x < y <= bound are scanned.
pub fn expression_prime_search(
    form: &ExpressionForm,
    bound: u64,
) -> Result<Vec<(Vec<u64>, Natural)>> {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    let mut hits = Vec::new();
    match form {
        ExpressionForm::TwoTerm => {
            for x in 2..=bound {
                for y in (x + 1)..=bound {
                    if gcd(x, y) != 1 {
                        continue;
                    }
                    let v = BigUint::from(x).pow(y as u32) + BigUint::from(y).pow(x as u32);
                    if numeric_core::is_prime(&v, 40) {
                        hits.push((vec![x, y], v));
                    }
                }
            }
        }
        ExpressionForm::Cycle(xs) => {
            if xs.len() < 2 || xs.iter().any(|&x| x < 2) {
                return Err(ExploreError::Domain("cycle needs entries >= 2"));
            }
            let overall = xs.iter().copied().reduce(gcd).unwrap();
            if overall != 1 {
                return Err(ExploreError::Domain("cycle entries must have gcd 1"));
            }
            let mut v = BigUint::zero();
            for i in 0..xs.len() {
                let b = xs[i];
                let e = xs[(i + 1) % xs.len()];
                v += BigUint::from(b).pow(e as u32);
            }
            if numeric_core::is_prime(&v, 40) {
                hits.push((xs.clone(), v));
            }
        }
    }
    Ok(hits)
}

/// One Wilson-style instance: witness c with "prime iff c ≡ 0 (mod r)".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WilsonInstance {
    pub c: BigInt,
    pub r: BigInt,
    /// The tuple of candidate primes this instance certifies.
    pub tuple: Vec<u64>,
}

impl WilsonInstance {
    /// The built-in instance for a single candidate p: c = (p-1)! + 1, r = p.
    pub fn wilson(p: u64) -> Self {
        let mut f = BigInt::one();
        for i in 2..p {
            f *= BigInt::from(i);
        }
        WilsonInstance {
            c: f + 1,
            r: BigInt::from(p),
            tuple: vec![p],
        }
    }
}

/// Condition: sum over instances of a_i c_i / prod(tuple_i) is an integer
/// (all a_i = 1). Returns the integrality verdict, which matches direct
/// primality of every tuple member.
pub fn simultaneous_prime_check(instances: &[WilsonInstance]) -> Result<bool> {
    if instances.is_empty() {
        return Err(ExploreError::Domain("need at least one instance"));
    }
    let mut acc = BigRational::zero();
    for inst in instances {
        if inst.tuple.is_empty() {
            return Err(ExploreError::Domain("instance without a tuple"));
        }
        let denom: BigInt = inst
            .tuple
            .iter()
            .fold(BigInt::one(), |a, &p| a * BigInt::from(p));
        if denom.is_zero() {
            return Err(ExploreError::Domain("zero denominator"));
        }
        acc += BigRational::new(inst.c.clone(), denom);
    }
    Ok(acc.is_integer())
}
