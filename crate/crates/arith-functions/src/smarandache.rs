//! Least-m factorial divisibility: S(n), its prime-power building blocks
//! S_p(p, k), the first/second/third-kind variants, and the triangular
//! analogue Z(n).

use crate::{FnError, Result};
use numeric_core::factorize;

/// Exponent of the prime `p` in `m!` (Legendre's formula).
pub fn legendre_exponent(m: u64, p: u64) -> u64 {
    let mut total = 0u64;
    let mut q = p;
    loop {
        total += m / q;
        match q.checked_mul(p) {
            Some(next) if next <= m => q = next,
            _ => break,
        }
    }
    total
}

/// Least m with p^k dividing m!; p must be prime, k >= 1.
pub fn s_p(p: u64, k: u64) -> Result<u64> {
    if !numeric_core::is_prime_u64(p) {
        return Err(FnError::Domain("s_p needs a prime base"));
    }
    if k == 0 {
        return Err(FnError::Domain("s_p needs k >= 1"));
    }
    // The answer is a multiple of p in [p, k*p]; binary search the
    // nondecreasing Legendre count.
    let mut lo = 1u64;
    let mut hi = k; // in units of p
    while lo < hi {
        let mid = (lo + hi) / 2;
        if legendre_exponent(mid * p, p) >= k {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo * p)
}

/// Least m with n dividing m!; S(1) = 1.
pub fn smarandache_s(n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    factorize(n)
        .unwrap()
        .pairs()
        .iter()
        .map(|&(p, e)| s_p(p, u64::from(e)).unwrap())
        .max()
        .unwrap()
}

/// S(n) for all n in 1..=limit via a smallest-prime-factor sieve.
pub fn s_table(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    let mut table = vec![0u64; n + 1];
    if n >= 1 {
        table[1] = 1;
    }
    for i in 2..=n {
        let p = spf[i] as u64;
        let mut m = i as u64;
        let mut e = 0u64;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        let candidate = s_p(p, e).unwrap();
        table[i] = if m == 1 {
            candidate
        } else {
            candidate.max(table[m as usize])
        };
    }
    table
}

/// First kind: for n = u^r (u = 1 or prime), least k with k! a multiple of
/// u^(r*a); composite n takes the max over its prime-power parts.
pub fn s_first_kind(n: u64, a: u64) -> Result<u64> {
    if n == 0 || a == 0 {
        return Err(FnError::Domain("first-kind function needs n, a >= 1"));
    }
    if n == 1 {
        return Ok(1);
    }
    let fm = factorize(n).unwrap();
    Ok(fm
        .pairs()
        .iter()
        .map(|&(p, r)| s_p(p, u64::from(r) * a).unwrap())
        .max()
        .unwrap())
}

/// Second kind: S^k(n) = S_n(k).
pub fn s_second_kind(k: u64, n: u64) -> Result<u64> {
    s_first_kind(n, k)
}

/// Third kind over two index sequences, excluding the two degenerate pairs
/// (a ≡ 1, b = n) and (a = n, b ≡ 1) that collapse to the other kinds.
pub fn s_third_kind(a_seq: &[u64], b_seq: &[u64], n: usize) -> Result<u64> {
    if n == 0 || n > a_seq.len() || n > b_seq.len() {
        return Err(FnError::Domain("third-kind index out of range"));
    }
    let all_ones_a = a_seq.iter().all(|&a| a == 1);
    let identity_b = b_seq.iter().enumerate().all(|(i, &b)| b == (i + 1) as u64);
    let identity_a = a_seq.iter().enumerate().all(|(i, &a)| a == (i + 1) as u64);
    let all_ones_b = b_seq.iter().all(|&b| b == 1);
    if (all_ones_a && identity_b) || (identity_a && all_ones_b) {
        return Err(FnError::Domain(
            "degenerate index pair excluded from the third kind",
        ));
    }
    s_first_kind(a_seq[n - 1], b_seq[n - 1])
}

/// Least m with n dividing the triangular number m(m+1)/2.
pub fn pseudo_smarandache(n: u64) -> u64 {
    assert!(n >= 1);
    let modulus = u128::from(2 * n);
    let mut m = 1u64;
    loop {
        // m(m+1)/2 ≡ 0 (mod n) <=> m(m+1) ≡ 0 (mod 2n)
        if u128::from(m) * u128::from(m + 1) % modulus == 0 {
            return m;
        }
        m += 1;
    }
}
