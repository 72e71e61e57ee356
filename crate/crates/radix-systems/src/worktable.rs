//! Column worktables: multiplication by doubling-style columns in an
//! arbitrary small factor k, and division by k^n with rest reconstruction.

use crate::{RadixError, Result};

/// One row of the multiplication table: A-column, B-column, rest, partial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulRow {
    pub a: u64,
    pub b: u64,
    pub rest: u64,
    pub partial: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationTable {
    pub k: u64,
    pub rows: Vec<MulRow>,
    pub total: u64,
}

/// Multiply a * b by the column algorithm: the A column multiplies by k, the
/// B column divides by k keeping rests, and the rest-weighted partials sum
/// to the product.
pub fn romanian_multiply(a: u64, b: u64, k: u64) -> Result<(u64, MultiplicationTable)> {
    if k < 2 {
        return Err(RadixError::Domain("column multiplication needs k >= 2"));
    }
    let mut rows = Vec::new();
    let mut col_a = a;
    let mut col_b = b;
    let mut total = 0u64;
    loop {
        let rest = col_b % k;
        let partial = col_a * rest;
        rows.push(MulRow {
            a: col_a,
            b: col_b,
            rest,
            partial,
        });
        total += partial;
        if col_b < k {
            break;
        }
        col_a *= k;
        col_b /= k;
    }
    debug_assert_eq!(total, a * b);
    Ok((total, MultiplicationTable { k, rows, total }))
}

/// One row of the division table: weighted rest, weight k^(i-1), rest, A.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivRow {
    pub weighted: u64,
    pub weight: u64,
    pub rest: u64,
    pub a: u64,
    /// k^(n-i+1) descending on the divisor column.
    pub divisor_power: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionTable {
    pub k: u64,
    pub n: u32,
    pub rows: Vec<DivRow>,
    pub quotient: u64,
    pub remainder: u64,
}

/// Divide a by k^n via n single-digit divisions; the rests, weighted by
/// powers of k, reassemble the remainder.
pub fn divide_by_power(a: u64, k: u64, n: u32) -> Result<(u64, u64, DivisionTable)> {
    if k < 2 || n < 1 {
        return Err(RadixError::Domain("power division needs k >= 2, n >= 1"));
    }
    let mut rows = Vec::new();
    let mut cur = a;
    let mut weight = 1u64;
    let mut remainder = 0u64;
    for i in 0..n {
        let rest = cur % k;
        let weighted = rest * weight;
        rows.push(DivRow {
            weighted,
            weight,
            rest,
            a: cur,
            divisor_power: k.pow(n - i),
        });
        remainder += weighted;
        cur /= k;
        weight *= k;
    }
    let quotient = cur;
    debug_assert_eq!(a, quotient * k.pow(n) + remainder);
    Ok((
        quotient,
        remainder,
        DivisionTable {
            k,
            n,
            rows,
            quotient,
            remainder,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_73_by_97_with_k3() {
        let (product, table) = romanian_multiply(73, 97, 3).unwrap();
        assert_eq!(product, 7081);
        let rows: Vec<(u64, u64, u64, u64)> = table
            .rows
            .iter()
            .map(|r| (r.a, r.b, r.rest, r.partial))
            .collect();
        assert_eq!(
            rows,
            vec![
                (73, 97, 1, 73),
                (219, 32, 2, 438),
                (657, 10, 1, 657),
                (1971, 3, 0, 0),
                (5913, 1, 1, 5913),
            ]
        );
    }

    #[test]
    fn multiply_73_by_97_with_k4() {
        let (product, table) = romanian_multiply(73, 97, 4).unwrap();
        assert_eq!(product, 7081);
        let rows: Vec<(u64, u64, u64, u64)> = table
            .rows
            .iter()
            .map(|r| (r.a, r.b, r.rest, r.partial))
            .collect();
        assert_eq!(
            rows,
            vec![
                (73, 97, 1, 73),
                (292, 24, 0, 0),
                (1168, 6, 2, 2336),
                (4672, 1, 1, 4672),
            ]
        );
    }

    #[test]
    fn multiply_73_by_97_with_k5() {
        let (product, table) = romanian_multiply(73, 97, 5).unwrap();
        assert_eq!(product, 7081);
        let partials: Vec<u64> = table.rows.iter().map(|r| r.partial).collect();
        assert_eq!(partials, vec![146, 1460, 5475]);
    }

    #[test]
    fn multiply_73_by_97_with_k10() {
        let (product, table) = romanian_multiply(73, 97, 10).unwrap();
        assert_eq!(product, 7081);
        let rows: Vec<(u64, u64, u64, u64)> = table
            .rows
            .iter()
            .map(|r| (r.a, r.b, r.rest, r.partial))
            .collect();
        assert_eq!(rows, vec![(73, 97, 7, 511), (730, 9, 9, 6570)]);
    }

    #[test]
    fn multiply_by_one() {
        let (product, table) = romanian_multiply(42, 1, 5).unwrap();
        assert_eq!(product, 42);
        assert_eq!(table.rows.len(), 1);
        assert_eq!(table.rows[0].rest, 1);
    }

    #[test]
    fn multiply_exhaustive_small() {
        for a in (1..=500).step_by(13) {
            for b in (1..=500).step_by(7) {
                for k in 2..=12 {
                    let (p, _) = romanian_multiply(a, b, k).unwrap();
                    assert_eq!(p, a * b, "{a} x {b} with k = {k}");
                }
            }
        }
    }

    #[test]
    fn russian_multiplication_row_counts() {
        // k = 2 rows track the binary length of b.
        for b in [1u64, 2, 3, 7, 8, 97, 255, 256] {
            let (_, table) = romanian_multiply(5, b, 2).unwrap();
            assert_eq!(table.rows.len() as u32, 64 - b.leading_zeros());
        }
    }

    #[test]
    fn divide_1357_by_2_pow_7() {
        let (q, r, table) = divide_by_power(1357, 2, 7).unwrap();
        assert_eq!((q, r), (10, 77));
        let rests: Vec<u64> = table.rows.iter().map(|x| x.rest).collect();
        assert_eq!(rests, vec![1, 0, 1, 1, 0, 0, 1]);
        let weighted: Vec<u64> = table.rows.iter().map(|x| x.weighted).collect();
        assert_eq!(weighted, vec![1, 0, 4, 8, 0, 0, 64]);
        let a_col: Vec<u64> = table.rows.iter().map(|x| x.a).collect();
        assert_eq!(a_col, vec![1357, 678, 339, 169, 84, 42, 21]);
    }

    #[test]
    fn divide_19495_by_3_pow_8() {
        let (q, r, table) = divide_by_power(19495, 3, 8).unwrap();
        assert_eq!((q, r), (2, 6373));
        let weighted: Vec<u64> = table.rows.iter().map(|x| x.weighted).collect();
        assert_eq!(weighted, vec![1, 0, 0, 54, 0, 486, 1458, 4374]);
        let a_col: Vec<u64> = table.rows.iter().map(|x| x.a).collect();
        assert_eq!(a_col, vec![19495, 6498, 2166, 722, 240, 80, 26, 8]);
    }

    #[test]
    fn divide_small_dividend() {
        let (q, r, _) = divide_by_power(5, 2, 7).unwrap();
        assert_eq!((q, r), (0, 5));
    }

    #[test]
    fn divide_matches_builtin() {
        let mut state = 0xabcdu64;
        let mut rand = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for _ in 0..10_000 {
            let a = rand() % 10_000_000;
            let k = 2 + rand() % 9;
            let n = 1 + (rand() % 7) as u32;
            let (q, r, _) = divide_by_power(a, k, n).unwrap();
            let d = k.pow(n);
            assert_eq!((q, r), (a / d, a % d), "a={a} k={k} n={n}");
        }
    }
}
