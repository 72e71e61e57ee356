//! The rhombic number carpet: closed form against border-sum recursion.

use crate::{ExploreError, Result};
use num_bigint::BigUint;
use numeric_core::Natural;

/// Closed form: C(n, 0) = 1, C(n, 1) = 4n, and
/// C(n, k) = 4n * prod over i in 1..k of (4n - 4i + 1).
pub fn carpet_c(n: u64, k: u64) -> Result<Natural> {
    if k > n {
        return Err(ExploreError::Domain("carpet levels run 0..=n"));
    }
    if k == 0 {
        return Ok(BigUint::from(1u8));
    }
    let mut value = BigUint::from(4 * n);
    for i in 1..k {
        value *= BigUint::from(4 * n - 4 * i + 1);
    }
    Ok(value)
}

/// Border-sum recursion: each inner border holds the sum of all elements of
/// the border outside it. The outermost border (level 0) carries 4n ones;
/// border k >= 1 carries 4(n-k) + 1 cells.
///
/// Cell counts are reconstructed from the published tables; the printed
/// figures draw 4(n-k) cells per rhombus but their row values match only
/// the 4(n-k) + 1 count for the inner borders.
pub fn carpet_rows(n: u64) -> Result<Vec<Natural>> {
    if n < 1 {
        return Err(ExploreError::Domain("carpets start at n = 1"));
    }
    let mut rows = Vec::with_capacity((n + 1) as usize);
    rows.push(BigUint::from(1u8)); // border 0 element value
    let mut prev_value = BigUint::from(1u8);
    let mut prev_cells = BigUint::from(4 * n);
    for k in 1..=n {
        let value: Natural = &prev_value * &prev_cells;
        rows.push(value.clone());
        prev_value = value;
        prev_cells = BigUint::from(4 * (n - k) + 1);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use numeric_core::digits::nat;

    #[test]
    fn closed_form_values() {
        assert_eq!(carpet_c(3, 2).unwrap(), nat(108));
        assert_eq!(carpet_c(8, 2).unwrap(), nat(928));
        assert_eq!(carpet_c(5, 0).unwrap(), nat(1));
        assert_eq!(carpet_c(1, 1).unwrap(), nat(4));
        assert!(carpet_c(3, 4).is_err());
    }

    #[test]
    fn published_table_rows() {
        // Row n lists C(n, 0..=n); the n = 3 row prints 504 where the
        // formula gives 540.
        let expect: Vec<Vec<u64>> = vec![
            vec![1, 4],
            vec![1, 8, 40],
            vec![1, 12, 108, 540],
            vec![1, 16, 208, 1872, 9360],
            vec![1, 20, 340, 4420, 39780, 198900],
            vec![1, 24, 504, 8568, 111384, 1002456, 5012280],
            vec![1, 28, 700, 14700, 249900, 3248700, 29238300, 146191500],
            vec![
                1, 32, 928, 23200, 487200, 8282400, 107671200, 969040800, 4845204000,
            ],
        ];
        for (i, row) in expect.iter().enumerate() {
            let n = (i + 1) as u64;
            for (k, &want) in row.iter().enumerate() {
                assert_eq!(carpet_c(n, k as u64).unwrap(), nat(want), "C({n}, {k})");
            }
        }
    }

    #[test]
    fn recursion_agrees_with_closed_form() {
        for n in 1..=8u64 {
            let rows = carpet_rows(n).unwrap();
            for (k, row) in rows.iter().enumerate() {
                assert_eq!(*row, carpet_c(n, k as u64).unwrap(), "n={n} k={k}");
            }
        }
    }
}
