//! Same-sum placements on the triangle with 1..6, and the square checker.

use crate::{ExploreError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MagicIndex {
    pub min_sum: u64,
    pub max_sum: u64,
    /// Placements achieving the minimum or maximum sum, counted up to
    /// rotation/reflection (the published index counts these two extremal
    /// layouts).
    pub combination_count: u64,
    /// All equal-sum placements up to symmetry, every sum included; the
    /// intermediate sums 10 and 11 also admit layouts.
    pub all_combination_count: u64,
}

/// Exhaustive triangle search: vertices v1 v2 v3 and midpoints m12 m23 m31
/// over a permutation of 1..6, each side summing equally. Only n = 3 is
/// supported; larger polygons blow up combinatorially.
pub fn magic_index(n: u64) -> Result<MagicIndex> {
    if n != 3 {
        return Err(ExploreError::Domain(
            "only the triangle index is computed exhaustively",
        ));
    }
    let mut sums_seen: std::collections::BTreeMap<u64, u64> = std::collections::BTreeMap::new();
    let mut perm = [1u64, 2, 3, 4, 5, 6];
    let mut total_placements = 0u64;
    permute(&mut perm, 0, &mut |p| {
        let [v1, v2, v3, m12, m23, m31] = *p;
        let s1 = v1 + m12 + v2;
        let s2 = v2 + m23 + v3;
        let s3 = v3 + m31 + v1;
        if s1 == s2 && s2 == s3 {
            *sums_seen.entry(s1).or_insert(0) += 1;
            total_placements += 1;
        }
    });
    if sums_seen.is_empty() {
        return Err(ExploreError::Domain("no equal-sum placement exists"));
    }
    // The dihedral symmetry group of the triangle has 6 elements and acts
    // freely here (all placed values are distinct), so each geometric
    // solution appears 6 times.
    let min_sum = *sums_seen.keys().next().unwrap();
    let max_sum = *sums_seen.keys().last().unwrap();
    let extremal = (sums_seen[&min_sum] + sums_seen[&max_sum]) / 6;
    Ok(MagicIndex {
        min_sum,
        max_sum,
        combination_count: extremal,
        all_combination_count: total_placements / 6,
    })
}

fn permute(values: &mut [u64; 6], at: usize, visit: &mut impl FnMut(&[u64; 6])) {
    if at == values.len() {
        visit(values);
        return;
    }
    for i in at..values.len() {
        values.swap(at, i);
        permute(values, at + 1, visit);
        values.swap(at, i);
    }
}

/// All rows, columns and both diagonals share one sum.
pub fn magic_square_check(grid: &[Vec<u64>]) -> Result<bool> {
    let n = grid.len();
    if n < 2 || grid.iter().any(|row| row.len() != n) {
        return Err(ExploreError::Domain("grid must be square, side >= 2"));
    }
    let target: u64 = grid[0].iter().sum();
    for row in grid {
        if row.iter().sum::<u64>() != target {
            return Ok(false);
        }
    }
    for c in 0..n {
        if (0..n).map(|r| grid[r][c]).sum::<u64>() != target {
            return Ok(false);
        }
    }
    if (0..n).map(|i| grid[i][i]).sum::<u64>() != target {
        return Ok(false);
    }
    if (0..n).map(|i| grid[i][n - 1 - i]).sum::<u64>() != target {
        return Ok(false);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_index() {
        let idx = magic_index(3).unwrap();
        assert_eq!(idx.min_sum, 9);
        assert_eq!(idx.max_sum, 12);
        assert_eq!(idx.combination_count, 2);
        // Sums 10 and 11 admit one layout each, e.g. vertices 1, 3, 5 with
        // midpoints 6, 2, 4 for sum 10.
        assert_eq!(idx.all_combination_count, 4);
        assert!(magic_index(4).is_err());
    }

    #[test]
    fn durer_square() {
        let grid = vec![
            vec![16, 3, 2, 13],
            vec![5, 10, 11, 8],
            vec![9, 6, 7, 12],
            vec![4, 15, 14, 1],
        ];
        assert!(magic_square_check(&grid).unwrap());
        // Swapping two cells breaks it.
        let mut broken = grid.clone();
        broken[0].swap(0, 1);
        assert!(!magic_square_check(&broken).unwrap());
    }

    #[test]
    fn shape_validation() {
        assert!(magic_square_check(&[vec![1, 2], vec![3]]).is_err());
    }
}
