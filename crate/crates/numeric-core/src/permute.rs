//! Digit rearrangements with value semantics.

use crate::Natural;
use num_bigint::BigUint;
use std::collections::BTreeSet;

/// Values reachable by rearranging the decimal digits of `n`.
///
/// Leading zeros are permitted in a rearrangement and then dropped
/// numerically, so 100 can become 001 = 1. With `nontrivial_only` the
/// identity arrangement is excluded, but a non-identity permutation that
/// happens to reproduce the same value (swapping equal digits) still counts.
pub fn digit_permutations(n: &Natural, nontrivial_only: bool) -> BTreeSet<Natural> {
    let digits = if n == &BigUint::from(0u8) {
        vec![0u8]
    } else {
        n.to_radix_be(10)
    };
    let mut out = BTreeSet::new();
    let len = digits.len();
    if len == 1 {
        if !nontrivial_only {
            out.insert(n.clone());
        }
        return out;
    }

    // Walk distinct multiset permutations; track whether the identity order
    // is reachable by more than one position permutation (repeated digit).
    let mut sorted = digits.clone();
    sorted.sort_unstable();
    let has_repeat = sorted.windows(2).any(|w| w[0] == w[1]);

    let mut perm = sorted;
    loop {
        let value = BigUint::from_radix_be(&perm, 10).unwrap();
        let is_identity_arrangement = perm == digits;
        if !nontrivial_only || !is_identity_arrangement || has_repeat {
            out.insert(value);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digits::nat;

    fn set(vals: &[u64]) -> BTreeSet<Natural> {
        vals.iter().map(|&v| nat(v)).collect()
    }

    #[test]
    fn simple_cases() {
        assert_eq!(digit_permutations(&nat(14), false), set(&[14, 41]));
        assert!(digit_permutations(&nat(100), true).contains(&nat(1)));
        assert!(digit_permutations(&nat(7), true).is_empty());
    }

    #[test]
    fn repeated_digits_keep_identity_value_for_nontrivial() {
        // Swapping the two 2s is a nontrivial position permutation.
        assert_eq!(digit_permutations(&nat(22), true), set(&[22]));
        // 11 likewise: the nontrivial swap reproduces 11.
        assert!(digit_permutations(&nat(11), true).contains(&nat(11)));
        // Distinct digits: identity value excluded.
        assert_eq!(digit_permutations(&nat(13), true), set(&[31]));
    }

    #[test]
    fn leading_zero_drops() {
        assert_eq!(digit_permutations(&nat(100), true), set(&[1, 10, 100]));
    }
}
