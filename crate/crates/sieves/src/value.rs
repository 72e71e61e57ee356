//! Membership predicates for the arithmetic (value) sieves.

use crate::SieveKind;
use numeric_core::{factorize, is_perfect_power_u64, is_prime_u64};

pub fn survives(kind: &SieveKind, n: u64) -> bool {
    match kind {
        SieveKind::CubeFree => power_free(n, 3),
        SieveKind::MPowerFree(m) => power_free(n, *m),
        SieveKind::SquareFree => power_free(n, 2),
        // Numbers whose m-th root is irrational for every m >= 2, i.e. the
        // non-perfect-powers; 0 and 1 are excluded like the other sieves.
        SieveKind::IrrationalRoot => n >= 2 && is_perfect_power_u64(n).is_none(),
        // Odd numbers that are not a prime minus two.
        SieveKind::OddSieve => n % 2 == 1 && !is_prime_u64(n + 2),
        _ => unreachable!("positional sieve passed to value predicate"),
    }
}

fn power_free(n: u64, m: u32) -> bool {
    if n < 2 {
        return false;
    }
    factorize(n).unwrap().pairs().iter().all(|&(_, e)| e < m)
}
