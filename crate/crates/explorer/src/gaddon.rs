//! Add-on concatenation reports: term values plus the prime ranks among a
//! prefix, and the perfect-power scan.

use crate::Result;
use seq_digits::{concatenated_term, BaseSeqSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GAddOnReport {
    /// 1-based ranks whose term is (probably) prime.
    pub prime_ranks: Vec<u64>,
    /// Ranks whose term is a perfect power.
    pub perfect_power_ranks: Vec<u64>,
    pub terms_scanned: u64,
}

/// Scan the first `count` concatenation terms for primes and perfect powers.
pub fn gadd_on_report(spec: &BaseSeqSpec, count: u64) -> Result<GAddOnReport> {
    let mut prime_ranks = Vec::new();
    let mut perfect_power_ranks = Vec::new();
    for n in 1..=count {
        let term = concatenated_term(spec, n)
            .map_err(|_| crate::ExploreError::Domain("source exhausted"))?;
        if numeric_core::is_prime(&term, 40) {
            prime_ranks.push(n);
        }
        if numeric_core::is_perfect_power(&term).is_some() {
            perfect_power_ranks.push(n);
        }
    }
    Ok(GAddOnReport {
        prime_ranks,
        perfect_power_ranks,
        terms_scanned: count,
    })
}
