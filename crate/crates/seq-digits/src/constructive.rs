//! Closure of digit atoms under juxtaposition, increasingly ordered.

use crate::{Result, SeqError};
use num_bigint::BigUint;
use numeric_core::Natural;

/// First `count` members writable as juxtapositions of the atoms, in
/// increasing numeric order. Atoms are decimal strings (single digits in the
/// catalog, but longer atoms work the same way).
pub fn constructive_terms(atoms: &[String], count: usize) -> Result<Vec<Natural>> {
    if atoms.is_empty() {
        return Err(SeqError::Domain("constructive set needs atoms"));
    }
    let mut seen = std::collections::BTreeSet::new();
    for a in atoms {
        if a.is_empty() || !a.chars().all(|c| c.is_ascii_digit()) || a.starts_with('0') {
            return Err(SeqError::Domain("atoms are positive decimal strings"));
        }
        if !seen.insert(a) {
            return Err(SeqError::Domain("atoms must be distinct"));
        }
    }
    let mut out: Vec<Natural> = Vec::with_capacity(count);
    // Strings of k atoms, grouped by k; each group sorted numerically.
    let mut level: Vec<String> = vec![String::new()];
    while out.len() < count {
        let mut next = Vec::with_capacity(level.len() * atoms.len());
        for prefix in &level {
            for a in atoms {
                let mut s = prefix.clone();
                s.push_str(a);
                next.push(s);
            }
        }
        let mut values: Vec<Natural> = next
            .iter()
            .map(|s| s.parse::<BigUint>().expect("digit string"))
            .collect();
        values.sort();
        values.dedup();
        for v in values {
            if out.len() == count {
                break;
            }
            out.push(v);
        }
        level = next;
    }
    Ok(out)
}
