//! Multiples of n writable with exactly a prescribed digit set, via the
//! residue-and-usage automaton. Emptiness is decided by reachability over
//! the finite state graph, so an empty answer is a certificate.

use crate::{Result, SeqError};
use num_bigint::BigUint;
use numeric_core::Natural;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UniformOutcome {
    /// The first `count` members, increasing.
    Members(Vec<Natural>),
    /// No multiple of n uses exactly this digit set (proved by automaton
    /// reachability).
    Empty,
}

/// Increasing multiples of n whose base-`base` digits use exactly
/// `digits` (every listed digit appears, no other digit does).
pub fn uniform_sequence(
    n: u64,
    digits: &[u8],
    base: u32,
    count: usize,
) -> Result<UniformOutcome> {
    if n == 0 {
        return Err(SeqError::Domain("uniform sequences need n >= 1"));
    }
    if base < 2 {
        return Err(SeqError::Domain("base must be at least 2"));
    }
    if digits.is_empty() || digits.iter().any(|&d| d as u32 >= base) {
        return Err(SeqError::Domain("digit set must be non-empty and in-base"));
    }
    let mut set: Vec<u8> = digits.to_vec();
    set.sort_unstable();
    set.dedup();
    if set == [0] {
        return Err(SeqError::Domain("the digit 0 alone cannot lead a numeral"));
    }

    let r = set.len();
    let full_mask: u32 = (1 << r) - 1;
    let states = (n as usize) * (1usize << r);

    // Reachability pass: states (residue, used-mask) by digit appends.
    let mut reachable = vec![false; states];
    let mut queue = std::collections::VecDeque::new();
    for (bit, &d) in set.iter().enumerate() {
        if d == 0 {
            continue; // leading digit must be nonzero
        }
        let state = (u64::from(d) % n) as usize * (1 << r) + (1 << bit);
        if !reachable[state] {
            reachable[state] = true;
            queue.push_back(state);
        }
    }
    let mut accepting_reachable = false;
    while let Some(s) = queue.pop_front() {
        let residue = (s >> r) as u64;
        let mask = (s as u32) & full_mask;
        if residue == 0 && mask == full_mask {
            accepting_reachable = true;
        }
        for (bit, &d) in set.iter().enumerate() {
            let nr = (residue * u64::from(base) + u64::from(d)) % n;
            let ns = (nr as usize) * (1 << r) + (mask | (1 << bit)) as usize;
            if !reachable[ns] {
                reachable[ns] = true;
                queue.push_back(ns);
            }
        }
    }
    if !accepting_reachable {
        return Ok(UniformOutcome::Empty);
    }

    // Enumerate members in increasing order: count strings per (length,
    // state) with dynamic programming, then walk lengths upward emitting
    // accepted numerals digit by digit in ascending digit order.
    let mut members = Vec::with_capacity(count);
    let mut len = 1usize;
    // dp[l][state] = number of suffixes of length l completing to acceptance
    // is exponential to hold for all l; instead, for each candidate length,
    // do a forward scan generating accepted strings lazily via DFS with
    // pruning by a per-length reachability table computed backwards.
    while members.len() < count {
        if states.saturating_mul(len + 1) > 100_000_000 {
            return Err(SeqError::Domain("uniform search state table too large"));
        }
        // can_finish[l][state]: from `state` with l digits still to append,
        // can we end accepting? Accepting = residue 0 with every digit used.
        let mut can_finish = vec![vec![false; states]; len + 1];
        can_finish[0][full_mask as usize] = true;
        for l in 1..=len {
            for s in 0..states {
                let residue = (s >> r) as u64;
                let mask = (s as u32) & full_mask;
                let ok = set.iter().enumerate().any(|(bit, &d)| {
                    let nr = (residue * u64::from(base) + u64::from(d)) % n;
                    let ns = (nr as usize) * (1 << r) + (mask | (1 << bit)) as usize;
                    can_finish[l - 1][ns]
                });
                can_finish[l][s] = ok;
            }
        }

        // DFS in ascending digit order.
        fn walk(
            set: &[u8],
            base: u32,
            n: u64,
            r: usize,
            full_mask: u32,
            can_finish: &[Vec<bool>],
            state: usize,
            remaining: usize,
            prefix: &mut Vec<u8>,
            members: &mut Vec<Natural>,
            count: usize,
        ) {
            if members.len() == count {
                return;
            }
            if remaining == 0 {
                let residue = (state >> r) as u64;
                let mask = (state as u32) & full_mask;
                if residue == 0 && mask == full_mask {
                    members.push(BigUint::from_radix_be(prefix, base).expect("digits"));
                }
                return;
            }
            for (bit, &d) in set.iter().enumerate() {
                let residue = (state >> r) as u64;
                let mask = (state as u32) & full_mask;
                let nr = (residue * u64::from(base) + u64::from(d)) % n;
                let ns = (nr as usize) * (1 << r) + (mask | (1 << bit)) as usize;
                if can_finish[remaining - 1][ns] {
                    prefix.push(d);
                    walk(
                        set, base, n, r, full_mask, can_finish, ns, remaining - 1, prefix,
                        members, count,
                    );
                    prefix.pop();
                }
            }
        }

        for (bit, &d) in set.iter().enumerate() {
            if d == 0 || members.len() == count {
                continue;
            }
            let state = (u64::from(d) % n) as usize * (1 << r) + (1 << bit);
            if can_finish[len - 1][state] {
                let mut prefix = vec![d];
                walk(
                    &set,
                    base,
                    n,
                    r,
                    full_mask,
                    &can_finish,
                    state,
                    len - 1,
                    &mut prefix,
                    &mut members,
                    count,
                );
            }
        }
        len += 1;
        if len > 6000 {
            return Err(SeqError::Domain("uniform search exceeded 6000 digits"));
        }
    }
    Ok(UniformOutcome::Members(members))
}
