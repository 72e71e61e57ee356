//! Minimal-growth operator-chain sequences: a1 = 1, and each next term is
//! the least (or a seeded-random) integer value exceeding the previous term
//! among all strict left-to-right evaluations of 1 O1 2 O2 ... On (n+1).

use crate::{Result, SeqError};
use num_rational::Ratio;
use num_traits::CheckedAdd;
use num_traits::CheckedDiv;
use num_traits::CheckedMul;
use num_traits::CheckedSub;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Operator {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Root,
}

impl Operator {
    fn apply(&self, a: Ratio<i128>, b: Ratio<i128>) -> Option<Ratio<i128>> {
        match self {
            Operator::Add => a.checked_add(&b),
            Operator::Sub => a.checked_sub(&b),
            Operator::Mul => a.checked_mul(&b),
            Operator::Div => {
                if b == Ratio::from_integer(0) {
                    None
                } else {
                    a.checked_div(&b)
                }
            }
            Operator::Pow => {
                if !b.is_integer() {
                    return None;
                }
                let e = *b.numer();
                if !(-16..=16).contains(&e) {
                    return None;
                }
                let mut acc = Ratio::from_integer(1);
                for _ in 0..e.unsigned_abs() {
                    acc = acc.checked_mul(&a)?;
                }
                if e < 0 {
                    if acc == Ratio::from_integer(0) {
                        return None;
                    }
                    acc = Ratio::from_integer(1).checked_div(&acc)?;
                }
                Some(acc)
            }
            Operator::Root => {
                // a-th root of ... the paper's "ythrtx" takes the b-th root
                // of a; only exact integer roots of non-negative integers.
                if !b.is_integer() || !a.is_integer() {
                    return None;
                }
                let base = *a.numer();
                let e = *b.numer();
                if base < 0 || e < 1 || e > 16 {
                    return None;
                }
                let root = (base as f64).powf(1.0 / e as f64).round() as i128;
                for cand in [root - 1, root, root + 1] {
                    if cand >= 0 && cand.checked_pow(e as u32) == Some(base) {
                        return Some(Ratio::from_integer(cand));
                    }
                }
                None
            }
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Operator::Add => "+",
            Operator::Sub => "-",
            Operator::Mul => "*",
            Operator::Div => "/",
            Operator::Pow => "^",
            Operator::Root => "rt",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpSeqMode {
    Minimal,
    Random { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpSeqOutcome {
    pub terms: Vec<i128>,
    /// True when no admissible expression could continue the sequence.
    pub truncated: bool,
}

/// All integer values of 1 O1 2 O2 ... On (n+1), strict left-to-right.
fn reachable_values(ops: &[Operator], n_plus_1: u64) -> Vec<i128> {
    let mut values: Vec<Ratio<i128>> = vec![Ratio::from_integer(1)];
    for e in 2..=n_plus_1 {
        let mut next = Vec::with_capacity(values.len() * ops.len());
        for v in &values {
            for op in ops {
                if let Some(r) = op.apply(*v, Ratio::from_integer(e as i128)) {
                    next.push(r);
                }
            }
        }
        next.sort();
        next.dedup();
        values = next;
    }
    let mut ints: Vec<i128> = values
        .into_iter()
        .filter(|v| v.is_integer())
        .map(|v| *v.numer())
        .collect();
    ints.sort_unstable();
    ints.dedup();
    ints
}

/// Build `count` terms; truncates early (with the flag set) when no
/// expression value exceeds the previous term.
pub fn operation_sequence(
    ops: &[Operator],
    count: usize,
    mode: OpSeqMode,
) -> Result<OpSeqOutcome> {
    if count < 1 {
        return Err(SeqError::Domain("need at least one term"));
    }
    if ops.is_empty() {
        return Err(SeqError::Domain("operator set must be non-empty"));
    }
    let mut rng_state = match mode {
        OpSeqMode::Random { seed } => seed,
        OpSeqMode::Minimal => 0,
    };
    let mut next_rand = move || {
        rng_state = rng_state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = rng_state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };

    let mut terms: Vec<i128> = vec![1];
    for n in 1..count as u64 {
        let prev = *terms.last().unwrap();
        let candidates: Vec<i128> = reachable_values(ops, n + 1)
            .into_iter()
            .filter(|&v| v > prev)
            .collect();
        if candidates.is_empty() {
            return Ok(OpSeqOutcome {
                terms,
                truncated: true,
            });
        }
        let chosen = match mode {
            OpSeqMode::Minimal => candidates[0],
            OpSeqMode::Random { .. } => candidates[(next_rand() % candidates.len() as u64) as usize],
        };
        terms.push(chosen);
    }
    Ok(OpSeqOutcome {
        terms,
        truncated: false,
    })
}
