//! Iterated digit maps with tail/cycle decomposition.

use crate::{ExploreError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopKind {
    /// |N - reverse(N)| with reverses zero-padded to `width` digits.
    ReverseSubtract { width: u32 },
    /// |reverse(N) - c|, reverses padded to `width` digits.
    Subtraction { c: u64, width: u32 },
    /// Replace each digit x by the last digit of c * x.
    Multiplication { c: u64 },
    /// Two-digit N -> (reduced digit sum, |digit difference|).
    MixedComposition,
}

impl LoopKind {
    fn apply(&self, n: u64) -> Result<u64> {
        match self {
            LoopKind::ReverseSubtract { width } => {
                let r = reverse_padded(n, *width);
                Ok(n.abs_diff(r))
            }
            LoopKind::Subtraction { c, width } => {
                let r = reverse_padded(n, *width);
                Ok(r.abs_diff(*c))
            }
            LoopKind::Multiplication { c } => {
                if n == 0 {
                    return Ok(0);
                }
                let mut digits = to_digits(n);
                for d in digits.iter_mut() {
                    *d = (*d as u64 * c % 10) as u8;
                }
                Ok(from_digits(&digits))
            }
            LoopKind::MixedComposition => {
                if !(10..=99).contains(&n) {
                    return Err(ExploreError::Domain("mixed composition takes two digits"));
                }
                let (a, b) = (n / 10, n % 10);
                let mut sum = a + b;
                while sum >= 10 {
                    sum = sum / 10 + sum % 10;
                }
                let diff = a.abs_diff(b);
                Ok(sum * 10 + diff)
            }
        }
    }
}

fn to_digits(n: u64) -> Vec<u8> {
    if n == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut m = n;
    while m > 0 {
        out.push((m % 10) as u8);
        m /= 10;
    }
    out.reverse();
    out
}

fn from_digits(digits: &[u8]) -> u64 {
    digits.iter().fold(0u64, |acc, &d| acc * 10 + u64::from(d))
}

/// Reverse of n as a `width`-digit string (missing digits become leading
/// zeros of n, hence trailing weight in the reverse).
fn reverse_padded(n: u64, width: u32) -> u64 {
    let mut digits = to_digits(n);
    while (digits.len() as u32) < width {
        digits.insert(0, 0);
    }
    digits.reverse();
    from_digits(&digits)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopReport {
    pub start: u64,
    /// Iterations before the first cycle member.
    pub tail: usize,
    /// The cycle, beginning at its first-reached member.
    pub cycle: Vec<u64>,
    pub period: usize,
    /// Absorbed at a fixed point (period 1), e.g. the zero sink.
    pub invariant_hit: bool,
}

/// Iterate from `start` until a repeat, then split tail from cycle.
pub fn periodic_loop(kind: &LoopKind, start: u64) -> Result<LoopReport> {
    let mut seen = std::collections::HashMap::new();
    let mut trajectory = vec![start];
    seen.insert(start, 0usize);
    let mut current = start;
    loop {
        current = kind.apply(current)?;
        if let Some(&at) = seen.get(&current) {
            let cycle = trajectory[at..].to_vec();
            let period = cycle.len();
            return Ok(LoopReport {
                start,
                tail: at,
                cycle,
                period,
                invariant_hit: period == 1,
            });
        }
        seen.insert(current, trajectory.len());
        trajectory.push(current);
    }
}
