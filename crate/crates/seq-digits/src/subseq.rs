//! Closed forms for the seven block-structured sub-sequence streams.

use crate::{Result, SeqError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubSequenceKind {
    /// 1 | 1 2 | 1 2 3 | ...
    Crescendo,
    /// 1 | 2 1 | 3 2 1 | ...
    Decrescendo,
    /// 1 | 1 2 1 | 1 2 3 2 1 | ...
    CrescPyramidal,
    /// 1 | 2 1 2 | 3 2 1 2 3 | ...
    DecrescPyramidal,
    /// 1 1 | 1 2 2 1 | 1 2 3 3 2 1 | ...
    CrescSymmetric,
    /// 1 1 | 2 1 1 2 | 3 2 1 1 2 3 | ...
    DecrescSymmetric,
    /// 1 2 | 1 3 4 2 | 1 3 5 6 4 2 | ...
    PermutationSub,
}

/// Value at stream position i (1-indexed) by the solved block formulas.
pub fn subsequence_closed_form(kind: SubSequenceKind, i: u64) -> Result<u64> {
    if i < 1 {
        return Err(SeqError::Domain("stream positions start at 1"));
    }
    Ok(match kind {
        SubSequenceKind::Crescendo => {
            let (n, offset) = triangular_block(i);
            // a(tri(n) - j) = n - j
            n - (tri(n) - (tri(n - 1) + offset))
        }
        SubSequenceKind::Decrescendo => {
            let (n, offset) = triangular_block(i);
            1 + (tri(n) - (tri(n - 1) + offset))
        }
        SubSequenceKind::CrescPyramidal => {
            let (n, j) = square_block(i); // block n spans (n-1)^2+1 ..= n^2, j = i - (n-1)^2
            if j <= n {
                j
            } else {
                2 * n - j
            }
        }
        SubSequenceKind::DecrescPyramidal => {
            let (n, j) = square_block(i);
            if j <= n {
                n + 1 - j
            } else {
                j - n + 1
            }
        }
        SubSequenceKind::CrescSymmetric => {
            let (n, j) = oblong_block(i); // block n spans (n-1)n+1 ..= n(n+1), j = offset
            if j <= n {
                j
            } else {
                2 * n + 1 - j
            }
        }
        SubSequenceKind::DecrescSymmetric => {
            let (n, j) = oblong_block(i);
            if j <= n {
                n + 1 - j
            } else {
                j - n
            }
        }
        SubSequenceKind::PermutationSub => {
            let (n, j) = oblong_block(i);
            if j <= n {
                2 * j - 1
            } else {
                2 * (2 * n - j + 1)
            }
        }
    })
}

fn tri(n: u64) -> u64 {
    n * (n + 1) / 2
}

/// Block index n and 1-based offset within block for tri-sized blocks.
fn triangular_block(i: u64) -> (u64, u64) {
    let mut n = ((2.0 * i as f64).sqrt()) as u64;
    while tri(n) < i {
        n += 1;
    }
    while n > 1 && tri(n - 1) >= i {
        n -= 1;
    }
    (n, i - tri(n - 1))
}

/// Block n spans (n-1)^2 + 1 ..= n^2 (2n - 1 positions).
fn square_block(i: u64) -> (u64, u64) {
    let mut n = (i as f64).sqrt() as u64;
    while n * n < i {
        n += 1;
    }
    while n > 1 && (n - 1) * (n - 1) >= i {
        n -= 1;
    }
    (n, i - (n - 1) * (n - 1))
}

/// Block n spans (n-1)n + 1 ..= n(n+1) (2n positions).
fn oblong_block(i: u64) -> (u64, u64) {
    let mut n = (i as f64).sqrt() as u64;
    while n * (n + 1) < i {
        n += 1;
    }
    while n > 1 && (n - 1) * n >= i {
        n -= 1;
    }
    (n, i - (n - 1) * n)
}
