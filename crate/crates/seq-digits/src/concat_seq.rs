//! Running concatenations of a base sequence, forward or reversed.

use crate::{Result, SeqError};
use num_bigint::BigUint;
use num_traits::Zero;
use numeric_core::digits::concat_in_base;
use numeric_core::Natural;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseSeqSource {
    Naturals,
    Odds,
    Evens,
    Primes,
    Squares,
    Cubes,
    Fibonacci,
    Custom(Vec<u64>),
}

impl BaseSeqSource {
    /// The k-th source term, 1-indexed.
    pub fn nth(&self, k: u64) -> Result<u64> {
        Ok(match self {
            BaseSeqSource::Naturals => k,
            BaseSeqSource::Odds => 2 * k - 1,
            BaseSeqSource::Evens => 2 * k,
            BaseSeqSource::Primes => {
                let mut p = 2u64;
                for _ in 1..k {
                    p = numeric_core::next_prime(p);
                }
                p
            }
            BaseSeqSource::Squares => k * k,
            BaseSeqSource::Cubes => k * k * k,
            BaseSeqSource::Fibonacci => {
                let (mut a, mut b) = (1u64, 1u64);
                for _ in 1..k {
                    let next = a + b;
                    a = std::mem::replace(&mut b, next);
                }
                a
            }
            BaseSeqSource::Custom(v) => *v
                .get((k - 1) as usize)
                .ok_or(SeqError::SourceExhausted)?,
        })
    }

    pub fn id(&self) -> &'static str {
        match self {
            BaseSeqSource::Naturals => "naturals",
            BaseSeqSource::Odds => "odds",
            BaseSeqSource::Evens => "evens",
            BaseSeqSource::Primes => "primes",
            BaseSeqSource::Squares => "squares",
            BaseSeqSource::Cubes => "cubes",
            BaseSeqSource::Fibonacci => "fibonacci",
            BaseSeqSource::Custom(_) => "custom",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseSeqSpec {
    pub source: BaseSeqSource,
    pub direction: Direction,
}

/// Concatenation of the first n source terms, in order or reversed.
pub fn concatenated_term(spec: &BaseSeqSpec, n: u64) -> Result<Natural> {
    if n < 1 {
        return Err(SeqError::Domain("concatenations are 1-indexed"));
    }
    let mut acc = BigUint::zero();
    match spec.direction {
        Direction::Forward => {
            for k in 1..=n {
                acc = concat_in_base(&acc, &BigUint::from(spec.source.nth(k)?), 10);
            }
        }
        Direction::Backward => {
            for k in (1..=n).rev() {
                acc = concat_in_base(&acc, &BigUint::from(spec.source.nth(k)?), 10);
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(source: BaseSeqSource, direction: Direction, n: u64) -> String {
        concatenated_term(&BaseSeqSpec { source, direction }, n)
            .unwrap()
            .to_string()
    }

    #[test]
    fn forward_families() {
        assert_eq!(run(BaseSeqSource::Odds, Direction::Forward, 4), "1357");
        assert_eq!(run(BaseSeqSource::Primes, Direction::Forward, 4), "2357");
        assert_eq!(run(BaseSeqSource::Fibonacci, Direction::Forward, 5), "11235");
        assert_eq!(run(BaseSeqSource::Evens, Direction::Forward, 5), "246810");
        assert_eq!(run(BaseSeqSource::Squares, Direction::Forward, 5), "1491625");
        assert_eq!(run(BaseSeqSource::Cubes, Direction::Forward, 4), "182764");
    }

    #[test]
    fn backward_families() {
        assert_eq!(run(BaseSeqSource::Primes, Direction::Backward, 3), "532");
        assert_eq!(run(BaseSeqSource::Primes, Direction::Backward, 5), "117532");
        assert_eq!(run(BaseSeqSource::Odds, Direction::Backward, 5), "97531");
        assert_eq!(run(BaseSeqSource::Evens, Direction::Backward, 4), "8642");
        assert_eq!(
            run(BaseSeqSource::Squares, Direction::Backward, 5),
            "2516941"
        );
        assert_eq!(
            run(BaseSeqSource::Fibonacci, Direction::Backward, 6),
            "853211"
        );
    }

    #[test]
    fn custom_exhaustion() {
        let spec = BaseSeqSpec {
            source: BaseSeqSource::Custom(vec![4, 9]),
            direction: Direction::Forward,
        };
        assert_eq!(concatenated_term(&spec, 2).unwrap().to_string(), "49");
        assert_eq!(concatenated_term(&spec, 3), Err(SeqError::SourceExhausted));
    }
}
