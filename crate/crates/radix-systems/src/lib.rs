//! Generalized numeral bases with greedy codecs, factorial-base arithmetic,
//! the column worktable algorithms, and the folded products and sums.

pub mod base;
pub mod factorial_arith;
pub mod folds;
pub mod worktable;

pub use base::{decode, encode, superior_part_summands, Codec, GeneralizedBase, RadixNumeral};
pub use factorial_arith::{factorial_add, factorial_sub};
pub use folds::{smarandacheial, summant_absolute, summant_signed, FoldBound};
pub use worktable::{divide_by_power, romanian_multiply, DivisionTable, MultiplicationTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadixError {
    Domain(&'static str),
    /// A digit exceeded its positional bound.
    DigitBound {
        position: usize,
        digit: u64,
        bound: u64,
    },
    /// Subtraction would go negative.
    Negative,
}

impl std::fmt::Display for RadixError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RadixError::Domain(m) => write!(f, "{m}"),
            RadixError::DigitBound {
                position,
                digit,
                bound,
            } => write!(
                f,
                "digit {digit} at position {position} exceeds bound {bound}"
            ),
            RadixError::Negative => write!(f, "subtraction result would be negative"),
        }
    }
}

impl std::error::Error for RadixError {}

pub type Result<T> = std::result::Result<T, RadixError>;
