//! Generators for the digit-construction and concatenation sequence
//! families, plus the permutation-based pseudo classifiers and the digital
//! and partial-digital subsequence filters.

pub mod concat_seq;
pub mod constructive;
pub mod digital;
pub mod families;
pub mod opseq;
pub mod partial;
pub mod pseudo;
pub mod subseq;
pub mod uniform;
pub mod words;

pub use concat_seq::{concatenated_term, BaseSeqSource, BaseSeqSpec, Direction};
pub use constructive::constructive_terms;
pub use digital::{digit_count_sequence, digit_only_subsequence, DigitCountSource, SourceSet};
pub use families::{term, Family, FamilySpec, GenericFunc, SequenceTerm};
pub use opseq::{operation_sequence, OpSeqMode, OpSeqOutcome, Operator};
pub use partial::{
    f_digital_filter, lucky_numbers, partial_digital_filter, FDigitalFunc, PartialPredicate,
};
pub use pseudo::{
    almost_primes, full_digital_filter, pseudo_classify, AlmostPrimeKind, PseudoFlags,
    PseudoProperty,
};
pub use subseq::{subsequence_closed_form, SubSequenceKind};
pub use uniform::{uniform_sequence, UniformOutcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeqError {
    Domain(&'static str),
    /// A finite custom source ran out of terms.
    SourceExhausted,
}

impl std::fmt::Display for SeqError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeqError::Domain(m) => write!(f, "{m}"),
            SeqError::SourceExhausted => write!(f, "custom source sequence exhausted"),
        }
    }
}

impl std::error::Error for SeqError {}

pub type Result<T> = std::result::Result<T, SeqError>;
