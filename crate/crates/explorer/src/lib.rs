//! The experiments layer: additive prime tables, product sequences,
//! recurrence-defined sets, iterated-map loop analysis, grid puzzles, and
//! the bounded conjecture scans.

pub mod carpet;
pub mod gaddon;
pub mod goldbach;
pub mod loops;
pub mod magic;
pub mod products;
pub mod recurrence;
pub mod relationship;
pub mod scans;

pub use carpet::{carpet_c, carpet_rows};
pub use gaddon::{gadd_on_report, GAddOnReport};
pub use goldbach::{goldbach_t, pair_table, triple_plane_table, vinogradov_a, vinogradov_v};
pub use loops::{periodic_loop, LoopKind, LoopReport};
pub use magic::{magic_index, magic_square_check, MagicIndex};
pub use products::{infinite_product_partial, product_sequence, ProductKind, ProductSeries};
pub use recurrence::{
    multiplicative_builder, partial_perfect_additive, progression_avoider, recurrence_set,
    MultiplicativeKind, Polarity, ProgressionKind, RecurrenceRelation, RecurrenceSetSpec,
};
pub use relationship::{duplet_search, relationship_search, triplet_search, RelationLaw};
pub use scans::{
    bad_number_scan, expression_prime_search, partition_count, prime_conjecture_count,
    simultaneous_prime_check, BadNumberReport, ExpressionForm, WilsonInstance,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExploreError {
    Domain(&'static str),
}

impl std::fmt::Display for ExploreError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExploreError::Domain(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for ExploreError {}

pub type Result<T> = std::result::Result<T, ExploreError>;
