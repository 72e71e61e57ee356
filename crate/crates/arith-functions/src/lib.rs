//! The factorial-divisibility function family and the rest of the arithmetic
//! function catalog: complements, residues, exponents, f-parts, iterated
//! compositions, and the named functions SK, SW, SNTP, SP, Z.

pub mod complements;
pub mod fpart;
pub mod iterate;
pub mod metallic;
pub mod misc;
pub mod named;
pub mod prime_table;
pub mod progressions;
pub mod ratios;
pub mod residues;
pub mod smarandache;
pub mod theorems;

pub use complements::{
    double_factorial_complement, double_factorial_df, power_complement,
    prime_additive_complement, quotient, smarandacheian_complement, ComplementLaw,
    IncreasingRange,
};
pub use fpart::{f_part, fractional_f_part, FPartDirection, FPartFunction, FPartSpec};
pub use iterate::{iterate, IterationKind, IterationSpec, SelfMap};
pub use metallic::{metallic_mean, MetallicForm};
pub use misc::{
    analogue_a, anti_coprime, anti_prime, cardinality_s, erdos_smarandache_test,
    s_multiplicative_check,
};
pub use named::{ceil_k, smarandache_kurepa, smarandache_wagstaff, sntp, sp_power, SntpOutcome};
pub use prime_table::PrimeTable;
pub use progressions::{prime_count_in_progression, ProgressionKind};
pub use ratios::{fs_sum, s1, s2, s3, theta, theta_bar};
pub use residues::{exponent, m_power_residue, residual_l};
pub use smarandache::{
    pseudo_smarandache, s_first_kind, s_p, s_second_kind, s_table, s_third_kind, smarandache_s,
};
pub use theorems::{coprime_criterion, divisibility_check, generalized_euler, inequality_check};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FnError {
    Domain(&'static str),
    /// Search exceeded its bound; carries the bound.
    SearchBound(u64),
    /// Monotonicity precondition violated at this argument.
    NotMonotone(u64),
}

impl std::fmt::Display for FnError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FnError::Domain(m) => write!(f, "{m}"),
            FnError::SearchBound(b) => write!(f, "no result within search bound {b}"),
            FnError::NotMonotone(x) => write!(f, "map not monotone at {x}"),
        }
    }
}

impl std::error::Error for FnError {}

pub type Result<T> = std::result::Result<T, FnError>;
