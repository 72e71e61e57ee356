//! Deletion-based sequence constructions behind one uniform runner.
//!
//! Two families: value sieves decide membership arithmetically (cube-free,
//! m-power-free, square-free, irrational-root, odd), positional sieves
//! delete by position on the evolving list (binary, trinary, n-ary,
//! consecutive, k-ary consecutive, general, more-general, random).

mod positional;
mod random;
mod rng;
mod value;

pub use rng::SplitMix64;

use numeric_core::Error as CoreError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SieveError {
    /// Positional sieves have no closed membership predicate.
    NoPredicate(&'static str),
    /// Sieve generator sequence malformed (not increasing, u <= 1, v >= u).
    BadGenerator(&'static str),
    Core(CoreError),
}

impl std::fmt::Display for SieveError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SieveError::NoPredicate(k) => write!(f, "sieve kind {k} has no closed predicate"),
            SieveError::BadGenerator(msg) => write!(f, "bad sieve generator: {msg}"),
            SieveError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SieveError {}

/// How the random sieve picks each next kept element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RandomChoices {
    /// Deterministic pseudo-random stream from this seed.
    Seed(u64),
    /// Explicit kept elements, e.g. the published 6, 19, 35 run.
    Explicit(Vec<u64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SieveKind {
    CubeFree,
    MPowerFree(u32),
    SquareFree,
    IrrationalRoot,
    OddSieve,
    Binary,
    Trinary,
    NAry(u64),
    KAryConsecutive,
    Consecutive,
    General { generators: Vec<u64> },
    MoreGeneral { generators: Vec<u64>, keeps: Vec<u64> },
    Random(RandomChoices),
}

impl SieveKind {
    pub fn id(&self) -> &'static str {
        match self {
            SieveKind::CubeFree => "cube_free",
            SieveKind::MPowerFree(_) => "m_power_free",
            SieveKind::SquareFree => "square_free",
            SieveKind::IrrationalRoot => "irrational_root",
            SieveKind::OddSieve => "odd_sieve",
            SieveKind::Binary => "binary",
            SieveKind::Trinary => "trinary",
            SieveKind::NAry(_) => "n_ary",
            SieveKind::KAryConsecutive => "k_ary_consecutive",
            SieveKind::Consecutive => "consecutive",
            SieveKind::General { .. } => "general",
            SieveKind::MoreGeneral { .. } => "more_general",
            SieveKind::Random(_) => "random",
        }
    }

    fn is_value_kind(&self) -> bool {
        matches!(
            self,
            SieveKind::CubeFree
                | SieveKind::MPowerFree(_)
                | SieveKind::SquareFree
                | SieveKind::IrrationalRoot
                | SieveKind::OddSieve
        )
    }
}

/// Outcome of one sieve run up to a limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveRun {
    pub kind_id: &'static str,
    pub limit: u64,
    pub survivors: Vec<u64>,
    /// Numbers deleted per pass/stage, where the construction has passes.
    pub deletion_log: Option<Vec<usize>>,
    /// Elements explicitly chosen by the random sieve.
    pub chosen: Option<Vec<u64>>,
}

/// Run `kind` over the natural numbers up to `limit`.
pub fn run_sieve(kind: &SieveKind, limit: u64) -> Result<SieveRun, SieveError> {
    if let SieveKind::General { generators } = kind {
        validate_generators(generators)?;
    }
    if let SieveKind::MoreGeneral { generators, keeps } = kind {
        validate_generators(generators)?;
        if keeps.len() != generators.len()
            || keeps.iter().zip(generators).any(|(&v, &u)| v >= u || v < 1)
        {
            return Err(SieveError::BadGenerator("need 1 <= v_i < u_i for every i"));
        }
    }
    let (survivors, deletion_log, chosen) = match kind {
        SieveKind::CubeFree
        | SieveKind::MPowerFree(_)
        | SieveKind::SquareFree
        | SieveKind::IrrationalRoot
        | SieveKind::OddSieve => (
            (1..=limit).filter(|&n| value::survives(kind, n)).collect(),
            None,
            None,
        ),
        SieveKind::Binary => positional::power_passes(2, limit),
        SieveKind::Trinary => positional::power_passes(3, limit),
        SieveKind::NAry(n) => {
            if *n < 2 {
                return Err(SieveError::BadGenerator("n-ary sieve needs n >= 2"));
            }
            positional::power_passes(*n, limit)
        }
        SieveKind::Consecutive => positional::consecutive(limit),
        SieveKind::KAryConsecutive => positional::k_ary_consecutive(limit),
        SieveKind::General { generators } => positional::general(generators, None, limit),
        SieveKind::MoreGeneral { generators, keeps } => {
            positional::general(generators, Some(keeps), limit)
        }
        SieveKind::Random(choices) => random::run(choices, limit),
    };
    Ok(SieveRun {
        kind_id: kind.id(),
        limit,
        survivors,
        deletion_log,
        chosen,
    })
}

/// Direct membership for value sieves; positional kinds are rejected.
pub fn survivor_predicate(kind: &SieveKind, n: u64) -> Result<bool, SieveError> {
    if !kind.is_value_kind() {
        return Err(SieveError::NoPredicate(kind.id()));
    }
    Ok(value::survives(kind, n))
}

fn validate_generators(gens: &[u64]) -> Result<(), SieveError> {
    if gens.iter().any(|&u| u <= 1) {
        return Err(SieveError::BadGenerator("generators must exceed 1"));
    }
    if gens.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SieveError::BadGenerator("generators must strictly increase"));
    }
    Ok(())
}
