//! Arbitrary-precision integer utilities shared by every other crate in the
//! workspace: digit manipulation, primality, factorization, integer roots,
//! digit permutations and a handful of digit-pattern classifiers.

pub mod digits;
pub mod factor;
pub mod permute;
pub mod primality;
pub mod roots;
pub mod special;

pub use digits::{
    concat, concat_in_base, counter, digit_count, digit_position, digits_of, generalized_period,
    is_palindrome, reverse_number, value_of, DigitString,
};
pub use factor::{
    distinct_prime_count, divisor_count, divisor_sum, divisors, euler_phi, factorize,
    greatest_proper_divisor, largest_prime_factor, FactorMap,
};
pub use permute::digit_permutations;
pub use primality::{is_prime, is_prime_u64, next_prime, primes_up_to};
pub use roots::{integer_root, integer_root_u64, is_perfect_power, is_perfect_power_u64};
pub use special::{
    classify_by_proper_divisor_product, gsp_check, proper_divisor_product, wrong_number_check,
    DivisorProductFlags,
};

use num_bigint::BigUint;

/// Arbitrary-precision non-negative integer used for every sequence term.
pub type Natural = BigUint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A base smaller than 2 was supplied to a positional routine.
    BadBase(u32),
    /// Argument outside the operation's stated domain.
    Domain(&'static str),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::BadBase(b) => write!(f, "base {b} is not a valid positional base (need >= 2)"),
            Error::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
