//! The digit-construction and concatenation families behind one `term`
//! entry point.

use crate::words::{english_name, letter_code};
use crate::{Result, SeqError};
use num_bigint::BigUint;
use num_traits::Zero;
use numeric_core::digits::{concat_in_base, digit_count};
use numeric_core::Natural;

/// Functions available to the generic concatenation family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenericFunc {
    Identity,
    Square,
    Cube,
    Factorial,
    Prime,
    Fibonacci,
}

impl GenericFunc {
    fn eval(&self, n: u64) -> Natural {
        match self {
            GenericFunc::Identity => BigUint::from(n),
            GenericFunc::Square => BigUint::from(n) * BigUint::from(n),
            GenericFunc::Cube => BigUint::from(n).pow(3),
            GenericFunc::Factorial => (1..=n).fold(BigUint::from(1u8), |a, i| a * i),
            GenericFunc::Prime => {
                let mut p = 2u64;
                for _ in 1..n {
                    p = numeric_core::next_prime(p);
                }
                BigUint::from(p)
            }
            GenericFunc::Fibonacci => {
                let (mut a, mut b) = (BigUint::from(1u8), BigUint::from(1u8));
                for _ in 1..n {
                    let next = &a + &b;
                    a = std::mem::replace(&mut b, next);
                }
                a
            }
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "n" | "identity" => GenericFunc::Identity,
            "square" => GenericFunc::Square,
            "cube" => GenericFunc::Cube,
            "factorial" => GenericFunc::Factorial,
            "prime" => GenericFunc::Prime,
            "fibonacci" => GenericFunc::Fibonacci,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Consecutive,
    Circular,
    Symmetric,
    Mirror,
    Deconstructive,
    Permutation,
    Reverse,
    AntiSymmetric,
    ConcatenatedNatural,
    Unary,
    NoPrimeDigit,
    NoSquareDigit,
    PiercedChain,
    CodePuzzle,
    ThreesOnesSimple,
    ThreesOnesNested,
    GenericConcat(Vec<GenericFunc>),
}

impl Family {
    pub fn id(&self) -> &'static str {
        match self {
            Family::Consecutive => "consecutive",
            Family::Circular => "circular",
            Family::Symmetric => "symmetric",
            Family::Mirror => "mirror",
            Family::Deconstructive => "deconstructive",
            Family::Permutation => "permutation",
            Family::Reverse => "reverse",
            Family::AntiSymmetric => "anti_symmetric",
            Family::ConcatenatedNatural => "concatenated_natural",
            Family::Unary => "unary",
            Family::NoPrimeDigit => "no_prime_digit",
            Family::NoSquareDigit => "no_square_digit",
            Family::PiercedChain => "pierced_chain",
            Family::CodePuzzle => "code_puzzle",
            Family::ThreesOnesSimple => "threes_ones_simple",
            Family::ThreesOnesNested => "threes_ones_nested",
            Family::GenericConcat(_) => "generic_concat",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    /// Numeration base for the concatenating families (default 10).
    pub base: u32,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        FamilySpec { family, base: 10 }
    }
}

/// A sequence term: a number, a digit text that may carry leading zeros
/// (letter codes), or the empty value left when every digit is removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceTerm {
    Number(Natural),
    Text(String),
    Empty,
}

impl SequenceTerm {
    pub fn display(&self) -> String {
        match self {
            SequenceTerm::Number(n) => n.to_string(),
            SequenceTerm::Text(s) => s.clone(),
            SequenceTerm::Empty => "-".to_string(),
        }
    }

    pub fn as_number(&self) -> Option<&Natural> {
        match self {
            SequenceTerm::Number(n) => Some(n),
            _ => None,
        }
    }
}

fn concat_run<I: Iterator<Item = u64>>(items: I, base: u32) -> Natural {
    let mut acc = BigUint::zero();
    for v in items {
        acc = concat_in_base(&acc, &BigUint::from(v), base);
    }
    acc
}

/// The n-th term of the family, n >= 1.
pub fn term(spec: &FamilySpec, n: u64) -> Result<SequenceTerm> {
    if n < 1 {
        return Err(SeqError::Domain("families are 1-indexed"));
    }
    if spec.base < 2 {
        return Err(SeqError::Domain("base must be at least 2"));
    }
    let b = spec.base;
    let number = |v: Natural| Ok(SequenceTerm::Number(v));
    match &spec.family {
        Family::Consecutive => number(concat_run(1..=n, b)),
        Family::Circular => {
            // Block m holds the m rotations of 1..m; find the block.
            let mut m = 1u64;
            let mut before = 0u64;
            while before + m < n {
                before += m;
                m += 1;
            }
            let r = (n - before - 1) as usize; // rotate left by r
            let items: Vec<u64> = (1..=m).collect();
            let rotated = items[r..].iter().chain(items[..r].iter()).copied();
            number(concat_run(rotated, b))
        }
        Family::Symmetric => {
            // Odd 2k-1: 1..k then k-1..1; even 2k: 1..k then k..1.
            let k = n.div_ceil(2);
            let rising = 1..=k;
            let falling: Box<dyn Iterator<Item = u64>> = if n % 2 == 1 {
                Box::new((1..k).rev())
            } else {
                Box::new((1..=k).rev())
            };
            number(concat_run(rising.chain(falling), b))
        }
        Family::Mirror => number(concat_run((2..=n).rev().chain(1..=n), b)),
        Family::Deconstructive => {
            // Successive length-n slices of the repeating stream 1..9.
            let start = n * (n - 1) / 2;
            let digits = (0..n).map(|i| (start + i) % 9 + 1);
            number(concat_run(digits, b))
        }
        Family::Permutation => {
            let odds = (1..=n).map(|i| 2 * i - 1);
            let evens = (1..=n).rev().map(|i| 2 * i);
            number(concat_run(odds.chain(evens), b))
        }
        Family::Reverse => number(concat_run((1..=n).rev(), b)),
        Family::AntiSymmetric => number(concat_run((1..=n).chain(1..=n), b)),
        Family::ConcatenatedNatural => number(concat_run(std::iter::repeat(n).take(n as usize), b)),
        Family::Unary => {
            let mut p = 2u64;
            for _ in 1..n {
                p = numeric_core::next_prime(p);
            }
            let ones = "1".repeat(p as usize);
            number(ones.parse().expect("repunit literal"))
        }
        Family::NoPrimeDigit => strip_digits(n, &[2, 3, 5, 7]),
        Family::NoSquareDigit => strip_digits(n, &[0, 1, 4, 9]),
        Family::PiercedChain => {
            // 101, 1010101, ...: n-1 extra "0101" groups after 101.
            let mut s = String::from("101");
            for _ in 1..n {
                s.push_str("0101");
            }
            number(s.parse().expect("chain literal"))
        }
        Family::CodePuzzle => Ok(SequenceTerm::Text(letter_code(&english_name(n)))),
        Family::ThreesOnesSimple => {
            let mut s = "3".repeat(n as usize);
            s.push('1');
            number(s.parse().expect("threes literal"))
        }
        Family::ThreesOnesNested => {
            let mut s = String::new();
            for k in 1..=n {
                s.push_str(&"3".repeat(k as usize));
                s.push('1');
            }
            number(s.parse().expect("threes literal"))
        }
        Family::GenericConcat(funcs) => {
            if funcs.is_empty() {
                return Err(SeqError::Domain("generic concatenation needs functions"));
            }
            let mut acc = BigUint::zero();
            for f in funcs {
                let v = f.eval(n);
                acc = concat_in_base(&acc, &v, b);
            }
            number(acc)
        }
    }
}

fn strip_digits(n: u64, remove: &[u8]) -> Result<SequenceTerm> {
    let digits = BigUint::from(n).to_radix_be(10);
    let kept: Vec<u8> = digits
        .iter()
        .copied()
        .filter(|d| !remove.contains(d))
        .collect();
    if kept.is_empty() {
        return Ok(SequenceTerm::Empty);
    }
    Ok(SequenceTerm::Number(
        BigUint::from_radix_be(&kept, 10).expect("filtered digits"),
    ))
}

/// Total decimal digit count of a term (text keeps leading zeros).
pub fn term_digit_count(t: &SequenceTerm) -> usize {
    match t {
        SequenceTerm::Number(n) => digit_count(n, 10),
        SequenceTerm::Text(s) => s.len(),
        SequenceTerm::Empty => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use numeric_core::digits::nat_str;

    fn num(spec: &FamilySpec, n: u64) -> Natural {
        match term(spec, n).unwrap() {
            SequenceTerm::Number(v) => v,
            other => panic!("expected number, got {other:?}"),
        }
    }

    fn spec(f: Family) -> FamilySpec {
        FamilySpec::new(f)
    }

    #[test]
    fn consecutive_prefix() {
        let s = spec(Family::Consecutive);
        let got: Vec<String> = (1..=10).map(|n| num(&s, n).to_string()).collect();
        assert_eq!(
            got,
            vec![
                "1", "12", "123", "1234", "12345", "123456", "1234567", "12345678", "123456789",
                "12345678910"
            ]
        );
    }

    #[test]
    fn circular_prefix() {
        let s = spec(Family::Circular);
        let got: Vec<String> = (1..=15).map(|n| num(&s, n).to_string()).collect();
        assert_eq!(
            got,
            vec![
                "1", "12", "21", "123", "231", "312", "1234", "2341", "3412", "4123", "12345",
                "23451", "34512", "45123", "51234"
            ]
        );
    }

    #[test]
    fn symmetric_prefix() {
        let s = spec(Family::Symmetric);
        let got: Vec<String> = (1..=12).map(|n| num(&s, n).to_string()).collect();
        assert_eq!(
            got,
            vec![
                "1",
                "11",
                "121",
                "1221",
                "12321",
                "123321",
                "1234321",
                "12344321",
                "123454321",
                "1234554321",
                "12345654321",
                "123456654321"
            ]
        );
        // Terms 19 and 20 carry the two-digit block 10.
        assert_eq!(num(&s, 19), nat_str("12345678910987654321"));
        assert_eq!(num(&s, 20), nat_str("1234567891010987654321"));
    }

    #[test]
    fn mirror_prefix() {
        let s = spec(Family::Mirror);
        let got: Vec<String> = (1..=6).map(|n| num(&s, n).to_string()).collect();
        assert_eq!(
            got,
            vec!["1", "212", "32123", "4321234", "543212345", "65432123456"]
        );
        // Palindromic through 9, not at 10.
        for n in 1..=9 {
            assert!(numeric_core::is_palindrome(&num(&s, n)), "at {n}");
        }
        assert!(!numeric_core::is_palindrome(&num(&s, 10)));
    }

    #[test]
    fn deconstructive_prefix() {
        let s = spec(Family::Deconstructive);
        let got: Vec<String> = (1..=10).map(|n| num(&s, n).to_string()).collect();
        assert_eq!(
            got,
            vec![
                "1",
                "23",
                "456",
                "7891",
                "23456",
                "789123",
                "4567891",
                "23456789",
                "123456789",
                "1234567891"
            ]
        );
    }

    #[test]
    fn permutation_prefix() {
        let s = spec(Family::Permutation);
        let got: Vec<String> = (1..=5).map(|n| num(&s, n).to_string()).collect();
        assert_eq!(
            got,
            vec!["12", "1342", "135642", "13578642", "13579108642"]
        );
    }

    #[test]
    fn reverse_and_anti_symmetric() {
        assert_eq!(num(&spec(Family::Reverse), 5).to_string(), "54321");
        assert_eq!(
            num(&spec(Family::Reverse), 12).to_string(),
            "121110987654321"
        );
        let anti: Vec<String> = (1..=4)
            .map(|n| num(&spec(Family::AntiSymmetric), n).to_string())
            .collect();
        assert_eq!(anti, vec!["11", "1212", "123123", "12341234"]);
    }

    #[test]
    fn concatenated_natural_and_unary() {
        let got: Vec<String> = (1..=5)
            .map(|n| num(&spec(Family::ConcatenatedNatural), n).to_string())
            .collect();
        assert_eq!(got, vec!["1", "22", "333", "4444", "55555"]);
        assert_eq!(num(&spec(Family::Unary), 1).to_string(), "11");
        assert_eq!(num(&spec(Family::Unary), 3).to_string(), "11111");
        assert_eq!(num(&spec(Family::Unary), 4).to_string(), "1111111");
    }

    #[test]
    fn digit_strippers() {
        let np = spec(Family::NoPrimeDigit);
        assert_eq!(term(&np, 2).unwrap(), SequenceTerm::Empty);
        assert_eq!(term(&np, 20).unwrap().display(), "0");
        // Printed prefix with empties skipped.
        let printed: Vec<&str> = vec![
            "1", "4", "6", "8", "9", "10", "11", "1", "1", "14", "1", "16", "1", "18", "19", "0",
        ];
        let got: Vec<String> = (1..=20)
            .filter_map(|n| match term(&np, n).unwrap() {
                SequenceTerm::Empty => None,
                t => Some(t.display()),
            })
            .collect();
        assert_eq!(got, printed);

        let ns = spec(Family::NoSquareDigit);
        let got: Vec<String> = (1..=28)
            .filter_map(|n| match term(&ns, n).unwrap() {
                SequenceTerm::Empty => None,
                t => Some(t.display()),
            })
            .collect();
        assert_eq!(
            got,
            vec!["2", "3", "5", "6", "7", "8", "2", "3", "5", "6", "7", "8", "2", "2", "22",
                 "23", "2", "25", "26", "27", "28"]
        );
    }

    #[test]
    fn pierced_chain_prefix_and_divisibility() {
        let s = spec(Family::PiercedChain);
        assert_eq!(num(&s, 1).to_string(), "101");
        assert_eq!(num(&s, 2).to_string(), "1010101");
        assert_eq!(num(&s, 3).to_string(), "10101010101");
        for n in 1..=50 {
            let v = num(&s, n);
            assert!((v % BigUint::from(101u8)).is_zero(), "chain {n} not 101-divisible");
        }
    }

    #[test]
    fn code_puzzle_prefix() {
        let s = spec(Family::CodePuzzle);
        let printed = [
            "151405",
            "202315",
            "2008180505",
            "06152118",
            "06092205",
            "190924",
            "1905220514",
            "0509070820",
            "14091405",
            "200514",
            "051205220514",
        ];
        for (i, want) in printed.iter().enumerate() {
            assert_eq!(term(&s, (i + 1) as u64).unwrap().display(), *want);
        }
    }

    #[test]
    fn threes_and_ones() {
        let simple = spec(Family::ThreesOnesSimple);
        let got: Vec<String> = (1..=4).map(|n| num(&simple, n).to_string()).collect();
        assert_eq!(got, vec!["31", "331", "3331", "33331"]);
        let nested = spec(Family::ThreesOnesNested);
        let got: Vec<String> = (1..=4).map(|n| num(&nested, n).to_string()).collect();
        assert_eq!(got, vec!["31", "31331", "313313331", "31331333133331"]);
    }

    #[test]
    fn generic_concatenation() {
        let s = FamilySpec::new(Family::GenericConcat(vec![
            GenericFunc::Identity,
            GenericFunc::Square,
        ]));
        let got: Vec<String> = (1..=4).map(|n| num(&s, n).to_string()).collect();
        assert_eq!(got, vec!["11", "24", "39", "416"]);
    }

    #[test]
    fn arbitrary_base_consecutive() {
        let mut s = spec(Family::Consecutive);
        s.base = 2;
        // 1, 110, 11011 in binary digits = 1, 6, 27 in value.
        assert_eq!(num(&s, 1).to_string(), "1");
        assert_eq!(num(&s, 2).to_string(), "6");
        assert_eq!(num(&s, 3).to_string(), "27");
    }
}
