//! Inferior/superior f-parts of a real argument, and their fractional parts.

use crate::{FnError, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum FPartFunction {
    Primes,
    Squares,
    Cubes,
    Factorials,
    Custom(Vec<u64>),
}

impl FPartFunction {
    /// Values of f in increasing order, up to the first value >= cap.
    fn values_through(&self, cap: f64) -> Vec<u64> {
        let mut out = Vec::new();
        match self {
            FPartFunction::Primes => {
                let mut p = 2u64;
                loop {
                    out.push(p);
                    if p as f64 >= cap {
                        break;
                    }
                    p = numeric_core::next_prime(p);
                }
            }
            FPartFunction::Squares => {
                let mut k = 0u64;
                loop {
                    out.push(k * k);
                    if (k * k) as f64 >= cap {
                        break;
                    }
                    k += 1;
                }
            }
            FPartFunction::Cubes => {
                let mut k = 0u64;
                loop {
                    out.push(k * k * k);
                    if (k * k * k) as f64 >= cap {
                        break;
                    }
                    k += 1;
                }
            }
            FPartFunction::Factorials => {
                let mut f = 1u64;
                let mut k = 1u64;
                loop {
                    out.push(f);
                    if f as f64 >= cap {
                        break;
                    }
                    k += 1;
                    f *= k;
                }
            }
            FPartFunction::Custom(vals) => {
                for &v in vals {
                    out.push(v);
                    if v as f64 >= cap {
                        break;
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FPartDirection {
    Inferior,
    Superior,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FPartSpec {
    pub f: FPartFunction,
    pub direction: FPartDirection,
}

/// Inferior: largest f(k) <= x. Superior: smallest f(k) >= x.
/// Returns the value f(k), matching the published value sequences.
pub fn f_part(spec: &FPartSpec, x: f64) -> Result<u64> {
    let vals = spec.f.values_through(x + 1.0);
    match spec.direction {
        FPartDirection::Inferior => vals
            .iter()
            .rev()
            .find(|&&v| (v as f64) <= x)
            .copied()
            .ok_or(FnError::Domain("x below the least value of f")),
        FPartDirection::Superior => vals
            .iter()
            .find(|&&v| (v as f64) >= x)
            .copied()
            .ok_or(FnError::Domain("no f value at or above x")),
    }
}

/// Inferior fractional part x - ISf(x); superior fractional part SSf(x) - x.
pub fn fractional_f_part(spec: &FPartSpec, x: f64) -> Result<f64> {
    let v = f_part(spec, x)? as f64;
    Ok(match spec.direction {
        FPartDirection::Inferior => x - v,
        FPartDirection::Superior => v - x,
    })
}

/// Published inferior prime part values start at x = 2.
pub fn inferior_prime_part(x: u64) -> Result<u64> {
    f_part(
        &FPartSpec {
            f: FPartFunction::Primes,
            direction: FPartDirection::Inferior,
        },
        x as f64,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: FPartFunction, direction: FPartDirection) -> FPartSpec {
        FPartSpec { f, direction }
    }

    #[test]
    fn prime_parts() {
        use FPartDirection::*;
        use FPartFunction::*;
        assert_eq!(f_part(&spec(Primes, Inferior), 10.0).unwrap(), 7);
        assert_eq!(f_part(&spec(Primes, Superior), 10.0).unwrap(), 11);
        // Published prefixes: inferior from n = 2, superior from n = 1.
        let inf: Vec<u64> = (2..=30)
            .map(|n| f_part(&spec(Primes, Inferior), n as f64).unwrap())
            .collect();
        assert_eq!(
            inf,
            vec![2, 3, 3, 5, 5, 7, 7, 7, 7, 11, 11, 13, 13, 13, 13, 17, 17, 19, 19, 19, 19, 23,
                 23, 23, 23, 23, 23, 29, 29]
        );
        let sup: Vec<u64> = (1..=20)
            .map(|n| f_part(&spec(Primes, Superior), n as f64).unwrap())
            .collect();
        assert_eq!(
            sup,
            vec![2, 2, 3, 5, 5, 7, 7, 11, 11, 11, 11, 13, 13, 17, 17, 17, 17, 19, 19, 23]
        );
    }

    #[test]
    fn square_parts_and_fractions() {
        use FPartDirection::*;
        use FPartFunction::*;
        assert_eq!(f_part(&spec(Squares, Inferior), 12.501).unwrap(), 9);
        let frac = fractional_f_part(&spec(Squares, Inferior), 12.501).unwrap();
        assert!((frac - 3.501).abs() < 1e-9);
        // Superior cube part of 12.501 is 27, fractional 14.499.
        let sup = fractional_f_part(&spec(Cubes, Superior), 12.501).unwrap();
        assert!((sup - 14.499).abs() < 1e-9);
        // Fractional prime part of 12.501 is 1.501.
        let fp = fractional_f_part(&spec(Primes, Inferior), 12.501).unwrap();
        assert!((fp - 1.501).abs() < 1e-9);
        // Fractional factorial part of 12.501 is 6.501.
        let ff = fractional_f_part(&spec(Factorials, Inferior), 12.501).unwrap();
        assert!((ff - 6.501).abs() < 1e-9);
    }

    #[test]
    fn below_domain_errors() {
        assert!(f_part(
            &spec(FPartFunction::Primes, FPartDirection::Inferior),
            1.5
        )
        .is_err());
    }

    #[test]
    fn fractional_parts_bounded_by_gap() {
        use FPartDirection::*;
        let functions = [
            FPartFunction::Primes,
            FPartFunction::Squares,
            FPartFunction::Cubes,
            FPartFunction::Factorials,
        ];
        let mut state = 0x12345u64;
        let mut rand = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for f in functions {
            for _ in 0..1000 {
                let x = 4.0 + rand() * 996.0;
                let inf = spec(f.clone(), Inferior);
                let lower = f_part(&inf, x).unwrap();
                let upper = f_part(&spec(f.clone(), Superior), x).unwrap();
                let frac = fractional_f_part(&inf, x).unwrap();
                assert!(frac >= 0.0);
                if (lower as f64 - upper as f64).abs() > 0.0 {
                    // gap to the next f value bounds the fractional part
                    assert!(frac < (upper - lower) as f64 + 1e-12);
                }
            }
        }
    }
}
