//! Recurrence-defined sets (closure and avoidance), progression avoiders,
//! multiplicative builders, and the prefix-balanced additive sequence.

use crate::{ExploreError, Result};

/// Combining relations for recurrence sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecurrenceRelation {
    /// b^2 + c^2 over two distinct members.
    SquaresOfTwo,
    /// Sum of squares of one or more distinct members.
    SquaresOfAny,
    /// b^3 + c^3 over two distinct members.
    CubesOfTwo,
    /// Sum of cubes of one or more distinct members.
    CubesOfAny,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    /// Closure: results of the relation join the set.
    Positive,
    /// Avoidance: smallest numbers that are never a relation result.
    Negative,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSetSpec {
    pub seeds: Vec<u64>,
    pub relation: RecurrenceRelation,
    pub polarity: Polarity,
}

/// Members up to `limit`, increasingly ordered.
pub fn recurrence_set(spec: &RecurrenceSetSpec, limit: u64) -> Result<Vec<u64>> {
    if spec.seeds.is_empty() {
        return Err(ExploreError::Domain("recurrence sets need seeds"));
    }
    if spec.seeds.iter().any(|&s| s > limit) {
        return Err(ExploreError::Domain("limit below a seed"));
    }
    match spec.polarity {
        Polarity::Positive => Ok(positive_closure(spec, limit)),
        Polarity::Negative => Ok(negative_avoidance(spec, limit)),
    }
}

fn pair_results(relation: RecurrenceRelation, members: &[u64], limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let power = |x: u64, relation: RecurrenceRelation| -> Option<u64> {
        match relation {
            RecurrenceRelation::SquaresOfTwo | RecurrenceRelation::SquaresOfAny => x.checked_mul(x),
            RecurrenceRelation::CubesOfTwo | RecurrenceRelation::CubesOfAny => {
                x.checked_mul(x)?.checked_mul(x)
            }
        }
    };
    match relation {
        RecurrenceRelation::SquaresOfTwo | RecurrenceRelation::CubesOfTwo => {
            for (i, &b) in members.iter().enumerate() {
                for &c in &members[i + 1..] {
                    if let (Some(pb), Some(pc)) = (power(b, relation), power(c, relation)) {
                        if let Some(s) = pb.checked_add(pc) {
                            if s <= limit {
                                out.push(s);
                            }
                        }
                    }
                }
            }
        }
        RecurrenceRelation::SquaresOfAny | RecurrenceRelation::CubesOfAny => {
            // Subset sums of the member powers, bounded by limit.
            let powers: Vec<u64> = members.iter().filter_map(|&m| power(m, relation)).collect();
            let mut sums = std::collections::BTreeSet::new();
            sums.insert(0u64);
            for p in powers {
                let mut next = sums.clone();
                for &s in &sums {
                    if let Some(v) = s.checked_add(p) {
                        if v <= limit {
                            next.insert(v);
                        }
                    }
                }
                sums = next;
            }
            out.extend(sums.into_iter().filter(|&s| s > 0));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn positive_closure(spec: &RecurrenceSetSpec, limit: u64) -> Vec<u64> {
    // Seeds may repeat (distinct terms with equal values); generated values
    // enter once.
    let mut pool: Vec<u64> = spec.seeds.to_vec();
    pool.sort_unstable();
    let mut present: std::collections::BTreeSet<u64> = pool.iter().copied().collect();
    loop {
        let results = pair_results(spec.relation, &pool, limit);
        let mut grew = false;
        for r in results {
            if present.insert(r) {
                pool.push(r);
                grew = true;
            }
        }
        if !grew {
            break;
        }
        pool.sort_unstable();
    }
    pool
}

fn negative_avoidance(spec: &RecurrenceSetSpec, limit: u64) -> Vec<u64> {
    let mut members: Vec<u64> = spec.seeds.to_vec();
    members.sort_unstable();
    let mut candidate = *members.last().unwrap();
    while candidate < limit {
        candidate += 1;
        let forbidden = pair_results(spec.relation, &members, candidate)
            .into_iter()
            .any(|r| r == candidate);
        if !forbidden {
            members.push(candidate);
        }
    }
    members
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProgressionKind {
    /// No t-term arithmetic progression among chosen terms.
    Arithmetic(usize),
    /// No t-term geometric progression among chosen terms.
    Geometric(usize),
}

/// Greedy smallest-next sequence avoiding the given progressions.
pub fn progression_avoider(
    kind: ProgressionKind,
    seeds: &[u64],
    count: usize,
) -> Result<Vec<u64>> {
    let t = match kind {
        ProgressionKind::Arithmetic(t) | ProgressionKind::Geometric(t) => t,
    };
    if t < 3 {
        return Err(ExploreError::Domain("progression length must be >= 3"));
    }
    if seeds.is_empty() {
        return Err(ExploreError::Domain("avoiders need at least one seed"));
    }
    let mut terms = seeds.to_vec();
    let mut candidate = *terms.last().unwrap();
    while terms.len() < count {
        candidate += 1;
        let mut trial = terms.clone();
        trial.push(candidate);
        if !has_progression(&trial, kind) {
            terms.push(candidate);
        }
    }
    terms.truncate(count);
    Ok(terms)
}

fn has_progression(sorted_terms: &[u64], kind: ProgressionKind) -> bool {
    // Terms arrive increasing; check progressions ending at the last term.
    let set: std::collections::BTreeSet<u64> = sorted_terms.iter().copied().collect();
    let &last = sorted_terms.last().unwrap();
    match kind {
        ProgressionKind::Arithmetic(t) => {
            for &second in sorted_terms.iter().rev().skip(1) {
                let d = last - second;
                if d == 0 {
                    continue;
                }
                let mut run = 2usize;
                let mut back = second;
                while run < t {
                    match back.checked_sub(d) {
                        Some(prev) if set.contains(&prev) => {
                            back = prev;
                            run += 1;
                        }
                        _ => break,
                    }
                }
                if run >= t {
                    return true;
                }
            }
            false
        }
        ProgressionKind::Geometric(t) => {
            // Rational ratio progressions x, xr, xr^2...: walk backwards
            // requiring previous * last == second^2 style relations.
            let terms: Vec<u64> = sorted_terms.to_vec();
            for &second in terms.iter().rev().skip(1) {
                if second == 0 || last % 1 != 0 {
                    continue;
                }
                // ratio = last / second as a reduced fraction p/q
                let g = gcd(last, second);
                let (p, q) = (last / g, second / g);
                if p == q {
                    continue;
                }
                let mut run = 2usize;
                let mut back = second;
                while run < t {
                    // previous = back * q / p must be integral
                    if back % p != 0 {
                        break;
                    }
                    let prev = back / p * q;
                    if prev == 0 || !set.contains(&prev) {
                        break;
                    }
                    back = prev;
                    run += 1;
                }
                if run >= t {
                    return true;
                }
            }
            false
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultiplicativeKind {
    /// Next term: smallest product of two previous distinct terms.
    Multiplicative,
    /// Next term: smallest number that is not a product of k previous
    /// distinct terms.
    NonMultiplicative(usize),
}

pub fn multiplicative_builder(
    kind: MultiplicativeKind,
    seeds: &[u64],
    count: usize,
) -> Result<Vec<u64>> {
    match kind {
        MultiplicativeKind::Multiplicative => {
            if seeds.len() < 2 {
                return Err(ExploreError::Domain("need at least two seeds"));
            }
            let mut terms = seeds.to_vec();
            while terms.len() < count {
                let last = *terms.last().unwrap();
                let mut best: Option<u64> = None;
                for (i, &a) in terms.iter().enumerate() {
                    for &b in &terms[i + 1..] {
                        if let Some(p) = a.checked_mul(b) {
                            if p > last && best.map_or(true, |cur| p < cur) {
                                best = Some(p);
                            }
                        }
                    }
                }
                match best {
                    Some(p) => terms.push(p),
                    None => return Err(ExploreError::Domain("product overflow")),
                }
            }
            terms.truncate(count);
            Ok(terms)
        }
        MultiplicativeKind::NonMultiplicative(k) => {
            if seeds.len() < k {
                return Err(ExploreError::Domain("need at least k seeds"));
            }
            let mut terms = seeds.to_vec();
            let mut candidate = *terms.last().unwrap();
            while terms.len() < count {
                candidate += 1;
                if !is_product_of_k_distinct(candidate, &terms, k) {
                    terms.push(candidate);
                }
            }
            Ok(terms)
        }
    }
}

fn is_product_of_k_distinct(target: u64, terms: &[u64], k: usize) -> bool {
    fn rec(target: u64, terms: &[u64], start: usize, k: usize, acc: u64) -> bool {
        if k == 0 {
            return acc == target;
        }
        for i in start..terms.len() {
            match acc.checked_mul(terms[i]) {
                Some(next) if next <= target => {
                    if rec(target, terms, i + 1, k - 1, next) {
                        return true;
                    }
                }
                _ => {}
            }
        }
        false
    }
    rec(target, terms, 0, k, 1)
}

/// The prefix-balanced signed sequence: a1 = a2 = 1, a(2p+1) = a(p+1) - 1,
/// a(2p+2) = a(p+1) + 1.
pub fn partial_perfect_additive(count: usize) -> Result<Vec<i64>> {
    if count < 2 {
        return Err(ExploreError::Domain("sequence starts with two terms"));
    }
    let mut a = vec![0i64; count + 1];
    a[1] = 1;
    a[2] = 1;
    for p in 1..=count / 2 {
        if 2 * p + 1 <= count {
            a[2 * p + 1] = a[p + 1] - 1;
        }
        if 2 * p + 2 <= count {
            a[2 * p + 2] = a[p + 1] + 1;
        }
    }
    Ok(a[1..=count].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_of_two_closure() {
        let spec = RecurrenceSetSpec {
            seeds: vec![1, 2],
            relation: RecurrenceRelation::SquaresOfTwo,
            polarity: Polarity::Positive,
        };
        assert_eq!(
            recurrence_set(&spec, 700).unwrap(),
            vec![1, 2, 5, 26, 29, 677, 680]
        );
        let full = recurrence_set(&spec, 458_400).unwrap();
        assert_eq!(
            full,
            vec![1, 2, 5, 26, 29, 677, 680, 701, 842, 845, 866, 1517, 458330, 458333, 458354]
        );
    }

    #[test]
    fn cubes_of_two_closure() {
        let spec = RecurrenceSetSpec {
            seeds: vec![1, 2],
            relation: RecurrenceRelation::CubesOfTwo,
            polarity: Polarity::Positive,
        };
        assert_eq!(recurrence_set(&spec, 1000).unwrap(), vec![1, 2, 9, 730, 737]);
    }

    #[test]
    fn squares_of_any_closure() {
        // The second printed 1 is the square of the first (one-term sum);
        // the seed pair carries that multiplicity.
        let spec = RecurrenceSetSpec {
            seeds: vec![1, 1],
            relation: RecurrenceRelation::SquaresOfAny,
            polarity: Polarity::Positive,
        };
        let got = recurrence_set(&spec, 46).unwrap();
        assert_eq!(
            got,
            vec![
                1, 1, 2, 4, 5, 6, 16, 17, 18, 20, 21, 22, 25, 26, 27, 29, 30, 31, 36, 37, 38,
                40, 41, 42, 43, 45, 46
            ]
        );
    }

    #[test]
    fn positive_closure_is_closed() {
        for (relation, limit) in [
            (RecurrenceRelation::SquaresOfTwo, 1000u64),
            (RecurrenceRelation::CubesOfTwo, 1000),
        ] {
            let spec = RecurrenceSetSpec {
                seeds: vec![1, 2],
                relation,
                polarity: Polarity::Positive,
            };
            let members = recurrence_set(&spec, limit).unwrap();
            let results = pair_results(relation, &members, limit);
            for r in results {
                assert!(members.contains(&r), "{relation:?} not closed at {r}");
            }
        }
    }

    #[test]
    fn negative_avoidance_squares() {
        let spec = RecurrenceSetSpec {
            seeds: vec![1, 2],
            relation: RecurrenceRelation::SquaresOfTwo,
            polarity: Polarity::Negative,
        };
        // Published: 1,2,3,4,6,7,8,9,11,12,14,15,16,18,19,21.
        assert_eq!(
            recurrence_set(&spec, 21).unwrap(),
            vec![1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 14, 15, 16, 18, 19, 21]
        );
    }

    #[test]
    fn non_arithmetic_progression() {
        // The published prefix ends "..., 40, 41, 64", but 64 completes the
        // progression 10, 37, 64; the greedy construction continues with 82
        // (the shifted base-3 characterization).
        let got = progression_avoider(ProgressionKind::Arithmetic(3), &[1, 2], 17).unwrap();
        assert_eq!(
            got,
            vec![1, 2, 4, 5, 10, 11, 13, 14, 28, 29, 31, 32, 37, 38, 40, 41, 82]
        );
        // No 3-term AP anywhere in the output (cubic scan).
        for i in 0..got.len() {
            for j in i + 1..got.len() {
                for k in j + 1..got.len() {
                    assert!(
                        got[j] - got[i] != got[k] - got[j],
                        "AP {} {} {}",
                        got[i],
                        got[j],
                        got[k]
                    );
                }
            }
        }
    }

    #[test]
    fn non_geometric_progression() {
        let got = progression_avoider(ProgressionKind::Geometric(3), &[1, 2], 20).unwrap();
        assert_eq!(
            got,
            vec![1, 2, 3, 5, 6, 7, 8, 10, 11, 13, 14, 15, 16, 17, 19, 21, 22, 23, 24, 26]
        );
    }

    #[test]
    fn multiplicative_published_prefix() {
        let got =
            multiplicative_builder(MultiplicativeKind::Multiplicative, &[2, 3], 9).unwrap();
        assert_eq!(got, vec![2, 3, 6, 12, 18, 24, 36, 48, 54]);
        // Rank >= 3 terms divisible by both seeds.
        for &t in &got[2..] {
            assert_eq!(t % 2, 0);
            assert_eq!(t % 3, 0);
        }
    }

    #[test]
    fn non_multiplicative_third_term() {
        let got =
            multiplicative_builder(MultiplicativeKind::NonMultiplicative(2), &[2, 3], 3).unwrap();
        assert_eq!(got[2], 4);
    }

    #[test]
    fn partial_perfect_additive_prefix() {
        let got = partial_perfect_additive(8).unwrap();
        assert_eq!(got, vec![1, 1, 0, 2, -1, 1, 1, 3]);
        // Prefix balance: sum of the first p equals the sum of the next p.
        let long = partial_perfect_additive(128).unwrap();
        for p in 1..=64 {
            let front: i64 = long[..p].iter().sum();
            let back: i64 = long[p..2 * p].iter().sum();
            assert_eq!(front, back, "balance fails at p = {p}");
        }
    }
}
