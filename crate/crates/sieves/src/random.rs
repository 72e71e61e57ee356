//! The random sieve: each chosen element wipes out everything sharing a
//! factor with it, and the next choice is made among what remains above it.

use crate::rng::SplitMix64;
use crate::RandomChoices;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// The first chosen element deletes its cofactor multiples everywhere; each
/// later choice deletes only above itself, so numbers the scan has already
/// passed stay in the sequence. This reproduces the published 6, 19, 35 run
/// (where 5, 7 and 25 survive the choice of 35).
pub fn run(choices: &RandomChoices, limit: u64) -> (Vec<u64>, Option<Vec<usize>>, Option<Vec<u64>>) {
    let mut alive: Vec<bool> = vec![true; (limit + 1) as usize];
    let mut chosen: Vec<u64> = Vec::new();
    let mut log = Vec::new();

    let mut rng = match choices {
        RandomChoices::Seed(seed) => Some(SplitMix64::new(*seed)),
        RandomChoices::Explicit(_) => None,
    };
    let explicit = match choices {
        RandomChoices::Explicit(list) => Some(list.clone()),
        RandomChoices::Seed(_) => None,
    };

    let mut cursor = 1u64;
    let mut step = 0usize;
    loop {
        let u = match (&explicit, &mut rng) {
            (Some(list), _) => match list.get(step) {
                Some(&u) => u,
                None => break,
            },
            (None, Some(rng)) => {
                // Pick among the next few surviving candidates above the cursor.
                let pool: Vec<u64> = ((cursor + 1)..=limit)
                    .filter(|&m| alive[m as usize] && m >= 2)
                    .take(8)
                    .collect();
                if pool.is_empty() {
                    break;
                }
                pool[rng.below(pool.len() as u64) as usize]
            }
            _ => unreachable!(),
        };
        if u > limit || u < 2 {
            break;
        }
        let mut killed = 0usize;
        let from = if chosen.is_empty() { 2 } else { u + 1 };
        for m in from..=limit {
            if m != u && alive[m as usize] && gcd(m, u) > 1 {
                alive[m as usize] = false;
                killed += 1;
            }
        }
        chosen.push(u);
        log.push(killed);
        cursor = u;
        step += 1;
    }

    let survivors = (1..=limit).filter(|&m| alive[m as usize]).collect();
    (survivors, Some(log), Some(chosen))
}
