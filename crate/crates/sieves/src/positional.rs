//! Position-based deletion protocols. Each pass scans the list left over by
//! the previous pass and deletes by position within that snapshot; a pass
//! completes before the next begins.

type Outcome = (Vec<u64>, Option<Vec<usize>>, Option<Vec<u64>>);

/// Binary/trinary/n-ary power sieve: pass k deletes every (n^k)-th element
/// of the list remaining after pass k-1.
pub fn power_passes(n: u64, limit: u64) -> Outcome {
    let mut lst: Vec<u64> = (1..=limit).collect();
    let mut log = Vec::new();
    let mut step = n;
    loop {
        if step as usize > lst.len() {
            break;
        }
        let before = lst.len();
        lst = lst
            .iter()
            .enumerate()
            .filter(|(i, _)| ((i + 1) as u64) % step != 0)
            .map(|(_, &v)| v)
            .collect();
        log.push(before - lst.len());
        match step.checked_mul(n) {
            Some(next) => step = next,
            None => break,
        }
    }
    (lst, Some(log), None)
}

/// Consecutive sieve: at step k (k = 2, 3, ...) the first not-yet-kept
/// element becomes kept, and counting that element as 1, every k-th element
/// of the remainder is deleted.
pub fn consecutive(limit: u64) -> Outcome {
    let mut lst: Vec<u64> = (1..=limit).collect();
    let mut log = Vec::new();
    let mut kept = 0usize; // index of the element kept at this step
    let mut k = 2u64;
    loop {
        kept += 1; // 1-based position of the newly kept element is `kept`
        if kept >= lst.len() {
            break;
        }
        let before = lst.len();
        // Counting the kept element as count 1, delete counts that are
        // multiples of k, i.e. 1-based positions kept + (k-1) + m*k.
        let kept_pos = kept as u64;
        lst = lst
            .iter()
            .enumerate()
            .filter(|(i, _)| {
                let pos = (i + 1) as u64;
                pos < kept_pos || (pos - kept_pos + 1) % k != 0
            })
            .map(|(_, &v)| v)
            .collect();
        log.push(before - lst.len());
        if before == lst.len() {
            break;
        }
        k += 1;
    }
    (lst, Some(log), None)
}

/// k-ary consecutive sieve: one left-to-right scan that keeps a block of k
/// numbers then discards the next k+1, for k = 2, 3, 4, ...
///
/// The published term list for this sieve disagrees with every positional
/// reading of its construction; the verification suite records that list as
/// an unreproducible print and this scan as the implemented rule.
pub fn k_ary_consecutive(limit: u64) -> Outcome {
    let mut survivors = Vec::new();
    let mut log = Vec::new();
    let mut n = 1u64;
    let mut k = 2u64;
    while n <= limit {
        let keep_end = (n + k - 1).min(limit);
        survivors.extend(n..=keep_end);
        n += k;
        let skipped = ((k + 1).min(limit.saturating_sub(n) + 1)) as usize;
        if n <= limit {
            log.push(skipped);
        }
        n += k + 1;
        k += 1;
    }
    (survivors, Some(log), None)
}

/// General-sequence sieve. At stage i the next `keeps[i]`-th pending element
/// (first pending for the plain general sieve) becomes kept, and every
/// `generators[i]`-th pending element, counting from the first pending
/// position, is deleted. Stages stop when the generators run out or nothing
/// pends.
pub fn general(generators: &[u64], keeps: Option<&[u64]>, limit: u64) -> Outcome {
    let mut lst: Vec<u64> = (1..=limit).collect();
    let mut log = Vec::new();
    let mut finalized = 0usize;
    for (i, &u) in generators.iter().enumerate() {
        if finalized >= lst.len() {
            break;
        }
        let before = lst.len();
        let base = finalized as u64;
        lst = lst
            .iter()
            .enumerate()
            .filter(|(idx, _)| {
                let pos = (idx + 1) as u64;
                pos <= base || (pos - base) % u != 0
            })
            .map(|(_, &v)| v)
            .collect();
        log.push(before - lst.len());
        let v = keeps.map_or(1, |ks| ks[i]) as usize;
        finalized += v;
    }
    (lst, Some(log), None)
}
