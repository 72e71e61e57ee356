//! A shared, extendable prime table. Concurrent readers are fine; extension
//! is serialized behind a write lock and results never depend on who
//! triggered the growth.

use numeric_core::primes_up_to;
use std::sync::RwLock;

pub struct PrimeTable {
    inner: RwLock<Table>,
}

struct Table {
    bound: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn new() -> Self {
        PrimeTable {
            inner: RwLock::new(Table {
                bound: 1 << 10,
                primes: primes_up_to(1 << 10),
            }),
        }
    }

    pub fn with_bound(bound: u64) -> Self {
        PrimeTable {
            inner: RwLock::new(Table {
                bound,
                primes: primes_up_to(bound),
            }),
        }
    }

    fn ensure_bound(&self, bound: u64) {
        {
            let t = self.inner.read().unwrap();
            if t.bound >= bound {
                return;
            }
        }
        let mut t = self.inner.write().unwrap();
        if t.bound < bound {
            let new_bound = bound.next_power_of_two();
            t.primes = primes_up_to(new_bound);
            t.bound = new_bound;
        }
    }

    /// The n-th prime, 1-indexed (nth(1) = 2).
    pub fn nth(&self, n: usize) -> u64 {
        assert!(n >= 1, "primes are 1-indexed here");
        loop {
            {
                let t = self.inner.read().unwrap();
                if let Some(&p) = t.primes.get(n - 1) {
                    return p;
                }
                let bound = t.bound;
                drop(t);
                self.ensure_bound(bound * 2);
            }
        }
    }

    /// The n-th odd prime, 1-indexed (nth_odd(1) = 3).
    pub fn nth_odd(&self, n: usize) -> u64 {
        self.nth(n + 1)
    }

    /// All primes up to and including `x`.
    pub fn up_to(&self, x: u64) -> Vec<u64> {
        self.ensure_bound(x);
        let t = self.inner.read().unwrap();
        let cut = t.primes.partition_point(|&p| p <= x);
        t.primes[..cut].to_vec()
    }

    /// Number of primes <= x.
    pub fn count_up_to(&self, x: u64) -> usize {
        self.ensure_bound(x);
        let t = self.inner.read().unwrap();
        t.primes.partition_point(|&p| p <= x)
    }
}

impl Default for PrimeTable {
    fn default() -> Self {
        Self::new()
    }
}
