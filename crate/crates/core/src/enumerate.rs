//! Budgeted, deterministic enumeration of product state spaces.
//!
//! Every exhaustive count in the crate walks a mixed-radix index space
//! `0..radix^len` in row-major order (the first coordinate is the most
//! significant digit). Parallel work is split into fixed-size chunks whose
//! partial results are reduced in chunk order, so totals and partial sums are
//! reproducible regardless of the worker count.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Upper bound on the number of states any single enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(u64);

impl Budget {
    pub const DEFAULT_STATES: u64 = 100_000_000;

    /// A zero budget is promoted to one state.
    pub fn new(states: u64) -> Self {
        Budget(states.max(1))
    }

    pub fn unlimited() -> Self {
        Budget(u64::MAX)
    }

    pub fn limit(self) -> u64 {
        self.0
    }

    /// Fails with [`Error::BudgetExceeded`] if `states` is over the limit.
    pub fn check(self, states: u128) -> Result<u64> {
        if states > self.0 as u128 {
            Err(Error::BudgetExceeded {
                states,
                budget: self.0,
            })
        } else {
            Ok(states as u64)
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget(Self::DEFAULT_STATES)
    }
}

/// `base^exp`, saturating at `u128::MAX`.
pub fn state_count(base: u64, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

pub(crate) const CHUNK: u64 = 1 << 12;

/// Folds `0..total` in parallel chunks of [`CHUNK`] indices and reduces the
/// per-chunk results left to right.
pub(crate) fn par_fold<T, F, R>(total: u64, fold: F, reduce: R) -> Option<T>
where
    T: Send,
    F: Fn(std::ops::Range<u64>) -> T + Sync + Send,
    R: Fn(T, T) -> T,
{
    let chunks = total.div_ceil(CHUNK);
    let parts: Vec<T> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            fold(start..(start + CHUNK).min(total))
        })
        .collect();
    parts.into_iter().reduce(reduce)
}

/// Row-major odometer over `{0..radix}^len`.
#[derive(Debug, Clone)]
pub(crate) struct Odometer {
    radix: u32,
    digits: Vec<u32>,
}

impl Odometer {
    pub(crate) fn at(index: u64, len: usize, radix: u32) -> Self {
        let mut digits = vec![0; len];
        let mut rest = index;
        for slot in digits.iter_mut().rev() {
            *slot = (rest % radix as u64) as u32;
            rest /= radix as u64;
        }
        Odometer { radix, digits }
    }

    pub(crate) fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Steps to the next state. Returns the lowest position whose digit
    /// changed (all later positions changed too), or `None` on wrap-around.
    pub(crate) fn advance(&mut self) -> Option<usize> {
        for pos in (0..self.digits.len()).rev() {
            self.digits[pos] += 1;
            if self.digits[pos] < self.radix {
                return Some(pos);
            }
            self.digits[pos] = 0;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_rejects_overflow() {
        let b = Budget::new(10);
        assert_eq!(b.check(10), Ok(10));
        assert!(matches!(b.check(11), Err(Error::BudgetExceeded { .. })));
        assert_eq!(Budget::new(0).limit(), 1);
    }

    #[test]
    fn odometer_is_row_major() {
        let mut o = Odometer::at(0, 2, 3);
        let mut seen = vec![o.digits().to_vec()];
        while o.advance().is_some() {
            seen.push(o.digits().to_vec());
        }
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[1], vec![0, 1]);
        assert_eq!(seen[3], vec![1, 0]);
        for (i, d) in seen.iter().enumerate() {
            assert_eq!(Odometer::at(i as u64, 2, 3).digits(), &d[..]);
        }
    }

    #[test]
    fn par_fold_is_deterministic() {
        let total = 3 * CHUNK + 17;
        let sum = par_fold(total, |r| r.sum::<u64>(), |a, b| a + b).unwrap();
        assert_eq!(sum, total * (total - 1) / 2);
        assert!(par_fold(0, |r| r.count(), |a, b| a + b).is_none());
    }

    #[test]
    fn state_count_saturates() {
        assert_eq!(state_count(3, 4), 81);
        assert_eq!(state_count(1 << 32, 5), u128::MAX);
    }
}
