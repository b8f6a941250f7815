//! The exact law of the complexity `C_n` under the uniform measure on `A^n`.
//!
//! [`enumerate_counts`] visits every sequence of length `n` once and tallies
//! both `N_n(k)` (complexity `k`) and `N_n(k_e)` (exact with complexity `k`)
//! in the same scan. Probabilities are `count / alpha^n` as exact rationals.
//! The identities in [`identities`] are checked on those integers and
//! rationals with no floating point involved.

pub mod identities;
pub mod io;
mod report;

use std::num::NonZeroUsize;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::history::complexity_and_exactness;
use crate::sequence::require_alphabet_size;
use crate::Rational;

pub use identities::{
    exact_mass_partial_sum, extend_cdf, verify_step_recurrence, verify_theorem, Counterexample,
    IdentityResult,
};
pub use report::DistributionReport;

/// Default cap on the number of sequences a single table may enumerate.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    /// Maximum `alpha^n` accepted.
    pub budget: u64,
    /// Worker threads scanning disjoint lexicographic ranges.
    pub workers: NonZeroUsize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            workers: std::thread::available_parallelism().unwrap_or(NonZeroUsize::MIN),
        }
    }
}

impl EnumerationConfig {
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = NonZeroUsize::new(workers).unwrap_or(NonZeroUsize::MIN);
        self
    }
}

/// Counts `N_n(k)` and `N_n(k_e)` for one `(alpha, n)`, materialised for every
/// `k` in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    alphabet_size: usize,
    length: usize,
    counts: Vec<u64>,
    exact_counts: Vec<u64>,
}

impl CountTable {
    /// An all-zero table.
    pub fn zeroed(alphabet_size: usize, length: usize) -> Result<Self> {
        require_alphabet_size(alphabet_size)?;
        if length == 0 {
            return Err(Error::EmptySequence);
        }
        Ok(Self {
            alphabet_size,
            length,
            counts: vec![0; length],
            exact_counts: vec![0; length],
        })
    }

    /// Builds a complete table from per-`k` counts (index 0 is `k = 1`),
    /// checking that the counts sum to `alpha^n` and that exact counts never
    /// exceed plain counts.
    pub fn from_counts(
        alphabet_size: usize,
        length: usize,
        counts: Vec<u64>,
        exact_counts: Vec<u64>,
    ) -> Result<Self> {
        let mut table = Self::zeroed(alphabet_size, length)?;
        if counts.len() != length || exact_counts.len() != length {
            return Err(Error::Format(format!(
                "table for n = {length} needs {length} rows, got {} / {}",
                counts.len(),
                exact_counts.len()
            )));
        }
        table.counts = counts;
        table.exact_counts = exact_counts;
        if let Some(k) = (1..=length).find(|&k| table.exact_count(k) > table.count(k)) {
            return Err(Error::Format(format!(
                "n = {length}, k = {k}: exact count exceeds count"
            )));
        }
        let sum: BigUint = table.counts.iter().map(|&c| BigUint::from(c)).sum();
        if sum != table.total() {
            return Err(Error::Format(format!(
                "n = {length}: counts sum to {sum}, expected {}",
                table.total()
            )));
        }
        Ok(table)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// `alpha^n`.
    pub fn total(&self) -> BigUint {
        BigUint::from(self.alphabet_size).pow(self.length as u32)
    }

    /// `N_n(k)`; zero outside `1..=n`.
    pub fn count(&self, k: usize) -> u64 {
        k.checked_sub(1)
            .and_then(|i| self.counts.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// `N_n(k_e)`; zero outside `1..=n`.
    pub fn exact_count(&self, k: usize) -> u64 {
        k.checked_sub(1)
            .and_then(|i| self.exact_counts.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// `P_n(k)`.
    pub fn pmf(&self, k: usize) -> Rational {
        self.ratio(self.count(k))
    }

    /// `P_n(k_e)`.
    pub fn exact_pmf(&self, k: usize) -> Rational {
        self.ratio(self.exact_count(k))
    }

    /// `P_n(C_n <= k)`.
    pub fn cdf(&self, k: usize) -> Rational {
        let upto = k.min(self.length);
        self.ratio((1..=upto).map(|s| self.count(s)).sum())
    }

    pub fn cdf_table(&self) -> Cdf {
        Cdf {
            alphabet_size: self.alphabet_size,
            length: self.length,
            values: (1..=self.length).map(|k| self.cdf(k)).collect(),
        }
    }

    fn ratio(&self, count: u64) -> Rational {
        Rational::new(BigUint::from(count).into(), self.total().into())
    }

    fn record(&mut self, complexity: usize, exact: bool) {
        self.counts[complexity - 1] += 1;
        if exact {
            self.exact_counts[complexity - 1] += 1;
        }
    }

    /// Adds another table's counts into this one. Both must share `(alpha, n)`.
    pub fn merge(&mut self, other: &CountTable) -> Result<()> {
        if (self.alphabet_size, self.length) != (other.alphabet_size, other.length) {
            return Err(Error::Invalid(format!(
                "cannot merge table ({}, {}) into ({}, {})",
                other.alphabet_size, other.length, self.alphabet_size, self.length
            )));
        }
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        for (a, b) in self.exact_counts.iter_mut().zip(&other.exact_counts) {
            *a += b;
        }
        Ok(())
    }

    /// Largest `k` with a nonzero count.
    pub fn max_complexity(&self) -> usize {
        self.counts
            .iter()
            .rposition(|&c| c > 0)
            .map_or(0, |i| i + 1)
    }
}

/// An exact CDF `k -> P_n(C_n <= k)` for one length. Values below `k = 1` are 0
/// and values past `k = n` are 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cdf {
    alphabet_size: usize,
    length: usize,
    values: Vec<Rational>,
}

impl Cdf {
    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn value(&self, k: usize) -> Rational {
        match k {
            0 => Rational::zero(),
            k if k > self.length => Rational::one(),
            k => self.values[k - 1].clone(),
        }
    }

    /// Values for `k = 1..=n`.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// `alpha^n` as `u64`, or the budget error when it does not fit the budget.
fn checked_space(alphabet_size: usize, length: usize, budget: u64) -> Result<u64> {
    let space = u32::try_from(length)
        .ok()
        .and_then(|n| (alphabet_size as u64).checked_pow(n));
    match space {
        Some(space) if space <= budget => Ok(space),
        _ => Err(Error::BudgetExceeded {
            alphabet_size,
            length,
            required: BigUint::from(alphabet_size).pow(length as u32).to_string(),
            budget,
        }),
    }
}

/// Enumerates `A^n` with the default configuration.
pub fn enumerate_counts(alphabet_size: usize, length: usize) -> Result<CountTable> {
    enumerate_counts_with(alphabet_size, length, &EnumerationConfig::default())
}

/// Enumerates `A^n`, splitting the lexicographic index space into
/// `config.workers` contiguous ranges scanned in parallel and summed.
pub fn enumerate_counts_with(
    alphabet_size: usize,
    length: usize,
    config: &EnumerationConfig,
) -> Result<CountTable> {
    CountTable::zeroed(alphabet_size, length)?;
    let space = checked_space(alphabet_size, length, config.budget)?;
    let workers = (config.workers.get() as u64).clamp(1, space);
    if workers == 1 {
        return enumerate_range(alphabet_size, length, 0, space);
    }
    let bounds: Vec<u64> = (0..=workers)
        .map(|i| ((space as u128 * i as u128) / workers as u128) as u64)
        .collect();
    let partials: Vec<Result<CountTable>> = std::thread::scope(|scope| {
        let handles: Vec<_> = bounds
            .windows(2)
            .map(|w| {
                let (start, end) = (w[0], w[1]);
                scope.spawn(move || enumerate_range(alphabet_size, length, start, end))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration worker panicked"))
            .collect()
    });
    let mut table = CountTable::zeroed(alphabet_size, length)?;
    for partial in partials {
        table.merge(&partial?)?;
    }
    Ok(table)
}

/// Tallies the sequences whose lexicographic index (base `alpha`, first symbol
/// most significant) lies in `start..end`.
pub fn enumerate_range(
    alphabet_size: usize,
    length: usize,
    start: u64,
    end: u64,
) -> Result<CountTable> {
    let mut table = CountTable::zeroed(alphabet_size, length)?;
    let space = checked_space(alphabet_size, length, u64::MAX)?;
    if start > end || end > space {
        return Err(Error::Invalid(format!(
            "range {start}..{end} outside 0..{space}"
        )));
    }
    if start == end {
        return Ok(table);
    }
    let base = alphabet_size as u64;
    let mut digits = vec![0u8; length];
    let mut rest = start;
    for d in digits.iter_mut().rev() {
        *d = (rest % base) as u8;
        rest /= base;
    }
    let top = (alphabet_size - 1) as u8;
    for _ in start..end {
        let (c, exact) = complexity_and_exactness(&digits);
        table.record(c, exact);
        // Odometer increment; wraps to all zeros only after the last index.
        for d in digits.iter_mut().rev() {
            if *d == top {
                *d = 0;
            } else {
                *d += 1;
                break;
            }
        }
    }
    Ok(table)
}
