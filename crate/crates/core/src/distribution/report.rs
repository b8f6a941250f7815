use super::identities::{self, IdentityResult};
use super::{enumerate_counts_with, CountTable, EnumerationConfig};
use crate::error::{Error, Result};
use crate::sequence::require_alphabet_size;
use crate::Rational;

/// Tables for `n = 1..=N` over one alphabet, with the outcome of every identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionReport {
    alphabet_size: usize,
    tables: Vec<CountTable>,
    identities: Vec<IdentityResult>,
}

impl DistributionReport {
    /// Enumerates every length up to `n_max` and runs all checks. The budget
    /// is checked for `n_max` before any work starts.
    pub fn build(alphabet_size: usize, n_max: usize, config: &EnumerationConfig) -> Result<Self> {
        require_alphabet_size(alphabet_size)?;
        if n_max == 0 {
            return Err(Error::Invalid("n_max must be at least 1".into()));
        }
        super::checked_space(alphabet_size, n_max, config.budget)?;
        let tables = (1..=n_max)
            .map(|n| enumerate_counts_with(alphabet_size, n, config))
            .collect::<Result<Vec<_>>>()?;
        Self::from_tables(tables)
    }

    /// Runs all checks over an existing series `n = 1..=N`.
    pub fn from_tables(tables: Vec<CountTable>) -> Result<Self> {
        let identities = identities::run_all(&tables)?;
        Ok(Self {
            alphabet_size: tables[0].alphabet_size(),
            tables,
            identities,
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn n_max(&self) -> usize {
        self.tables.len()
    }

    pub fn tables(&self) -> &[CountTable] {
        &self.tables
    }

    pub fn table(&self, n: usize) -> Option<&CountTable> {
        n.checked_sub(1).and_then(|i| self.tables.get(i))
    }

    pub fn identities(&self) -> &[IdentityResult] {
        &self.identities
    }

    pub fn identity(&self, name: &str) -> Option<&IdentityResult> {
        self.identities.iter().find(|r| r.name == name)
    }

    pub fn pmf(&self, n: usize, k: usize) -> Option<Rational> {
        self.table(n).map(|t| t.pmf(k))
    }

    pub fn exact_pmf(&self, n: usize, k: usize) -> Option<Rational> {
        self.table(n).map(|t| t.exact_pmf(k))
    }

    pub fn cdf(&self, n: usize, k: usize) -> Option<Rational> {
        self.table(n).map(|t| t.cdf(k))
    }

    /// True when every required identity passed. Reported-only side
    /// conditions are ignored.
    pub fn required_passed(&self) -> bool {
        self.identities
            .iter()
            .filter(|r| r.required)
            .all(|r| r.passed)
    }
}
