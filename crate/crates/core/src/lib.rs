//! Lempel-Ziv (1976) complexity of finite sequences.
//!
//! The crate is organised around four pieces:
//!
//! * [`sequence`]: alphabets and sequences over them, with 1-based substring access.
//! * [`history`]: the exhaustive-history parser, complexity `c_E` and exactness,
//!   plus [`oracle`], a brute-force minimum over all histories used for testing.
//! * [`distribution`]: exact enumeration of the complexity law over `A^n`,
//!   the recurrence/CDF identities checked with exact integers and rationals,
//!   and CSV/JSON table serialisation.
//! * [`randomness`]: critical sets `K_{n,k} = {S : C_n(S) <= k}` and the
//!   `n / log_alpha n` threshold.
//!
//! ```
//! use lz76::{Alphabet, Sequence};
//!
//! let binary = Alphabet::binary();
//! let s = Sequence::parse(&binary, "0011011101110110").unwrap();
//! let h = lz76::exhaustive_history(&s).unwrap();
//! assert_eq!(h.complexity(), 5);
//! assert_eq!(h.boundaries(), &[1, 3, 5, 8, 16]);
//! assert!(h.is_exact());
//! ```

pub mod distribution;
mod error;
pub mod history;
pub mod oracle;
pub mod randomness;
pub mod sequence;

pub use distribution::{
    enumerate_counts, enumerate_counts_with, exact_mass_partial_sum, extend_cdf,
    verify_step_recurrence, verify_theorem, Cdf, CountTable, DistributionReport, EnumerationConfig,
    IdentityResult,
};
pub use error::{Error, Result};
pub use history::{complexity, exhaustive_history, is_exact, ExhaustiveHistory, History};
pub use oracle::{min_history_complexity, min_history_complexity_with_cap, DEFAULT_ORACLE_CAP};
pub use randomness::{
    critical_probability, default_threshold, test_sequence, CriticalSetSpec, TestVerdict,
};
pub use sequence::{Alphabet, Sequence};

/// Rational type used for all probabilities.
pub type Rational = num_rational::BigRational;
