//! Complexity as a randomness test.
//!
//! A sequence falls in the critical set `K_{n,k} = {S in A^n : C_n(S) <= k}`
//! when its complexity is at most `k`; low complexity marks it as suspicious.
//! The significance of the test is `P_n(K_{n,k})`, read off an exact count
//! table when one exists for `(alpha, n)`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::distribution::CountTable;
use crate::error::{Error, Result};
use crate::history::complexity;
use crate::sequence::{require_alphabet_size, Sequence};
use crate::Rational;

/// `floor(n / log_alpha n)`, the customary threshold.
///
/// Evaluated as `n ln(alpha) / ln(n)`; when that lands within rounding
/// distance of an integer `r`, the floor is settled exactly by comparing
/// `n^r` with `alpha^n`, since `r <= n / log_alpha n` iff `n^r <= alpha^n`.
pub fn default_threshold(alphabet_size: usize, length: usize) -> Result<usize> {
    require_alphabet_size(alphabet_size)?;
    if length <= alphabet_size {
        return Err(Error::DegenerateThreshold {
            alphabet_size,
            length,
        });
    }
    let x = length as f64 * (alphabet_size as f64).ln() / (length as f64).ln();
    let r = x.round();
    if (x - r).abs() > 1e-9 * x.max(1.0) {
        return Ok(x.floor() as usize);
    }
    let r = r as usize;
    let lhs = BigUint::from(length).pow(r as u32);
    let rhs = BigUint::from(alphabet_size).pow(length as u32);
    Ok(if lhs <= rhs { r } else { r - 1 })
}

/// The critical set `K_{n,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriticalSetSpec {
    alphabet_size: usize,
    length: usize,
    threshold_k: usize,
}

impl CriticalSetSpec {
    pub fn new(alphabet_size: usize, length: usize, threshold_k: usize) -> Result<Self> {
        require_alphabet_size(alphabet_size)?;
        if threshold_k == 0 || threshold_k > length {
            return Err(Error::ThresholdOutOfRange {
                k: threshold_k,
                length,
            });
        }
        Ok(Self {
            alphabet_size,
            length,
            threshold_k,
        })
    }

    /// `K_{n,k}` with `k` from [`default_threshold`].
    pub fn with_default_threshold(alphabet_size: usize, length: usize) -> Result<Self> {
        Self::new(
            alphabet_size,
            length,
            default_threshold(alphabet_size, length)?,
        )
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn threshold_k(&self) -> usize {
        self.threshold_k
    }
}

/// `P_n(K_{n,k}) = sum_{s=1}^{k} P_n(s)`, using whichever of `tables` is for `(alpha, n)`.
pub fn critical_probability(
    tables: &[CountTable],
    alphabet_size: usize,
    length: usize,
    k: usize,
) -> Result<Rational> {
    let table = tables
        .iter()
        .find(|t| t.alphabet_size() == alphabet_size && t.length() == length)
        .ok_or(Error::TableUnavailable {
            alphabet_size,
            length,
        })?;
    if k == 0 || k > table.length() {
        return Err(Error::ThresholdOutOfRange {
            k,
            length: table.length(),
        });
    }
    Ok(table.cdf(k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TestVerdict {
    pub alphabet_size: usize,
    pub length: usize,
    pub observed_complexity: usize,
    pub threshold_k: usize,
    pub in_critical_set: bool,
    /// `P_n(K_{n,k})`, present only when a table for `(alpha, n)` was supplied.
    pub significance: Option<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RationalJson {
    numerator: String,
    denominator: String,
}

#[derive(Serialize, Deserialize)]
struct VerdictJson {
    alphabet_size: usize,
    length: usize,
    observed_complexity: usize,
    threshold_k: usize,
    in_critical_set: bool,
    significance: Option<RationalJson>,
}

impl TestVerdict {
    /// Floating-point view of the significance, for display only.
    pub fn significance_approx(&self) -> Option<f64> {
        self.significance.as_ref().and_then(|p| p.to_f64())
    }

    pub fn to_json(&self) -> String {
        let wire = VerdictJson {
            alphabet_size: self.alphabet_size,
            length: self.length,
            observed_complexity: self.observed_complexity,
            threshold_k: self.threshold_k,
            in_critical_set: self.in_critical_set,
            significance: self.significance.as_ref().map(|p| RationalJson {
                numerator: p.numer().to_string(),
                denominator: p.denom().to_string(),
            }),
        };
        serde_json::to_string_pretty(&wire).expect("verdict serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: VerdictJson = serde_json::from_str(text)?;
        let significance = wire
            .significance
            .map(|r| -> Result<Rational> {
                let parse = |s: &str| {
                    s.parse()
                        .map_err(|_| Error::Format(format!("{s:?} is not an integer")))
                };
                let denominator: num_bigint::BigInt = parse(&r.denominator)?;
                if denominator == 0u32.into() {
                    return Err(Error::Format("zero denominator".into()));
                }
                Ok(Rational::new(parse(&r.numerator)?, denominator))
            })
            .transpose()?;
        Ok(Self {
            alphabet_size: wire.alphabet_size,
            length: wire.length,
            observed_complexity: wire.observed_complexity,
            threshold_k: wire.threshold_k,
            in_critical_set: wire.in_critical_set,
            significance,
        })
    }
}

/// Tests `s` against `K_{n,k}`. Without `spec` the default threshold is
/// used. `table`, when given, must be for the same `(alpha, n)` and supplies
/// the significance.
pub fn test_sequence(
    s: &Sequence,
    spec: Option<&CriticalSetSpec>,
    table: Option<&CountTable>,
) -> Result<TestVerdict> {
    let alpha = s.alphabet().size();
    let n = s.len();
    let spec = match spec {
        Some(spec) => *spec,
        None => CriticalSetSpec::with_default_threshold(alpha, n)?,
    };
    if (spec.alphabet_size, spec.length) != (alpha, n) {
        return Err(Error::Invalid(format!(
            "critical set is for alphabet size {} and length {}, sequence has {alpha} and {n}",
            spec.alphabet_size, spec.length
        )));
    }
    if let Some(t) = table {
        if (t.alphabet_size(), t.length()) != (alpha, n) {
            return Err(Error::Invalid(format!(
                "table is for alphabet size {} and length {}, sequence has {alpha} and {n}",
                t.alphabet_size(),
                t.length()
            )));
        }
    }
    let observed = complexity(s)?;
    let significance = table
        .map(|t| critical_probability(std::slice::from_ref(t), alpha, n, spec.threshold_k))
        .transpose()?;
    Ok(TestVerdict {
        alphabet_size: alpha,
        length: n,
        observed_complexity: observed,
        threshold_k: spec.threshold_k,
        in_critical_set: observed <= spec.threshold_k,
        significance,
    })
}
