//! Histories, the exhaustive-history parser and exactness.
//!
//! A *history* of `S` splits it into components `H_i = S(h_{i-1}+1, h_i)` such
//! that each component with its last symbol dropped already occurs in
//! `S(1, h_i - 2)`. The *exhaustive* history takes every component as the
//! shortest extension that does not occur in `S(1, h_i - 1)`; only the final
//! component may stop early because the sequence ends. Its component count
//! `c_E(S)` is the Lempel-Ziv complexity.
//!
//! Occurrence windows follow the index ranges literally, so an earlier
//! occurrence may overlap the component itself except for its final symbol.

use crate::error::{Error, Result};
use crate::sequence::{is_substring, Sequence};

/// A partition of a sequence given by 1-based component end points
/// `h_1 < h_2 < ... < h_m = n` (with `h_0 = 0` implicit).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct History {
    boundaries: Vec<usize>,
}

impl History {
    /// Checks that `boundaries` is a strictly increasing list inside `1..=len`
    /// ending at `len`. Does not check the history condition; see [`History::is_valid_for`].
    pub fn new(len: usize, boundaries: Vec<usize>) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptySequence);
        }
        if boundaries.last() != Some(&len) {
            return Err(Error::Invalid(format!(
                "last boundary must equal the sequence length {len}"
            )));
        }
        if boundaries[0] == 0 || boundaries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(
                "boundaries must be strictly increasing and start at 1 or later".into(),
            ));
        }
        Ok(Self { boundaries })
    }

    pub fn boundaries(&self) -> &[usize] {
        &self.boundaries
    }

    pub fn component_count(&self) -> usize {
        self.boundaries.len()
    }

    /// 1-based inclusive `(start, end)` of every component.
    pub fn spans(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let starts = std::iter::once(0).chain(self.boundaries.iter().copied());
        starts
            .zip(self.boundaries.iter().copied())
            .map(|(prev, h)| (prev + 1, h))
    }

    pub fn components<'s>(&self, s: &'s Sequence) -> Vec<&'s [u8]> {
        self.spans().map(|(a, b)| s.substring(a, b)).collect()
    }

    /// The history condition: for every `i`, `S(h_{i-1}+1, h_i - 1)` is a
    /// substring of `S(1, h_i - 2)`.
    pub fn is_valid_for(&self, s: &Sequence) -> bool {
        s.len() == *self.boundaries.last().unwrap()
            && self.spans().all(|(start, end)| {
                let body = s.substring(start, end - 1);
                let window = if end >= 2 {
                    s.substring(1, end - 2)
                } else {
                    &[]
                };
                is_substring(body, window)
            })
    }
}

/// The unique exhaustive history of a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExhaustiveHistory {
    history: History,
    last_exhaustive: bool,
}

impl ExhaustiveHistory {
    pub fn history(&self) -> &History {
        &self.history
    }

    pub fn boundaries(&self) -> &[usize] {
        self.history.boundaries()
    }

    /// `c_E(S)`, the number of components.
    pub fn complexity(&self) -> usize {
        self.history.component_count()
    }

    /// Whether the final component is absent from `S(1, n - 1)`. Since the
    /// final component ends at `n` this is exactly the exactness of `S`.
    pub fn is_last_exhaustive(&self) -> bool {
        self.last_exhaustive
    }

    pub fn is_exact(&self) -> bool {
        self.last_exhaustive
    }

    pub fn components<'s>(&self, s: &'s Sequence) -> Vec<&'s [u8]> {
        self.history.components(s)
    }
}

/// Core scan over raw symbols. Calls `on_boundary` with each 1-based `h_i` and
/// returns whether the final component is exhaustive. `symbols` must be non-empty.
///
/// For a component starting at 0-based `p`, the longest common extension of
/// `symbols[p..]` against every earlier start `j < p` gives the longest prefix
/// that still occurs in the allowed window; one more symbol makes it new.
#[inline]
pub(crate) fn scan(symbols: &[u8], mut on_boundary: impl FnMut(usize)) -> bool {
    let n = symbols.len();
    debug_assert!(n > 0);
    let mut p = 0;
    loop {
        let remaining = n - p;
        let mut best = 0;
        for j in 0..p {
            let mut m = 0;
            while m < remaining && symbols[j + m] == symbols[p + m] {
                m += 1;
            }
            if m > best {
                best = m;
                if best == remaining {
                    break;
                }
            }
        }
        if best == remaining {
            // The rest of the sequence already occurs earlier.
            on_boundary(n);
            return false;
        }
        let h = p + best + 1;
        on_boundary(h);
        if h == n {
            return true;
        }
        p = h;
    }
}

/// `(c_E, exact)` without materialising the boundaries.
#[inline]
pub(crate) fn complexity_and_exactness(symbols: &[u8]) -> (usize, bool) {
    let mut count = 0;
    let exact = scan(symbols, |_| count += 1);
    (count, exact)
}

/// Parses `s` into its exhaustive history.
pub fn exhaustive_history(s: &Sequence) -> Result<ExhaustiveHistory> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut boundaries = Vec::new();
    let last_exhaustive = scan(s.symbols(), |h| boundaries.push(h));
    Ok(ExhaustiveHistory {
        history: History { boundaries },
        last_exhaustive,
    })
}

/// Lempel-Ziv complexity `c(S) = c_E(S)`.
pub fn complexity(s: &Sequence) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(complexity_and_exactness(s.symbols()).0)
}

/// Whether the last exhaustive-history component of `s` is absent from `S(1, n - 1)`.
pub fn is_exact(s: &Sequence) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(complexity_and_exactness(s.symbols()).1)
}
