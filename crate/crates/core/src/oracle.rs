//! Brute-force minimum over all histories.
//!
//! Independent of the parser: every boundary set ending at `n` is generated and
//! filtered by the history condition using plain substring search. Cost is
//! `2^(n-1)` candidate sets, so a length cap applies.

use crate::error::{Error, Result};
use crate::history::History;
use crate::sequence::Sequence;

pub const DEFAULT_ORACLE_CAP: usize = 16;

/// `min { c_H(S) }` over all histories `H` of `S`, with the default length cap.
pub fn min_history_complexity(s: &Sequence) -> Result<usize> {
    min_history_complexity_with_cap(s, DEFAULT_ORACLE_CAP)
}

pub fn min_history_complexity_with_cap(s: &Sequence, cap: usize) -> Result<usize> {
    let n = s.len();
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    if n > cap || n > 63 {
        return Err(Error::OracleCapExceeded { len: n, cap });
    }
    let mut best: Option<usize> = None;
    // Bit i-1 of `mask` set means position i (1 <= i < n) is a boundary.
    for mask in 0u64..(1u64 << (n - 1)) {
        let count = mask.count_ones() as usize + 1;
        if best.is_some_and(|b| count >= b) {
            continue;
        }
        let boundaries: Vec<usize> = (1..n)
            .filter(|i| mask & (1 << (i - 1)) != 0)
            .chain(std::iter::once(n))
            .collect();
        let history = History::new(n, boundaries).expect("generated boundaries are well formed");
        if history.is_valid_for(s) {
            best = Some(count);
        }
    }
    // The all-singletons partition is always a history.
    Ok(best.expect("at least one history exists"))
}
