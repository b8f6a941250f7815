use lz76::distribution::enumerate_range;
use lz76::{
    complexity, enumerate_counts, enumerate_counts_with, is_exact, Alphabet, CountTable,
    DistributionReport, EnumerationConfig, Sequence,
};
use proptest::prelude::*;

/// Tallies counts through the public per-sequence API rather than the
/// enumerator's internal scan.
fn tally_via_sequences(alpha: usize, n: usize) -> CountTable {
    let a = Alphabet::with_size(alpha).unwrap();
    let mut counts = vec![0u64; n];
    let mut exact = vec![0u64; n];
    for mut idx in 0..alpha.pow(n as u32) {
        let mut symbols = vec![0u8; n];
        for d in symbols.iter_mut().rev() {
            *d = (idx % alpha) as u8;
            idx /= alpha;
        }
        let s = Sequence::new(&a, symbols).unwrap();
        let c = complexity(&s).unwrap();
        counts[c - 1] += 1;
        if is_exact(&s).unwrap() {
            exact[c - 1] += 1;
        }
    }
    CountTable::from_counts(alpha, n, counts, exact).unwrap()
}

#[test]
fn enumerator_matches_per_sequence_tally() {
    for (alpha, max_n) in [(2, 10), (3, 6), (4, 4)] {
        for n in 1..=max_n {
            assert_eq!(
                enumerate_counts(alpha, n).unwrap(),
                tally_via_sequences(alpha, n)
            );
        }
    }
}

#[test]
fn binary_four_table() {
    // Hand enumeration of the 16 binary sequences of length 4: c = 2 for
    // 000x and 111x; c = 4 is impossible since a third single-symbol
    // component always occurs in "01" or "10". Exact with c = 3: 0100, 0110
    // and their complements.
    let t = enumerate_counts(2, 4).unwrap();
    assert_eq!(
        (1..=4).map(|k| t.count(k)).collect::<Vec<_>>(),
        [0, 4, 12, 0]
    );
    assert_eq!(
        (1..=4).map(|k| t.exact_count(k)).collect::<Vec<_>>(),
        [0, 2, 4, 0]
    );
}

#[test]
fn required_identities_over_spec_ranges() {
    for (alpha, n_max) in [(2, 12), (3, 8), (4, 6)] {
        let report =
            DistributionReport::build(alpha, n_max, &EnumerationConfig::default()).unwrap();
        for r in report.identities() {
            if r.required {
                assert!(r.passed, "alpha {alpha}: {r:?}");
            }
        }
        assert!(report.required_passed());
    }
}

#[test]
fn cdf_at_fixed_k_two_is_non_increasing() {
    let report = DistributionReport::build(2, 12, &EnumerationConfig::default()).unwrap();
    let values: Vec<_> = (2..=12).map(|n| report.cdf(n, 2).unwrap()).collect();
    assert!(values.windows(2).all(|w| w[1] <= w[0]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn partitioned_ranges_sum_to_single_scan(
        alpha in 2usize..=4,
        n in 1usize..=7,
        cuts in prop::collection::vec(any::<u64>(), 0..6),
    ) {
        let space = (alpha as u64).pow(n as u32);
        let mut bounds: Vec<u64> = cuts.into_iter().map(|c| c % (space + 1)).collect();
        bounds.push(0);
        bounds.push(space);
        bounds.sort_unstable();
        let mut merged = CountTable::zeroed(alpha, n).unwrap();
        for w in bounds.windows(2) {
            merged.merge(&enumerate_range(alpha, n, w[0], w[1]).unwrap()).unwrap();
        }
        prop_assert_eq!(&merged, &enumerate_range(alpha, n, 0, space).unwrap());
        let cfg = EnumerationConfig::default().with_workers(bounds.len());
        prop_assert_eq!(&merged, &enumerate_counts_with(alpha, n, &cfg).unwrap());
    }
}
