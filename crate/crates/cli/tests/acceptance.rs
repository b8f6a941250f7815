//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails. All comparisons are exact unless a bound is
//! stated.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use lz76::distribution::identities::{
    check_exact_mass_at_length, check_tail_vanishes, verify_cdf_extension,
    verify_cdf_monotone_in_length, verify_step_recurrence, verify_theorem,
};
use lz76::distribution::io::to_csv_string;
use lz76::sequence::is_substring;
use lz76::{
    complexity, enumerate_counts_with, exact_mass_partial_sum, exhaustive_history, extend_cdf,
    min_history_complexity, Alphabet, CountTable, EnumerationConfig, Rational, Sequence,
};

const WORKED: &str = "0011011101110110";

/// Ranges for the recurrence criteria: `(alpha, largest n of the pair n -> n+1)`.
const RANGES: [(usize, usize); 3] = [(2, 11), (3, 7), (4, 5)];

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn series(alpha: usize, n_max: usize) -> Vec<CountTable> {
    let config = EnumerationConfig::default();
    (1..=n_max)
        .map(|n| enumerate_counts_with(alpha, n, &config).unwrap())
        .collect()
}

fn all_sequences(alpha: usize, n: usize) -> impl Iterator<Item = Sequence> {
    let a = Alphabet::with_size(alpha).unwrap();
    (0..alpha.pow(n as u32)).map(move |mut idx| {
        let mut symbols = vec![0u8; n];
        for d in symbols.iter_mut().rev() {
            *d = (idx % alpha) as u8;
            idx /= alpha;
        }
        Sequence::new(&a, symbols).unwrap()
    })
}

/// Direct scan of the exhaustive-history definition with plain substring tests.
fn definition_parse(s: &Sequence) -> (Vec<String>, bool) {
    let n = s.len();
    let mut comps = Vec::new();
    let mut start = 1;
    loop {
        let mut end = start;
        while end <= n && is_substring(s.substring(start, end), s.substring(1, end - 1)) {
            end += 1;
        }
        if end > n {
            comps.push(s.render(s.substring(start, n)));
            return (comps, false);
        }
        comps.push(s.render(s.substring(start, end)));
        if end == n {
            return (comps, true);
        }
        start = end + 1;
    }
}

fn lz76(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lz76"))
        .args(args)
        .stdin(Stdio::null())
        .output()
        .expect("binary runs")
}

fn ac1_worked_example() {
    let started = Instant::now();
    let s = Sequence::parse(&Alphabet::binary(), WORKED).unwrap();
    let h = exhaustive_history(&s).unwrap();
    let elapsed = started.elapsed();
    assert_eq!(h.complexity(), 5);
    assert_eq!(h.boundaries(), &[1, 3, 5, 8, 16]);
    assert!(h.is_exact());
    let comps: Vec<String> = h.components(&s).into_iter().map(|c| s.render(c)).collect();
    assert_eq!(comps, ["0", "01", "10", "111", "01110110"]);
    assert_eq!(definition_parse(&s), (comps, true));
    // The printed parse ends in "0110110" and covers only 15 of 16 symbols.
    assert_eq!(["0", "01", "10", "111", "0110110"].concat().len(), 15);
    assert!(elapsed < Duration::from_millis(50), "{elapsed:?}");
}

fn ac2_oracle_equivalence() {
    let started = Instant::now();
    let mut mismatches = 0usize;
    let mut checked = 0usize;
    for (alpha, n_max) in [(2, 10), (3, 6)] {
        for n in 1..=n_max {
            for s in all_sequences(alpha, n) {
                checked += 1;
                if complexity(&s).unwrap() != min_history_complexity(&s).unwrap() {
                    mismatches += 1;
                }
            }
        }
    }
    assert_eq!(checked, 2046 + 1092);
    assert_eq!(mismatches, 0);
    assert!(started.elapsed() < Duration::from_secs(120));
}

fn ac3_step_recurrence() {
    for (alpha, last) in RANGES {
        let t = series(alpha, last + 1);
        for n in 1..=last {
            let r = verify_step_recurrence(&t[n - 1], &t[n]).unwrap();
            assert!(r.passed, "alpha {alpha}, n {n}: {:?}", r.counterexample);
            assert!(r.cases_checked > 0);
        }
    }
}

fn ac4_theorem_and_extension() {
    for (alpha, last) in RANGES {
        let t = series(alpha, last + 1);
        let r = verify_theorem(&t).unwrap();
        assert!(r.passed, "alpha {alpha}: {:?}", r.counterexample);
        let r = verify_cdf_extension(&t).unwrap();
        assert!(r.passed, "alpha {alpha}: {:?}", r.counterexample);
        for n in 1..=last {
            let extended = extend_cdf(&t[n - 1], &t[n - 1].cdf_table()).unwrap();
            assert_eq!(&extended, &t[n].cdf_table());
        }
    }
    let t = series(2, 4);
    assert_eq!(t[2].cdf(2), rat(1, 2));
    assert_eq!(t[3].cdf(2), rat(1, 4));
}

fn ac5_monotonicity() {
    for (alpha, last) in RANGES {
        let t = series(alpha, last + 1);
        let r = verify_cdf_monotone_in_length(&t).unwrap();
        assert!(r.passed, "alpha {alpha}: {:?}", r.counterexample);
    }
}

fn ac6_partial_sums() -> String {
    for (alpha, last) in RANGES {
        let t = series(alpha, last + 1);
        for k in 1..=t.len() {
            let mut previous = rat(0, 1);
            for upto in 1..=t.len() {
                let v = exact_mass_partial_sum(&t[..upto], k).unwrap();
                assert!(
                    v >= previous && v <= rat(1, 1),
                    "alpha {alpha}, k {k}, N {upto}"
                );
                previous = v;
            }
        }
    }
    let t = series(2, 10);
    assert_eq!(exact_mass_partial_sum(&t[..3], 2).unwrap(), rat(3, 4));
    let at10 = exact_mass_partial_sum(&t, 2).unwrap();
    assert!(at10 >= rat(95, 100), "{at10}");
    format!("sum_(r<=10) P_r(2_e) = {at10}")
}

fn ac7_side_conditions() {
    let t = series(2, 8);
    let a = check_exact_mass_at_length(&t).unwrap();
    let c = a.counterexample.expect("side condition fails at n = 2");
    assert!(!a.required && (c.n, c.lhs.as_str(), c.rhs.as_str()) == (2, "1/2", "0"));
    let b = check_tail_vanishes(&t).unwrap();
    let c = b
        .counterexample
        .expect("side condition fails at n = 2, k = 1");
    assert!(!b.required);
    assert_eq!((c.n, c.k, c.s, c.lhs.as_str()), (2, 1, Some(2), "1/2"));
    assert_eq!(t[2].pmf(3), rat(1, 2));

    let o = lz76(&["verify", "--alpha", "2", "--nmax", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("DOES NOT HOLD  exact_mass_at_length_vanishes"));
    assert!(text.contains("first counterexample at n = 2, k = 2: lhs = 1/2, rhs = 0"));
    assert!(text.contains("DOES NOT HOLD  tail_beyond_n_minus_k_vanishes"));
    assert!(text.contains("first counterexample at n = 2, k = 1, s = 2: lhs = 1/2, rhs = 0"));
    assert!(text.contains("result: all required identities hold"));
    assert!(!text.contains("FAIL "));
}

fn ac8_randomness_test() {
    let zeros = "0".repeat(16);
    let o = lz76(&["test", "--alphabet", "01", "--json", &zeros]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["observed_complexity"], 2);
    assert_eq!(v["threshold_k"], 4);
    assert_eq!(v["in_critical_set"], true);

    let o = lz76(&["test", "--alphabet", "01", "--json", WORKED]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["observed_complexity"], 5);
    assert_eq!(v["threshold_k"], 4);
    assert_eq!(v["in_critical_set"], false);

    assert_eq!(lz76(&["test", "00"]).status.code(), Some(1));
}

fn ac9_parallel_merge() {
    let one = enumerate_counts_with(2, 12, &EnumerationConfig::default().with_workers(1)).unwrap();
    let eight =
        enumerate_counts_with(2, 12, &EnumerationConfig::default().with_workers(8)).unwrap();
    assert_eq!(one, eight);
    assert_eq!(
        to_csv_string(std::slice::from_ref(&one))
            .unwrap()
            .as_bytes(),
        to_csv_string(std::slice::from_ref(&eight))
            .unwrap()
            .as_bytes()
    );
    let a = lz76(&["table", "--alpha", "2", "--nmax", "12", "--workers", "1"]);
    let b = lz76(&["table", "--alpha", "2", "--nmax", "12", "--workers", "8"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

fn main() {
    type Criterion = (&'static str, Box<dyn Fn() -> Option<String>>);
    let criteria: Vec<Criterion> = vec![
        (
            "AC1 worked example parse",
            Box::new(|| {
                ac1_worked_example();
                None
            }),
        ),
        (
            "AC2 parser equals minimum over histories",
            Box::new(|| {
                ac2_oracle_equivalence();
                None
            }),
        ),
        (
            "AC3 one-step integer recurrence",
            Box::new(|| {
                ac3_step_recurrence();
                None
            }),
        ),
        (
            "AC4 CDF closed form and one-step extension",
            Box::new(|| {
                ac4_theorem_and_extension();
                None
            }),
        ),
        (
            "AC5 CDF non-increasing in n",
            Box::new(|| {
                ac5_monotonicity();
                None
            }),
        ),
        (
            "AC6 exact-mass partial sums",
            Box::new(|| Some(ac6_partial_sums())),
        ),
        (
            "AC7 proof side conditions reported",
            Box::new(|| {
                ac7_side_conditions();
                None
            }),
        ),
        (
            "AC8 randomness test verdicts and exit codes",
            Box::new(|| {
                ac8_randomness_test();
                None
            }),
        ),
        (
            "AC9 parallel enumeration equivalence",
            Box::new(|| {
                ac9_parallel_merge();
                None
            }),
        ),
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, run) in &criteria {
        let started = Instant::now();
        match panic::catch_unwind(AssertUnwindSafe(run)) {
            Ok(note) => {
                let note = note.map(|n| format!(" ({n})")).unwrap_or_default();
                println!("[PASS] {name}{note} in {:.2?}", started.elapsed());
            }
            Err(payload) => {
                failed += 1;
                let msg = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                println!("[FAIL] {name}: {msg}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
