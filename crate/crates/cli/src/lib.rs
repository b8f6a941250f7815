//! The `lz76` command-line tool.
//!
//! Exit codes: 0 success or not suspicious, 1 usage/decode/resource error,
//! 2 a required identity failed (`verify`), 3 the sequence is in the
//! critical set (`test`).

pub mod input;

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use lz76::distribution::{io as table_io, DEFAULT_BUDGET};
use lz76::{
    exhaustive_history, test_sequence, Alphabet, CriticalSetSpec, DistributionReport,
    EnumerationConfig, Error,
};

use input::{Format, InputSpec, Source};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_IDENTITY_VIOLATION: i32 = 2;
pub const EXIT_IN_CRITICAL_SET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lz76",
    version,
    about = "Lempel-Ziv (1976) complexity and its exact distribution"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a sequence into its exhaustive history and report c_E and exactness.
    Complexity(ComplexityArgs),
    /// Enumerate count tables N_n(k), N_n(k_e) for n = 1..=nmax.
    Table(TableArgs),
    /// Enumerate tables and check the distribution identities exactly.
    Verify(VerifyArgs),
    /// Test a sequence against the critical set {S : C_n(S) <= k}.
    Test(TestArgs),
}

#[derive(Debug, Args)]
struct AlphabetArgs {
    /// Alphabet tokens in symbol order, one character each.
    #[arg(long)]
    alphabet: Option<String>,
    /// Alphabet size, with default tokens 0-9a-zA-Z...; ignored when --alphabet is given.
    #[arg(long)]
    alpha: Option<usize>,
}

impl AlphabetArgs {
    fn resolve(&self) -> lz76::Result<Alphabet> {
        match (&self.alphabet, self.alpha) {
            (Some(tokens), _) => Alphabet::from_tokens(tokens),
            (None, Some(size)) => Alphabet::with_size(size),
            (None, None) => Ok(Alphabet::binary()),
        }
    }
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Inline sequence. Read from --input or standard input when absent.
    sequence: Option<String>,
    /// Read the sequence from a file ("-" for standard input).
    #[arg(long, conflicts_with = "sequence")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Symbols)]
    format: Format,
    #[command(flatten)]
    alphabet: AlphabetArgs,
}

impl InputArgs {
    fn spec(&self) -> lz76::Result<InputSpec> {
        let source = match (&self.sequence, &self.input) {
            (Some(text), _) => Source::Inline(text.clone()),
            (None, Some(path)) if path.as_os_str() == "-" => Source::Stdin,
            (None, Some(path)) => Source::File(path.clone()),
            (None, None) => Source::Stdin,
        };
        let alphabet = self.alphabet.resolve()?;
        Ok(InputSpec {
            source,
            format: self.format,
            alphabet,
        })
    }
}

#[derive(Debug, Args)]
struct EnumerationArgs {
    #[command(flatten)]
    alphabet: AlphabetArgs,
    /// Largest sequence length to enumerate.
    #[arg(long)]
    nmax: usize,
    /// Maximum number of sequences per table (alpha^n).
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Enumeration worker threads (default: available parallelism).
    #[arg(long)]
    workers: Option<usize>,
}

impl EnumerationArgs {
    fn config(&self) -> EnumerationConfig {
        let config = EnumerationConfig::default().with_budget(self.budget);
        match self.workers {
            Some(w) => config.with_workers(w),
            None => config,
        }
    }

    fn alphabet_size(&self) -> lz76::Result<usize> {
        let size = self.alphabet.resolve()?.size();
        if size < 2 {
            return Err(Error::AlphabetTooSmall { min: 2, got: size });
        }
        Ok(size)
    }
}

#[derive(Debug, Args)]
struct ComplexityArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Also list the components and their 1-based end points.
    #[arg(short, long)]
    verbose: bool,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    enumeration: EnumerationArgs,
    /// Write the JSON report (tables plus identity results) instead of CSV.
    #[arg(long)]
    json: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    enumeration: EnumerationArgs,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TestArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Critical-set threshold k (default: floor(n / log_alpha n)).
    #[arg(long)]
    threshold: Option<usize>,
    /// CSV or JSON table file supplying the significance level.
    #[arg(long, conflicts_with = "enumerate")]
    table: Option<PathBuf>,
    /// Compute the significance level by enumerating A^n (subject to --budget).
    #[arg(long)]
    enumerate: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
            let sink: &mut dyn Write = if code == EXIT_OK { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> lz76::Result<i32> {
    match command {
        Command::Complexity(args) => cmd_complexity(args, stdin, stdout),
        Command::Table(args) => cmd_table(args, stdout),
        Command::Verify(args) => cmd_verify(args, stdout),
        Command::Test(args) => cmd_test(args, stdin, stdout),
    }
}

/// Runs `body` against the `--output` file or standard output.
fn with_output(
    path: Option<&PathBuf>,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> lz76::Result<()>,
) -> lz76::Result<()> {
    match path {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            body(&mut file)?;
            file.flush()?;
        }
        None => body(stdout)?,
    }
    Ok(())
}

fn cmd_complexity(
    args: ComplexityArgs,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> lz76::Result<i32> {
    let s = args.input.spec()?.read(stdin)?;
    let history = exhaustive_history(&s)?;
    let components: Vec<String> = history
        .components(&s)
        .into_iter()
        .map(|c| s.render(c))
        .collect();
    with_output(args.output.as_ref(), stdout, |out| {
        if args.json {
            let doc = serde_json::json!({
                "n": s.len(),
                "complexity": history.complexity(),
                "exact": history.is_exact(),
                "boundaries": history.boundaries(),
                "components": components,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        } else {
            writeln!(out, "n: {}", s.len())?;
            writeln!(out, "complexity: {}", history.complexity())?;
            writeln!(out, "exact: {}", history.is_exact())?;
            if args.verbose {
                let bounds: Vec<String> =
                    history.boundaries().iter().map(|h| h.to_string()).collect();
                writeln!(out, "boundaries: {}", bounds.join(" "))?;
                writeln!(out, "components: {}", components.join("|"))?;
            }
        }
        Ok(())
    })?;
    Ok(EXIT_OK)
}

fn cmd_table(args: TableArgs, stdout: &mut dyn Write) -> lz76::Result<i32> {
    let alpha = args.enumeration.alphabet_size()?;
    let report =
        DistributionReport::build(alpha, args.enumeration.nmax, &args.enumeration.config())?;
    with_output(args.output.as_ref(), stdout, |out| {
        if args.json {
            table_io::write_json(&report, out)
        } else {
            table_io::write_csv(report.tables(), out)
        }
    })?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs, stdout: &mut dyn Write) -> lz76::Result<i32> {
    let alpha = args.enumeration.alphabet_size()?;
    let n_max = args.enumeration.nmax;
    let report = DistributionReport::build(alpha, n_max, &args.enumeration.config())?;
    with_output(args.output.as_ref(), stdout, |out| {
        if args.json {
            return table_io::write_json(&report, out);
        }
        writeln!(out, "alphabet size {alpha}, n = 1..={n_max}")?;
        for r in report.identities() {
            let status = match (r.required, r.passed) {
                (true, true) => "PASS",
                (true, false) => "FAIL",
                (false, true) => "HOLDS",
                (false, false) => "DOES NOT HOLD",
            };
            let kind = if r.required {
                "required"
            } else {
                "reported only"
            };
            writeln!(
                out,
                "{status:<14} {:<31} [{kind}, {} cases] {}",
                r.name, r.cases_checked, r.statement
            )?;
            if let Some(c) = &r.counterexample {
                let s = c.s.map(|s| format!(", s = {s}")).unwrap_or_default();
                writeln!(
                    out,
                    "{:>14} first counterexample at n = {}, k = {}{s}: lhs = {}, rhs = {}",
                    "", c.n, c.k, c.lhs, c.rhs
                )?;
            }
        }
        let verdict = if report.required_passed() {
            "all required identities hold"
        } else {
            "required identity violated"
        };
        writeln!(out, "result: {verdict}")?;
        Ok(())
    })?;
    Ok(if report.required_passed() {
        EXIT_OK
    } else {
        EXIT_IDENTITY_VIOLATION
    })
}

fn cmd_test(args: TestArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> lz76::Result<i32> {
    let s = args.input.spec()?.read(stdin)?;
    let (alpha, n) = (s.alphabet().size(), s.len());
    let spec = match args.threshold {
        Some(k) => CriticalSetSpec::new(alpha, n, k)?,
        None => CriticalSetSpec::with_default_threshold(alpha, n).map_err(|e| match e {
            Error::DegenerateThreshold { .. } => {
                Error::Invalid(format!("{e}; use --threshold <k>"))
            }
            other => other,
        })?,
    };
    let table = if let Some(path) = &args.table {
        table_io::load_tables(path)?
            .into_iter()
            .find(|t| t.alphabet_size() == alpha && t.length() == n)
    } else if args.enumerate {
        let config = EnumerationConfig::default().with_budget(args.budget);
        Some(lz76::enumerate_counts_with(alpha, n, &config)?)
    } else {
        None
    };
    let verdict = test_sequence(&s, Some(&spec), table.as_ref())?;
    with_output(args.output.as_ref(), stdout, |out| {
        if args.json {
            writeln!(out, "{}", verdict.to_json())?;
            return Ok(());
        }
        writeln!(out, "n: {}", verdict.length)?;
        writeln!(out, "complexity: {}", verdict.observed_complexity)?;
        writeln!(out, "threshold k: {}", verdict.threshold_k)?;
        if verdict.in_critical_set {
            writeln!(out, "in critical set: yes (suspicious, complexity <= k)")?;
        } else {
            writeln!(out, "in critical set: no")?;
        }
        match &verdict.significance {
            Some(p) => {
                let approx = verdict.significance_approx().unwrap_or(f64::NAN);
                writeln!(
                    out,
                    "significance P_n(C_n <= {}): {p} (~{approx:.6e})",
                    verdict.threshold_k
                )?
            }
            None => writeln!(
                out,
                "significance: unavailable (no table for alpha = {alpha}, n = {n})"
            )?,
        }
        Ok(())
    })?;
    Ok(if verdict.in_critical_set {
        EXIT_IN_CRITICAL_SET
    } else {
        EXIT_OK
    })
}

/// Entry point used by the binary.
pub fn main_with_std() -> i32 {
    let code = run(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    let _ = io::stdout().flush();
    code
}
