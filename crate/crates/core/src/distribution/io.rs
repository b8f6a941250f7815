//! CSV and JSON forms of count tables.
//!
//! CSV has a fixed header `alphabet_size,n,k,count,exact_count,total`, one row
//! per `(n, k)` with `k = 1..=n`, LF line endings. JSON mirrors the same
//! fields grouped per table, with `total` as a decimal string, plus the
//! identity results of a [`DistributionReport`]. Both forms are lossless.

use std::io::{Read, Write};
use std::path::Path;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::identities::IdentityResult;
use super::{CountTable, DistributionReport};
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 6] = ["alphabet_size", "n", "k", "count", "exact_count", "total"];

#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    alphabet_size: usize,
    n: usize,
    k: usize,
    count: u64,
    exact_count: u64,
    total: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonRow {
    k: usize,
    count: u64,
    exact_count: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonTable {
    alphabet_size: usize,
    n: usize,
    total: String,
    rows: Vec<JsonRow>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonDocument {
    alphabet_size: usize,
    n_max: usize,
    required_passed: bool,
    tables: Vec<JsonTable>,
    identities: Vec<IdentityResult>,
}

pub fn write_csv<W: Write>(tables: &[CountTable], writer: W) -> Result<()> {
    let mut out = csv::WriterBuilder::new()
        .has_headers(true)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(writer);
    for t in tables {
        let total = t.total().to_string();
        for k in 1..=t.length() {
            out.serialize(CsvRow {
                alphabet_size: t.alphabet_size(),
                n: t.length(),
                k,
                count: t.count(k),
                exact_count: t.exact_count(k),
                total: total.clone(),
            })?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn to_csv_string(tables: &[CountTable]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(tables, &mut buf)?;
    Ok(String::from_utf8(buf).expect("CSV output is ASCII"))
}

/// Reads tables from CSV, in the order they first appear.
pub fn read_csv<R: Read>(reader: R) -> Result<Vec<CountTable>> {
    let mut input = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(reader);
    let header: Vec<String> = input.headers()?.iter().map(str::to_owned).collect();
    if header != CSV_HEADER {
        return Err(Error::Format(format!(
            "unexpected CSV header {header:?}, expected {CSV_HEADER:?}"
        )));
    }
    // (alphabet_size, n, total, rows of (k, count, exact_count))
    type Group = (usize, usize, String, Vec<(usize, u64, u64)>);
    let mut groups: Vec<Group> = Vec::new();
    for row in input.deserialize() {
        let row: CsvRow = row?;
        match groups
            .iter_mut()
            .find(|g| g.0 == row.alphabet_size && g.1 == row.n)
        {
            Some(g) => {
                if g.2 != row.total {
                    return Err(Error::Format(format!(
                        "n = {}: inconsistent totals {} and {}",
                        row.n, g.2, row.total
                    )));
                }
                g.3.push((row.k, row.count, row.exact_count));
            }
            None => groups.push((
                row.alphabet_size,
                row.n,
                row.total,
                vec![(row.k, row.count, row.exact_count)],
            )),
        }
    }
    groups
        .into_iter()
        .map(|(alpha, n, total, rows)| assemble(alpha, n, &total, rows))
        .collect()
}

fn assemble(
    alphabet_size: usize,
    n: usize,
    total: &str,
    mut rows: Vec<(usize, u64, u64)>,
) -> Result<CountTable> {
    rows.sort_by_key(|r| r.0);
    if rows.len() != n || rows.iter().enumerate().any(|(i, r)| r.0 != i + 1) {
        return Err(Error::Format(format!(
            "table alpha = {alphabet_size}, n = {n} must list every k in 1..={n} exactly once"
        )));
    }
    let table = CountTable::from_counts(
        alphabet_size,
        n,
        rows.iter().map(|r| r.1).collect(),
        rows.iter().map(|r| r.2).collect(),
    )?;
    let declared: BigUint = total
        .parse()
        .map_err(|_| Error::Format(format!("n = {n}: total {total:?} is not an integer")))?;
    if declared != table.total() {
        return Err(Error::Format(format!(
            "n = {n}: total {declared} is not {alphabet_size}^{n}"
        )));
    }
    Ok(table)
}

/// JSON for a report: tables plus identity results.
pub fn write_json<W: Write>(report: &DistributionReport, mut writer: W) -> Result<()> {
    let doc = JsonDocument {
        alphabet_size: report.alphabet_size(),
        n_max: report.n_max(),
        required_passed: report.required_passed(),
        tables: report
            .tables()
            .iter()
            .map(|t| JsonTable {
                alphabet_size: t.alphabet_size(),
                n: t.length(),
                total: t.total().to_string(),
                rows: (1..=t.length())
                    .map(|k| JsonRow {
                        k,
                        count: t.count(k),
                        exact_count: t.exact_count(k),
                    })
                    .collect(),
            })
            .collect(),
        identities: report.identities().to_vec(),
    };
    serde_json::to_writer_pretty(&mut writer, &doc)?;
    writer.write_all(b"\n")?;
    Ok(())
}

pub fn to_json_string(report: &DistributionReport) -> Result<String> {
    let mut buf = Vec::new();
    write_json(report, &mut buf)?;
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}

/// Reads a JSON report, returning its tables and the identity results as written.
pub fn read_json<R: Read>(reader: R) -> Result<(Vec<CountTable>, Vec<IdentityResult>)> {
    let doc: JsonDocument = serde_json::from_reader(reader)?;
    let tables = doc
        .tables
        .into_iter()
        .map(|t| {
            let rows = t
                .rows
                .iter()
                .map(|r| (r.k, r.count, r.exact_count))
                .collect();
            assemble(t.alphabet_size, t.n, &t.total, rows)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((tables, doc.identities))
}

/// Reads tables from CSV or JSON, choosing by the first non-blank byte.
pub fn read_tables<R: Read>(mut reader: R) -> Result<Vec<CountTable>> {
    let mut buf = Vec::new();
    reader.read_to_end(&mut buf)?;
    match buf.iter().find(|b| !b.is_ascii_whitespace()) {
        Some(b'{') => Ok(read_json(buf.as_slice())?.0),
        Some(_) => read_csv(buf.as_slice()),
        None => Err(Error::Format("table input is empty".into())),
    }
}

pub fn load_tables(path: impl AsRef<Path>) -> Result<Vec<CountTable>> {
    read_tables(std::fs::File::open(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::{enumerate_counts, EnumerationConfig};

    fn series(alpha: usize, max_n: usize) -> Vec<CountTable> {
        (1..=max_n)
            .map(|n| enumerate_counts(alpha, n).unwrap())
            .collect()
    }

    #[test]
    fn csv_golden_binary_three() {
        let csv = to_csv_string(&series(2, 3)).unwrap();
        assert_eq!(
            csv,
            "alphabet_size,n,k,count,exact_count,total\n\
             2,1,1,2,2,2\n\
             2,2,1,0,0,4\n\
             2,2,2,4,2,4\n\
             2,3,1,0,0,8\n\
             2,3,2,4,2,8\n\
             2,3,3,4,0,8\n"
        );
    }

    #[test]
    fn csv_round_trip() {
        let tables = series(3, 5);
        let csv = to_csv_string(&tables).unwrap();
        assert_eq!(read_csv(csv.as_bytes()).unwrap(), tables);
        assert_eq!(read_tables(csv.as_bytes()).unwrap(), tables);
    }

    #[test]
    fn json_round_trip() {
        let report = DistributionReport::build(2, 6, &EnumerationConfig::default()).unwrap();
        let json = to_json_string(&report).unwrap();
        let (tables, identities) = read_json(json.as_bytes()).unwrap();
        assert_eq!(tables, report.tables());
        assert_eq!(identities, report.identities());
        assert_eq!(read_tables(json.as_bytes()).unwrap(), report.tables());
    }

    #[test]
    fn csv_rejects_bad_data() {
        let bad_header = "a,b,c\n1,2,3\n";
        assert!(read_csv(bad_header.as_bytes()).is_err());
        let missing_k = "alphabet_size,n,k,count,exact_count,total\n2,2,2,4,2,4\n";
        assert!(read_csv(missing_k.as_bytes()).is_err());
        let bad_total = "alphabet_size,n,k,count,exact_count,total\n2,1,1,2,2,3\n";
        assert!(read_csv(bad_total.as_bytes()).is_err());
        let bad_sum = "alphabet_size,n,k,count,exact_count,total\n2,1,1,1,1,2\n";
        assert!(read_csv(bad_sum.as_bytes()).is_err());
        assert!(read_tables(&b"  \n"[..]).is_err());
    }
}
