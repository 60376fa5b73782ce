//! Rendering of audit reports, suite summaries, coefficient tables and
//! benchmark rows. Every renderer writes only machine output.

use std::io::{self, Write};

use fibsum_core::identities::{AuditEntry, AuditReport};
use fibsum_core::verify::SuiteReport;
use fibsum_core::{CoeffKind, CoeffTable};
use serde::Serialize;

use crate::config::Format;

pub const AUDIT_CSV_HEADER: &str = "family,n,p,reading,lhs,rhs,verdict,note";

/// Integers longer than this many digits are quoted in CSV.
const CSV_PLAIN_DIGITS: usize = 15;

#[derive(Debug, Serialize)]
struct AuditRow {
    family: String,
    n: u64,
    p: u64,
    reading: String,
    lhs: String,
    rhs: String,
    verdict: &'static str,
    note: String,
}

impl From<&AuditEntry> for AuditRow {
    fn from(e: &AuditEntry) -> Self {
        AuditRow {
            family: e.family.to_string(),
            n: e.n,
            p: e.p,
            reading: e.reading.to_string(),
            lhs: e.lhs.to_string(),
            rhs: e.rhs.to_string(),
            verdict: e.verdict.as_str(),
            note: e.note.clone(),
        }
    }
}

/// Quotes a CSV cell when it holds separators, quotes, line breaks, or a
/// long integer that spreadsheets would round.
pub fn csv_cell(s: &str) -> String {
    let digits = s.strip_prefix('-').unwrap_or(s);
    let long_int = digits.len() > CSV_PLAIN_DIGITS && digits.bytes().all(|b| b.is_ascii_digit());
    if long_int || s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(w: &mut dyn Write, cells: &[String]) -> io::Result<()> {
    let line: Vec<String> = cells.iter().map(|c| csv_cell(c)).collect();
    writeln!(w, "{}", line.join(","))
}

fn json(w: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *w, value).map_err(io::Error::other)?;
    writeln!(w)
}

pub fn write_audit(w: &mut dyn Write, report: &AuditReport, format: Format) -> io::Result<()> {
    let rows: Vec<AuditRow> = report.entries.iter().map(AuditRow::from).collect();
    match format {
        Format::Json => json(w, &rows),
        Format::Csv => {
            writeln!(w, "{AUDIT_CSV_HEADER}")?;
            for r in rows {
                csv_line(
                    w,
                    &[
                        r.family,
                        r.n.to_string(),
                        r.p.to_string(),
                        r.reading,
                        r.lhs,
                        r.rhs,
                        r.verdict.to_string(),
                        r.note,
                    ],
                )?;
            }
            Ok(())
        }
        Format::Text => {
            for r in rows {
                write!(
                    w,
                    "{} {} n={} p={} [{}] lhs={} rhs={}",
                    r.verdict, r.family, r.n, r.p, r.reading, r.lhs, r.rhs
                )?;
                if !r.note.is_empty() {
                    write!(w, " ({})", r.note)?;
                }
                writeln!(w)?;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Serialize)]
struct SuiteRow {
    suite: &'static str,
    checks: u64,
    failures: u64,
    verdict: &'static str,
}

pub fn write_suites(w: &mut dyn Write, suites: &[SuiteReport], format: Format) -> io::Result<()> {
    let rows: Vec<SuiteRow> = suites
        .iter()
        .map(|s| SuiteRow {
            suite: s.suite.name(),
            checks: s.checks,
            failures: s.failures,
            verdict: if s.passed() { "PASS" } else { "FAIL" },
        })
        .collect();
    match format {
        Format::Json => json(w, &rows),
        Format::Csv => {
            writeln!(w, "suite,checks,failures,verdict")?;
            for r in rows {
                writeln!(w, "{},{},{},{}", r.suite, r.checks, r.failures, r.verdict)?;
            }
            Ok(())
        }
        Format::Text => {
            for r in rows {
                writeln!(
                    w,
                    "{:<12} {:>8} checks {:>4} failures  {}",
                    r.suite, r.checks, r.failures, r.verdict
                )?;
            }
            Ok(())
        }
    }
}

fn kind_label(kind: CoeffKind) -> &'static str {
    match kind {
        CoeffKind::Q => "Q",
        CoeffKind::S => "S",
    }
}

fn table_strings(t: &CoeffTable) -> Vec<Vec<String>> {
    t.rows()
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect()
}

pub fn write_tables(w: &mut dyn Write, tables: &[CoeffTable], format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = tables
                .iter()
                .map(|t| {
                    (
                        kind_label(t.kind()).to_string(),
                        serde_json::json!(table_strings(t)),
                    )
                })
                .collect();
            json(w, &map)
        }
        Format::Csv => {
            for t in tables {
                writeln!(w, "# {}", kind_label(t.kind()))?;
                for row in table_strings(t) {
                    csv_line(w, &row)?;
                }
            }
            Ok(())
        }
        Format::Text => {
            for t in tables {
                writeln!(w, "{}", kind_label(t.kind()))?;
                for row in table_strings(t) {
                    writeln!(w, "{}", row.join(" "))?;
                }
            }
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub family: String,
    pub n: u64,
    pub p: u64,
    pub naive_us: u128,
    pub closed_us: u128,
    pub equal: bool,
}

pub fn write_bench(w: &mut dyn Write, rows: &[BenchRow], format: Format) -> io::Result<()> {
    match format {
        Format::Json => json(w, &rows),
        Format::Csv => {
            writeln!(w, "family,n,p,naive_us,closed_us,equal")?;
            for r in rows {
                writeln!(
                    w,
                    "{},{},{},{},{},{}",
                    r.family, r.n, r.p, r.naive_us, r.closed_us, r.equal
                )?;
            }
            Ok(())
        }
        Format::Text => {
            writeln!(
                w,
                "{:<6} {:>6} {:>4} {:>12} {:>12} {:>9}  equal",
                "family", "n", "p", "naive_us", "closed_us", "speedup"
            )?;
            for r in rows {
                let speedup = r.naive_us as f64 / r.closed_us.max(1) as f64;
                writeln!(
                    w,
                    "{:<6} {:>6} {:>4} {:>12} {:>12} {:>8.1}x  {}",
                    r.family, r.n, r.p, r.naive_us, r.closed_us, speedup, r.equal
                )?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_cell("123"), "123");
        assert_eq!(csv_cell("1234567890123456"), "\"1234567890123456\"");
        assert_eq!(csv_cell("-1234567890123456"), "\"-1234567890123456\"");
        assert_eq!(csv_cell("a,b"), "\"a,b\"");
        assert_eq!(csv_cell("say \"x\""), "\"say \"\"x\"\"\"");
        assert_eq!(csv_cell("(1+1*sqrt(5))/2"), "(1+1*sqrt(5))/2");
    }
}
