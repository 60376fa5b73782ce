use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use super::{
    closed_form_value, cross_power_expansion, fib_power_sum_binet, fib_power_sum_oracle, readings,
    relations::prop1_sides, remark1_relation, ClosedFormValue, IdentityFamily, Reading, Shift,
};
use crate::error::IdentityError;
use crate::ring::GoldenInt;
use crate::scalar::ExactScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditEntry {
    pub family: IdentityFamily,
    pub n: u64,
    pub p: u64,
    pub reading: Reading,
    pub lhs: ExactScalar,
    pub rhs: ClosedFormValue,
    pub verdict: Verdict,
    pub note: String,
    /// The two independent oracles disagreed; a software fault, not a
    /// finding about the printed formula.
    pub engine_fault: bool,
}

impl AuditEntry {
    fn sort_key(&self) -> (IdentityFamily, u64, u64, Reading) {
        (self.family, self.p, self.n, self.reading)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    /// Builds a report in canonical `(family, p, n, reading)` order.
    pub fn from_entries(mut entries: Vec<AuditEntry>) -> Self {
        entries.sort_by_key(AuditEntry::sort_key);
        AuditReport { entries }
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.verdict == Verdict::Pass)
    }

    pub fn has_engine_fault(&self) -> bool {
        self.entries.iter().any(|e| e.engine_fault)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(|e| e.verdict == Verdict::Fail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditOptions {
    /// Recompute every Fibonacci-power LHS with the golden-ring oracle and
    /// flag disagreements.
    pub cross_check_oracles: bool,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            cross_check_oracles: true,
        }
    }
}

/// One `(family, n, p)` grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AuditCell {
    pub family: IdentityFamily,
    pub n: u64,
    pub p: u64,
}

/// The applicable grid points, in canonical order. Families that ignore a
/// parameter record it as 0.
pub fn audit_cells(
    families: &[IdentityFamily],
    n_range: RangeInclusive<u64>,
    p_range: RangeInclusive<u64>,
) -> Vec<AuditCell> {
    let mut cells = Vec::new();
    for &family in families {
        let ns: Vec<u64> = if family.ignores_n() {
            if n_range.is_empty() {
                Vec::new()
            } else {
                alloc::vec![0]
            }
        } else {
            n_range.clone().collect()
        };
        let ps: Vec<u64> = if family.ignores_p() {
            if p_range.is_empty() {
                Vec::new()
            } else {
                alloc::vec![0]
            }
        } else {
            p_range.clone().collect()
        };
        for &p in &ps {
            for &n in &ns {
                if family.applies(n, p) {
                    cells.push(AuditCell { family, n, p });
                }
            }
        }
    }
    cells.sort();
    cells.dedup();
    cells
}

fn entry(cell: &AuditCell, reading: Reading, lhs: ExactScalar, rhs: ClosedFormValue) -> AuditEntry {
    let (verdict, note) = match &rhs {
        ClosedFormValue::Exact(r) if *r == lhs => (Verdict::Pass, String::new()),
        ClosedFormValue::Exact(r) => {
            let note = match (&lhs, r) {
                (ExactScalar::Integer(_), ExactScalar::Rational(_)) => {
                    "printed form: rhs is not an integer".to_string()
                }
                (ExactScalar::Integer(_), ExactScalar::Golden(_)) => {
                    "printed form: rhs is irrational".to_string()
                }
                _ => match r.try_sub(&lhs) {
                    Ok(d) => format!("printed form: rhs - lhs = {d}"),
                    Err(_) => "printed form: rhs differs from lhs".to_string(),
                },
            };
            (Verdict::Fail, note)
        }
        ClosedFormValue::Irrational(_) => {
            (Verdict::Fail, "printed form: rhs is irrational".to_string())
        }
        ClosedFormValue::Unavailable => (Verdict::Fail, "engine: rhs unavailable".to_string()),
    };
    AuditEntry {
        family: cell.family,
        n: cell.n,
        p: cell.p,
        reading,
        lhs,
        rhs,
        verdict,
        note,
        engine_fault: false,
    }
}

fn engine_failure(
    cell: &AuditCell,
    reading: Reading,
    lhs: ExactScalar,
    err: IdentityError,
) -> AuditEntry {
    AuditEntry {
        family: cell.family,
        n: cell.n,
        p: cell.p,
        reading,
        lhs,
        rhs: ClosedFormValue::Unavailable,
        verdict: Verdict::Fail,
        note: format!("engine: {err}"),
        engine_fault: true,
    }
}

fn golden_pair(
    cell: &AuditCell,
    pair: Result<(GoldenInt, GoldenInt), IdentityError>,
) -> AuditEntry {
    match pair {
        Ok((l, r)) => entry(
            cell,
            Reading::Printed,
            ExactScalar::Golden(l),
            ClosedFormValue::Exact(ExactScalar::Golden(r)),
        ),
        Err(e) => engine_failure(cell, Reading::Printed, ExactScalar::int(0), e),
    }
}

/// Evaluates every reading of one grid point.
pub fn evaluate_cell(cell: &AuditCell, options: AuditOptions) -> Vec<AuditEntry> {
    use IdentityFamily::*;
    let AuditCell { family, n, p } = *cell;
    match family {
        Remark1(i) => alloc::vec![golden_pair(cell, remark1_relation(p, i))],
        Prop1(v) => {
            let (lhs, rhs) = prop1_sides(n, p, v);
            let rhs = match rhs.sqrt5_power {
                0 => ClosedFormValue::Exact(ExactScalar::Golden(rhs.numer)),
                _ => ClosedFormValue::Irrational(rhs),
            };
            alloc::vec![entry(cell, Reading::Printed, ExactScalar::Golden(lhs), rhs)]
        }
        Lemma5 | Lemma7 => {
            let shift = if family == Lemma5 {
                Shift::Plus
            } else {
                Shift::Minus
            };
            alloc::vec![golden_pair(
                cell,
                cross_power_expansion(n, &GoldenInt::phi(), shift)
            )]
        }
        _ => {
            let (power, sign) = family.fib_power(p).expect("fib-power family");
            let lhs = fib_power_sum_oracle(n, power, sign);
            let mut oracle_note = None;
            if options.cross_check_oracles {
                match fib_power_sum_binet(n, power, sign) {
                    Ok(other) if other == lhs => {}
                    Ok(other) => {
                        oracle_note = Some(format!("engine: oracles disagree ({lhs} vs {other})"))
                    }
                    Err(e) => oracle_note = Some(format!("engine: ring oracle failed: {e}")),
                }
            }
            let lhs = ExactScalar::Integer(lhs);
            readings(family)
                .into_iter()
                .map(|reading| {
                    let mut e = match closed_form_value(family, reading, n, p) {
                        Ok(v) => entry(cell, reading, lhs.clone(), ClosedFormValue::from_surd(v)),
                        Err(err) => engine_failure(cell, reading, lhs.clone(), err),
                    };
                    if let Some(note) = &oracle_note {
                        e.verdict = Verdict::Fail;
                        e.engine_fault = true;
                        e.note = note.clone();
                    }
                    e
                })
                .collect()
        }
    }
}

/// Compares every applicable identity over the grid. Failures are data.
pub fn audit(
    families: &[IdentityFamily],
    n_range: RangeInclusive<u64>,
    p_range: RangeInclusive<u64>,
) -> AuditReport {
    let options = AuditOptions::default();
    let entries = audit_cells(families, n_range, p_range)
        .iter()
        .flat_map(|cell| evaluate_cell(cell, options))
        .collect();
    AuditReport::from_entries(entries)
}
