use std::fs::File;
use std::io::Write;
use std::time::{Duration, Instant};

use fibsum_core::identities::{
    audit_cells, closed_form_rhs, evaluate_cell, fib_power_sum_oracle, AuditOptions, AuditReport,
};
use fibsum_core::verify::run_all;
use fibsum_core::{build_coeff_table, CoeffKind, ExactScalar, IdentityFamily, Reading};
use rayon::prelude::*;

use crate::config::{CommandKind, RunConfig, BENCH_N_FLOOR, VERIFY_SEED};
use crate::error::{CliError, EXIT_FAILURE, EXIT_OK, EXIT_PRINTED_FAIL};
use crate::report::{write_audit, write_bench, write_suites, write_tables, BenchRow};

/// Timing repetitions per benchmark point; the fastest run is reported.
const BENCH_REPEATS: usize = 3;

/// Runs one validated command. Reports go to `out` (or the configured
/// file), diagnostics to `err`.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    let mut buf = Vec::new();
    let code = match config.command {
        CommandKind::Verify => cmd_verify(config, &mut buf, err)?,
        CommandKind::Audit => cmd_audit(config, &mut buf, err)?,
        CommandKind::Tables => cmd_tables(config, &mut buf, err)?,
        CommandKind::Bench => cmd_bench(config, &mut buf, err)?,
    };
    match &config.out {
        Some(path) => File::create(path)?.write_all(&buf)?,
        None => out.write_all(&buf)?,
    }
    out.flush()?;
    Ok(code)
}

fn cmd_verify(config: &RunConfig, w: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    let suites = run_all(config.n_max, VERIFY_SEED);
    write_suites(w, &suites, config.format)?;
    let failed: Vec<_> = suites
        .iter()
        .filter(|s| !s.passed())
        .map(|s| s.suite.name())
        .collect();
    if failed.is_empty() {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "failing suites: {}", failed.join(", "))?;
        Ok(EXIT_FAILURE)
    }
}

/// Audits the configured grid, in parallel when requested.
pub fn audit_report(config: &RunConfig) -> AuditReport {
    let cells = audit_cells(&config.families, 0..=config.n_max, 0..=config.p_max);
    let options = AuditOptions::default();
    let entries = if config.parallel {
        cells
            .par_iter()
            .flat_map_iter(|c| evaluate_cell(c, options))
            .collect()
    } else {
        cells
            .iter()
            .flat_map(|c| evaluate_cell(c, options))
            .collect()
    };
    AuditReport::from_entries(entries)
}

fn cmd_audit(config: &RunConfig, w: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    let report = audit_report(config);
    write_audit(w, &report, config.format)?;
    let failures = report.failures().count();
    if report.has_engine_fault() {
        writeln!(
            err,
            "engine fault: the two oracles disagree or an evaluator failed"
        )?;
        return Ok(EXIT_FAILURE);
    }
    if failures > 0 {
        writeln!(
            err,
            "{failures} of {} entries disagree with the printed form",
            report.entries.len()
        )?;
        return Ok(EXIT_PRINTED_FAIL);
    }
    Ok(EXIT_OK)
}

fn cmd_tables(config: &RunConfig, w: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    let mut tables = Vec::new();
    for kind in [CoeffKind::Q, CoeffKind::S] {
        // The tables are built from checked recurrences; a mismatch is an
        // engine failure.
        match build_coeff_table(kind, config.n_max) {
            Ok(t) => tables.push(t),
            Err(e) => {
                writeln!(err, "coefficient table: {e}")?;
                return Ok(EXIT_FAILURE);
            }
        }
    }
    write_tables(w, &tables, config.format)?;
    Ok(EXIT_OK)
}

fn fastest<T>(mut f: impl FnMut() -> T) -> (T, Duration) {
    let mut best = Duration::MAX;
    let mut value = None;
    for _ in 0..BENCH_REPEATS {
        let start = Instant::now();
        let v = f();
        best = best.min(start.elapsed());
        value = Some(v);
    }
    (value.expect("at least one repeat"), best)
}

/// One benchmark point: the direct sum and the closed form, each timed.
pub fn bench_point(family: IdentityFamily, n: u64, p: u64) -> BenchRow {
    let (power, sign) = family.fib_power(p).expect("benchmarkable family");
    let (naive, naive_t) = fastest(|| fib_power_sum_oracle(n, power, sign));
    let (closed, closed_t) = fastest(|| closed_form_rhs(family, Reading::Printed, n, p));
    BenchRow {
        family: family.to_string(),
        n,
        p,
        naive_us: naive_t.as_micros(),
        closed_us: closed_t.as_micros(),
        equal: closed.ok() == Some(ExactScalar::Integer(naive)),
    }
}

fn cmd_bench(config: &RunConfig, w: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    if let Some(f) = config
        .families
        .iter()
        .find(|f| !matches!(f, IdentityFamily::T2 | IdentityFamily::T3))
    {
        return Err(CliError::Config(format!(
            "{f} cannot be benchmarked; use T2 or T3"
        )));
    }
    if config.n_max < BENCH_N_FLOOR {
        return Err(CliError::Config(format!(
            "bench needs --n-max of at least {BENCH_N_FLOOR}"
        )));
    }
    let ns: Vec<u64> = (8..64)
        .map(|k| 1u64 << k)
        .take_while(|&n| n <= config.n_max)
        .collect();
    let mut points = Vec::new();
    for &family in &config.families {
        for p in 0..=config.p_max {
            for &n in &ns {
                if family.applies(n, p) {
                    points.push((family, n, p));
                }
            }
        }
    }
    if points.is_empty() {
        return Err(CliError::Config(
            "no applicable benchmark points".to_string(),
        ));
    }
    let rows: Vec<BenchRow> = points
        .iter()
        .map(|&(f, n, p)| bench_point(f, n, p))
        .collect();
    // Timings are only meaningful once both routes agree.
    let unequal: Vec<_> = rows.iter().filter(|r| !r.equal).collect();
    if !unequal.is_empty() {
        for r in unequal {
            writeln!(
                err,
                "{} n={} p={}: closed form differs from direct sum",
                r.family, r.n, r.p
            )?;
        }
        return Ok(EXIT_FAILURE);
    }
    write_bench(w, &rows, config.format)?;
    Ok(EXIT_OK)
}
