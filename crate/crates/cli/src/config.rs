use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fibsum_core::IdentityFamily;

use crate::error::CliError;

pub const N_MAX_CAP: u64 = 4096;
pub const P_MAX_CAP: u64 = 64;

/// Smallest `n` the benchmark accepts.
pub const BENCH_N_FLOOR: u64 = 256;

/// Seed for the verification suites; runs are reproducible.
pub const VERIFY_SEED: u64 = 0x5EED_F1B5;

#[derive(Debug, Parser)]
#[command(
    name = "fibsum",
    version,
    about = "Exact audits of binomial sums of Fibonacci powers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Run the transform property suites.
    Verify(Flags),
    /// Compare printed closed forms against the oracles.
    Audit(Flags),
    /// Print the q and s coefficient tables.
    Tables(Flags),
    /// Time closed forms against direct summation.
    Bench(Flags),
}

#[derive(Debug, Clone, PartialEq, Eq, Args)]
pub struct Flags {
    /// Comma-separated identity tags or groups, or "all".
    #[arg(long)]
    pub families: Option<String>,
    #[arg(long)]
    pub n_max: Option<u64>,
    #[arg(long)]
    pub p_max: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Evaluate grid cells on all cores.
    #[arg(long)]
    pub parallel: bool,
    /// Lift the limits on --n-max and --p-max.
    #[arg(long)]
    pub unsafe_no_caps: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Verify,
    Audit,
    Tables,
    Bench,
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub families: Vec<IdentityFamily>,
    pub n_max: u64,
    pub p_max: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub parallel: bool,
}

impl RunConfig {
    pub fn from_command(command: Command) -> Result<RunConfig, CliError> {
        let (kind, flags) = match command {
            Command::Verify(f) => (CommandKind::Verify, f),
            Command::Audit(f) => (CommandKind::Audit, f),
            Command::Tables(f) => (CommandKind::Tables, f),
            Command::Bench(f) => (CommandKind::Bench, f),
        };
        let (n_default, p_default, families_default) = match kind {
            CommandKind::Verify => (24, 0, "all"),
            CommandKind::Audit => (16, 2, "all"),
            CommandKind::Tables => (10, 0, "all"),
            CommandKind::Bench => (1024, 1, "T2"),
        };
        let n_max = flags.n_max.unwrap_or(n_default);
        let p_max = flags.p_max.unwrap_or(p_default);
        if !flags.unsafe_no_caps {
            if n_max > N_MAX_CAP {
                return Err(CliError::Config(format!(
                    "--n-max {n_max} exceeds the cap of {N_MAX_CAP} (use --unsafe-no-caps)"
                )));
            }
            if p_max > P_MAX_CAP {
                return Err(CliError::Config(format!(
                    "--p-max {p_max} exceeds the cap of {P_MAX_CAP} (use --unsafe-no-caps)"
                )));
            }
        }
        let families = parse_families(flags.families.as_deref().unwrap_or(families_default))?;
        Ok(RunConfig {
            command: kind,
            families,
            n_max,
            p_max,
            format: flags.format,
            out: flags.out,
            parallel: flags.parallel,
        })
    }
}

/// Parses a comma-separated list of tags and groups, dropping duplicates.
pub fn parse_families(list: &str) -> Result<Vec<IdentityFamily>, CliError> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let group = IdentityFamily::parse_group(item)
            .ok_or_else(|| CliError::Config(format!("unknown identity family {item:?}")))?;
        out.extend(group);
    }
    if out.is_empty() {
        return Err(CliError::Config(
            "no identity families selected".to_string(),
        ));
    }
    out.sort();
    out.dedup();
    Ok(out)
}
