//! Command-line front end: `bounds`, `spectrum`, and `verify`.
//!
//! The binary is a thin shell over the library — every subcommand is a few
//! library calls plus an emitter. Output is deterministic: identical inputs
//! produce byte-identical reports.

pub mod config;
pub mod expr;
pub mod report;
pub mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::catalog::{catalog_entries, catalog_lookup, connected_sum_bounds, CatalogError};
use crate::lattice::ManifoldDescriptor;
use crate::spectrum::{conformal_normalize, SpectrumError, TrichotomySign};
use config::{ConfigError, SpectrumConfig};
use report::{round_sig12, ReportRow};
use verify::Suite;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown manifold '{name}'; available: {available}")]
    UnknownManifold { name: String, available: String },
    #[error(
        "unknown suite '{name}'; available: algebra, covariance, trichotomy, lattice, constants"
    )]
    UnknownSuite { name: String },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "yamabe-lab",
    version,
    about = "Yamabe-invariant bound tables and conformal spectral diagnostics on the 4-torus"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit Yamabe-invariant bound rows for catalog manifolds.
    Bounds {
        /// Number of CP² summands (1..=3); reports kCP² # m(S¹×S³).
        #[arg(long, conflicts_with = "name")]
        k: Option<usize>,
        /// Number of S¹×S³ summands.
        #[arg(long, default_value_t = 0)]
        m: usize,
        /// Catalog entry by name (see `bounds` with no flags for the list).
        #[arg(long)]
        name: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Lowest eigenpair and trichotomy sign for a configured grid.
    Spectrum {
        /// JSON config path ({n, u, f, solver}).
        #[arg(long)]
        config: String,
    },
    /// Run a named verification suite; exit code 0 iff all checks pass.
    Verify {
        /// One of: algebra, covariance, trichotomy, lattice, constants.
        suite: String,
        /// Worker threads for independent cases (default: YAMABE_LAB_THREADS
        /// or 1); aggregation order is deterministic either way.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

/// Full CLI entry; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(Output { text, exit_code }) => {
            print!("{text}");
            exit_code
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

pub struct Output {
    pub text: String,
    pub exit_code: i32,
}

fn execute(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Bounds { k, m, name, format } => {
            let rows = bounds_rows(k, m, name.as_deref())?;
            let text = match format {
                Format::Json => report::emit_json(&rows),
                Format::Csv => report::emit_csv(&rows),
            };
            Ok(Output { text, exit_code: 0 })
        }
        Command::Spectrum { config } => {
            let text = run_spectrum(&SpectrumConfig::from_file(&config)?)?;
            Ok(Output { text, exit_code: 0 })
        }
        Command::Verify { suite, jobs } => {
            let suite = Suite::from_name(&suite).ok_or(CliError::UnknownSuite { name: suite })?;
            let jobs = jobs.unwrap_or_else(jobs_from_env);
            let report = verify::run_suite(suite, jobs);
            let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
            text.push('\n');
            Ok(Output {
                text,
                exit_code: if report.passed { 0 } else { 1 },
            })
        }
    }
}

fn jobs_from_env() -> usize {
    std::env::var("YAMABE_LAB_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&j| j >= 1)
        .unwrap_or(1)
}

fn bounds_rows(k: Option<usize>, m: usize, name: Option<&str>) -> Result<Vec<ReportRow>, CliError> {
    if let Some(k) = k {
        let bounds = connected_sum_bounds(k, m)?;
        let descriptor = ManifoldDescriptor::connected_sum_cp2(k, m);
        let provenance = if k == 1 {
            "0-surgeries: Kobayashi gluing from below meets the k=1 index bound from above"
        } else {
            "Kobayashi gluing from below; minimal characteristic square 8+k from above"
        };
        return Ok(vec![ReportRow::from_bounds(
            descriptor.name,
            &bounds.lo,
            &bounds.hi,
            provenance,
        )]);
    }
    match name {
        // The comparison pair is a virtual entry assembled from two records.
        Some("hopf-blowup-pair") => Ok(["hopf-surface", "hopf-blowup"]
            .iter()
            .map(|n| {
                ReportRow::from_catalog(
                    &catalog_lookup(n).expect("pair members are in the catalog"),
                )
            })
            .collect()),
        Some(name) => match catalog_lookup(name) {
            Some(entry) => Ok(vec![ReportRow::from_catalog(&entry)]),
            None => {
                let mut names: Vec<&str> = catalog_entries().iter().map(|e| e.name).collect();
                names.push("hopf-blowup-pair");
                Err(CliError::UnknownManifold {
                    name: name.to_string(),
                    available: names.join(", "),
                })
            }
        },
        None => Ok(catalog_entries()
            .iter()
            .map(ReportRow::from_catalog)
            .collect()),
    }
}

/// Spectrum report; field order matches the documented wire format
/// `{lambda, sign, residual, n}`.
#[derive(Debug, serde::Serialize)]
struct SpectrumReport {
    lambda: f64,
    sign: TrichotomySign,
    residual: f64,
    n: usize,
}

fn run_spectrum(config: &SpectrumConfig) -> Result<String, CliError> {
    let (grid, f) = config.build()?;
    let normalized = conformal_normalize(&grid, &f, &config.solver)?;
    let report = SpectrumReport {
        lambda: round_sig12(normalized.spectral.lambda),
        sign: normalized.sign,
        residual: round_sig12(normalized.spectral.residual),
        n: grid.n(),
    };
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    Ok(text)
}
