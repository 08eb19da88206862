use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use noether_core::{BundleParams, DivisorClass};

mod commands;
mod render;

/// Geography of threefolds fibred in (1,2)-surfaces: classification,
/// invariants and export.
#[derive(Debug, Parser)]
#[command(name = "noether", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,

    /// Write the result to FILE instead of standard output.
    #[arg(long, short, global = true, value_name = "FILE")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// One row per X(d;d0) with d_min <= d <= d_max.
    Classify {
        d_min: i64,
        d_max: i64,
        /// Only rows with this d0.
        #[arg(long)]
        d0: Option<i64>,
    },
    /// Everything known about a single X(d;d0).
    Inspect { d: i64, d0: i64 },
    /// The flip of X(d;1), d in {2, 3, 4}.
    Flip { d: i64 },
    /// Connected components of the moduli space for the given p_g.
    Moduli { pg: i64 },
    /// Translate Kobayashi-Chen-Hu parameters (a, e) into X(d;d0).
    Kobayashi { a: i64, e: i64 },
    /// Invariants of a simple fibration from the degrees of E1 and E2.
    Bundle {
        b: i64,
        e1: i64,
        e2: i64,
        /// Splitting E1 = O(first) + O(second), as "first,second".
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        split: Option<(i64, i64)>,
    },
    /// Fibre monomials of weighted degree m, with coefficient degrees when
    /// parameters are given.
    Monomials {
        m: u32,
        #[arg(long, value_parser = parse_params)]
        params: Option<BundleParams>,
    },
    /// Nefness, ampleness and curve intersections of a class aH+bF.
    Nef {
        #[arg(allow_hyphen_values = true, value_parser = parse_class)]
        class: DivisorClass,
        d: i64,
        d0: i64,
    },
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"first,second\", got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    Ok((parse(a)?, parse(b)?))
}

fn parse_params(s: &str) -> Result<BundleParams, String> {
    s.parse()
        .map_err(|e: noether_core::ParseError| e.to_string())
}

fn parse_class(s: &str) -> Result<DivisorClass, String> {
    s.parse()
        .map_err(|e: noether_core::ParseError| e.to_string())
}

/// Rendered output and the exit status that goes with it.
pub struct Report {
    pub body: String,
    pub status: u8,
}

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_EMPTY: u8 = 3;

/// A failure carrying its exit status.
#[derive(Debug)]
pub struct Failure {
    pub status: u8,
    pub error: anyhow::Error,
}

impl From<noether_core::Error> for Failure {
    fn from(err: noether_core::Error) -> Self {
        use noether_core::Error::*;
        let status = match err {
            NotExistent { .. } | KobayashiRange { .. } => EXIT_EMPTY,
            _ => EXIT_USAGE,
        };
        Failure {
            status,
            error: err.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure { status: 1, error }
    }
}

fn run(cli: Cli) -> Result<Report, Failure> {
    let format = if cli.json { Format::Json } else { cli.format };
    let report = match cli.command {
        Command::Classify { d_min, d_max, d0 } => commands::classify(d_min, d_max, d0, format)?,
        Command::Inspect { d, d0 } => commands::inspect(BundleParams::new(d, d0)?, format)?,
        Command::Flip { d } => commands::flip(d, format)?,
        Command::Moduli { pg } => commands::moduli(pg, format)?,
        Command::Kobayashi { a, e } => commands::kobayashi(a, e, format)?,
        Command::Bundle { b, e1, e2, split } => commands::bundle(b, e1, e2, split, format)?,
        Command::Monomials { m, params } => commands::monomials(m, params, format)?,
        Command::Nef { class, d, d0 } => commands::nef(class, BundleParams::new(d, d0)?, format)?,
    };
    match &cli.output {
        Some(path) => {
            fs::write(path, &report.body).with_context(|| format!("writing {}", path.display()))?
        }
        None => io::stdout()
            .lock()
            .write_all(report.body.as_bytes())
            .context("writing to standard output")?,
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => ExitCode::from(report.status),
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            ExitCode::from(failure.status)
        }
    }
}
