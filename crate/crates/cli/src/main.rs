//! `zeta`: reads one JSON problem, writes one JSON report.
//!
//! Exit status: 0 when every verification passes, 2 when at least one
//! fails (the report is still written), 1 on input or domain errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;
use zeta_core::problem::run_json;

#[derive(Debug, Parser)]
#[command(
    name = "zeta",
    version,
    about = "Exact dynamical zeta functions with verification reports"
)]
struct Args {
    /// Problem description (JSON). Reads standard input when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Report destination. Writes to standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Truncation order for series comparisons (overrides the input).
    #[arg(long)]
    order: Option<usize>,
    /// Horizon for growth-rate estimates (overrides the input).
    #[arg(long)]
    horizon: Option<u64>,
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush().map_err(Into::into)
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match read_input(args.input.as_ref()) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let report = match run_json(&text, args.order, args.horizon) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = write_output(args.output.as_ref(), &report.to_json()) {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        for c in report
            .verification
            .iter()
            .filter(|c| c.status == zeta_core::problem::Status::Fail)
        {
            eprintln!("verification failed: {} ({})", c.name, c.detail);
        }
        ExitCode::from(2)
    }
}
