//! The `pwlab` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on a
//! configuration error (including the `PWLAB_MAX_DIM` cap).

pub mod config;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use config::{Flags, RunConfig, MAX_DIM_ENV};
use report::{is_fatal, Report};

#[derive(Parser, Debug)]
#[command(name = "pwlab", version, about = "Exact checks for Peterson varieties and centralizer closures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enveloping-algebra, solver and coordinate-ring suites.
    Verify(Flags),
    /// Bruhat cells and the G^e-orbit census.
    Census(Flags),
    /// Regular elements x = s + e_I and the translated isomorphism.
    General(Flags),
}

/// Output of one run, before anything is written.
pub struct Outcome {
    pub report: Report,
    pub csv: Option<String>,
}

pub fn execute(command: &Command, cfg: &RunConfig) -> Result<Outcome> {
    match command {
        Command::Verify(_) => Ok(Outcome {
            report: suites::verify(cfg)?,
            csv: None,
        }),
        Command::Census(_) => {
            let (report, rows) = suites::census(cfg)?;
            Ok(Outcome {
                report,
                csv: Some(suites::census_csv(&rows)),
            })
        }
        Command::General(_) => Ok(Outcome {
            report: suites::general(cfg)?,
            csv: None,
        }),
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))
}

/// Parse arguments, run, write outputs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let flags = match &cli.command {
        Command::Verify(f) | Command::Census(f) | Command::General(f) => f,
    };
    let env = std::env::var(MAX_DIM_ENV).ok();
    let cfg = match RunConfig::resolve(flags, env.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("pwlab: {e}");
            return 2;
        }
    };
    let outcome = match execute(&cli.command, &cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("pwlab: {e}");
            return if is_fatal(&e) { 2 } else { 1 };
        }
    };
    let json = outcome.report.to_json();
    let written = match &cfg.out {
        Some(p) => write_file(p, &json),
        None => {
            let _ = std::io::stdout().write_all(json.as_bytes());
            Ok(())
        }
    };
    let written = written.and_then(|_| match (&cfg.csv, &outcome.csv) {
        (Some(p), Some(text)) => write_file(p, text),
        _ => Ok(()),
    });
    if let Err(e) = written {
        eprintln!("pwlab: {e}");
        return 2;
    }
    let failed = outcome.report.checks.iter().filter(|c| c.status == report::Status::Fail).count();
    if cfg.out.is_some() {
        println!(
            "{}: {} checks, {} failed, verdict {}",
            outcome.report.suite,
            outcome.report.checks.len(),
            failed,
            if outcome.report.passed() { "pass" } else { "fail" }
        );
    }
    if outcome.report.passed() {
        0
    } else {
        1
    }
}
