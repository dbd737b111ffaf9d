//! Command-line front end for `exthyp`: single evaluations, tables, the
//! Hardy-Hilbert checker and the identity conformance runner.

pub mod catalog;
pub mod cli;
pub mod conformance;
pub mod eval;
pub mod exit;
pub mod hilbert;
pub mod output;

use catalog::{Grid, Suite};
use clap::error::ErrorKind;
use clap::Parser;
use cli::{Cli, Command, ConformanceArgs, GridFlag, SuiteFlag};
use exit::CliError;
use std::io::Write;
use std::time::Instant;

/// Runs the program on `args` (program name first) and returns the exit code.
pub fn run(args: Vec<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let args = match cli::expand_config(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            return e.code();
        }
    };
    let parsed = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            if help {
                let _ = write!(out, "{text}");
                return exit::OK;
            }
            let _ = write!(err, "{text}");
            return exit::MALFORMED;
        }
    };
    let result = match &parsed.command {
        Command::Eval(a) => eval::cmd_eval(a, out),
        Command::Table(t) => eval::cmd_table(t, out),
        Command::Hilbert(h) => hilbert::cmd_hilbert(h, out),
        Command::Conformance(c) => cmd_conformance(c, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.code()
        }
    }
}

fn suite(s: SuiteFlag) -> Option<Suite> {
    match s {
        SuiteFlag::All => None,
        SuiteFlag::Hyp => Some(Suite::Hyp),
        SuiteFlag::Appell => Some(Suite::Appell),
        SuiteFlag::Lauricella => Some(Suite::Lauricella),
        SuiteFlag::Ineq => Some(Suite::Ineq),
        SuiteFlag::Mellin => Some(Suite::Mellin),
    }
}

/// Writes the CSV report and summary. Exit 4 when some identity has no
/// variant passing at all of its in-domain points; the report is written
/// regardless.
pub fn cmd_conformance(c: &ConformanceArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    if !(c.tol > 0.0) {
        return Err(exit::usage("--tol must be positive"));
    }
    let grid = match c.grid {
        GridFlag::Small => Grid::Small,
        GridFlag::Full => Grid::Full,
    };
    let start = Instant::now();
    let report = conformance::run(suite(c.suite), grid, c.tol);
    match &c.report {
        Some(path) => {
            conformance::write_csv(&report, std::fs::File::create(path)?)?;
            conformance::write_summary(&report, &mut *out)?;
        }
        None => {
            conformance::write_csv(&report, &mut *out)?;
            conformance::write_summary(&report, &mut *err)?;
        }
    }
    writeln!(err, "wall-clock {:.2} s", start.elapsed().as_secs_f64())?;
    Ok(if report.all_pass() {
        exit::OK
    } else {
        exit::NO_PASSING_VARIANT
    })
}
