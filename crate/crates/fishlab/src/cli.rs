//! Argument parsing and dispatch for the `fishlab` binary.

use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::enumerate::{enumerate, Family};
use crate::explore::explore;
use crate::table::{render, table, TableFormat};
use crate::verify::{run_suite, Suite, CROSS_CHECK_MAX_N};

pub const MAX_N_VAR: &str = "FISHLAB_MAX_N";
pub const DEFAULT_MAX_N: usize = 12;
pub const SERIES_MAX_N: usize = 12;
pub const EXPLORE_MAX_N: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UsageError {
    #[error("--d is required for --family {0}")]
    MissingD(String),
    #[error("{flag} = {value} exceeds the limit {limit}")]
    TooLarge {
        flag: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("{MAX_N_VAR} must be a nonnegative integer, got {0:?}")]
    BadMaxN(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "fishlab",
    version,
    about = "Ascent sequences, hat maps and Fishburn permutations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum ListFormat {
    /// one JSON string per line
    #[default]
    Json,
    /// bare words
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every member of a family at one size.
    Enumerate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, value_enum, default_value_t)]
        format: ListFormat,
    },
    /// Run invariant suites; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        d_max: usize,
        #[arg(long)]
        timings: bool,
    },
    /// Counts of 213-avoiding d-Fishburn permutations.
    Table {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 5)]
        d_max: usize,
        #[arg(long)]
        cross_check: bool,
        #[arg(long, value_enum, default_value_t)]
        format: TableFormat,
    },
    /// Test unproven restrictions of hat_max; never fails.
    Explore {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long)]
        timings: bool,
    },
}

/// Global cap on `n`, from the environment.
pub fn max_n() -> Result<usize, UsageError> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| UsageError::BadMaxN(v)),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn cap(flag: &'static str, value: usize, limit: usize) -> Result<(), UsageError> {
    if value > limit {
        Err(UsageError::TooLarge { flag, value, limit })
    } else {
        Ok(())
    }
}

/// Output lines plus whether every non-exploratory check passed.
pub struct Outcome {
    pub lines: Vec<String>,
    pub pass: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

pub fn run(command: Command) -> Result<Outcome, UsageError> {
    let limit = max_n()?;
    match command {
        Command::Enumerate {
            family,
            n,
            d,
            threads,
            format,
        } => {
            cap("--n", n, limit)?;
            let d = match (family.needs_d(), d) {
                (true, None) => {
                    let name = family.to_possible_value().expect("named variant");
                    return Err(UsageError::MissingD(name.get_name().to_owned()));
                }
                (_, d) => d.unwrap_or(0),
            };
            let words = enumerate(family, n, d, threads);
            let lines = match format {
                ListFormat::Json => words
                    .iter()
                    .map(|w| serde_json::Value::from(w.as_str()).to_string())
                    .collect(),
                ListFormat::Text => words,
            };
            Ok(Outcome { lines, pass: true })
        }
        Command::Verify {
            suite,
            n_max,
            d_max,
            timings,
        } => {
            cap("--n-max", n_max, limit)?;
            let reports = run_suite(suite, n_max, d_max);
            let pass = reports.iter().all(|r| r.pass || r.exploratory);
            Ok(Outcome {
                lines: reports.iter().map(|r| r.to_json_line(timings)).collect(),
                pass,
            })
        }
        Command::Table {
            n_max,
            d_max,
            cross_check,
            format,
        } => {
            cap("--n-max", n_max, limit.min(SERIES_MAX_N))?;
            if cross_check {
                cap("--n-max", n_max, CROSS_CHECK_MAX_N)?;
            }
            let rows = table(n_max, d_max, cross_check);
            let pass = rows.iter().all(|r| r.matches());
            Ok(Outcome {
                lines: render(&rows, format),
                pass,
            })
        }
        Command::Explore { n_max, timings } => {
            cap("--n-max", n_max, limit.min(EXPLORE_MAX_N))?;
            let lines = explore(n_max)
                .iter()
                .map(|r| r.to_json_line(timings))
                .collect();
            Ok(Outcome { lines, pass: true })
        }
    }
}

/// Parses `args`, runs, prints, and returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(cli.command) {
        Ok(outcome) => {
            let stdout = io::stdout();
            let mut out = io::BufWriter::new(stdout.lock());
            for line in &outcome.lines {
                if writeln!(out, "{line}").is_err() {
                    break;
                }
            }
            let _ = out.flush();
            outcome.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
