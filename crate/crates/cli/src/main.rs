//! `podium`: tables of partition functions, identity verification, and
//! q-series expansion from the command line.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage or parse errors.

mod bench;
mod output;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use output::Format;
use podium_core::partitions::{table, FunctionId};
use podium_core::suite::{bundled_manifest, parse_manifest, run_oracle_suite, run_suite};
use podium_core::{eval_str, DslError};

const DEFAULT_ORDER: usize = 300;

#[derive(Parser)]
#[command(
    name = "podium",
    version,
    about = "Exact q-series and partition-function toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print values of a partition function for n = 0..=NMAX.
    Compute {
        #[arg(value_parser = parse_function)]
        function: FunctionId,
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the identities in a manifest (the bundled one by default).
    Verify {
        #[arg(long)]
        manifest: Option<PathBuf>,
        /// Truncation order for every identity; defaults to each record's own.
        #[arg(long, env = "PODIUM_ORDER")]
        order: Option<usize>,
        /// Only check the identity with this id.
        #[arg(long)]
        id: Option<String>,
        /// Append per-identity timings.
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand a series expression and print its coefficients.
    Expand {
        expression: String,
        #[arg(long, env = "PODIUM_ORDER", default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Print as a table instead of one space-separated line.
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare brute-force enumeration with the generating functions.
    Oracle {
        #[arg(long, value_parser = parse_function)]
        function: Option<FunctionId>,
        /// Largest n to enumerate.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the suite, one series product and the pod series at an order.
    Bench {
        #[arg(long, env = "PODIUM_ORDER", default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_function(s: &str) -> Result<FunctionId, String> {
    s.parse()
        .map_err(|e: podium_core::PartitionError| e.to_string())
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure {
                    code: 1,
                    message: format!("cannot write output: {e}"),
                })
        }
    }
}

/// Emits the text and turns a failed check into exit code 1.
fn report(out: Option<&PathBuf>, text: &str, passed: bool) -> Result<(), Failure> {
    emit(out, text)?;
    if passed {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: String::new(),
        })
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute {
            function,
            nmax,
            format,
            out,
        } => emit(
            out.as_ref(),
            &output::render(format, &table(function, nmax)),
        ),
        Command::Verify {
            manifest,
            order,
            id,
            timings,
            out,
        } => {
            let mut records = match &manifest {
                None => bundled_manifest(),
                Some(path) => {
                    let text = fs::read_to_string(path)
                        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
                    parse_manifest(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?
                }
            };
            if let Some(id) = &id {
                records.retain(|r| &r.id == id);
                if records.is_empty() {
                    return Err(usage(format!("no identity with id `{id}`")));
                }
            }
            let suite = run_suite(&records, order);
            report(out.as_ref(), &suite.render(timings), suite.all_passed())
        }
        Command::Expand {
            expression,
            order,
            format,
            out,
        } => {
            let series = eval_str(&expression, order).map_err(|e| match &e {
                DslError::Parse(p) => usage(format!(
                    "{e}\n  {expression}\n  {:>w$}",
                    "^",
                    w = p.column()
                )),
                DslError::Eval(_) => usage(e.to_string()),
            })?;
            let text = match format {
                Some(f) => output::render(f, series.coeffs()),
                None => output::line(series.coeffs()),
            };
            emit(out.as_ref(), &text)
        }
        Command::Oracle { function, cap, out } => {
            let functions = match function {
                Some(f) => vec![f],
                None => FunctionId::ALL.to_vec(),
            };
            let suite = run_oracle_suite(&functions, cap);
            report(out.as_ref(), &suite.render(false), suite.all_passed())
        }
        Command::Bench { order, out } => emit(out.as_ref(), &bench::run(order)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
