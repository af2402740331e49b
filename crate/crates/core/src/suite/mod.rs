//! Running identity manifests and the enumeration cross-check.

mod manifest;

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;

pub use manifest::{
    bundled_manifest, bundled_manifest_text, parse_manifest, IdentityRecord, ManifestError,
};

use crate::dsl::{check, CheckOutcome};
use crate::partitions::{count_by_enumeration, gf_series, FunctionId, OracleCaps};
use crate::series::{Mismatch, Series};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Mismatch(Mismatch),
    Error(String),
}

impl Status {
    pub fn passed(&self) -> bool {
        matches!(self, Status::Pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEntry {
    pub id: String,
    pub reference: String,
    pub status: Status,
    /// Truncation order for identities, enumeration cap for the oracle.
    pub order: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Summary {
    pub passed: usize,
    pub mismatched: usize,
    pub errors: usize,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.passed + self.mismatched + self.errors
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub entries: Vec<ReportEntry>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for e in &self.entries {
            match e.status {
                Status::Pass => s.passed += 1,
                Status::Mismatch(_) => s.mismatched += 1,
                Status::Error(_) => s.errors += 1,
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status.passed())
    }

    pub fn entry(&self, id: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// One line per entry followed by a summary line. Without timings the
    /// output depends only on the inputs.
    pub fn render(&self, with_timings: bool) -> String {
        let width = self.entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for e in &self.entries {
            let (tag, detail) = match &e.status {
                Status::Pass => ("PASS", String::new()),
                Status::Mismatch(m) => ("FAIL", format!(": {m}")),
                Status::Error(msg) => ("ERROR", format!(": {msg}")),
            };
            let _ = write!(
                out,
                "{tag:<5} {:<width$}  N={:<4} {}{detail}",
                e.id, e.order, e.reference
            );
            if with_timings {
                let _ = write!(out, "  [{:.1} ms]", e.elapsed.as_secs_f64() * 1e3);
            }
            out.push('\n');
        }
        let s = self.summary();
        let _ = write!(
            out,
            "{} passed, {} failed, {} errors, {} total",
            s.passed,
            s.mismatched,
            s.errors,
            s.total()
        );
        if with_timings {
            let _ = write!(out, " in {:.2} s", self.elapsed.as_secs_f64());
        }
        out.push('\n');
        out
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

/// Checks every record, in parallel, reporting in manifest order.
///
/// `order_override` replaces each record's own order when given.
pub fn run_suite(records: &[IdentityRecord], order_override: Option<usize>) -> SuiteReport {
    let start = Instant::now();
    let entries = records
        .par_iter()
        .map(|r| {
            let order = order_override.unwrap_or(r.order);
            let (outcome, elapsed) = timed(|| check(&r.lhs, &r.rhs, order, r.modulus.as_ref()));
            let status = match outcome {
                Ok(CheckOutcome::Pass) => Status::Pass,
                Ok(CheckOutcome::Mismatch(m)) => Status::Mismatch(m),
                Err(e) => Status::Error(e.to_string()),
            };
            ReportEntry {
                id: r.id.clone(),
                reference: r.reference.clone(),
                status,
                order,
                elapsed,
            }
        })
        .collect();
    SuiteReport {
        entries,
        elapsed: start.elapsed(),
    }
}

/// Compares brute-force enumeration with generating-function coefficients
/// on `0..=cap` for each function in `functions`.
///
/// `cap_override` replaces the default cap; a value above a function's hard
/// limit is reported as an error entry for that function.
pub fn run_oracle_suite(functions: &[FunctionId], cap_override: Option<usize>) -> SuiteReport {
    run_oracle_suite_with(functions, cap_override, gf_series)
}

/// As [`run_oracle_suite`], with the series side supplied by `series`.
pub fn run_oracle_suite_with<F>(
    functions: &[FunctionId],
    cap_override: Option<usize>,
    series: F,
) -> SuiteReport
where
    F: Fn(FunctionId, usize) -> Series + Sync,
{
    let start = Instant::now();
    let entries = functions
        .par_iter()
        .map(|&id| {
            let (result, elapsed) = timed(|| oracle_one(id, cap_override, &series));
            let (status, cap) = result;
            ReportEntry {
                id: id.name().to_owned(),
                reference: "enumeration against generating function".to_owned(),
                status,
                order: cap,
                elapsed,
            }
        })
        .collect();
    SuiteReport {
        entries,
        elapsed: start.elapsed(),
    }
}

fn oracle_one<F>(id: FunctionId, cap_override: Option<usize>, series: &F) -> (Status, usize)
where
    F: Fn(FunctionId, usize) -> Series + Sync,
{
    let mut caps = OracleCaps::default();
    if let Some(cap) = cap_override {
        if let Err(e) = caps.set(id, cap) {
            return (Status::Error(e.to_string()), cap);
        }
    }
    let cap = caps.cap(id);
    let gf = series(id, cap);
    let counts: Result<Vec<_>, _> = (0..=cap)
        .into_par_iter()
        .map(|n| count_by_enumeration(id, n, &caps))
        .collect();
    let status = match counts {
        Err(e) => Status::Error(e.to_string()),
        Ok(counts) => counts
            .into_iter()
            .zip(gf.coeffs())
            .enumerate()
            .find(|(_, (a, b))| a != *b)
            .map_or(Status::Pass, |(index, (left, right))| {
                Status::Mismatch(Mismatch {
                    index,
                    left,
                    right: right.clone(),
                })
            }),
    };
    (status, cap)
}
