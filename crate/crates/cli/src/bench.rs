//! Wall-clock timings with checksums of what was computed, so runs can be
//! compared for determinism.

use std::fmt::Write as _;
use std::time::Instant;

use sha2::{Digest, Sha256};

use podium_core::partitions::{gf_series, FunctionId};
use podium_core::suite::{bundled_manifest, run_suite};
use podium_core::Series;

fn checksum(text: &str) -> String {
    format!("{:x}", Sha256::digest(text.as_bytes()))
}

fn series_checksum(s: &Series) -> String {
    let text: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
    checksum(&text.join(","))
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

pub fn run(order: usize) -> String {
    let mut out = String::new();

    let records = bundled_manifest();
    let start = Instant::now();
    let report = run_suite(&records, Some(order));
    let t = ms(start);
    let s = report.summary();
    let _ = writeln!(
        out,
        "suite    N={order}  {t:>10.1} ms  {}/{} passed  sha256={}",
        s.passed,
        s.total(),
        checksum(&report.render(false))
    );

    let p = gf_series(FunctionId::P, order);
    let q = gf_series(FunctionId::Cubic, order);
    let start = Instant::now();
    let product = p.mul(&q);
    let t = ms(start);
    let _ = writeln!(
        out,
        "multiply N={order}  {t:>10.1} ms  gf(p)*gf(cubic)  sha256={}",
        series_checksum(&product)
    );

    let start = Instant::now();
    let pod = gf_series(FunctionId::Pod, order);
    let t = ms(start);
    let _ = writeln!(
        out,
        "pod      N={order}  {t:>10.1} ms  gf(pod)  sha256={}",
        series_checksum(&pod)
    );
    out
}
