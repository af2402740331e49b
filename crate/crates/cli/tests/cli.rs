use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn podium(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_podium"))
        .args(args)
        .env_remove("PODIUM_ORDER")
        .output()
        .expect("run podium")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_path(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("{}-{name}", std::process::id()))
}

#[test]
fn compute_csv() {
    let o = podium(&["compute", "pod", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,value\n0,1\n1,1\n2,1\n3,2\n4,3\n");
}

#[test]
fn compute_bfile() {
    let o = podium(&["compute", "eobar", "8", "--format", "bfile"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().last(), Some("8 5"));
}

#[test]
fn compute_table_and_out_file() {
    let path = temp_path("eo.txt");
    let o = podium(&["compute", "eo", "8", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("n  value"));
    assert_eq!(text.lines().last(), Some("8     12"));
    fs::remove_file(path).ok();
}

#[test]
fn compute_unknown_function() {
    let o = podium(&["compute", "nosuch", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("pod") && err.contains("eobar"), "{err}");
}

#[test]
fn verify_bundled() {
    let o = podium(&["verify", "--order", "300"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<_> = out.lines().collect();
    assert!(lines.len() > 38);
    assert!(
        lines[..lines.len() - 1]
            .iter()
            .all(|l| l.starts_with("PASS ")),
        "{out}"
    );
}

#[test]
fn verify_single_id() {
    let o = podium(&["verify", "--id", "thm-3-1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let pass: Vec<_> = out.lines().filter(|l| l.starts_with("PASS")).collect();
    assert_eq!(pass.len(), 1);
    assert!(pass[0].contains("thm-3-1"));
    assert_eq!(podium(&["verify", "--id", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_order_from_environment() {
    let run = |env: &str, extra: &[&str]| {
        let mut args = vec!["verify", "--id", "euler-pent"];
        args.extend_from_slice(extra);
        let o = Command::new(env!("CARGO_BIN_EXE_podium"))
            .args(&args)
            .env("PODIUM_ORDER", env)
            .output()
            .unwrap();
        stdout(&o)
    };
    assert!(run("17", &[]).contains("N=17 "));
    assert!(run("17", &["--order", "23"]).contains("N=23 "));
}

#[test]
fn verify_failing_manifest() {
    let path = temp_path("fail.txt");
    fs::write(
        &path,
        "[identity]\nid=wrong\nref=r\nquote=q\nlhs=gf(pod)\nrhs=gf(p)\norder=10\n",
    )
    .unwrap();
    let o = podium(&["verify", "--manifest", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("mismatch at n=2 (1 vs 2)"),
        "{}",
        stdout(&o)
    );
    fs::remove_file(path).ok();
}

#[test]
fn verify_malformed_manifest() {
    let path = temp_path("bad.txt");
    fs::write(
        &path,
        "[identity]\nid=x\nref=r\nquote=q\nlhs=gf(pod\nrhs=1\norder=10\n",
    )
    .unwrap();
    let o = podium(&["verify", "--manifest", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("byte offset 6"), "{err}");
    fs::remove_file(path).ok();
    assert_eq!(
        podium(&["verify", "--manifest", "/nonexistent/m.txt"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn expand_examples() {
    let o = podium(&["expand", "poch(q^1,q^1)", "--order", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 -1 -1 0 0 1 0 1\n");
    let o = podium(&[
        "expand",
        "gf(pod) * subst(poch(q^1,q^1), q^2)",
        "--order",
        "8",
    ]);
    assert_eq!(stdout(&o), "1 1 0 1 1 1 1 1 2\n");
    let o = podium(&["expand", "1 - q^1", "--order", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,value\n0,1\n1,-1\n2,0\n3,0\n");
}

#[test]
fn expand_errors() {
    let o = podium(&["expand", "1 div 2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("byte offset 2"));
    let o = podium(&["expand", "1 / q^1", "--order", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_runs() {
    let o = podium(&["oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.starts_with("PASS "))
            .count(),
        16
    );
    let o = podium(&["oracle", "--function", "eo", "--cap", "20"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS  eo"));
    let o = podium(&["oracle", "--function", "p3", "--cap", "60"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("hard limit"));
}

#[test]
fn bench_zero_order() {
    let o = podium(&["bench", "--order", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out
        .lines()
        .all(|l| l.contains(" ms ") && l.contains("sha256=")));
}
