use podium_core::partitions::FunctionId;
use podium_core::suite::{
    bundled_manifest, bundled_manifest_text, parse_manifest, run_oracle_suite,
    run_oracle_suite_with, run_suite, Status,
};
use podium_core::{gf_series, parse, BigInt};

#[test]
fn bundled_manifest_passes_at_default_orders() {
    let records = bundled_manifest();
    let report = run_suite(&records, None);
    assert_eq!(report.entries.len(), records.len());
    let failures: Vec<_> = report
        .entries
        .iter()
        .filter(|e| !e.status.passed())
        .collect();
    assert!(failures.is_empty(), "{}", report.render(false));
    assert!(report.entries.iter().all(|e| e.order == 300));
}

#[test]
fn smaller_orders_pass_too() {
    let records = bundled_manifest();
    for n in [0, 1, 2, 7, 50] {
        let report = run_suite(&records, Some(n));
        assert!(report.all_passed(), "N={n}\n{}", report.render(false));
        assert!(report.entries.iter().all(|e| e.order == n));
    }
}

#[test]
fn report_order_follows_manifest() {
    let records = bundled_manifest();
    let a = run_suite(&records, Some(40));
    let ids: Vec<_> = a.entries.iter().map(|e| e.id.as_str()).collect();
    let want: Vec<_> = records.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids, want);
    let b = run_suite(&records, Some(40));
    assert_eq!(a.render(false), b.render(false));
}

#[test]
fn corrupted_rhs_is_caught_at_first_coefficient() {
    let mut records = parse_manifest(bundled_manifest_text()).unwrap();
    let r = records.iter_mut().find(|r| r.id == "thm-3-1").unwrap();
    r.rhs = parse("gf(p)").unwrap();
    let report = run_suite(&records, None);
    let entry = report.entry("thm-3-1").unwrap();
    match &entry.status {
        Status::Mismatch(m) => {
            assert_eq!(m.index, 1);
            assert_eq!(m.left, BigInt::from(0));
            assert_eq!(m.right, BigInt::from(1));
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(report.summary().mismatched, 1);
    assert!(report.render(false).contains("FAIL  thm-3-1"));
}

#[test]
fn evaluation_errors_stay_in_their_entry() {
    let text = "[identity]\nid=bad\nref=r\nquote=q\nlhs=1 / q^1\nrhs=1\norder=5\n\
                [identity]\nid=good\nref=r\nquote=q\nlhs=gf(p)\nrhs=1 / poch(q^1, q^1)\norder=5\n";
    let records = parse_manifest(text).unwrap();
    let report = run_suite(&records, None);
    assert!(matches!(report.entries[0].status, Status::Error(_)));
    assert!(report.entries[1].status.passed());
    let s = report.summary();
    assert_eq!((s.passed, s.mismatched, s.errors), (1, 0, 1));
}

#[test]
fn oracle_agrees_for_every_function() {
    let report = run_oracle_suite(&FunctionId::ALL, None);
    assert_eq!(report.entries.len(), 16);
    assert!(report.all_passed(), "{}", report.render(false));
    assert_eq!(report.entry("pod").unwrap().order, 35);
    assert_eq!(report.entry("p3").unwrap().order, 18);
}

#[test]
fn oracle_cap_override_and_refusal() {
    let ok = run_oracle_suite(&[FunctionId::Eo], Some(20));
    assert!(ok.all_passed());
    assert_eq!(ok.entries[0].order, 20);
    let refused = run_oracle_suite(&[FunctionId::P3], Some(60));
    assert!(matches!(refused.entries[0].status, Status::Error(_)));
}

#[test]
fn oracle_detects_swapped_formulas() {
    let swapped = |id, n| match id {
        FunctionId::Pod => gf_series(FunctionId::Ped, n),
        FunctionId::Ped => gf_series(FunctionId::Pod, n),
        other => gf_series(other, n),
    };
    let report = run_oracle_suite_with(&[FunctionId::Pod, FunctionId::Ped], None, swapped);
    for (entry, (enumerated, series)) in report.entries.iter().zip([(1, 2), (2, 1)]) {
        match &entry.status {
            Status::Mismatch(m) => {
                assert_eq!(m.index, 2, "{}", entry.id);
                assert_eq!(m.left, BigInt::from(enumerated));
                assert_eq!(m.right, BigInt::from(series));
            }
            other => panic!("{}: {other:?}", entry.id),
        }
    }
}

#[test]
fn manifest_expressions_round_trip() {
    for r in bundled_manifest() {
        for (text, expr) in [(&r.lhs_text, &r.lhs), (&r.rhs_text, &r.rhs)] {
            let printed = expr.to_string();
            assert_eq!(&parse(&printed).unwrap(), expr, "{}: {text}", r.id);
        }
    }
}
