use std::process::{Command, Output};

use serde_json::Value;

fn dftn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dftn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_all_passes_at_five() {
    let out = dftn(&["verify", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["exit_status"], 0);
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.len() >= 30);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn injected_flip_fails_with_exit_one() {
    let out = dftn(&["verify", "5", "identities", "--inject-flip", "c1"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["exit_status"], 1);
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["status"] == "fail"));
}

#[test]
fn float_relations_for_larger_n() {
    let out = dftn(&["verify", "--n", "16", "relations", "--tol", "1e-11"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["backend"], "float");
}

#[test]
fn exact_backend_rejected_where_unsupported() {
    let out = dftn(&["build", "x", "4", "--backend", "exact"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("exact"));
}

#[test]
fn build_csv_is_plain_rows() {
    let out = dftn(&["build", "pd", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1,0,0\n0,0,1\n0,1,0\n"
    );
}

#[test]
fn build_number_reports_exact_trace() {
    let out = dftn(&["build", "number", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["trace"], "20/1");
    assert_eq!(v["matrix"].as_array().unwrap().len(), 5);
}

#[test]
fn spectrum_and_report_are_deterministic() {
    for args in [&["spectrum", "5", "number"][..], &["report", "5"][..]] {
        let a = dftn(args);
        let b = dftn(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn report_lists_twelve_zeros() {
    let v = json(&dftn(&["report", "5"]));
    assert_eq!(v["zeros_in_symmetrized"], 12);
    assert_eq!(v["trace"], "20/1");
}

#[test]
fn conflicting_dimensions_rejected() {
    let out = dftn(&["verify", "5", "--n", "6"]);
    assert_ne!(out.status.code(), Some(0));
}
