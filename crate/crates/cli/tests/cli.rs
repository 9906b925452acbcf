use std::io::Write;
use std::process::{Command, Output};

use eqidx_cli::IndexReportJson;
use serde_json::Value;
use tempfile::NamedTempFile;

fn problem(json: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

fn eqidx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqidx"))
        .args(args)
        .output()
        .unwrap()
}

fn index(json: &str, which: &str) -> Output {
    let f = problem(json);
    eqidx(&[
        "index",
        "--input",
        f.path().to_str().unwrap(),
        "--which",
        which,
    ])
}

fn stderr_kind(out: &Output) -> String {
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    v["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn cubic_over_z2() {
    let out = index(
        r#"{"group": {"order": 2}, "weights": [1], "form": ["z1^3"]}"#,
        "both",
    );
    assert_eq!(out.status.code(), Some(0));
    let r: IndexReportJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.hom, Some(vec![1, 2]));
    assert_eq!(r.reduced_radial, Some(vec![1, 2]));
    let radial = r.radial.unwrap();
    assert_eq!((radial[&1], radial[&2]), (2, -1));
}

#[test]
fn trivial_group_gives_milnor_number() {
    let out = index(
        r#"{"group": {"order": 1}, "weights": [0], "form": ["z1^2"]}"#,
        "hom",
    );
    assert_eq!(out.status.code(), Some(0));
    let r: IndexReportJson = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.hom, Some(vec![2]));
    assert_eq!(r.radial, None);
}

#[test]
fn non_invariant_form_is_a_precondition_failure() {
    let out = index(
        r#"{"group": {"order": 3}, "weights": [1], "form": ["z1"]}"#,
        "both",
    );
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stderr_kind(&out), "NotInvariant");
    assert!(out.stdout.is_empty());
}

#[test]
fn non_isolated_zero_is_a_precondition_failure() {
    let out = index(
        r#"{"group": {"order": 1}, "weights": [0, 0], "form": ["z1*z2", "z1*z2"]}"#,
        "hom",
    );
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stderr_kind(&out), "NonIsolated");
}

#[test]
fn usage_and_parse_errors() {
    let out = index(
        r#"{"group": {"order": 2}, "weights": [1], "form": ["z1^"]}"#,
        "both",
    );
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_kind(&out), "ParseError");

    let out = index(
        r#"{"group": {"order": 2}, "weights": [1], "form": "z1"}"#,
        "both",
    );
    assert_eq!(out.status.code(), Some(2));

    let out = eqidx(&["index", "--input", "/nonexistent/problem.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_kind(&out), "Io");

    assert_eq!(eqidx(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(eqidx(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass_and_are_deterministic() {
    for suite in ["rings", "conservation", "sebastiani-thom", "coincidence"] {
        let a = eqidx(&["verify", "--suite", suite, "--seed", "11", "--cases", "8"]);
        assert_eq!(a.status.code(), Some(0), "{suite}");
        let b = eqidx(&["verify", "--suite", suite, "--seed", "11", "--cases", "8"]);
        assert_eq!(a.stdout, b.stdout, "{suite}");
        let v: Value = serde_json::from_slice(&a.stdout).unwrap();
        assert_eq!(v["passed"], Value::Bool(true));
        assert_eq!(v["seed"], 11);
    }
}

#[test]
fn verify_with_input() {
    let f = problem(
        r#"{"group": {"order": 2}, "weights": [1], "form": ["z1^3"],
            "deformation": ["z1^3 - z1"], "points": [[1]]}"#,
    );
    let path = f.path().to_str().unwrap();
    for suite in ["coincidence", "sebastiani-thom", "conservation"] {
        let out = eqidx(&["verify", "--suite", suite, "--input", path]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
    }

    let g = problem(r#"{"group": {"order": 2}, "weights": [1], "form": ["z1^3"]}"#);
    let out = eqidx(&[
        "verify",
        "--suite",
        "conservation",
        "--input",
        g.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn conservation_mismatch_exits_one() {
    // the zero at -1 is missing from the point list
    let f = problem(
        r#"{"group": {"order": 1}, "weights": [0], "form": ["z1^3"],
            "deformation": ["z1^3 - z1"], "points": [[1]]}"#,
    );
    let out = eqidx(&[
        "verify",
        "--suite",
        "conservation",
        "--input",
        f.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], Value::Bool(false));
}
