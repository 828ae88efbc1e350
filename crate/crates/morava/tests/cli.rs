use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn morava(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morava"))
        .args(args)
        .env_remove("MORAVA_LOG")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn chi_of_klein_four() {
    let dir = TempDir::new().unwrap();
    let spec = write(
        dir.path(),
        "v4.json",
        r#"{"type":"product","factors":[{"type":"cyclic","order":2},{"type":"cyclic","order":2}]}"#,
    );
    let out = morava(&["group", "chi", "--spec", s(&spec), "--s", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["result"]["chi"], 16);
    assert_eq!(r["verdict"], "ok");
    assert!(r["timings"]["total_ms"].is_number());
}

#[test]
fn missing_file_is_an_input_error() {
    let out = morava(&["gb", "--ideal", "/definitely/not/here.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot read"));
}

#[test]
fn malformed_inputs_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad_json = write(dir.path(), "bad.json", "{");
    assert_eq!(morava(&["group", "info", "--spec", s(&bad_json)]).status.code(), Some(2));
    let bad_ideal = write(dir.path(), "i.json", r#"{"p":2,"variables":["x"],"generators":["x^"]}"#);
    assert_eq!(morava(&["gb", "--ideal", s(&bad_ideal)]).status.code(), Some(2));
    let not_order_p = write(dir.path(), "m.json", r#"{"p":3,"matrix":[[0,1],[1,0]]}"#);
    assert_eq!(morava(&["module", "decompose", "--matrix", s(&not_order_p)]).status.code(), Some(2));
    assert_eq!(morava(&["verify", "g36", "--s", "1"]).status.code(), Some(2));
}

#[test]
fn budgets_exit_3() {
    let dir = TempDir::new().unwrap();
    let ideal = write(dir.path(), "i.json", r#"{"p":2,"variables":["x","y"],"generators":["x^2 + y","x*y + x"]}"#);
    let out = morava(&["gb", "--ideal", s(&ideal), "--max-steps", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(morava(&["family", "classify", "--n", "4"]).status.code(), Some(3));
}

#[test]
fn gb_report() {
    let dir = TempDir::new().unwrap();
    let ideal = write(dir.path(), "i.json", r#"{"p":2,"variables":["x","y"],"generators":["x^2 + y","y^2"]}"#);
    for order in ["grevlex", "lex"] {
        let out = morava(&["gb", "--ideal", s(&ideal), "--order", order]);
        assert_eq!(out.status.code(), Some(0));
        let r = json(&out);
        let mut basis: Vec<&str> = r["result"]["basis"].as_array().unwrap().iter().map(|b| b.as_str().unwrap()).collect();
        basis.sort_unstable();
        assert_eq!(basis, ["x^2 + y", "y^2"]);
        assert_eq!(r["result"]["quotient_dimension"], 4);
        assert_eq!(r["result"]["audit"], "passed");
        assert_eq!(r["config"]["order"], order);
    }
}

#[test]
fn verify_g36_and_report_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("report.json");
    let out = morava(&["verify", "g36", "--s", "2", "--report", s(&path), "--no-timings"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let first = std::fs::read(&path).unwrap();
    let r: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(r["result"]["matched"], true);
    assert_eq!(r["result"]["quotient_dimension"], 184);
    assert!(r.get("timings").is_none());

    morava(&["verify", "g36", "--s", "2", "--report", s(&path), "--no-timings"]);
    assert_eq!(std::fs::read(&path).unwrap(), first, "reports are reproducible");
}

#[test]
fn mismatch_exits_1_with_diagnostics() {
    let out = morava(&["verify", "g36", "--s", "2", "--exclude", "13"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["verdict"], "mismatch");
    assert_eq!(r["result"]["quotient_dimension"], "infinite");
    assert_eq!(r["result"]["unbounded_variables"], serde_json::json!(["x2"]));
}

#[test]
fn verify_presentation_file() {
    let dir = TempDir::new().unwrap();
    let pres = write(
        dir.path(),
        "c4.json",
        r#"{"p":2,"variables":[{"name":"u","degree":2}],"relations":["u^(p^(2*s))"],
            "group":{"type":"cyclic","order":4}}"#,
    );
    let out = morava(&["verify", s(&pres), "--s", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["result"]["presentation"], "c4");
    assert_eq!(r["result"]["quotient_dimension"], 16);
    assert_eq!(r["result"]["chi"], 16);
}

#[test]
fn group_iso_and_info() {
    let dir = TempDir::new().unwrap();
    let d8 = write(
        dir.path(),
        "d8.json",
        r#"{"type":"polycyclic","generators":[{"name":"r","order":4},{"name":"t","order":2}],
            "conjugations":[{"acted":"r","actor":"t","image":"r^3"}]}"#,
    );
    let fam = write(dir.path(), "fam.json", r#"{"type":"family","n":1,"matrix":[0,1,1,0]}"#);
    let out = morava(&["group", "iso", "--spec1", s(&d8), "--spec2", s(&fam)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["isomorphic"], true);

    let out = morava(&["group", "info", "--spec", s(&d8)]);
    let r = json(&out);
    assert_eq!(r["result"]["order"], 8);
    assert_eq!(r["result"]["conjugacy_classes"], 5);
    assert_eq!(r["result"]["center_order"], 2);
}

#[test]
fn module_decompose() {
    let dir = TempDir::new().unwrap();
    let m = write(dir.path(), "m.json", r#"{"p":2,"matrix":[[0,1,0],[1,0,0],[0,0,1]]}"#);
    let out = morava(&["module", "decompose", "--matrix", s(&m), "--degrees", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out)["result"].clone();
    assert_eq!(r["block_sizes"], serde_json::json!([2, 1]));
    assert_eq!(r["permutation_module"], true);
    assert_eq!(r["cohomology_dims"], serde_json::json!([2, 1, 1]));
}
