use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn classify_reports_flags() {
    let v = json(&["--json", "classify", "Z4"]);
    assert_eq!(v["flags"]["sdt"], true);
    assert_eq!(v["flags"]["uniquely_clean"], true);
    assert_eq!(
        json(&["--json", "classify", "T3(Z2)"])["flags"]["sdt"],
        true
    );
    assert_eq!(json(&["--json", "classify", "GF4"])["flags"]["sdt"], false);
}

#[test]
fn witnesses_are_opt_in() {
    assert!(json(&["--json", "classify", "Z3"])
        .get("witnesses")
        .is_none());
    let v = json(&["--json", "classify", "Z3", "--witnesses"]);
    assert_eq!(v["witnesses"].as_object().unwrap().len(), 3);
}

#[test]
fn parse_errors_exit_2_with_offset() {
    let out = run(&["classify", "Zx"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 1"));
    assert_eq!(code(&["verify", "Z4", "--suite", "no-such-check"]), 2);
}

#[test]
fn build_and_precondition_errors() {
    assert_eq!(code(&["--cap", "100", "classify", "T3(Z3)"]), 3);
    assert_eq!(code(&["classify", "Z4", "--corner", "2"]), 4);
    assert_eq!(code(&["decompose", "GF4"]), 4);
    assert_eq!(code(&["export", "T3(Z9)"]), 4);
}

#[test]
fn sets_examples() {
    assert_eq!(
        json(&["--json", "sets", "Z8", "--set", "delta"])["delta"],
        serde_json::json!([0, 2, 4, 6])
    );
    assert_eq!(
        json(&["--json", "sets", "Z6", "--set", "jacobson"])["jacobson"],
        serde_json::json!([0])
    );
    assert_eq!(
        json(&["--json", "sets", "Z1", "--set", "units"])["units"],
        serde_json::json!([0])
    );
    let all = json(&["--json", "sets", "Z4", "--set", "all"]);
    for key in [
        "units",
        "jacobson",
        "delta",
        "nilpotents",
        "idempotents",
        "tripotents",
        "center",
    ] {
        assert!(all[key].is_array(), "{key}");
    }
}

#[test]
fn verify_single_checks() {
    let v = json(&["--json", "verify", "Z9", "--suite", "lemma5"]);
    assert_eq!(v["checks"][0]["status"], "pass");
    let v = json(&["--json", "verify", "Z5", "--suite", "lemma3"]);
    assert_eq!(v["checks"][0]["status"], "skipped");
    assert!(v["checks"][0]["reason"].is_string());
}

#[test]
fn verify_small_catalog() {
    let v = json(&[
        "--json",
        "--max-order",
        "27",
        "verify",
        "--catalog",
        "--suite",
        "lemma3,lemma5,cor1",
    ]);
    assert_eq!(v["passed"], true);
    assert!(v["results"].as_array().unwrap().len() > 10);
}

#[test]
fn decompose_examples() {
    let v = json(&["--json", "decompose", "Z12"]);
    assert_eq!(
        (v["r1"]["order"].as_u64(), v["r2"]["order"].as_u64()),
        (Some(2), Some(3))
    );
    assert_eq!(v["verdict"], true);
    let v = json(&["--json", "decompose", "T2(Z2)"]);
    assert_eq!(
        (v["r1"]["order"].as_u64(), v["r2"]["order"].as_u64()),
        (Some(4), Some(1))
    );
}

#[test]
fn search_reports() {
    let v = json(&[
        "--json",
        "--max-order",
        "16",
        "search",
        "--problem",
        "npotent-hierarchy",
    ]);
    let z7 = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["ring"] == "Z7")
        .unwrap();
    assert_eq!(z7["first_true"], 7);
    let v = json(&[
        "--json",
        "--max-order",
        "8",
        "search",
        "--problem",
        "corner-converse",
    ]);
    assert_eq!(v["problem"], "corner-converse");
    for p in ["semitripotent-vs-sdt", "c-delta"] {
        assert_eq!(
            json(&["--json", "--max-order", "8", "search", "--problem", p])["problem"],
            p
        );
    }
}

#[test]
fn export_reimport_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z4.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&["export", "Z4", "--what", "tables", "--out", p]), 0);
    for set in ["units", "jacobson", "delta", "idempotents", "tripotents"] {
        let a = json(&["--json", "sets", "Z4", "--set", set]);
        let b = json(&["--json", "sets", "--table", p, "--set", set]);
        assert_eq!(a, b, "{set}");
    }
    let a = json(&["--json", "classify", "Z4"]);
    let b = json(&["--json", "classify", "--table", p]);
    assert_eq!(a["flags"], b["flags"]);
}

#[test]
fn export_size_boundary() {
    assert_eq!(
        code(&["export", "T3(Z4)", "--what", "tables", "--out", "/dev/null"]),
        0
    );
    let v = json(&["--json", "export", "T2(Z2)", "--what", "encoding"]);
    assert!(v.is_object());
}

#[test]
fn bad_table_file_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"order": 2, "zero": 0, "one": 1, "add": [[0,1],[0,0]], "mul": [[0,0],[0,1]], "neg": [0,1]}"#).unwrap();
    assert_eq!(code(&["classify", "--table", path.to_str().unwrap()]), 3);
}

#[test]
fn json_is_deterministic() {
    for args in [
        &["--json", "classify", "T2(Z3)", "--witnesses"][..],
        &["--json", "verify", "Z12"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn help_documents_the_grammar() {
    let out = String::from_utf8(run(&["--help"]).stdout).unwrap();
    assert!(out.contains(finring::parser::GRAMMAR.lines().next().unwrap()));
}
