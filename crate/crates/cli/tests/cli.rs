use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_enthyrev")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn models_lists_canonical_order() {
    let o = run(&["models", "a | b"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "{b}\n{a}\n{a,b}\n");
    let o = run(&["models", "false"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "");
}

#[test]
fn background_revision() {
    let o = run(&[
        "revise-formula",
        "--phi",
        "((a & b) | (!a & c) | !(b | (a & c))) & !d",
        "--alpha",
        "a & !b & c",
        "--vocab",
        "a,b,c,d",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "{a,c}");
}

#[test]
fn stable_extensions_and_vacuity() {
    let o = run(&["stable", &data("f2.apx")]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "extension: {x, u}\nextension: {y, u}\nskeptical: {u}\n");
    let o = run(&["stable", &data("self_attack.apx")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("vacuous: true"));
}

#[test]
fn af_revision_contains_f2() {
    let o = run(&[
        "--emit-structured",
        "revise-af",
        "--af",
        &data("f1.apx"),
        "--goal",
        "acc(u)",
        "--constraint",
        "att(t,u) & att(z,u)",
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 10);
    let f2 = entries.iter().find(|e| {
        e["att_added"] == serde_json::json!([["x", "z"], ["y", "t"]]) && e["att_removed"] == serde_json::json!([])
    });
    let f2 = f2.expect("F2 among the results");
    assert_eq!(f2["accepted"], serde_json::json!(["u"]));
    assert!(entries.iter().all(|e| e["total_weight"] == 2));
}

#[test]
fn revision_is_deterministic() {
    let args = ["eaf", "revise", "--eaf", &data("f3.eaf"), "--goal", "acc(e1)"];
    let first = run(&args);
    assert_eq!(code(&first), 0);
    let text = stdout(&first);
    assert_eq!(text.matches("weight: 1").count(), 3);
    for _ in 0..3 {
        assert_eq!(stdout(&run(&args)), text);
    }
}

#[test]
fn classification_reports_note() {
    let o = run(&["eaf", "classify", "--eaf", &data("f3.eaf")]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("certain: (d1,e1)"));
    assert!(text.contains("questionable: (e2,d2)"));
    assert!(text.contains("note: (d1,e1) is certain"));
    let o = run(&["eaf", "classify", "--eaf", &data("f6.eaf")]);
    assert_eq!(stdout(&o), "certain: (d3,e3)\ncertain: (e3,d3)\n");
}

#[test]
fn acceptable_afs_with_witnesses() {
    let o = run(&[
        "eaf",
        "acceptable",
        "--eaf",
        &data("f3.eaf"),
        "--goal",
        "acc(e1)",
        "--beliefs",
        &data("f3_beliefs.txt"),
        "--claims",
        &data("f3_claims.txt"),
    ]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("witness: e2 = ⟨{eta, eta -> iota}, iota⟩"));
    assert!(text.contains("reason: removed attack (d1,e1) cannot be justified"));
}

#[test]
fn chomsky_revisions() {
    let o = run(&["eaf", "revise", "--eaf", &data("chomsky_a3.eaf"), "--goal", "acc(c)"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.matches("weight:").count(), 2);
    assert!(text.contains("att_added: {(a,b)}"));
    assert!(text.contains("att_removed: {(b,c)}"));
}

#[test]
fn arguments_and_enthymemes() {
    let o = run(&[
        "args",
        "generate",
        "--beliefs",
        &data("contradiction_beliefs.txt"),
        "--claims",
        &data("contradiction_claims.txt"),
    ]);
    assert_eq!(code(&o), 0);
    let o = run(&[
        "args",
        "encode",
        "--args",
        &data("umbrella.eaf"),
        "--certainty",
        &data("umbrella.cert"),
        "--tau",
        "0.5",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "john: ⟨{rain_predicted}, take_umbrella⟩");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&["no-such-command"])), 1);
    assert_eq!(code(&run(&["stable", &data("missing.apx")])), 1);
    assert_eq!(code(&run(&["models", "a &"])), 2);
    let o = run(&["revise-formula", "--phi", "a", "--alpha", "a & !a"]);
    assert_eq!(code(&o), 3);
    let o = run(&["revise-af", "--af", &data("f1.apx"), "--goal", "acc(nope)"]);
    assert_eq!(code(&o), 2);
}
