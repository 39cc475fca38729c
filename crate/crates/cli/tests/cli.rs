use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("elp-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn elp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_elp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn parse_prints_canonical_program() {
    let out = elp(&["parse", &fixture("p2.elp")]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "p :- not q.\nq :- not p.\n-p.\n");
}

#[test]
fn parse_errors_exit_with_two() {
    let bad = scratch("bad.elp");
    std::fs::write(&bad, "p :- not not q.\n").unwrap();
    let out = elp(&["parse", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1:"));
}

#[test]
fn args_are_numbered_in_canonical_order() {
    let out = elp(&["args", &fixture("p2.elp")]);
    assert_eq!(stdout(&out), "0: [-p]\n1: [p :- not q]\n2: [q :- not p]\n");
}

#[test]
fn attacks_lists_pairs_and_writes_dot() {
    let dot = scratch("attacks.dot");
    let out = elp(&[
        "attacks",
        &fixture("p2.elp"),
        "--kind",
        "u",
        "--kind",
        "r",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "0 -> 1  [r]\n1 -> 0  [r]\n1 -> 2  [u]\n2 -> 1  [u]\n"
    );
    let graph = std::fs::read_to_string(dot).unwrap();
    assert!(graph.starts_with("digraph attacks {"));
    assert_eq!(graph.matches("->").count(), 4);
}

#[test]
fn justify_prints_sections_and_literals() {
    let out = elp(&[
        "justify",
        &fixture("p2.elp"),
        "--attack",
        "u",
        "--defence",
        "a",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "JUSTIFIED:\n  [-p]\n  [q :- not p]\nOVERRULED:\n  [p :- not q]\nDEFENSIBLE:\nT: -p q\nnotF: -q p\n"
    );
}

#[test]
fn justify_json_is_one_object() {
    let out = elp(&[
        "--json",
        "justify",
        &fixture("p5.elp"),
        "--attack",
        "d",
        "--defence",
        "u",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"], "d/u");
    assert_eq!(v["justified"], serde_json::json!(["[-p]"]));
    assert_eq!(v["overruled"], serde_json::json!(["[p :- not -p]"]));
    assert_eq!(v["T"], serde_json::json!(["-p"]));
    assert_eq!(v["notF"], serde_json::json!(["p"]));
}

#[test]
fn unknown_attack_kind_is_rejected() {
    let out = elp(&[
        "justify",
        &fixture("p1.elp"),
        "--attack",
        "x",
        "--defence",
        "a",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn wfm_reports_model_and_stages() {
    let out = elp(&["wfm", &fixture("p2.elp"), "--stages"]);
    assert_eq!(
        stdout(&out),
        "I0:\nI1: -p\nI2: -p q\nT: -p q\nnotF: -q p\ncontradictory: false\n"
    );
}

#[test]
fn wfm_flags_contradictions() {
    let both = scratch("both.elp");
    std::fs::write(&both, "p.\n-p.\n").unwrap();
    let out = elp(&["--json", "wfm", both.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["contradictory"], true);
    assert_eq!(v["wfm_p"]["T"], serde_json::json!(["-p", "p"]));
}

#[test]
fn prove_exit_codes() {
    let dot = scratch("tree.dot");
    let out = elp(&[
        "prove",
        &fixture("p2.elp"),
        "q",
        "--attack",
        "u",
        "--defence",
        "a",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let tree = std::fs::read_to_string(dot).unwrap();
    assert!(tree.contains("P: [q :- not p]"));
    assert!(tree.contains("O: [p :- not q]"));

    let out = elp(&[
        "prove",
        &fixture("p2.elp"),
        "p",
        "--attack",
        "u",
        "--defence",
        "a",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = elp(&[
        "prove",
        "/nonexistent.elp",
        "p",
        "--attack",
        "u",
        "--defence",
        "a",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = elp(&[
        "prove",
        &fixture("p2.elp"),
        "not p",
        "--attack",
        "u",
        "--defence",
        "a",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_is_reproducible() {
    let args = ["--seed", "9", "gen", "--atoms", "3", "--rules", "5"];
    let a = elp(&args);
    let b = elp(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 5);
}

#[test]
fn check_runs_suites() {
    let out = elp(&["check", "dialectic", "--cases", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS dialectic: 12 cases, 0 failures"));

    let out = elp(&["--json", "check", "wfsx", "--cases", "0"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["cases"], 7);
    assert_eq!(v["failures"], serde_json::json!([]));

    let out = elp(&["check", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}
