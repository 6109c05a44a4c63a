use std::process::Command;

use enumerlab_cli::{main_with, DISPATCH_TABLE};
use enumerlab_core::endsl::GRAMMAR;
use enumerlab_core::OPERATIONS;

const BIN: &str = env!("CARGO_BIN_EXE_enumerlab");

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(argv: &[&str]) -> Run {
    run_env(argv, None)
}

fn run_env(argv: &[&str], budget: Option<&str>) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = main_with(
        std::iter::once("enumerlab").chain(argv.iter().copied()),
        budget,
        &mut out,
        &mut err,
    );
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn dispatch_table_covers_every_operation() {
    let mut listed: Vec<&str> = DISPATCH_TABLE.iter().map(|(op, _)| *op).collect();
    listed.sort_unstable();
    let mut ops = OPERATIONS.to_vec();
    ops.sort_unstable();
    assert_eq!(listed, ops);
    for (op, argv) in DISPATCH_TABLE {
        let r = run(argv);
        assert!(r.code == 0 || r.code == 1, "{op}: {argv:?} exited {}: {}", r.code, r.stderr);
        assert!(!r.stdout.is_empty(), "{op} printed nothing");
        assert!(r.stdout.ends_with('\n'), "{op} output not LF-terminated");
        assert!(!r.stdout.contains('\r'));
    }
}

#[test]
fn spec_examples() {
    assert_eq!(run(&["pair", "encode", "3", "0"]).stdout, "6\n");
    let audit = run(&["audit", "--depth", "12", "--format", "json"]);
    assert_eq!(audit.code, 1);
    let v: serde_json::Value = serde_json::from_str(&audit.stdout).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 10);
    assert_eq!(entries[8]["claim"], "C9");
    assert_eq!(entries[8]["status"], "refuted");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["pair", "encode", "1", "1"]).code, 0);
    assert_eq!(run(&["audit", "--claim", "C9", "--depth", "2"]).code, 1);
    assert_eq!(run(&["audit", "--claim", "C3", "--depth", "2"]).code, 0);
    assert_eq!(run(&["nonsense"]).code, 2);
    assert_eq!(run(&["pair", "encode", "x", "1"]).code, 2);
    assert_eq!(run(&["fig", "7"]).code, 2);
    assert_eq!(run(&["tree", "paths", "0"]).code, 2);
    assert_eq!(run(&["tree", "paths", "30"]).code, 3);
    assert_eq!(run(&["audit", "--depth", "30", "--claim", "C8"]).code, 3);
    assert_eq!(run(&["--budget", "0", "tree", "count", "2"]).code, 2);
    assert_eq!(run(&["fig", "5", "--rows", "100000"]).code, 3);
}

#[test]
fn failed_claims_still_produce_a_report() {
    let r = run(&["--budget", "100", "audit", "--depth", "8", "--format", "json"]);
    assert_eq!(r.code, 3);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 10);
    assert!(v.as_array().unwrap().iter().any(|e| e["status"] == "error"));
}

#[test]
fn environment_budget() {
    assert_eq!(run_env(&["tree", "paths", "8"], Some("100")).code, 3);
    assert_eq!(run_env(&["tree", "paths", "6"], Some("100")).code, 0);
    assert_eq!(run_env(&["--budget", "1000", "tree", "paths", "8"], Some("100")).code, 0);
    assert_eq!(run_env(&["tree", "count", "2"], Some("zero")).code, 2);
}

#[test]
fn parse_errors_show_grammar() {
    let r = run(&["diag", "apply", "interleave(ones, zeros)"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("1:12: type mismatch"), "{}", r.stderr);
    assert!(r.stderr.contains(GRAMMAR));
    assert!(r.stdout.is_empty());
}

#[test]
fn program_sources_agree() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("prog.txt");
    std::fs::write(&file, "insert(\n  figure5, 2,\n  ones)\n").unwrap();
    let path = file.to_str().unwrap();
    let from_file = run(&["diag", "apply", "--program-file", path, "--rows", "4"]);
    let from_flag = run(&["diag", "apply", "--program", "insert(figure5,2,ones)", "--rows", "4"]);
    let inline = run(&["diag", "apply", "insert(figure5, 2, ones)", "--rows", "4"]);
    assert_eq!(from_file.code, 0, "{}", from_file.stderr);
    assert_eq!(from_file.stdout, from_flag.stdout);
    assert_eq!(from_flag.stdout, inline.stdout);
    assert!(inline.stdout.starts_with("list: insert(figure5, 2, ones)\nrow 0: 0000"));
    assert_eq!(run(&["diag", "apply", "figure5", "--program", "figure5"]).code, 2);
    assert_eq!(run(&["diag", "apply", "--program-file", "/nonexistent/prog"]).code, 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("fig6.svg");
    let r = run(&["fig", "6", "--rows", "7", "--out", target.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let svg = std::fs::read_to_string(&target).unwrap();
    let labels: Vec<&str> = svg
        .lines()
        .filter(|l| l.contains(r#"<text class="label""#))
        .map(|l| &l[l.find('>').unwrap() + 1..l.rfind('<').unwrap()])
        .collect();
    assert_eq!(labels, ["0", "2", "3", "9", "10", "20", "21"]);
}

#[test]
fn binary_exit_status_and_streams() {
    let ok = Command::new(BIN).args(["pair", "decode", "6"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "(3, 0)\n");

    let refuted = Command::new(BIN)
        .args(["audit", "--claim", "C9", "--depth", "4", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(refuted.status.code(), Some(1));

    let usage = Command::new(BIN).args(["seq", "prefix", "compl("]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    assert!(String::from_utf8(usage.stderr).unwrap().contains("seq  :="));

    let budget = Command::new(BIN)
        .args(["matrix", "submatrix", "20"])
        .env("ENUMERLAB_BUDGET", "1000")
        .output()
        .unwrap();
    assert_eq!(budget.status.code(), Some(3));
}

#[test]
fn markdown_audit_is_deterministic() {
    let a = run(&["audit", "--depth", "6"]);
    let b = run(&["audit", "--depth", "6"]);
    assert_eq!(a.code, 1);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.contains("| C9 | 6 | refuted |"));
}
