use std::path::PathBuf;
use std::process::Command;

use etrans::cli::{self, EXIT_INPUT, EXIT_OK};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

fn etrans(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("etrans").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = etrans(args);
    assert_eq!(code, EXIT_OK, "stderr: {err}");
    out
}

fn temp_file(name: &str, contents: &str) -> String {
    let path = std::env::temp_dir().join(format!("etrans-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn count_reports_the_golden_numbers() {
    let hg = data("example_14_6.hg");
    let out = ok(&["count", &hg]);
    assert_eq!(out.lines().next().unwrap(), "N = 8784, R = 7, k_min = 4, tau_min = 66");
    assert!(out.lines().nth(1).unwrap().starts_with("impositions = "));

    let json = ok(&["count", &data("example_14_6.json")]);
    assert_eq!(json, out);
}

#[test]
fn count_at_least_and_verify() {
    let hg = data("example_14_6.hg");
    let out = ok(&["count", &hg, "--at-least", "5", "--verify"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[1], "N(|X| >= 5) = 8718");
    assert_eq!(lines.last().unwrap(), &"verify = ok (brute-force, inclusion-exclusion)");

    let sorted = ok(&["count", &hg, "--order", "size-asc", "--parallel", "--verify"]);
    assert!(sorted.starts_with("N = 8784, "));
}

#[test]
fn count_json() {
    let out = ok(&["count", &data("example_14_6.hg"), "--json", "--at-least", "5"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["n_total"], "8784");
    assert_eq!(v["r_final"], 7);
    assert_eq!(v["k_min"], 4);
    assert_eq!(v["tau_min"], "66");
    assert_eq!(v["at_least"]["count"], "8718");
    assert!(v["elapsed_us"].is_u64());
}

#[test]
fn spectrum_lines() {
    let out = ok(&["spectrum", &data("example_14_6.hg"), "--verify"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 15);
    assert!(lines.contains(&"3 0"));
    assert!(lines.contains(&"4 66"));
    let total: u64 = lines.iter().map(|l| l.split(' ').nth(1).unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 8784);
}

#[test]
fn enumerate_k_sets() {
    let hg = data("example_14_6.hg");
    let four = ok(&["enumerate", &hg, "--k", "4"]);
    assert_eq!(four.lines().count(), 66);
    assert!(four.lines().all(|l| l.split(' ').count() == 4));
    assert_eq!(ok(&["enumerate", &hg, "--k", "3"]), "");
    assert_eq!(ok(&["enumerate", &hg, "--k", "6", "--limit", "5"]).lines().count(), 5);
}

#[test]
fn rows_output() {
    let out = ok(&["rows", &data("example_14_6.hg")]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0], "2 2 e1 e1 e2 e3 e3 e4 2 e2 e3 e3 e4 e4");
    assert_eq!(lines[6], "e1 e1 0 0 0 0 0 0 1 1 1 0 1 2");

    assert_eq!(ok(&["rows", &temp_file("empty.hg", "3 0\n")]), "2 2 2\n");
    assert_eq!(ok(&["rows", &temp_file("single.hg", "1 1\n1\n")]), "1\n");
}

#[test]
fn query_filters_rows() {
    let hg = data("example_14_6.hg");
    let out = ok(&["query", &hg, "--require", "8,9", "--forbid", "7"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[2], "2 2 0 0 0 1 0 1 1 1 2 2 2 2");
    assert!(lines[4].starts_with("N = "));

    let all = ok(&["query", &hg]);
    assert_eq!(all.lines().count(), 8);
    assert_eq!(all.lines().last().unwrap(), "N = 8784");

    let (code, _, err) = etrans(&["query", &hg, "--require", "7", "--forbid", "7"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("both required and forbidden"));
}

#[test]
fn input_errors_exit_2() {
    let bad = temp_file("bad.hg", "3 2\n1 2\n");
    assert_eq!(etrans(&["count", &bad]).0, EXIT_INPUT);
    let range = temp_file("range.hg", "3 1\n1 4\n");
    assert_eq!(etrans(&["count", &range]).0, EXIT_INPUT);
    assert_eq!(etrans(&["count", "/nonexistent/file.hg"]).0, EXIT_INPUT);
    assert_eq!(etrans(&["frobnicate"]).0, EXIT_INPUT);
    assert_eq!(etrans(&["enumerate", &data("example_14_6.hg")]).0, EXIT_INPUT);
}

#[test]
fn binary_is_deterministic() {
    let hg = data("example_14_6.hg");
    let bin = env!("CARGO_BIN_EXE_etrans");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    for args in [vec!["rows", &hg], vec!["enumerate", &hg, "--k", "5"], vec!["spectrum", &hg]] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
    let first = run(&["count", &hg]);
    assert!(String::from_utf8_lossy(&first.stdout).starts_with("N = 8784, R = 7"));
    let failed = run(&["count", "/nonexistent/file.hg"]);
    assert_eq!(failed.status.code(), Some(EXIT_INPUT));
}
