use std::io::Write;
use std::process::{Command, Output, Stdio};

use chromabound::catalog::canonical_form;
use chromabound::{graph6, Graph};

fn chromabound(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chromabound"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn chromabound");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json report on stdout")
}

fn summary<'a>(report: &'a serde_json::Value, id: &str) -> &'a serde_json::Value {
    report["per_bound"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["id"] == id)
        .unwrap()
}

fn canon(g: &Graph) -> String {
    graph6::encode(&canonical_form(g).0)
}

#[test]
fn empty_input_is_clean() {
    let out = chromabound(&["sweep", "--input", "-"], "");
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["totals"]["graphs_processed"], 0);
}

#[test]
fn c5_main_result_tight_on_both_sides() {
    let out = chromabound(&["sweep", "--bounds", "MAIN_RESULT"], "Dhc\n");
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let s = summary(&report, "MAIN_RESULT");
    assert_eq!(s["tight_count"], 1);
    assert_eq!(s["min_slack"], "0/1");
    assert_eq!(s["tight"][0], "Dhc");
}

#[test]
fn key_tight_witnesses_on_five_vertices() {
    let out = chromabound(&["witness", "--bound", "KEY", "--mode", "tight", "--exhaustive", "5"], "");
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = stdout(&out).lines().map(str::to_owned).collect();
    assert!(lines.contains(&canon(&Graph::cycle(5).unwrap())), "{lines:?}");
}

#[test]
fn dc_third_tight_includes_k4() {
    let out = chromabound(&["witness", "--bound", "dc_third", "--exhaustive", "4"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l == "C~"));
}

#[test]
fn no_key_violations() {
    let out = chromabound(&["witness", "--bound", "KEY", "--mode", "violation", "--exhaustive", "6"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).trim().is_empty());
}

#[test]
fn reports_are_deterministic() {
    let a = chromabound(&["sweep", "--exhaustive", "6", "--jobs", "1"], "");
    let b = chromabound(&["sweep", "--exhaustive", "6", "--jobs", "3"], "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_lines_are_reported_not_fatal() {
    let out = chromabound(&["sweep"], "Dhc\nnot graph6!\n\nC~\n");
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["totals"]["graphs_processed"], 2);
    assert_eq!(report["totals"]["malformed_lines"], 1);
    assert_eq!(report["malformed"][0]["line"], 2);
}

#[test]
fn out_file_gets_json_and_stdout_gets_table() {
    let path = std::env::temp_dir().join(format!("chromabound-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = chromabound(&["sweep", "--exhaustive", "3", "--out", p], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("KEY"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["totals"]["graphs_processed"], 8);
    std::fs::remove_file(path).ok();
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(chromabound(&["sweep", "--bounds", "NOPE"], "").status.code(), Some(2));
    assert_eq!(chromabound(&["sweep", "--random", "5,0.5"], "").status.code(), Some(2));
    assert_eq!(chromabound(&["sweep", "--exhaustive", "12"], "").status.code(), Some(2));
    assert_eq!(chromabound(&["frobnicate"], "").status.code(), Some(2));
    let missing = chromabound(&["sweep", "--input", "/nonexistent/graphs.g6"], "");
    assert_eq!(missing.status.code(), Some(3));
    assert_eq!(chromabound(&["invariants", "!!"], "").status.code(), Some(3));
}

#[test]
fn invariants_of_c5() {
    let out = chromabound(&["invariants", "Dhc"], "");
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["chi"].as_u64(), v["omega"].as_u64(), v["iota"].as_u64()), (Some(3), Some(2), Some(1)));
    assert_eq!(v["has_doubly_critical_edge"], false);
}

#[test]
fn random_source_is_reproducible() {
    let a = chromabound(&["sweep", "--random", "8,0.4,11,50"], "");
    let b = chromabound(&["sweep", "--random", "8,0.4,11,50", "--jobs", "2"], "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["totals"]["graphs_processed"], 50);
}

#[test]
fn timing_is_opt_in() {
    let plain = json(&chromabound(&["sweep", "--exhaustive", "3"], ""));
    assert!(plain["wall_time_ms"].is_null());
    let timed = json(&chromabound(&["sweep", "--exhaustive", "3", "--timing"], ""));
    assert!(timed["wall_time_ms"].is_u64());
    assert!(plain["config"]["input"].as_str().unwrap().contains("exhaustive"));
}

#[test]
fn invariants_rejects_malformed_stdin() {
    let out = chromabound(&["invariants", "--input", "-"], "Dhc\n???x\n");
    assert_eq!(out.status.code(), Some(3));
}
