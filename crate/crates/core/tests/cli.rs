use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_entropic");

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn fan() -> PathBuf {
    scratch("cli_fan.json", r#"{"rows":3,"cols":5,"entries":[[1,0,0,1,1],[0,1,0,1,0],[0,0,1,0,1]]}"#)
}

fn special3() -> PathBuf {
    scratch("cli_special3.json", r#"{"rows":3,"cols":4,"entries":[[1,0,0,1],[0,1,0,1],[0,0,1,1]]}"#)
}

fn entropic(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn p(path: &PathBuf) -> &str {
    path.to_str().unwrap()
}

#[test]
fn degree_reports_both_formulas() {
    let v = json(&entropic(&["degree", "--matrix", p(&fan())]));
    assert_eq!(v["degree"], 8);
    assert_eq!(v["crosscheck"], 8);
}

#[test]
fn matroid_info() {
    let v = json(&entropic(&["matroid", "info", "--matrix", p(&fan())]));
    assert_eq!(v["mobius_invariant"], 4);
    assert_eq!(v["char_poly"]["coefficients"], serde_json::json!([-4, 8, -5, 1]));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(entropic(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(entropic(&["degree"]).status.code(), Some(1));
    assert_eq!(entropic(&["--help"]).status.code(), Some(0));
}

#[test]
fn domain_errors_exit_two() {
    let basic = scratch("cli_basic.json", r#"{"rows":2,"cols":2,"entries":[[1,0],[0,1]]}"#);
    assert_eq!(entropic(&["disc", "--matrix", p(&basic)]).status.code(), Some(2));
    assert_eq!(entropic(&["disc", "--matrix", p(&fan())]).status.code(), Some(2));
    let out = entropic(&["solve", "--matrix", p(&fan()), "--b", "1,1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn malformed_input_is_a_usage_error() {
    let bad = scratch("cli_bad.json", "{ not json");
    assert_eq!(entropic(&["degree", "--matrix", p(&bad)]).status.code(), Some(1));
    assert_eq!(entropic(&["solve", "--matrix", p(&fan()), "--b", "3,x,2"]).status.code(), Some(1));
}

#[test]
fn corank_one_disc_has_nineteen_terms() {
    let v = json(&entropic(&["disc", "--matrix", p(&special3())]));
    let terms = v["polynomial"]["terms"].as_array().or_else(|| v["terms"].as_array()).expect("terms");
    assert_eq!(terms.len(), 19);
}

#[test]
fn output_is_deterministic() {
    let args = ["symdisc", "--m", "3", "--random", "--seed", "7"];
    let a = entropic(&args);
    let b = entropic(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let target = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli_degree_out.json");
    let _ = std::fs::remove_file(&target);
    let out = entropic(&["degree", "--matrix", p(&fan()), "--out", p(&target)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(v["degree"], 8);
}

#[test]
fn solve_writes_json_copy() {
    let target = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli_solve.json");
    let v = json(&entropic(&["solve", "--matrix", p(&fan()), "--b", "3,2,2", "--json", p(&target)]));
    assert_eq!(v["count"], 4);
    assert_eq!(v["solutions"].as_array().unwrap().len(), 4);
    let copy: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(copy, v);
}

#[test]
fn probe_emits_csv() {
    let out = entropic(&["probe", "--matrix", p(&fan()), "--from", "3,2,2", "--to", "7,3,2", "--steps", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "step,b1,b2,b3,gap");
    assert_eq!(lines.len(), 7);
    for line in &lines[1..] {
        let gap: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert!(gap > 1e-2);
    }
}

#[test]
fn graph_matrix_and_retina_solve() {
    let k3 = scratch("cli_k3.json", r#"{"nodes":3,"edges":[[1,2],[1,3],[2,3]],"signing":"all_negative"}"#);
    let v = json(&entropic(&["graph", "matrix", "--graph", p(&k3)]));
    assert_eq!(v["rows"], 3);
    assert_eq!(v["cols"], 3);
    let v = json(&entropic(&["retina", "solve", "--graph", p(&k3), "--b", "3,5,7"]));
    assert_eq!(v["count"], 1);
    let loop_graph = scratch("cli_loop.json", r#"{"nodes":2,"edges":[[1,1]],"signing":"oriented"}"#);
    assert_eq!(entropic(&["graph", "matrix", "--graph", p(&loop_graph)]).status.code(), Some(2));
}

#[test]
fn retina_table_rows() {
    let v = json(&entropic(&["retina-table", "--dmax", "6"]));
    let rows = v["rows"].as_array().unwrap();
    let got: Vec<(u64, u64)> = rows.iter().map(|r| (r["degree"].as_u64().unwrap(), r["mu"].as_u64().unwrap())).collect();
    assert_eq!(got, vec![(22, 7), (270, 51), (3148, 431)]);
}

#[test]
fn recip_singular_is_one_based() {
    let v = json(&entropic(&["recip", "singular", "--matrix", p(&fan())]));
    let flats: Vec<Value> = v["strata"].as_array().unwrap().iter().map(|s| s["flat"].clone()).collect();
    assert_eq!(flats, vec![serde_json::json!([2]), serde_json::json!([3]), serde_json::json!([4]), serde_json::json!([5])]);
}

#[test]
fn selftest_passes() {
    assert_eq!(entropic(&["selftest"]).status.code(), Some(0));
}

#[test]
fn in_process_run_matches_binary() {
    let path = fan();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = entropic::cli::run(["entropic", "degree", "--matrix", p(&path)], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(out, entropic(&["degree", "--matrix", p(&path)]).stdout);
}
