use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn trt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trt")).args(args).output().expect("spawn trt")
}

fn trt_with_input(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trt"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn trt");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn ex_reports_clique_union_value() {
    let out = trt(&["--json", "ex", "--family", "t1", "--n", "10", "--p", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["value"], 42);
    assert_eq!(v["branch"], "CLIQUE_UNION");
    assert_eq!(v["k"], 1);
    assert_eq!(v["r"], 4);
}

#[test]
fn ex_explain_and_bounds() {
    let out = trt(&["--json", "ex", "--family", "t2", "--n", "13", "--p", "15", "--explain"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["case"].is_object());
    assert!(v["bounds"].is_object());
}

#[test]
fn ramsey_equal_spiders() {
    let out = trt(&["--json", "ramsey", "--left", "t1:12", "--right", "t2:12"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kind"], "exact");
    assert_eq!(v["value"], 18);
    assert_eq!(v["rule"], "spider-spider-equal");
}

#[test]
fn ramsey_witness_is_emitted_as_graph6() {
    let out = trt(&["--json", "ramsey", "--left", "t1:8", "--right", "tprime:8", "--witness"]);
    assert_eq!(out.status.code(), Some(0));
    let g6 = json(&out)["graph6"].as_str().unwrap().to_string();
    let check = trt_with_input(&["check", "--avoid", "tprime:8", "--complement"], g6.as_bytes());
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn constructed_extremal_graph_is_tree_free() {
    let built = trt(&["construct", "extremal", "--family", "t2", "--n", "9", "--p", "20"]);
    assert_eq!(built.status.code(), Some(0));
    let check = trt_with_input(&["check", "--avoid", "t2:9"], &built.stdout);
    assert_eq!(check.status.code(), Some(0), "{}", String::from_utf8_lossy(&check.stdout));
}

#[test]
fn near_regular_construction() {
    let out = trt(&["construct", "near-regular", "--p", "7", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let line = String::from_utf8(out.stdout).unwrap();
    let g = trt_core::graph::decode_graph6(line.trim()).unwrap();
    assert_eq!(g.order(), 7);
    assert_eq!(g.edge_count(), 10);
}

#[test]
fn check_finds_embedding() {
    let out = trt_with_input(&["--json", "check", "--avoid", "path:3"], b"C~\n");
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["graphs"][0]["contains"], true);
    assert_eq!(v["graphs"][0]["embedding"].as_array().unwrap().len(), 3);
}

#[test]
fn malformed_input_exits_two() {
    let out = trt_with_input(&["check", "--avoid", "path:3"], b"garbage!!\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = trt(&["ex", "--family", "t9", "--n", "5", "--p", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = trt(&["ex", "--family", "t1", "--n", "3", "--p", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_respects_order_cap() {
    let out = trt(&["oracle", "--max-order", "5", "ex", "--family", "t1", "--n", "6", "--p", "7"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn oracle_small_search() {
    let out = trt(&["--json", "oracle", "ex", "--family", "path", "--n", "4", "--p", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["value"], 6);
    let out = trt(&["oracle", "ramsey", "--left", "path:4", "--right", "path:4", "--order", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("counterexample"));
    let out = trt(&["oracle", "ramsey", "--left", "path:4", "--right", "path:4", "--order", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("every graph"));
}
