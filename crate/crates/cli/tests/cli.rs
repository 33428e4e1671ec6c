use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclohecke"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn all_passed(v: &Value) -> bool {
    v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true)
}

#[test]
fn group_classes_for_b2() {
    let out = run(&["group", "classes", "--r", "2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["command"], "group classes");
    assert_eq!(v["result"]["count"], 5);
    assert!(all_passed(&v));
}

#[test]
fn reduce_emits_a_certificate() {
    let out = run(&["group", "reduce", "--r", "2", "--n", "3", "--word", "s2 s1 t s1 s2 t"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["result"]["routes"].is_array());
    assert!(all_passed(&v));
}

#[test]
fn center_matches_symmetric_jm_span_at_xi_minus_one() {
    let out = run(&["hecke", "center", "--r", "1", "--n", "3", "--spec", "xi=-1,Q=1", "--check-symmetric-jm"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["dim_center"], 3);
    assert_eq!(v["result"]["dim_symmetric"], 3);
}

#[test]
fn generic_product_is_laurent() {
    let out = run(&["hecke", "mult", "--r", "2", "--n", "2", "--ring", "laurent", "--x", "t", "--y", "t"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["terms"], 2);
}

#[test]
fn klr_blocks_in_characteristic_three() {
    let out = run(&["klr", "blocks", "--r", "1", "--n", "3", "--e", "3", "--kappa", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(all_passed(&json(&out)));
}

#[test]
fn csv_and_table_formats_render() {
    let csv = run(&["hecke", "class-polys", "--r", "2", "--n", "2", "--ring", "fraction", "--format", "csv"]);
    assert_eq!(csv.status.code(), Some(0));
    let text = String::from_utf8(csv.stdout).unwrap();
    assert!(text.starts_with("w,\"((2), ∅)\""));
    assert_eq!(text.lines().count(), 9);
    let table = run(&["group", "classes", "--r", "3", "--n", "2", "--format", "table"]);
    assert!(String::from_utf8(table.stdout).unwrap().contains("[PASS]"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["group", "classes", "--r", "0", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["group", "length", "--r", "2", "--n", "3", "--word", "x1"]).status.code(), Some(2));
    assert_eq!(run(&["hecke", "seminormal", "--r", "1", "--n", "3", "--spec", "xi=-1,Q=1"]).status.code(), Some(2));
    assert_eq!(run(&["hecke", "center", "--r", "1", "--n", "2", "--ring", "cyclo:1"]).status.code(), Some(2));
}

#[test]
fn sequential_and_parallel_agree() {
    let a = json(&run(&["--jobs", "1", "hecke", "cocenter-rank", "--r", "2", "--n", "2"]));
    let b = json(&run(&["--jobs", "4", "hecke", "cocenter-rank", "--r", "2", "--n", "2"]));
    assert_eq!(a["result"], b["result"]);
}

#[test]
fn quick_selftest_passes() {
    let out = run(&["selftest", "quick"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["failed"], 0);
}
