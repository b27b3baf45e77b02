//! Exit-code contract and output determinism for every verb.
//! 0 = success/feasible, 1 = infeasible/verification failure,
//! 2 = usage error, 3 = budget exhausted.

use std::process::{Command, Output};

fn l321(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_l321"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn solve_exit_codes() {
    let feasible = l321(&["solve", "--n", "12", "--gens", "1,3", "--max-label", "11"]);
    assert_eq!(code(&feasible), 0);
    assert!(stdout(&feasible).contains("feasible"));

    let infeasible = l321(&["solve", "--n", "12", "--gens", "1,3", "--max-label", "10"]);
    assert_eq!(code(&infeasible), 1);

    let budget = l321(&[
        "solve",
        "--n",
        "16",
        "--gens",
        "1,3",
        "--max-label",
        "14",
        "--budget",
        "5",
    ]);
    assert_eq!(code(&budget), 3);
}

#[test]
fn solve_prefix_completes_patterns() {
    let out = l321(&[
        "solve",
        "--n",
        "10",
        "--gens",
        "1,3",
        "--max-label",
        "13",
        "--prefix",
        "0,3,10,13,6,1,4,9,12",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("labels: 0,3,10,13,6,1,4,9,12,7"));
}

#[test]
fn lambda_prints_value_and_witness() {
    let out = l321(&["lambda", "--n", "12", "--gens", "1,3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("lambda = 11"));
    assert!(text.contains("labels: 0,5,10,3,8,1,6,11,4,9,2,7"));
    // the closed generator set is echoed for audit
    assert!(text.contains("C_12({1,3,9,11})"));
}

#[test]
fn verify_pattern_and_labels_file() {
    let ok = l321(&[
        "verify",
        "--n",
        "12",
        "--gens",
        "1,3",
        "--pattern",
        "0,5,10,3,8,1,6,11,4,9,2,7",
    ]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("valid"));

    let bad = l321(&[
        "verify",
        "--n",
        "12",
        "--gens",
        "1,3",
        "--pattern",
        "0,5,10,3,8,1,6,11,4,9,2,6",
    ]);
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("violation"));

    // tiling: a 12-pattern over n=24
    let tiled = l321(&[
        "verify",
        "--n",
        "24",
        "--gens",
        "1,3",
        "--pattern",
        "0,5,10,3,8,1,6,11,4,9,2,7",
    ]);
    assert_eq!(code(&tiled), 0);

    let dir = std::env::temp_dir().join("l321-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("labels.txt");
    std::fs::write(&path, "0,5,10,3,8,1,6,11,4,9,2,7\n").unwrap();
    let from_file = l321(&[
        "verify",
        "--n",
        "12",
        "--gens",
        "1,3",
        "--labels-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&from_file), 0);

    let wrong_len = l321(&[
        "verify",
        "--n",
        "13",
        "--gens",
        "1,3",
        "--labels-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&wrong_len), 2);
}

#[test]
fn compose_and_verify() {
    let ok = l321(&[
        "compose",
        "--segment",
        "0,3,6,9,12,1,4,7,10,13x2",
        "--segment",
        "0,3,6,9,12,1,4,7,10,13,2,5,8,11x2",
        "--gens",
        "1,3",
    ]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("valid on C_48({1,3,45,47})"));

    // same segments on the wrong circulant family fail verification
    let bad = l321(&[
        "compose",
        "--segment",
        "0,3,6,9,12,1,4,7,10,13x2",
        "--segment",
        "0,3,6,9,12,1,4,7,10,13,2,5,8,11x2",
        "--gens",
        "1,5",
    ]);
    assert_eq!(code(&bad), 1);

    let mismatch = l321(&["compose", "--segment", "0,3,6x2", "--n", "7"]);
    assert_eq!(code(&mismatch), 2);
}

#[test]
fn upper_constructions() {
    let out = l321(&["upper", "--family", "s3-even", "--n", "146"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("span = 12"));

    let out = l321(&["upper", "--family", "s5-odd", "--n", "105"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("span = 14"));

    // published results do not cover this order
    let out = l321(&["upper", "--family", "s5-even", "--n", "46"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn window_modes() {
    let anchored = l321(&["window", "--dset", "1,3", "--max-label", "10"]);
    assert_eq!(code(&anchored), 0);
    assert!(stdout(&anchored).contains("max window = 7"));

    let free = l321(&["window", "--dset", "1,3", "--max-label", "10", "--free"]);
    assert_eq!(code(&free), 0);
    assert!(stdout(&free).contains("max window = 11"));

    let saturated = l321(&[
        "window",
        "--dset",
        "1,3",
        "--max-label",
        "11",
        "--cap",
        "24",
    ]);
    assert_eq!(code(&saturated), 0);
    assert!(stdout(&saturated).contains(">= 24 (cap reached)"));
}

#[test]
fn bound_values() {
    let out = l321(&["bound", "--n", "12", "--gens", "1,3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("lower bound = 11"));

    let out = l321(&["bound", "--n", "20", "--gens", "1,4"]);
    assert!(stdout(&out).contains("lower bound = 15"));

    let out = l321(&["bound", "--n", "30", "--gens", "1,5"]);
    assert!(stdout(&out).contains("lower bound = 13"));
}

#[test]
fn table_formats() {
    let csv = l321(&[
        "table", "--family", "s3", "--range", "8:16:2", "--mode", "catalog", "--format", "csv",
    ]);
    assert_eq!(code(&csv), 0);
    let text = stdout(&csv);
    assert!(text.starts_with("n,value,kind,source\n"));
    assert!(text.contains("8,15,exact,"));
    assert!(text.contains("12,11,exact,"));

    let json = l321(&[
        "table", "--family", "s5", "--range", "39:41:2", "--mode", "catalog", "--format", "json",
    ]);
    assert_eq!(code(&json), 0);
    assert!(stdout(&json).contains("\"kind\":\"lower_bound\""));
}

#[test]
fn table_budget_rows_are_unresolved_not_wrong() {
    let out = l321(&[
        "table", "--family", "s3", "--range", "19:19", "--mode", "solve", "--budget", "10",
    ]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("unresolved (budget)"));
}

#[test]
fn threads_flag_keeps_results() {
    let seq = l321(&["lambda", "--n", "14", "--gens", "1,3", "--json"]);
    let par = l321(&[
        "lambda",
        "--n",
        "14",
        "--gens",
        "1,3",
        "--threads",
        "2",
        "--json",
    ]);
    assert_eq!(code(&seq), 0);
    assert_eq!(code(&par), 0);
    let a: serde_json::Value = serde_json::from_slice(&seq.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&par.stdout).unwrap();
    assert_eq!(a["result"], b["result"]);
    assert_eq!(a["witness"], b["witness"]);
}

#[test]
fn catalog_verify_reports_known_defects() {
    let out = l321(&["catalog-verify"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("159 pass, 2 fail (0 unexpected)"));
    assert!(text.contains("disputed in data, expected"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&l321(&["nonsense"])), 2);
    assert_eq!(code(&l321(&["lambda", "--n", "12"])), 2);
    assert_eq!(code(&l321(&["lambda", "--n", "2", "--gens", "1"])), 2);
    assert_eq!(
        code(&l321(&[
            "solve",
            "--n",
            "12",
            "--gens",
            "1,x",
            "--max-label",
            "4"
        ])),
        2
    );
    assert_eq!(
        code(&l321(&["table", "--family", "s3", "--range", "10:8"])),
        2
    );
    assert_eq!(code(&l321(&["verify", "--n", "12", "--gens", "1,3"])), 2);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["lambda", "--n", "14", "--gens", "1,3", "--json"];
    let a = l321(&args);
    let b = l321(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let value: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(value["verb"], "lambda");
    assert_eq!(value["result"], 13);
    assert!(value["witness"].is_array());
    assert_eq!(value["inputs"]["gens"], serde_json::json!([1, 3, 11, 13]));
}
