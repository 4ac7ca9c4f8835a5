//! End-to-end tests of the `mullineux` binary: output formats,
//! exit codes and a handful of pinned outputs.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mullineux"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn symbol_plain_worked_example() {
    let out = run(&["symbol", "7,7,7,4,4,1,1", "--e", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "12 8 5 4 2\n7 4 3 3 2\n");
}

#[test]
fn symbol_json_round_trips() {
    let out = run(&["symbol", "7,7,7,4,4,1,1", "--e", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["e"], 5);
    assert_eq!(v["a"], serde_json::json!([12, 8, 5, 4, 2]));
    assert_eq!(v["r"], serde_json::json!([7, 4, 3, 3, 2]));
}

#[test]
fn map_plain_worked_example_and_involution() {
    let out = run(&["map", "7,7,7,4,4,1,1", "--e", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "12,9,4,2,2,2\n");

    let back = run(&["map", "12,9,4,2,2,2", "--e", "5"]);
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(stdout(&back), "7,7,7,4,4,1,1\n");
}

#[test]
fn map_json_is_the_parts_list() {
    let out = run(&["map", "7,7,7,4,4,1,1", "--e", "5", "--format", "json"]);
    let parts: Vec<u64> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parts, [12, 9, 4, 2, 2, 2]);
}

#[test]
fn fixed_counts_split_by_weight() {
    let total = run(&["fixed", "9", "--e", "4", "--count"]);
    assert_eq!(stdout(&total), "4\n");
    let w1 = run(&["fixed", "9", "--e", "4", "--weight", "1", "--count"]);
    assert_eq!(stdout(&w1), "1\n");
    let w2 = run(&["fixed", "9", "--e", "4", "--weight", "2", "--count"]);
    assert_eq!(stdout(&w2), "3\n");
}

#[test]
fn fixed_list_entries_are_actual_fixed_points() {
    let out = run(&["fixed", "10", "--e", "4", "--format", "json"]);
    let points: Vec<Vec<i64>> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(points.len(), 3);
    for parts in points {
        let text: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
        let image = run(&["map", &text.join(","), "--e", "4"]);
        assert_eq!(stdout(&image).trim(), text.join(","));
    }
}

#[test]
fn core_of_single_row_six_mod_three() {
    let out = run(&["core", "6", "--e", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "core= weight=2 e=3\n");
}

#[test]
fn barcore_worked_example() {
    let out = run(&["barcore", "23,21,17,13,11,9,7", "--t", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).starts_with("core=9,5,3 bar_weight=14 t=6"),
        "got: {}",
        stdout(&out)
    );
}

#[test]
fn series_sc_plain_prefix() {
    let out = run(&["series", "sc", "--e", "4", "--trunc", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "0 1\n1 1\n2 0\n3 1\n4 1\n5 1\n6 1\n7 1\n8 0\n9 0\n10 2\n"
    );
}

#[test]
fn series_f_rejects_odd_modulus() {
    let out = run(&["series", "f", "--e", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn table_plain_is_stable() {
    let out = run(&["table", "--e", "4", "--n-max", "6", "--w-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "n w=0 w=1 w=2\n1 1 0 0\n2 0 0 0\n3 1 0 0\n4 1 1 0\n5 1 1 0\n6 1 0 0\n"
    );
}

#[test]
fn invalid_partition_is_a_usage_error() {
    let out = run(&["map", "3,5", "--e", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn non_regular_input_is_a_usage_error() {
    let out = run(&["symbol", "1,1,1", "--e", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_suite_passes() {
    let out = run(&["verify", "--suite", "golden"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS golden"), "got: {text}");
    assert!(text.contains("PASS coverage"), "got: {text}");
}

#[test]
fn verify_unknown_suite_is_a_usage_error() {
    let out = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn thread_count_does_not_change_output() {
    let single = run(&["fixed", "12", "--e", "4"]);
    let sharded = bin()
        .args(["fixed", "12", "--e", "4"])
        .env("MULLINEUX_THREADS", "3")
        .output()
        .expect("binary runs");
    assert_eq!(single.stdout, sharded.stdout);
}
