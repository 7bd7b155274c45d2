//! End-to-end tests of the command-line binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deepnodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn series_a_order_5() {
    let out = run(&["series", "--gf", "A", "--order", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "z + z^2 + 3*z^3 + 10*z^4 + 36*z^5\n");
}

#[test]
fn series_ph_h4_order_4() {
    let out = run(&["series", "--gf", "ph", "--h", "4", "--order", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).trim().ends_with("(6 + 4*t)*z^4"));
}

#[test]
fn series_dg_order_4() {
    let out = run(&["series", "--gf", "dG", "--order", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "z + z^2 + 4*z^3 + 14*z^4\n");
}

#[test]
fn series_requires_h_for_ah() {
    let out = run(&["series", "--gf", "Ah", "--order", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_var_sets_order_and_flag_wins() {
    let out = Command::new(env!("CARGO_BIN_EXE_deepnodes"))
        .env("DEEPNODES_ORDER", "3")
        .args(["series", "--gf", "A"])
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "z + z^2 + 3*z^3\n");
    let out = Command::new(env!("CARGO_BIN_EXE_deepnodes"))
        .env("DEEPNODES_ORDER", "3")
        .args(["series", "--gf", "A", "--order", "2"])
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "z + z^2\n");
}

#[test]
fn trees_counts_and_listing() {
    let out = run(&["trees", "--size", "4"]);
    assert_eq!(stdout(&out), "10\n");

    let out = run(&["trees", "--size", "1", "--list"]);
    assert_eq!(stdout(&out), "() 1 1 0\n");

    let out = run(&["trees", "--size", "3", "--list"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().any(|l| l == "(*(())) 3 1 1"));
}

#[test]
fn trees_rejects_out_of_bounds() {
    assert_eq!(run(&["trees", "--size", "0"]).status.code(), Some(2));
    assert_eq!(run(&["trees", "--size", "12"]).status.code(), Some(2));
    assert_eq!(
        run(&["trees", "--size", "12", "--bound", "13"]).status.code(),
        Some(2)
    );
}

#[test]
fn biject_examples() {
    let out = run(&["biject", "--from", "tree", "--to", "decorated", "(*(()))"]);
    assert_eq!(stdout(&out), "UUDL\n");

    let out = run(&["biject", "--from", "decorated", "--to", "tree", "UUDL"]);
    assert_eq!(stdout(&out), "(*(()))\n");

    let out = run(&["biject", "--from", "tree", "--to", "skew", "()"]);
    assert_eq!(stdout(&out), "\n");

    let out = run(&["biject", "--from", "skew", "--to", "tree", "UUDL"]);
    assert_eq!(stdout(&out), "(*(()))\n");
}

#[test]
fn biject_rejects_invalid_input() {
    // red down-step directly after an up-step
    let out = run(&["biject", "--from", "decorated", "--to", "tree", "UL"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["biject", "--from", "tree", "--to", "skew", "((*())"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes() {
    let out = run(&["verify", "--order", "16"]);
    let text = stdout(&out);
    assert!(out.status.success(), "verify failed:\n{text}");
    assert!(text.lines().all(|l| l.starts_with("PASS")));
    assert!(text.contains("identity: delta * q = v^2"));
}

#[test]
fn table_csv() {
    let out = run(&["table", "--max-n", "4", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "nodes,deepest_nodes,trees,ratio");
    assert_eq!(lines.last().unwrap(), &"4,14,10,1.400000");

    let out = run(&["table", "--max-n", "1", "--format", "csv"]);
    assert_eq!(stdout(&out).lines().nth(1).unwrap(), "1,1,1,1.000000");
}

#[test]
fn table_csv_trees_column_is_a002212() {
    let out = run(&["table", "--max-n", "8", "--format", "csv"]);
    let text = stdout(&out);
    let trees: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(trees, ["1", "1", "3", "10", "36", "137", "543", "2219"]);
}

#[test]
fn table_csv_roundtrips() {
    // recomputing the ratio from the integer columns reproduces the
    // rendered decimal
    let out = run(&["table", "--max-n", "12", "--format", "csv"]);
    for line in stdout(&out).lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let deepest: f64 = fields[1].parse().unwrap();
        let trees: f64 = fields[2].parse().unwrap();
        let ratio: f64 = fields[3].parse().unwrap();
        assert!((deepest / trees - ratio).abs() < 1e-6, "line: {line}");
    }
}

#[test]
fn table_json_exact_integers() {
    let out = run(&["table", "--max-n", "4", "--format", "json"]);
    let text = stdout(&out);
    assert!(text.contains(
        "{\"n\": 4, \"deepest_total\": 14, \"trees\": 10, \"ratio_num\": 7, \"ratio_den\": 5}"
    ));
    assert!(!text.contains('.'), "json must carry integers only");
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join("deepnodes_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let out = run(&[
        "table",
        "--max-n",
        "2",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("nodes,deepest_nodes,trees,ratio"));

    let out = run(&[
        "table",
        "--max-n",
        "2",
        "--output",
        "/nonexistent-dir/table.csv",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invocations_are_deterministic() {
    let a = run(&["series", "--gf", "G", "--order", "8"]);
    let b = run(&["series", "--gf", "G", "--order", "8"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["trees", "--size", "6", "--list"]);
    let b = run(&["trees", "--size", "6", "--list"]);
    assert_eq!(a.stdout, b.stdout);
}
