//! End-to-end tests against the compiled binary: exact output bytes,
//! exit codes, and determinism.

use std::process::{Command, Output};

use cotangent::series::SeriesJson;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cotangent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn series_cone_json_is_byte_exact() {
    let out = run(&["series", "cone", "--d", "4", "--order", "4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "{\"kind\":\"uni\",\"terms\":[{\"deg\":1,\"c\":4},{\"deg\":2,\"c\":3},\
         {\"deg\":3,\"c\":3},{\"deg\":4,\"c\":9}]}\n"
    );
}

#[test]
fn dim_t_multigraded_table_value() {
    let out = run(&[
        "dim",
        "t",
        "--target",
        "cone-multigraded",
        "--d",
        "5",
        "--R",
        "5,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn missing_tau_is_a_usage_error() {
    let out = run(&["series", "partition", "--d", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("tau"), "stderr: {err}");
}

#[test]
fn verify_sweep_passes_and_reports_per_degree() {
    let out = run(&["verify", "--d", "3", "--max-height", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS R=[1,1]"), "output: {text}");
    assert!(text.contains("0 failures"), "output: {text}");
    assert!(!text.contains("FAIL"), "output: {text}");
}

#[test]
fn json_output_is_deterministic_and_parses_back() {
    let args = [
        "series",
        "cone-multigraded",
        "--d",
        "5",
        "--height-cut",
        "3",
        "--json",
    ];
    let first = stdout(&run(&args));
    let second = stdout(&run(&args));
    assert_eq!(first, second);
    let parsed = SeriesJson::parse(first.trim_end()).unwrap();
    assert_eq!(parsed.to_canonical_string(), first.trim_end());
    parsed.to_multi().unwrap();
}

#[test]
fn bad_parameters_exit_with_usage_code() {
    assert_eq!(run(&["series", "cone", "--d", "2"]).status.code(), Some(2));
    assert_eq!(
        run(&[
            "dim",
            "t",
            "--target",
            "cone-multigraded",
            "--d",
            "4",
            "--R",
            "nonsense"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&["series", "fatpoint", "--m", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn help_exits_cleanly() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("series"));
}
