//! End-to-end tests of the binary: stdout payloads and exit codes.

use std::process::{Command, Output};

fn hookcomb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookcomb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn count_ssyt_prints_exact_value() {
    let out = hookcomb(&["count", "ssyt", "--shape", "2,1", "--letters", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\n");
}

#[test]
fn count_ssyt_zero_letters() {
    let out = hookcomb(&["count", "ssyt", "--shape", "1", "--letters", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn count_syt_with_oracle() {
    let out = hookcomb(&["count", "syt", "--shape", "2,2", "--oracle"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\noracle: 2 (agree)\n");
}

#[test]
fn count_ballots_multi_and_single() {
    let out = hookcomb(&[
        "count", "ballots", "--multi", "--n", "2,1", "--steps", "2", "--oracle",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("2\n"));

    let out = hookcomb(&[
        "count", "ballots", "--single", "--n", "2,1", "--steps", "3",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2\n");

    // Non-monotone target counts zero but is accepted as input.
    let out = hookcomb(&[
        "count", "ballots", "--multi", "--n", "1,3", "--steps", "3", "--oracle",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("0\n"));
}

#[test]
fn count_json_uses_decimal_strings() {
    let out = hookcomb(&[
        "count", "ssyt", "--shape", "2,1", "--letters", "2", "--format", "json", "--oracle",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["value"], "2");
    assert_eq!(value["letters"], "2");
    assert_eq!(value["oracle"]["value"], "2");
    assert_eq!(value["oracle"]["agrees"], true);
}

#[test]
fn verify_commands_pass() {
    for args in [
        vec!["verify", "lemma2", "--n-max", "3"],
        vec!["verify", "theorem1", "--max-cells", "4", "--max-steps", "3"],
        vec!["verify", "theorem2", "--max-cells", "4"],
        vec!["verify", "hooks", "--max-cells", "6"],
        vec!["verify", "hlf-identity", "--n-max", "2"],
    ] {
        let out = hookcomb(&args);
        assert!(out.status.success(), "args {args:?}");
        assert!(stdout(&out).contains("PASS"), "args {args:?}");
    }
}

#[test]
fn verify_json_reports() {
    let out = hookcomb(&["verify", "lemma2", "--n-max", "2", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["check"], "lemma2");
    assert_eq!(value["pass"], true);
    assert_eq!(value["symbolic"][0]["n"], "0");
    assert_eq!(value["symbolic"][2]["lhs_terms"], "18");

    let out = hookcomb(&["verify", "theorem2", "--max-cells", "3", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["pass"], true);
    assert_eq!(value["reports"][0]["p_value"]["den"], "1");
}

#[test]
fn parse_errors_exit_two() {
    let out = hookcomb(&["count", "ssyt", "--shape", "1,2", "--letters", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = hookcomb(&["count", "ballots", "--multi", "--single", "--n", "1", "--steps", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = hookcomb(&["count", "ssyt", "--shape", "2,1"]);
    assert_eq!(out.status.code(), Some(2), "missing --letters is a usage error");

    let out = hookcomb(&["verify", "hlf-identity", "--n-max", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_three() {
    let out = hookcomb(&[
        "count", "ssyt", "--shape", "4,3,2", "--letters", "9", "--oracle", "--budget", "5",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn table_csv_and_header_only() {
    let out = hookcomb(&[
        "table", "--max-cells", "4", "--max-letters", "3", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("shape,letters,ssyt,syt"));
    assert!(text.lines().any(|l| l == "\"2,1\",2,2,2"));

    let out = hookcomb(&["table", "--shapes", "", "--max-letters", "3", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "shape,letters,ssyt,syt\n");
}

#[test]
fn table_json_is_byte_identical_across_runs() {
    let args = ["table", "--max-cells", "3", "--max-letters", "2", "--format", "json"];
    let first = hookcomb(&args);
    let second = hookcomb(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let value: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert!(value.as_array().unwrap().iter().all(|row| row["ssyt"].is_string()));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("hookcomb-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let out = hookcomb(&[
        "table", "--shapes", "2,1", "--max-letters", "2", "--format", "csv",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("shape,letters,ssyt,syt"));
    std::fs::remove_file(&path).ok();
}
