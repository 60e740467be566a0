//! End-to-end tests of the `fano` binary: output formats, exit codes, JSON
//! round-tripping, and byte-stability of the tables.

use std::io::Write as _;
use std::process::{Command, Output};

fn fano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = fano(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    fano(args).status.code().expect("exit code")
}

#[test]
fn report_json_for_quintic_lines() {
    let text = stdout(&["report", "--n", "4", "--d", "5", "--r", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["input"]["n"], 4);
    assert_eq!(v["input"]["d"][0], 5);
    assert_eq!(v["invariants"]["delta"], "0");
    assert_eq!(v["invariants"]["classification"], "NonemptySmoothOfExpectedDim");
    assert_eq!(v["degree"], "2875");
    assert_eq!(v["class"][0]["lambda"][0], 3);
    assert_eq!(v["class"][0]["coeff"], "2875");
}

#[test]
fn report_human_mentions_key_facts() {
    let text = stdout(&["report", "--n", "4", "--d", "5", "--r", "1"]);
    assert!(text.contains("degree under the Plucker embedding: 2875"));
    assert!(text.contains("2875 s[3,3]"));
    assert!(text.contains("delta (expected dimension)  0"));
}

#[test]
fn report_quadric_two_components() {
    let text = stdout(&["report", "--n", "5", "--d", "2", "--r", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["invariants"]["classification"], "QuadricTwoComponents");
}

#[test]
fn report_negative_delta_omits_degree_with_note() {
    let text = stdout(&["report", "--n", "3", "--d", "4", "--r", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["invariants"]["classification"], "GenericallyEmpty");
    assert!(v["degree"].is_null());
    let notes = v["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("delta < 0")));

    let human = stdout(&["report", "--n", "3", "--d", "4", "--r", "1"]);
    assert!(human.contains("not computed (delta < 0)"));
}

#[test]
fn class_lines_match_published_forms() {
    assert_eq!(
        stdout(&["class", "--d", "3", "--r", "1", "--abstract"]),
        "18 s[3,1] + 27 s[2,2]\n"
    );
    assert_eq!(stdout(&["class", "--n", "3", "--d", "2", "--r", "1"]), "4 s[2,1]\n");
    assert_eq!(
        stdout(&["class", "--d", "2,2", "--r", "2", "--abstract"]),
        "64 s[6,4,2] + 64 s[6,3,3] + 64 s[5,5,2] + 128 s[5,4,3] + 64 s[4,4,4]\n"
    );
}

#[test]
fn class_of_vanishing_case_prints_zero() {
    // Planes on a quadric below the middle dimension: zero class.
    assert_eq!(stdout(&["class", "--n", "4", "--d", "2", "--r", "2"]), "0\n");
}

#[test]
fn table_lines_is_byte_stable() {
    let expected = concat!(
        " d   n  dim F        deg F\n",
        " 3   3      0           27\n",
        " 3   4      2           45\n",
        " 3   5      4          108\n",
        " 4   4      1          320\n",
        " 4   5      3          736\n",
        " 4   6      5         1984\n",
        " 4   7      7         5824\n",
        " 5   4      0         2875\n",
        " 5   5      2         6125\n",
        " 5   6      4        16100\n",
        " 5   7      6        46625\n",
        " 6   5      1        60480\n",
        " 6   6      3       154224\n",
        " 7   5      0       698005\n",
        " 7   6      2      1707797\n",
        " 9   6      0    305093061\n",
    );
    assert_eq!(stdout(&["table", "--lines"]), expected);
}

#[test]
fn table_planes_is_byte_stable() {
    let expected = concat!(
        " r   d   n  dim F         deg F\n",
        " 2   3   6      2          2835\n",
        " 2   3   7      5         24219\n",
        " 2   3   8      8        274590\n",
        " 2   4   7      0       3297280\n",
        " 2   5   9      0  420760566875\n",
        " 3   3   8      0        321489\n",
        " 3   3   9      4      10344510\n",
        " 4   3  11      0    1812646836\n",
    );
    assert_eq!(stdout(&["table", "--planes"]), expected);
}

#[test]
fn table_output_independent_of_worker_cap() {
    let default = stdout(&["table", "--lines"]);
    let single = Command::new(env!("CARGO_BIN_EXE_fano"))
        .args(["table", "--lines"])
        .env("FANO_WORKERS", "1")
        .output()
        .unwrap();
    assert_eq!(default.as_bytes(), &single.stdout[..]);

    let many = Command::new(env!("CARGO_BIN_EXE_fano"))
        .args(["table", "--lines"])
        .env("FANO_WORKERS", "13")
        .output()
        .unwrap();
    assert_eq!(default.as_bytes(), &many.stdout[..]);
}

#[test]
fn unirat_reports_bound_and_override() {
    let text = stdout(&["unirat", "--d", "3", "--r", "1"]);
    assert!(text.contains("n >= 859"));
    assert!(text.contains("r(D)                    19"));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# better base value").unwrap();
    writeln!(file, "d = 3,3,3,3  r = 13").unwrap();
    let path = file.path().to_str().unwrap().to_string();

    let text = stdout(&["unirat", "--d", "3", "--r", "1", "--overrides", &path]);
    assert!(text.contains("n >= 433"));
    assert!(text.contains("override used: r(3,3,3,3) = 13"));

    let json = stdout(&["unirat", "--d", "3", "--r", "1", "--overrides", &path, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["bound"], "433");
    assert_eq!(v["r_D"], "13");
    assert_eq!(v["overrides_used"][0]["r"], "13");
}

#[test]
fn json_round_trips_byte_identically() {
    for args in [
        vec!["report", "--n", "4", "--d", "5", "--r", "1", "--json"],
        vec!["report", "--n", "5", "--d", "2,2", "--r", "1", "--json"],
        vec!["class", "--d", "2,2", "--r", "2", "--abstract", "--json"],
        vec!["table", "--lines", "--json"],
        vec!["unirat", "--d", "2,2", "--r", "2", "--json"],
    ] {
        let text = stdout(&args);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let rendered = serde_json::to_string_pretty(&value).unwrap();
        assert_eq!(text.trim_end(), rendered, "args = {args:?}");
    }
}

#[test]
fn exit_codes_distinguish_parse_and_domain_errors() {
    // 2: bad token.
    assert_eq!(exit_code(&["report", "--n", "4", "--d", "3,x", "--r", "1"]), 2);
    // 2: missing required ambient choice.
    assert_eq!(exit_code(&["class", "--d", "3", "--r", "1"]), 2);
    // 3: well-formed but r >= n.
    assert_eq!(exit_code(&["report", "--n", "3", "--d", "5", "--r", "3"]), 3);
    // 3: zero degree entry.
    assert_eq!(exit_code(&["report", "--n", "4", "--d", "0", "--r", "1"]), 3);
    // 3: unirationality with a degree-1 entry.
    assert_eq!(exit_code(&["unirat", "--d", "1,3", "--r", "1"]), 3);
    // 0: fine.
    assert_eq!(exit_code(&["report", "--n", "4", "--d", "3", "--r", "1"]), 0);
}

#[test]
fn malformed_overrides_file_is_a_parse_error() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "d=3,3 oops").unwrap();
    let path = file.path().to_str().unwrap().to_string();
    let out = fano(&["unirat", "--d", "3", "--r", "1", "--overrides", &path]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 1"), "stderr: {stderr}");

    let out = fano(&["unirat", "--d", "3", "--r", "1", "--overrides", "/no/such/file"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn errors_go_to_stderr_not_stdout() {
    let out = fano(&["report", "--n", "3", "--d", "5", "--r", "3"]);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}
