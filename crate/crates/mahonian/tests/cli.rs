//! End-to-end tests of the command line binary: worked examples, output
//! formats, the JSON round-trip contract, and the exit code contract
//! (0 success, 1 identity failure, 2 usage or parse error).

use std::process::Command;

use mahonian::poly::MultiPoly;

fn mahonian(args: &[&str]) -> (Option<i32>, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mahonian"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code(),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn expect_success(args: &[&str]) -> String {
    let (code, stdout, stderr) = mahonian(args);
    assert_eq!(code, Some(0), "args {args:?} failed: {stderr}");
    stdout
}

fn expect_usage_error(args: &[&str]) -> String {
    let (code, _, stderr) = mahonian(args);
    assert_eq!(code, Some(2), "args {args:?} should exit 2");
    stderr
}

#[test]
fn stats_panel_shows_the_worked_values() {
    let out = expect_success(&["stats", "2111"]);
    for line in ["inv = 3", "maj = 1", "den = 1", "mak = 1", "mad = 3"] {
        assert!(out.contains(line), "missing `{line}` in:\n{out}");
    }
}

#[test]
fn stats_panel_shows_weak_minima_multiset() {
    let out = expect_success(&["stats", "3212315354646547577"]);
    assert!(out.contains("Rlwmin = {1,1,3,4,4,4,5,7,7}"), "{out}");
}

#[test]
fn stats_of_a_single_letter_are_all_zero() {
    let out = expect_success(&["stats", "1"]);
    for line in ["inv = 0", "maj = 0", "den = 0", "mak = 0", "mad = 0", "stat = 0"] {
        assert!(out.contains(line), "missing `{line}` in:\n{out}");
    }
}

#[test]
fn stats_accepts_comma_literals_beyond_one_digit() {
    let out = expect_success(&["stats", "10,2,10,1"]);
    assert!(out.contains("word = 10,2,10,1"), "{out}");
    assert!(out.contains("length = 4"), "{out}");
}

#[test]
fn stats_json_holds_the_same_values() {
    let out = expect_success(&["stats", "2111", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid JSON");
    assert_eq!(v["inv"], 3);
    assert_eq!(v["maj"], 1);
    assert_eq!(v["den"], 1);
    assert_eq!(v["mak"], 1);
    assert_eq!(v["Rlwmin"], serde_json::json!([1, 1, 1]));
}

#[test]
fn dist_prints_the_known_polynomials() {
    let cases = [
        (("words:alpha=3,1", "inv:q"), "1 + q + q^2 + q^3"),
        (("deseq:n=3:S=1", "inv:q"), "q + q^2"),
        (("alt:n=1", "inv:q"), "1"),
    ];
    for ((family, stats), expected) in cases {
        let out = expect_success(&["dist", "--family", family, "--stats", stats]);
        assert_eq!(out.trim(), expected);
    }
}

#[test]
fn dist_of_an_empty_family_is_zero() {
    let out = expect_success(&[
        "dist",
        "--family",
        "words:alpha=3,1:rlwmin=2,2",
        "--stats",
        "inv:q",
    ]);
    assert_eq!(out.trim(), "0");
}

#[test]
fn dist_loops_over_the_r_list() {
    let out = expect_success(&[
        "dist",
        "--family",
        "words:alpha=2,1",
        "--stats",
        "rmaj:q",
        "--r",
        "1,2",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("r=1: "), "{out}");
    assert!(lines[1].starts_with("r=2: "), "{out}");
}

#[test]
fn dist_json_round_trips_byte_identical() {
    let out = expect_success(&[
        "dist",
        "--family",
        "words:alpha=2,2",
        "--stats",
        "des:t,maj:q",
        "--format",
        "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(out.trim()).expect("valid JSON");
    let poly = MultiPoly::from_json(&value).expect("polynomial JSON");
    assert_eq!(poly.to_json().to_string(), out.trim(), "round trip changed bytes");
}

#[test]
fn map_reproduces_the_worked_examples() {
    let out = expect_success(&["map", "--bijection", "foata_r", "--r", "1", "1121"]);
    assert_eq!(out.lines().next(), Some("2111"));

    let out = expect_success(&["map", "--bijection", "phi", "16327458"]);
    assert_eq!(out.lines().next(), Some("13762458"));

    let out = expect_success(&["map", "--bijection", "theta", "--S", "3,5", "245136789"]);
    assert_eq!(out.lines().next(), Some("212113333"));
}

#[test]
fn map_rejects_domain_violations() {
    let err = expect_usage_error(&["map", "--bijection", "phi_qi", "212"]);
    assert!(err.contains("Stirling"), "{err}");
    expect_usage_error(&["map", "--bijection", "theta", "245136789"]);
    expect_usage_error(&["map", "--bijection", "nonesuch", "1"]);
}

#[test]
fn check_single_identity_passes() {
    let out = expect_success(&["check", "mahonian-words", "--nmax", "4"]);
    assert!(out.starts_with("mahonian-words: PASS"), "{out}");
}

#[test]
fn check_all_passes_at_the_default_bound() {
    let out = expect_success(&["check", "all", "--nmax", "4", "--jobs", "2"]);
    let lines: Vec<&str> = out.lines().filter(|l| !l.starts_with(' ')).collect();
    assert_eq!(lines.len(), 67, "one line per identity:\n{out}");
    for line in &lines {
        assert!(line.contains(": PASS"), "unexpected status: {line}");
    }
}

#[test]
fn check_json_reports_parse() {
    let out = expect_success(&[
        "check",
        "fixed-rlwmin-mahonian",
        "--nmax",
        "3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).expect("valid JSON");
    assert_eq!(v["identity"], "fixed-rlwmin-mahonian");
    assert_eq!(v["status"], "pass");
    assert!(v["witness"].is_null());
    assert!(v["grid"].as_array().is_some_and(|g| !g.is_empty()));
}

#[test]
fn check_unknown_identity_exits_two() {
    let err = expect_usage_error(&["check", "BOGUS"]);
    assert!(err.contains("unknown identity"), "{err}");
}

#[test]
fn counterexample_finds_and_reports_differences() {
    let out = expect_success(&[
        "counterexample",
        "--stats",
        "stat,inv",
        "--domain",
        "rlwmin-classes",
        "--nmax",
        "4",
    ]);
    assert!(out.contains("differ on"), "{out}");

    let out = expect_success(&[
        "counterexample",
        "--stats",
        "inv,inv",
        "--domain",
        "words",
        "--nmax",
        "3",
    ]);
    assert!(out.contains("no difference"), "{out}");
}

#[test]
fn euler_prints_the_boustrophedon_numbers() {
    let out = expect_success(&["euler", "--nmax", "5"]);
    assert_eq!(
        out.lines().collect::<Vec<_>>(),
        vec!["E_0 = 1", "E_1 = 1", "E_2 = 1", "E_3 = 2", "E_4 = 5", "E_5 = 16"]
    );
}

#[test]
fn bad_flags_and_literals_exit_two() {
    expect_usage_error(&["stats", "1a2"]);
    expect_usage_error(&["dist", "--family", "nonesuch:n=1", "--stats", "inv:q"]);
    expect_usage_error(&["dist", "--family", "alt:n=1", "--stats", "inv"]);
    expect_usage_error(&["dist", "--family", "alt:n=1", "--stats", "inv:q", "--r", "0"]);
    expect_usage_error(&["counterexample", "--stats", "inv", "--domain", "words"]);
    expect_usage_error(&["frobnicate"]);
    expect_usage_error(&[]);
}
