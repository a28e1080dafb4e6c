use std::process::Command;

use rug::Float;
use serde_json::Value;
use stieltjes::cli::run;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("stieltjes").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn parse(s: &str) -> Float {
    Float::with_val(256, Float::parse(s).unwrap())
}

fn value_line(out: &str) -> &str {
    out.lines().next().unwrap().rsplit(" = ").next().unwrap()
}

#[test]
fn compute_gamma1_hasse_20_digits() {
    let (code, out, _) = cli(&["compute", "gamma_n", "--n", "1", "--u", "1", "--method", "hasse", "--digits", "20"]);
    assert_eq!(code, 0);
    let v = value_line(&out);
    assert_eq!(v, "-7.2815845483676724861e-2");
    assert!(out.contains("route: hasse"));
    assert!(out.lines().nth(2).unwrap().starts_with("series:"));
}

#[test]
fn compute_digamma_half() {
    let (code, out, _) = cli(&["compute", "digamma", "--u", "0.5"]);
    assert_eq!(code, 0);
    let v = parse(value_line(&out));
    // −γ − 2 log 2
    let p = 256;
    let g = Float::with_val(p, rug::float::Constant::Euler);
    let l2 = Float::with_val(p, rug::float::Constant::Log2);
    let want = -g - l2 * 2u32;
    assert!(Float::with_val(p, &v - &want).abs() < 1e-29, "{v}");
}

#[test]
fn printed_values_round_trip_to_target_digits() {
    for digits in ["12", "30", "45"] {
        let (_, json, _) = cli(&["compute", "hurwitz_zeta", "--s", "3", "--u", "0.5", "--digits", digits, "--format", "json"]);
        let v: Value = serde_json::from_str(&json).unwrap();
        let s = v["value"].as_str().unwrap();
        let d: i32 = digits.parse().unwrap();
        let mantissa = s.split('e').next().unwrap().trim_start_matches('-').replace('.', "");
        assert_eq!(mantissa.len(), d as usize);
        // ζ(3,½) = 7ζ(3)
        let z3 = Float::with_val(256, Float::zeta_u(3)) * 7u32;
        let rel = Float::with_val(256, parse(s) - &z3).abs() / &z3;
        assert!(rel < Float::with_val(64, 10f64.powi(1 - d)), "{s}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cli(&["compute", "gamma_n", "--n", "0", "--u", "-1"]).0, 2);
    assert_eq!(cli(&["compute", "gamma_n", "--method", "bogus"]).0, 2);
    assert_eq!(cli(&["compute", "hurwitz_zeta", "--u", "1"]).0, 2);
    assert_eq!(cli(&["compute", "hurwitz_zeta", "--s", "1"]).0, 2);
    assert_eq!(cli(&["compute", "digamma", "--digits", "5"]).0, 2);
    assert_eq!(cli(&["compute", "digamma", "--digits", "201"]).0, 2);
    assert_eq!(cli(&["table", "--first", "26"]).0, 2);
    assert_eq!(cli(&["table", "--first", "0"]).0, 2);
    let (code, _, err) = cli(&["verify", "--tag", "nonsense"]);
    assert_eq!(code, 2);
    assert!(err.contains("nonsense"));
    assert_eq!(cli(&["verify"]).0, 2);
    assert_eq!(cli(&["verify", "--id", "I-6.21", "--all"]).0, 2);
    assert_eq!(cli(&["frobnicate"]).0, 2);
    assert_eq!(cli(&["--help"]).0, 0);
}

#[test]
fn table_first_rows() {
    let (code, out, _) = cli(&["table", "--first", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "n,value,routes_agreeing_digits");
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("0,5.772156649"));

    let (code, out, _) = cli(&["table", "--first", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows[2]["value"].as_str().unwrap().starts_with("-9.69036"));
    for r in rows {
        assert!(r["routes_agreeing_digits"].as_u64().unwrap() >= 30);
    }
}

#[test]
fn verify_json_schema() {
    let (code, out, _) = cli(&["verify", "--id", "I-6.21", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["context"]["digits"], 30);
    let e = &v["entries"][0];
    for key in ["id", "paper_anchor", "lhs", "rhs", "abs_error", "tolerance"] {
        assert!(e[key].is_string(), "{key}");
    }
    assert_eq!(e["pass"], true);
    assert!(e["elapsed_ms"].is_u64());
    for key in ["total", "passed", "failed"] {
        assert!(v["summary"][key].is_u64(), "{key}");
    }
}

#[test]
fn verify_failure_exits_1_and_reports_both_sides() {
    let (code, out, _) = cli(&["verify", "--id", "I-9.1", "--digits", "15"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("FAIL I-9.1"));
    assert!(out.contains("lhs = ") && out.contains("rhs = ") && out.contains("note: "));

    let (code, out, _) = cli(&["verify", "--id", "I-3.10", "--digits", "15", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 11);
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir().join(format!("stieltjes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.csv");
    let (code, out, _) = cli(&["table", "--first", "2", "--digits", "10", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_stieltjes");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code().unwrap();
    assert_eq!(status(&["compute", "log_gamma", "--u", "0.25", "--digits", "10"]), 0);
    assert_eq!(status(&["compute", "gamma_n", "--u", "-1"]), 2);
    assert_eq!(status(&["verify", "--id", "I-9.5b", "--digits", "10"]), 1);
}
