use std::process::Command;

use banalg::cli::run;
use serde_json::Value;

struct Out {
    code: i32,
    lines: Vec<Value>,
    stderr: String,
}

impl Out {
    fn summary(&self) -> &Value {
        self.lines.last().expect("summary line")
    }
    fn results(&self) -> &[Value] {
        &self.lines[..self.lines.len() - 1]
    }
}

fn banalg(args: &[&str]) -> Out {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("banalg").chain(args.iter().copied()), &mut out, &mut err);
    let lines = String::from_utf8(out).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    Out { code, lines, stderr: String::from_utf8(err).unwrap() }
}

#[test]
fn certify_poly_thousand_trials() {
    let o = banalg(&["certify", "--flavor", "poly", "--degree", "6", "--trials", "1000", "--seed", "42"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.results().len(), 1000);
    assert!(o.results().iter().all(|r| r["ok"] == true && r["result"]["certificate"]["pass"] == true));
    let s = o.summary();
    assert_eq!((s["schema"].as_u64(), s["seed"].as_u64(), s["pass"].as_bool()), (Some(1), Some(42), Some(true)));
    assert_eq!(s["truncation_order"], 8);
}

#[test]
fn tate_analytification_is_hepi() {
    let o = banalg(&["verify-hepi", "--source", "poly", "--target", "tate:1", "--ring", "padic:2", "--order", "8"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.results()[0]["result"]["verdict"], true);
}

#[test]
fn disc_counterexample_has_ratio_four() {
    let o = banalg(&["certify", "--flavor", "disc", "--counterexample", "8"]);
    assert_eq!(o.code, 0);
    let c = &o.results()[0]["result"];
    assert_eq!(c["pass"], false);
    assert_eq!((c["input_norm"].as_str(), c["output_norm"].as_str(), c["ratio"].as_str()), (Some("2"), Some("8"), Some("4")));
}

#[test]
fn failed_check_exits_one() {
    let o = banalg(&["verify-hepi", "--source", "disc:1", "--target", "disc:1/2", "--ring", "int"]);
    assert_eq!(o.code, 1);
    assert_eq!(o.results()[0]["result"]["verdict"], false);
    assert_eq!(o.summary()["pass"], false);
    let o = banalg(&["verify-hepi", "--source", "disc:1", "--target", "disc:1/2", "--ring", "int", "--expect", "false"]);
    assert_eq!(o.code, 0);
}

#[test]
fn parse_errors_exit_two_and_name_the_token() {
    let o = banalg(&["certify", "--flavor", "bogus(1"]);
    assert_eq!(o.code, 2);
    assert!(o.lines.is_empty());
    assert!(o.stderr.contains("\"bogus\"") && o.stderr.contains("position 0"), "{}", o.stderr);

    let o = banalg(&["certify", "--flavor", "tate:1", "--series", "y - z + ?"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("position 8"), "{}", o.stderr);

    assert_eq!(banalg(&["frobnicate"]).code, 2);
    assert_eq!(banalg(&["certify", "--trials", "many"]).code, 2);
}

#[test]
fn every_subcommand_reports() {
    let cases: &[&[&str]] = &[
        &["check-strictness", "--flavor", "tate:1", "--ring", "padic:2"],
        &["localize", "--kind", "weierstrass", "--base", "tate:1", "--flavor", "tate:1", "--ring", "padic:2", "--element", "x", "--order", "5"],
        &["hh", "--algebra", "poly/(x^2)", "--model", "bar", "--cutoff", "4"],
        &["hh", "--algebra", "poly/(x^2)", "--model", "koszul", "--cutoff", "4"],
    ];
    for args in cases {
        let o = banalg(args);
        assert_eq!(o.code, 0, "{args:?}: {}", o.stderr);
        assert_eq!(o.summary()["command"], args[0]);
    }
    let bar = banalg(cases[2]);
    let ci = banalg(cases[3]);
    assert_eq!(bar.results()[0]["result"]["ranks"], serde_json::json!([2, 1, 1, 1, 1]));
    assert_eq!(bar.results()[0]["result"]["ranks"], ci.results()[0]["result"]["report"]["ranks"]);
}

#[test]
fn same_arguments_same_report() {
    let args = ["certify", "--flavor", "formal", "--trials", "50", "--seed", "3"];
    let strip = |o: Out| banalg::report::strip_timing(&o.lines.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("\n"));
    assert_eq!(strip(banalg(&args)), strip(banalg(&args)));
}

#[test]
fn order_env_overrides_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_banalg"))
        .args(["verify-hepi", "--source", "poly", "--target", "formal"])
        .env("BANALG_ORDER", "5")
        .output()
        .unwrap();
    assert!(out.status.success());
    let last: Value = serde_json::from_str(String::from_utf8(out.stdout).unwrap().lines().last().unwrap()).unwrap();
    assert_eq!(last["truncation_order"], 5);
}
