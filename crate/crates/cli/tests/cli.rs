use std::process::{Command, Output};

use serde_json::Value;

fn ffsums(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ffsums"));
    cmd.args(args).env_remove("FFSUMS_ENUM_BOUND");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn integer(v: &Value) -> i64 {
    // integers have a single nonzero power-basis coefficient, the constant term
    let coeffs = v["coeffs"].as_array().unwrap();
    assert!(coeffs[1..].iter().all(|c| c[0] == "0"));
    assert_eq!(coeffs[0][1], "1");
    coeffs[0][0].as_str().unwrap().parse().unwrap()
}

#[test]
fn kloosterman_values_over_gf3() {
    let out = ffsums(&["kloosterman", "--p", "3", "--e", "1", "--a", "1", "--b", "1", "--smax", "3"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let values: Vec<i64> = r["results"]["values"].as_array().unwrap().iter().map(integer).collect();
    assert_eq!(values, vec![-1, 5, 8]);
    assert_eq!(r["results"]["values"][1]["order"], 3);
    assert_eq!(r["field"], serde_json::json!({"p": 3, "e": 1, "modulus": [0, 1]}));
    assert_eq!(r["passed"], true);
    assert!(r["verdicts"].as_array().unwrap().iter().all(|v| v["passed"] == true));
}

#[test]
fn dickson_text_form() {
    let out = ffsums(&["dickson", "--k", "1", "--n", "5"], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"]["polynomial"], "x^5 - 5a x^3 + 5a^2 x");
}

#[test]
fn autocorrelation_suite_passes() {
    let out = ffsums(&["verify", "autocorrelation", "--p", "2", "--e", "3", "--u", "2"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!(!r["verdicts"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["sum", "--p", "5"][..],
        &["sum", "--kind", "weil", "--p", "6", "--f", "0,1"],
        &["sum", "--kind", "weil", "--p", "5", "--f", "0,x"],
        &["verify", "no-such-suite"],
        &["field", "--p", "5", "--bogus"],
        &["frobnicate"],
    ] {
        let out = ffsums(args, &[]);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn computation_errors_exit_1() {
    for args in [
        &["seq", "--p", "3", "--u", "1"][..],
        &["lpoly", "--p", "5", "--u", "2", "--a", "0"],
        &["sum", "--kind", "weil", "--p", "5", "--e", "3", "--f", "0,1,0,1", "--s", "3", "--enum-bound", "100"],
    ] {
        let out = ffsums(args, &[]);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    }
}

#[test]
fn help_exits_0() {
    let out = ffsums(&["--help"], &[]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("kloosterman"));
}

#[test]
fn enumeration_bound_from_environment() {
    let args = ["sum", "--kind", "weil", "--p", "5", "--f", "0,1,0,1", "--s", "3"];
    assert_eq!(ffsums(&args, &[]).status.code(), Some(0));
    assert_eq!(ffsums(&args, &[("FFSUMS_ENUM_BOUND", "100")]).status.code(), Some(1));
    let mut with_flag = args.to_vec();
    with_flag.extend(["--enum-bound", "1000"]);
    assert_eq!(ffsums(&with_flag, &[("FFSUMS_ENUM_BOUND", "100")]).status.code(), Some(0));
    assert_eq!(ffsums(&args, &[("FFSUMS_ENUM_BOUND", "lots")]).status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs_and_workers() {
    for format in ["json", "csv", "text"] {
        let args = [
            "sum", "--kind", "inverse-monomial", "--p", "3", "--u", "2", "--a", "2", "--smax", "5", "--format", format,
        ];
        let first = ffsums(&args, &[("RAYON_NUM_THREADS", "1")]);
        assert_eq!(first.status.code(), Some(0));
        for threads in ["1", "3", "8"] {
            let again = ffsums(&args, &[("RAYON_NUM_THREADS", threads)]);
            assert_eq!(again.stdout, first.stdout, "{format} with {threads} threads");
        }
    }
}

#[test]
fn timing_is_opt_in() {
    let plain = json(&ffsums(&["field", "--p", "7"], &[]));
    assert!(plain.get("duration_secs").is_none());
    let timed = json(&ffsums(&["field", "--p", "7", "--timing"], &[]));
    assert!(timed["duration_secs"].as_f64().unwrap() >= 0.0);
}

#[test]
fn measured_only_sequences_have_empty_verdicts() {
    let out = ffsums(&["seq", "--p", "2", "--e", "4", "--u", "3"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["verdicts"], serde_json::json!([]));
    assert_eq!(r["results"]["autocorrelation"].as_array().unwrap().len(), 15);
}

#[test]
fn json_keys_are_sorted() {
    let out = ffsums(&["lpoly", "--p", "5", "--u", "2", "--a", "2"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let top: Vec<usize> = ["\"command\"", "\"field\"", "\"parameters\"", "\"passed\"", "\"results\"", "\"verdicts\""]
        .iter()
        .map(|k| text.find(k).unwrap())
        .collect();
    assert!(top.windows(2).all(|w| w[0] < w[1]));
    let r: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(r["results"]["degree"], 3);
    for v in r["verdicts"].as_array().unwrap() {
        assert!(v.get("tolerance").is_some());
    }
}

#[test]
fn csv_quotes_polynomial_lists() {
    let out = ffsums(&["sum", "--kind", "weil", "--p", "5", "--f", "0,1,0,1", "--smax", "2", "--format", "csv"], &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("section,key,value,detail,tolerance\n"));
    assert!(text.contains("parameter,f,\"0,1,0,1\",,"));
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert!(rows.iter().all(|r| r.len() == 5));
    assert!(rows.iter().any(|r| &r[0] == "result" && &r[1] == "values[0]" && &r[2] == "3 + z5^2 + z5^3"));
}
