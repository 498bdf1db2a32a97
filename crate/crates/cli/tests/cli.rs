use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hodge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodge")).args(args).env_remove("HODGE_OUT_DIR").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = hodge(args);
    assert!(out.status.success(), "hodge {args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hodge-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

fn re_parts(series: &Value) -> Vec<String> {
    series["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t.as_array().unwrap().first().map_or("0/1".to_string(), |c| c["re"].as_str().unwrap().to_string()))
        .collect()
}

#[test]
fn single_row_at_weight_one() {
    let out = hodge(&["hurwitz", "--max-weight", "1", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "g,mu,r,H,method\n0,1,0,1/1,burnside\n");
}

#[test]
fn zero_weight_is_a_usage_error() {
    assert_eq!(hodge(&["hurwitz", "--max-weight", "0"]).status.code(), Some(2));
    assert_eq!(hodge(&["verify", "--max-genus", "0"]).status.code(), Some(2));
}

#[test]
fn unknown_target_is_a_usage_error() {
    assert_eq!(hodge(&["series", "--target", "Psi"]).status.code(), Some(2));
    // V needs a partition
    assert_eq!(hodge(&["series", "--target", "V"]).status.code(), Some(2));
    assert_eq!(hodge(&["series", "--target", "V", "--partition", "1.2"]).status.code(), Some(2));
}

#[test]
fn triple_agreement_at_weight_three() {
    let v = json(&["hurwitz", "--max-weight", "3", "--max-genus", "1", "--method", "all"]);
    let rows: Vec<&Value> =
        v["entries"].as_array().unwrap().iter().filter(|e| e["g"] == 0 && e["mu"] == serde_json::json!([3])).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|e| e["H"] == "1/1"));
    assert_eq!(v["crossCheck"]["disagreements"], serde_json::json!([]));
}

#[test]
fn csv_cross_check_section() {
    let out = hodge(&["hurwitz", "--max-weight", "2", "--max-genus", "1", "--method", "all", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("g,mu,r,H,method\n"));
    assert!(text.ends_with("\ng,mu,burnside,oracle,cutjoin\n"));
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "--suite", "bernoulli", "--max-genus", "10"][..],
        &["verify", "--suite", "mumford", "--max-genus", "6"],
        &["verify", "--suite", "mv-cutjoin", "--max-weight", "6"],
    ] {
        let v = json(args);
        assert_eq!(v["summary"]["failed"], 0);
        assert!(v["reports"].as_array().unwrap().iter().all(|r| r["pass"] == true));
    }
}

#[test]
fn series_examples() {
    let v = json(&["series", "--target", "V", "--partition", "1", "--order", "4"]);
    assert_eq!(v["series"]["minExp"], -1);
    assert_eq!(re_parts(&v["series"]), ["1/1", "0/1", "1/24", "0/1", "7/5760"]);

    let v = json(&["series", "--target", "Phi", "--max-weight", "2", "--order", "5"]);
    assert_eq!(v["series"]["2"]["minExp"], 1);
    assert_eq!(re_parts(&v["series"]["2"]), ["1/2", "0/1", "1/12", "0/1", "1/240"]);

    let v = json(&["series", "--target", "limit-lambda-g", "--partition", "1", "--order", "4"]);
    assert_eq!(v["series"]["minExp"], 0);
    assert_eq!(re_parts(&v["series"]), ["1/1", "0/1", "1/24", "0/1", "7/5760"]);
}

#[test]
fn out_flag_and_env_directory() {
    let dir = scratch("out");
    let file = dir.join("nested/table.csv");
    let out = hodge(&["hurwitz", "--max-weight", "2", "--format", "csv", "--out", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert!(std::fs::read_to_string(&file).unwrap().starts_with("g,mu,r,H,method\n"));

    let out = Command::new(env!("CARGO_BIN_EXE_hodge"))
        .args(["verify", "--suite", "bernoulli"])
        .env("HODGE_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(dir.join("verify-bernoulli.json")).unwrap()).unwrap();
    assert_eq!(v["suite"], "bernoulli");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn repeated_runs_are_byte_identical() {
    let a = hodge(&["hurwitz", "--max-weight", "4", "--max-genus", "2", "--method", "all"]);
    let b = hodge(&["hurwitz", "--max-weight", "4", "--max-genus", "2", "--method", "all"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn rationals_are_reduced_num_den() {
    let v = json(&["series", "--target", "R", "--max-weight", "3", "--order", "3"]);
    let mut seen = 0;
    let mut stack = vec![&v];
    while let Some(x) = stack.pop() {
        match x {
            Value::Object(m) => {
                for key in ["re", "im"] {
                    if let Some(s) = m.get(key).and_then(Value::as_str) {
                        let (n, d) = s.split_once('/').expect("num/den");
                        let (n, d): (i128, i128) = (n.parse().unwrap(), d.parse().unwrap());
                        assert!(d > 0 && gcd(n.abs(), d) == 1, "{s}");
                        seen += 1;
                    }
                }
                stack.extend(m.values());
            }
            Value::Array(a) => stack.extend(a),
            _ => {}
        }
    }
    assert!(seen > 0);
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
