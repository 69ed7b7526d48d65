use std::process::{Command, Output};

use serde_json::Value;
use sl2vir::qseries::series_from_json;
use sl2vir::rat::{int, parse_rat};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl2vir")).args(args).output().expect("binary runs")
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn scratch(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("sl2vir-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn ising_vacuum_text() {
    let o = run(&["char", "--family", "vir-minimal", "--q", "4", "--p", "3", "--r", "1", "--s", "1", "--order", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    let coeffs: Vec<&str> = text.lines().skip(1).map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(coeffs, ["1/1", "1/1", "1/1", "2/1", "2/1", "3/1", "3/1", "5/1", "5/1"]);
    assert!(text.contains("q^2/1\t1/1"));
}

#[test]
fn char_json_round_trips() {
    let o = run(&[
        "char",
        "--family",
        "aff-adm-hw",
        "--q",
        "2",
        "--p",
        "5",
        "--r",
        "0",
        "--s",
        "1",
        "--sub",
        "plus",
        "--order",
        "8",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["schema"], 1);
    let s = series_from_json(&v["series"]).unwrap();
    assert_eq!(s.valuation(), Some(int(-1)));
    let pairs = v["coefficients"].as_array().unwrap();
    assert_eq!(pairs.len(), s.len());
    for pair in pairs {
        let e = parse_rat(pair[0].as_str().unwrap()).unwrap();
        let c = parse_rat(pair[1].as_str().unwrap()).unwrap();
        assert_eq!(s.coeff(&e), c);
    }
}

#[test]
fn jacobi_json_has_window() {
    let o = run(&["char", "--family", "weyl", "--p", "2", "--r", "1", "--order", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["wdir"], "BoundedAbove");
    assert!(!v["terms"].as_array().unwrap().is_empty());
}

#[test]
fn fusion_rejects_multiples_of_three() {
    let o = run(&["fusion", "--q", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("divisible by 3"));
    let ok = run(&["fusion", "--q", "5", "--json"]);
    assert_eq!(ok.status.code(), Some(0));
    let v = json_of(&ok);
    assert_eq!(v["report"]["isomorphic"], true);
    assert_eq!(v["ribbon_zeros"], serde_json::json!([0, 3]));
}

#[test]
fn usage_errors_name_the_flag() {
    let o = run(&["char", "--family", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--family"));
    let o = run(&["char", "--family", "vir-log", "--order", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--p"));
    let o = run(&["char", "--family", "vir-minimal", "--q", "4", "--p", "3", "--r", "1", "--s", "1", "--sub", "plus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_suite_json() {
    let o = run(&["verify", "--suite", "fusion", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["schema"], 1);
    let reps = v["reports"].as_array().unwrap();
    assert_eq!(reps.len(), 7);
    assert!(reps.iter().all(|r| r["passed"] == true && r["first_mismatch"].is_null()));
}

#[test]
fn verify_grid_file_and_mutation() {
    let grid = scratch(
        "grid.txt",
        "# two checks\nadmissible q=2 p=5 r=0 s=1 sign=+ order=12\nboundary p=3 s=0 sign=- order=10\n",
    );
    let g = grid.to_str().unwrap();
    let ok = run(&["verify", "--grid", g, "--json"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json_of(&ok)["reports"].as_array().unwrap().len(), 2);
    let bad = run(&["verify", "--grid", g, "--mutation", "shift-s", "--json"]);
    assert_eq!(bad.status.code(), Some(1));
    let v = json_of(&bad);
    let reps = v["reports"].as_array().unwrap();
    assert!(reps.iter().any(|r| r["passed"] == false && r["first_mismatch"].is_object()));
}

#[test]
fn verify_empty_grid() {
    let grid = scratch("empty.txt", "# nothing\n");
    let o = run(&["verify", "--grid", grid.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["reports"], serde_json::json!([]));
}

#[test]
fn verify_output_is_deterministic() {
    let out = scratch("report.json", "");
    let a = run(&["verify", "--suite", "params", "--json", "--out", out.to_str().unwrap()]);
    let b = run(&["verify", "--suite", "params", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let written = std::fs::read_to_string(&out).unwrap();
    assert_eq!(written.trim_end().as_bytes(), String::from_utf8(b.stdout).unwrap().trim_end().as_bytes());
}

#[test]
fn table_rows() {
    let o = run(&["table", "--q", "4", "--p", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let hs: Vec<&str> = rows.iter().map(|r| r["h"].as_str().unwrap()).collect();
    assert_eq!(hs, ["0/1", "1/16", "1/2"]);
    let ells: Vec<&str> = rows.iter().map(|r| r["ell"].as_str().unwrap()).collect();
    assert_eq!(ells, ["0/1", "3/16", "1/2"]);
}

#[test]
fn oracle_table() {
    let o = run(&["oracle", "--target", "vir-verma", "--order", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let dims: Vec<i64> = json_of(&o)["rows"].as_array().unwrap().iter().map(|r| r["dim"].as_i64().unwrap()).collect();
    assert_eq!(dims, [1, 1, 2, 3, 5, 7]);
}
