use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const KRONECKER: &str = "n=2; 2->1; 2->1";
const WILD: &str = "n=3; 2->1; 3->1; 3->1; 3->2";

fn frieze(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_frieze"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn classify_lines() {
    let k = frieze(&["classify", "-"], KRONECKER);
    assert_eq!(stdout(&k).trim(), "Tame Ã(1,1), ρ≈1");
    let w = frieze(&["classify", "-"], WILD);
    assert_eq!(stdout(&w).trim(), "Wild, ρ≈5.8284");
    let a = frieze(&["classify", "-"], "n=2; 2->1");
    assert_eq!(stdout(&a).trim(), "Finite A_2");
    let j = json(&frieze(&["classify", "-", "--format", "json"], WILD));
    assert_eq!(j["agreement"], Value::Bool(true));
    assert_eq!(j["kind"], "Wild");
}

#[test]
fn points_csv() {
    let out = stdout(&frieze(&["points", "-", "--tmax", "3"], KRONECKER));
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[3].ends_with("89,233"));
    let out = stdout(&frieze(&["points", "-", "--tmax", "0"], KRONECKER));
    assert_eq!(out.lines().skip(1).collect::<Vec<_>>(), vec!["0,1,1"]);
    let out = stdout(&frieze(&["points", "-", "--tmax", "2"], WILD));
    assert!(out.lines().any(|l| l == "2,254,1101,5464009"));
}

#[test]
fn points_json_and_digit_cap() {
    let j = json(&frieze(&["points", "-", "--tmax", "7", "--digit-cap", "100", "--format", "json"], WILD));
    assert_eq!(j["truncated"], Value::Bool(true));
    assert_eq!(j["t_max"], 3);
}

#[test]
fn growth_profile() {
    let j = json(&frieze(&["growth", "-", "--tmax", "5"], WILD));
    let l1: Vec<f64> = j["growth"]["L"][1].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    for (a, b) in l1.iter().zip([0.693, 1.099, 2.565]) {
        assert!((a - b).abs() < 5e-4);
    }
    assert!(j["growth"]["L"][0].as_array().unwrap().iter().all(|x| x.as_f64() == Some(0.0)));
    let u = j["growth"]["L_over_rho_t"][5].as_array().unwrap();
    for (a, b) in u.iter().zip([0.16418, 0.20706, 0.45701]) {
        assert!((a.as_f64().unwrap() - b).abs() < 1e-4);
    }
}

#[test]
fn recurrence_and_dim() {
    let j = json(&frieze(&["recurrence", "-"], "n=3; 2->1; 3->1; 3->2"));
    assert_eq!(j["recurrence"]["theorem"]["C"], "52");
    let j = json(&frieze(&["dim", "-"], KRONECKER));
    assert_eq!(j["dimension"]["verdict"], "One");
    let poly = &j["dimension"]["evidence"]["relations"][0]["polynomials"][0];
    assert_eq!(poly["vars"], serde_json::json!([1, 2]));
    assert_eq!(poly["coeffs"], serde_json::json!(["1", "0", "0", "1", "-3", "1"]));
    let j = json(&frieze(&["dim", "-"], "n=1"));
    assert_eq!(j["dimension"]["verdict"], "Zero");
    assert_eq!(j["dimension"]["evidence"]["period"], 2);
}

#[test]
fn report_is_deterministic() {
    let a = frieze(&["report", "-"], WILD);
    let b = frieze(&["report", "-"], WILD);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let j = json(&a);
    assert_eq!(j["dimension"]["verdict"], "AtLeastTwo");
    assert_eq!(j["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn relabeling_is_reported() {
    let j = json(&frieze(&["points", "-", "--tmax", "1", "--format", "json"], "n=2; 1->2"));
    assert_eq!(j["relabeling"], serde_json::json!([[1, 2], [2, 1]]));
    assert_eq!(j["quiver"], "n=2\n2->1\n");
}

#[test]
fn exit_codes() {
    assert_eq!(frieze(&["classify", "-"], "n=2; 2->x").status.code(), Some(2));
    assert_eq!(frieze(&["classify", "-"], "n=2; 1->2; 2->1").status.code(), Some(2));
    assert_eq!(frieze(&["classify", "/nonexistent/quiver"], "").status.code(), Some(2));
    let short = frieze(&["recurrence", "-", "--tmax", "2"], KRONECKER);
    assert_eq!(short.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&short.stderr).contains("need t_max >= 3"));
    assert_eq!(frieze(&["dim", "-", "--tmax", "3"], WILD).status.code(), Some(3));
}
