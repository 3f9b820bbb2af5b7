use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn sphfn(args: &[&str]) -> Output {
    sphfn_env(args, &[])
}

fn sphfn_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_sphfn"));
    c.args(args).env_remove("SPHFN_THREADS");
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sphfn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn eval_so4_at_identity() {
    let o = sphfn(&["eval", "zfn", "--group", "so4", "--l", "1", "--m", "0", "--n", "0", "--theta", "0", "--phi2", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["re"], 1.0);
    assert_eq!(v["im"], 0.0);
    assert_eq!(v["formula"], "additionSum");
}

#[test]
fn eval_forms_and_half_integer_weights() {
    let base = ["eval", "zfn", "--group", "so14", "--sigma", "3/2", "--m", "-1/2", "--n", "1/2", "--theta", "0.3", "--phi2", "0.2", "--tau", "-0.4"];
    let sum: Value = serde_json::from_str(&stdout(&sphfn(&base))).unwrap();
    let mut args = base.to_vec();
    args.extend(["--form", "6"]);
    let hyp: Value = serde_json::from_str(&stdout(&sphfn(&args))).unwrap();
    assert_eq!(hyp["formula"], "hyp6");
    for k in ["re", "im"] {
        assert!((sum[k].as_f64().unwrap() - hyp[k].as_f64().unwrap()).abs() < 1e-12);
    }
}

#[test]
fn so14_table_shape() {
    let o = sphfn(&["table", "--group", "so14", "--sigma", "1", "--grid", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("sigma,m,n,theta,phi2,tau,re,im,formula"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 27);
    let keys: Vec<(f64, f64, f64)> = rows
        .iter()
        .map(|r| (r[3].parse().unwrap(), r[4].parse().unwrap(), r[5].parse().unwrap()))
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
    for r in &rows {
        assert_eq!(r.len(), 9);
        // 17 significant digits
        let mantissa = r[6].split('e').next().unwrap().replace(['-', '.'], "");
        assert_eq!(mantissa.len(), 17, "{}", r[6]);
    }
    // θ = ϕ = 0 and τ = 0 gives the identity value
    assert_eq!(rows[0][6].parse::<f64>().unwrap(), 1.0);
}

#[test]
fn so4_table_header() {
    let o = sphfn(&["table", "--group", "so4", "--l", "1/2", "--m", "1/2", "--n", "-1/2", "--grid", "4"]);
    let text = stdout(&o);
    assert!(text.starts_with("l,m,n,theta,phi2,re,im\n"));
    assert_eq!(text.lines().count(), 1 + 16);
    assert!(text.lines().nth(1).unwrap().starts_with("1/2,1/2,-1/2,"));
}

#[test]
fn thread_count_does_not_change_bytes() {
    let args = ["table", "--group", "so14", "--sigma", "2", "--m", "1", "--n", "-1", "--grid", "6"];
    let a = sphfn_env(&args, &[("SPHFN_THREADS", "1")]);
    let b = sphfn_env(&args, &[("SPHFN_THREADS", "4")]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let bad = sphfn_env(&args, &[("SPHFN_THREADS", "none")]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_liealg_lists_commutators() {
    let o = sphfn(&["verify", "--suite", "liealg", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let checks = v["suites"][0]["checks"].as_array().unwrap();
    let n = checks
        .iter()
        .filter(|c| c["name"].as_str().unwrap().starts_with("commutator ") && c["status"] == "pass")
        .count();
    assert_eq!(n, 45);
}

#[test]
fn verify_all_is_deterministic() {
    let a = sphfn(&["verify", "--suite", "all", "--seed", "7"]);
    let b = sphfn_env(&["verify", "--suite", "all", "--seed", "7"], &[("SPHFN_THREADS", "2")]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["suites"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(sphfn(&["verify", "--suite", "nope"]).status.code(), Some(2));
    let strict = scratch("strict.json", r#"{"tolerances": {"so4": 1e-12}, "samples": 5}"#);
    let o = sphfn(&["verify", "--suite", "so4", "--config", strict.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], false);
    let zero = scratch("zero.json", r#"{"tolerances": {"so4": 0}}"#);
    assert_eq!(sphfn(&["verify", "--suite", "so4", "--config", zero.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn usage_and_numerical_errors() {
    assert_eq!(sphfn(&[]).status.code(), Some(2));
    assert_eq!(sphfn(&["table", "--group", "so4", "--l", "x", "--grid", "2"]).status.code(), Some(2));
    assert_eq!(sphfn(&["eval", "zfn", "--group", "so5", "--l", "1"]).status.code(), Some(2));
    let o = sphfn(&["eval", "zfn", "--group", "so4", "--l", "1", "--m", "2"]);
    assert_eq!(o.status.code(), Some(3));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"], "IndexError");
    let o = sphfn(&["spectrum", "--m1", "-1", "--m2", "1", "--e2", "1", "--nmax", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(serde_json::from_str::<Value>(&stdout(&o)).unwrap()["error"], "RangeError");
    assert_eq!(sphfn(&["eval", "principal", "--rho", "1", "--l0", "0", "--angles", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn principal_element_is_hypercomplex_json() {
    let a = scratch("angles.json", r#"{"theta": 0.5, "tau": 0.3, "eps": 0.1, "phi": 0.2}"#);
    let o = sphfn(&["eval", "principal", "--rho", "1.1", "--l0", "1", "--m", "1", "--n", "0", "--angles", a.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sig"], "anti");
    for k in ["w", "x", "y", "z"] {
        assert!(v[k].is_number());
    }
    let zero = scratch("zero-angles.json", "{}");
    let o = sphfn(&["eval", "principal", "--rho", "0.4", "--l0", "1/2", "--m", "1/2", "--n", "1/2", "--angles", zero.to_str().unwrap()]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["w"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn spectrum_array() {
    let o = sphfn(&["spectrum", "--m1", "1", "--m2", "1", "--e2", "0.3", "--nmax", "4"]);
    let v: Vec<f64> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.len(), 4);
    let inf = 2.0;
    for (k, x) in v.iter().enumerate() {
        let n = (k + 1) as f64;
        assert!(((inf - x) / (inf - v[0]) - 1.0 / (n * n)).abs() < 1e-12);
    }
    let o = sphfn(&["spectrum", "--m1", "1", "--m2", "1", "--e2", "0.3", "--nmax", "2", "--branch", "antihydrogen"]);
    let w: Vec<f64> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(w[0], -v[0]);
}

#[test]
fn expand_synthesizes_and_reprojects() {
    let c = scratch("coeffs.json", r#"[{"sigma": 0, "m": 0, "n": 0, "re": 2, "im": -1}, {"sigma": 1, "m": 0, "n": 0, "re": 1, "im": 0}]"#);
    let o = sphfn(&["expand", "--coeffs", c.to_str().unwrap(), "--grid", "tau=0:1:3,eps=0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<Vec<f64>> =
        text.lines().skip(1).map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(text.lines().next(), Some("eps,tau,eps2,omega,re,im"));
    assert_eq!(rows.len(), 3);
    // 2 − i + cosh τ
    for r in &rows {
        assert!((r[4] - (2.0 + r[1].cosh())).abs() < 1e-13);
        assert_eq!(r[5], -1.0);
    }
    let o = sphfn(&["expand", "--coeffs", c.to_str().unwrap(), "--reproject", "--nodes", "4", "--t-tau", "2", "--t-exp", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let e: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arr = e.as_array().unwrap();
    assert_eq!(arr.len(), 2);
    assert!(arr.iter().all(|x| x["sigma"].is_number() && x["re"].is_number() && x["im"].is_number()));
    let bad = scratch("bad-coeffs.json", r#"[{"sigma": 1, "m": 2, "n": 0, "re": 1, "im": 0}]"#);
    assert_eq!(sphfn(&["expand", "--coeffs", bad.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(sphfn(&["expand", "--coeffs", c.to_str().unwrap(), "--grid", "foo=1"]).status.code(), Some(2));
}

#[test]
fn library_entry_point() {
    let o = sphfn_cli::run(["sphfn", "spectrum", "--m1", "1", "--m2", "1", "--e2", "0", "--nmax", "1"]).unwrap();
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.trim(), "[2.0]");
    assert!(sphfn_cli::run(["sphfn", "bogus"]).is_err());
    assert_eq!(sphfn_cli::output::num(0.1), "1.0000000000000001e-1");
    assert_eq!(sphfn_cli::output::linspace(0.0, 1.0, 3), vec![0.0, 0.5, 1.0]);
}
