use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn selfcomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfcomp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn tetrahedral_degree_six_is_infeasible() {
    let o = selfcomp(&["compress", "construct", "--group", "tetrahedral", "--degree", "6"]);
    assert_eq!(o.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert!(err["error"].as_str().unwrap().contains("degree 6"));
}

#[test]
fn icosahedral_degree_eleven() {
    let o = selfcomp(&["compress", "construct", "--group", "binary-icosahedral", "--degree", "11"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert_eq!(v["descent_degree"], 11);
    assert_eq!(v["gcd_degree"], 0);
    assert!(v["checks"].as_object().unwrap().values().all(|c| c == true));
}

#[test]
fn tetrahedral_series() {
    let o = selfcomp(&["series", "--group", "tetrahedral", "--kind", "S", "--upto", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let coeffs: Vec<i64> = serde_json::from_value(stdout_json(&o)["coeffs"].clone()).unwrap();
    assert_eq!(coeffs.len(), 13);
    assert_eq!(coeffs[5], 1);
    assert!(coeffs[..5].iter().all(|&c| c == 0));
    assert_eq!(coeffs[6], 0);
}

#[test]
fn malformed_config_is_invalid_input() {
    let dir = tempfile::tempdir().unwrap();
    for body in ["series_upto 8\n", "series_upto = -1\n", "colour = blue\n", "output = yaml\n"] {
        let cfg = write(dir.path(), "bad.conf", body);
        let o = selfcomp(&["--config", &cfg, "jordan", "threshold", "--j", "288"]);
        assert_eq!(o.status.code(), Some(2), "config {body:?}");
    }
    let o = selfcomp(&["--config", "/nonexistent/selfcomp.conf", "suite"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn small_upto_skips_icosahedral_minimum() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "small.conf", "# tiny\nseries_upto = 8\n");
    let o = selfcomp(&["--config", &cfg, "suite", "--only", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    let c = &v["criteria"][0];
    assert_eq!(c["status"], "SKIP");
    assert!(c["detail"].as_str().unwrap().contains("binary-icosahedral"));
}

#[test]
fn flags_override_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.conf", "series_upto = 8\noutput = text\n");
    let o = selfcomp(&["--config", &cfg, "--upto", "10", "--format", "json", "series", "--group", "Q8"]);
    assert_eq!(stdout_json(&o)["coeffs"].as_array().unwrap().len(), 11);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(selfcomp(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(selfcomp(&["series"]).status.code(), Some(2));
    assert_eq!(selfcomp(&["series", "--group", "binary-dihedral"]).status.code(), Some(2));
    assert_eq!(selfcomp(&["jordan", "prank", "--table", "S4", "--p", "6"]).status.code(), Some(2));
}

#[test]
fn certificates_are_deterministic_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cert.json");
    let out_s = out.to_str().unwrap();
    let args = ["compress", "construct", "--group", "binary-dihedral:ell=3", "--degree", "5"];
    let first = selfcomp(&args);
    let second = selfcomp(&args);
    assert_eq!(first.stdout, second.stdout);
    let o = selfcomp(&["--out", out_s, "compress", "construct", "--group", "binary-dihedral", "--ell", "3", "--degree", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&out).unwrap(), first.stdout);
    let v = selfcomp(&["compress", "verify-map", "--group", "binary-dihedral:ell=3", "--input", out_s]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(stdout_json(&v)["descent"]["descent_degree"], 5);
}

#[test]
fn verify_map_reports_failure() {
    // (x1^3, x2^3) is not Q8-equivariant: diag(i, -i) sends it to (-i x1^3, i x2^3)
    let dir = tempfile::tempdir().unwrap();
    let one = r#"{"conductor": 1, "coeffs": ["1"]}"#;
    let zero = r#"{"conductor": 1, "coeffs": ["0"]}"#;
    let form = |c: [&str; 4]| format!(r#"{{"nvars": 2, "degree": 3, "coeffs": [{}]}}"#, c.join(","));
    let body = format!(r#"{{"phi": [{}, {}]}}"#, form([one, zero, zero, zero]), form([zero, zero, zero, one]));
    let input = write(dir.path(), "pair.json", &body);
    let o = selfcomp(&["compress", "verify-map", "--group", "Q8", "--input", &input]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout_json(&o)["equivariant"], false);
}

#[test]
fn builtin_icosahedral_checks() {
    let o = selfcomp(&["compress", "verify-map"]);
    assert_eq!(o.status.code(), Some(0));
    let o = selfcomp(&["compress", "verify-fueq"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["degree"], 11);
}

#[test]
fn invariants_and_linear_maps() {
    let o = selfcomp(&["invariant", "--group", "2I", "--degree", "11"]);
    assert_eq!(o.status.code(), Some(3));
    let o = selfcomp(&["invariant", "--group", "2I", "--degree", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let o = selfcomp(&["linmap", "--group", "T2(2,2)", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["line_degree"], 3);
}

#[test]
fn jordan_commands() {
    let v = stdout_json(&selfcomp(&["jordan", "constants", "--table", "S4"]));
    assert_eq!((v["m"].as_u64(), v["J"].as_u64(), v["j"].as_u64()), (Some(6), Some(6), Some(6)));
    let o = selfcomp(&["jordan", "product", "--table", "S3", "--table", "Q8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout_json(&o)["product"]["m"], 4);
    let v = stdout_json(&selfcomp(&["jordan", "threshold", "--j", "10368"]));
    assert_eq!(v["threshold"], 13);
    let v = stdout_json(&selfcomp(&["jordan", "homeo-bound", "--n", "1", "--betti", "1"]));
    assert_eq!(v["minimal_d"], 3);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("q8.json");
    selfcomp(&["--out", out.to_str().unwrap(), "group", "table", "--group", "Q8"]);
    let v = stdout_json(&selfcomp(&["jordan", "m", "--table", out.to_str().unwrap()]));
    assert_eq!(v["m"], 2);
}

#[test]
fn path_commands() {
    let dir = tempfile::tempdir().unwrap();
    let c = |k: &str| format!(r#"{{"conductor": 1, "coeffs": ["{k}"]}}"#);
    let theta = format!(
        r#"{{"n": 2, "components": [
            {{"monomials": [{{"exps": [1,0], "coeff": {}}}, {{"exps": [0,3], "coeff": {}}}]}},
            {{"monomials": [{{"exps": [0,1], "coeff": {}}}, {{"exps": [2,2], "coeff": {}}}]}}]}}"#,
        c("1"),
        c("2"),
        c("1"),
        c("-1/3")
    );
    let theta = write(dir.path(), "theta.json", &theta);
    assert_eq!(selfcomp(&["path", "check", "--input", &theta]).status.code(), Some(0));
    let fam = selfcomp(&["path", "family", "--input", &theta]);
    assert_eq!(stdout_json(&fam)["parameter"], "t");
    let shifted = format!(
        r#"{{"n": 1, "components": [{{"monomials": [{{"exps": [0], "coeff": {}}}, {{"exps": [2], "coeff": {}}}]}}]}}"#,
        c("5"),
        c("1")
    );
    let shifted = write(dir.path(), "sigma.json", &shifted);
    assert_eq!(selfcomp(&["path", "check", "--input", &shifted]).status.code(), Some(1));
    let f = selfcomp(&["path", "factor", "--input", &shifted]);
    assert_eq!(f.status.code(), Some(0));
    assert!(stdout_json(&f)["theta"]["components"].is_array());
}
