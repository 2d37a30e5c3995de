//! End-to-end tests of the binary: exit codes, output contracts, JSON
//! round-tripping and CSV shape.

use std::process::{Command, Output};

fn extwhit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extwhit"))
        .args(args)
        .env_remove("EXTWHIT_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn eval_classical_reduction_value() {
    let out = extwhit(&["eval", "whittaker_ext", "kappa=0", "mu=0.5", "z=1", "p=0", "nu=0"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let value_line = text.lines().find(|l| l.starts_with("value:")).unwrap();
    let re: f64 = value_line
        .split_whitespace()
        .nth(1)
        .unwrap()
        .parse()
        .unwrap();
    assert!((re - 2.0 * 0.5f64.sinh()).abs() < 1e-10, "value {re}");
    assert!(text.contains("converged: true"));
}

#[test]
fn eval_nu0_reduction_matches_p_extension() {
    let a = extwhit(&["eval", "ext_beta_pnu", "x=1.5", "y=1.5", "p=1", "nu=0", "--format", "json"]);
    let b = extwhit(&["eval", "ext_beta_p", "x=1.5", "y=1.5", "p=1", "--format", "json"]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(exit_code(&b), 0);
    let va: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let vb: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    let ra: f64 = va["value_re"].as_str().unwrap().parse().unwrap();
    let rb: f64 = vb["value_re"].as_str().unwrap().parse().unwrap();
    assert!(((ra - rb) / rb).abs() < 1e-10, "{ra} vs {rb}");
}

#[test]
fn eval_domain_error_names_the_constraint() {
    let out = extwhit(&["eval", "whittaker_ext", "kappa=0", "mu=-0.5", "z=1", "p=0", "nu=0"]);
    assert_eq!(exit_code(&out), 1);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("2*mu"), "diagnostic must name the constraint: {err}");
}

#[test]
fn eval_usage_errors() {
    // unknown function
    let out = extwhit(&["eval", "nonsense", "x=1"]);
    assert_eq!(exit_code(&out), 1);
    // malformed parameter
    let out = extwhit(&["eval", "beta", "x=oops", "y=1"]);
    assert_eq!(exit_code(&out), 1);
    // missing parameter
    let out = extwhit(&["eval", "beta", "x=1"]);
    assert_eq!(exit_code(&out), 1);
    // unknown subcommand is a usage error
    let out = extwhit(&["frobnicate"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn eval_greek_parameter_aliases() {
    let out = extwhit(&[
        "eval",
        "whittaker_ext",
        "\u{3ba}=0",
        "\u{3bc}=0.5",
        "z=1",
        "p=0",
        "\u{3bd}=0",
    ]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn eval_complex_argument() {
    let out = extwhit(&["eval", "whittaker", "kappa=0", "mu=0.5", "z=2i", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let re: f64 = v["value_re"].as_str().unwrap().parse().unwrap();
    let im: f64 = v["value_im"].as_str().unwrap().parse().unwrap();
    // M_{0,1/2}(2i) = 2 sinh(i) = 2i sin(1)
    assert!(re.abs() < 1e-12);
    assert!((im - 2.0 * 1f64.sin()).abs() < 1e-10);
}

#[test]
fn json_round_trips_byte_identically() {
    let out = extwhit(&["eval", "ext_chf_pnu", "b=1.5", "c=3.2", "z=2", "p=0.7", "nu=1.3", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let emitted = stdout(&out);
    let emitted = emitted.trim_end();
    let v: serde_json::Value = serde_json::from_str(emitted).unwrap();
    // re-serialize with the same canonical rules: fixed key order,
    // 17-significant-digit floats
    let f = |key: &str| -> String {
        let x: f64 = v[key].as_str().unwrap().parse().unwrap();
        format!("{x:.16e}")
    };
    let rebuilt = format!(
        "{{\"function\":\"{}\",\"value_re\":\"{}\",\"value_im\":\"{}\",\"abs_err_estimate\":\"{}\",\"converged\":{},\"underflow_scaled\":{}}}",
        v["function"].as_str().unwrap(),
        f("value_re"),
        f("value_im"),
        f("abs_err_estimate"),
        v["converged"].as_bool().unwrap(),
        v["underflow_scaled"].as_bool().unwrap(),
    );
    assert_eq!(emitted, rebuilt);
}

#[test]
fn check_suite_contract() {
    let out = extwhit(&["check", "kummer"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("PASS"));
    // json aggregate carries per-suite max residual
    let out = extwhit(&["check", "kummer", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], serde_json::Value::Bool(true));
    assert!(v["suites"][0]["max_residual"].is_string());
    // unknown suite is a usage error
    let out = extwhit(&["check", "nonsense"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn eval_non_convergence_exit_code() {
    // a 3-level cap cannot reach 1e-14: value still printed, exit 2
    let out = extwhit(&[
        "eval", "ext_beta_pnu", "x=1.5", "y=2.5", "p=0.25", "nu=0.5",
        "--tol", "1e-14", "--max-level", "3",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stdout(&out).contains("converged: false"));
}

#[test]
fn table_two_axes() {
    let out = extwhit(&[
        "table", "ext_beta_pnu",
        "--sweep", "p=log:0.25:4:3",
        "--sweep", "nu=lin:0:2:3",
        "x=1.5", "y=2.5",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[1], "p,nu,value_re,value_im,abs_err_estimate,converged");
    assert_eq!(lines.len(), 2 + 9, "3x3 grid");
    // rows in deterministic outer-then-inner order
    let first: f64 = lines[2].split(',').next().unwrap().parse().unwrap();
    let last: f64 = lines[10].split(',').next().unwrap().parse().unwrap();
    assert!(first < last);
}

#[test]
fn check_failure_exit_code() {
    // routes cannot agree to 1e-8 when the quadrature is capped at three
    // levels; suite failures exit 3
    let out = extwhit(&["check", "routes", "--tol", "1e-2", "--max-level", "3"]);
    assert_eq!(exit_code(&out), 3);
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn check_csv_format() {
    let out = extwhit(&["check", "summation", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "suite,label,residual,tolerance,pass");
    assert!(lines.len() > 1);
    assert!(lines[1].starts_with("summation,"));
}

#[test]
fn table_row_count_and_csv_shape() {
    let out = extwhit(&[
        "table",
        "whittaker_ext",
        "--sweep",
        "x=log:1:100:20",
        "kappa=0",
        "mu=1",
        "p=1",
        "nu=0",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# function=whittaker_ext"));
    assert!(lines[0].contains("kappa=0") && lines[0].contains("p=1"));
    assert_eq!(lines[1], "x,value_re,value_im,abs_err_estimate,converged");
    assert_eq!(lines.len(), 22, "comment + header + 20 data rows");
    for row in &lines[2..] {
        assert_eq!(row.split(',').count(), 5);
        assert!(!row.contains(';'), "fields are comma-separated");
    }
    assert!(text.ends_with('\n'));
}

#[test]
fn table_asymp_ratio_mode() {
    let out = extwhit(&[
        "table",
        "whittaker_ext",
        "--sweep",
        "x=log:50:200:5",
        "kappa=0",
        "mu=1",
        "p=1",
        "nu=0",
        "--asymp-ratio",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[1].ends_with(",ratio"));
    let last_cell = lines[2].split(',').next_back().unwrap();
    let ratio: f64 = last_cell.parse().unwrap();
    assert!((ratio - 1.0).abs() < 0.5, "ratio {ratio}");
}

#[test]
fn table_usage_errors() {
    // malformed axis bound
    let out = extwhit(&[
        "table",
        "whittaker_ext",
        "--sweep",
        "x=log:abc:100:20",
        "kappa=0",
        "mu=1",
        "p=1",
        "nu=0",
    ]);
    assert_eq!(exit_code(&out), 1);
    // no sweep axes
    let out = extwhit(&["table", "whittaker_ext", "kappa=0", "mu=1", "p=1", "nu=0"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn asymp_contract() {
    let out = extwhit(&["asymp", "--kappa", "0", "--mu", "1", "--p", "1", "--nu", "0"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("x=")).count(), 4);
    let slope_line = text.lines().find(|l| l.starts_with("slope:")).unwrap();
    let slope: f64 = slope_line.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!((-0.65..=-0.35).contains(&slope), "slope {slope}");
    // p <= 0 is a domain error
    let out = extwhit(&["asymp", "--kappa", "0", "--mu", "1", "--p", "-1"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn tolerance_env_var_with_flag_override() {
    // absurdly loose env tolerance with a coarse level cap: converges fast
    let out = Command::new(env!("CARGO_BIN_EXE_extwhit"))
        .args(["eval", "ext_beta_p", "x=1.5", "y=1.5", "p=1", "--format", "json"])
        .env("EXTWHIT_TOL", "1e-2")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let loose_err: f64 = v["abs_err_estimate"].as_str().unwrap().parse().unwrap();
    // the flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_extwhit"))
        .args(["eval", "ext_beta_p", "x=1.5", "y=1.5", "p=1", "--tol", "1e-12", "--format", "json"])
        .env("EXTWHIT_TOL", "1e-2")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let tight_err: f64 = v["abs_err_estimate"].as_str().unwrap().parse().unwrap();
    assert!(tight_err < loose_err, "{tight_err} vs {loose_err}");
    // a bad env value is ignored in favour of the default
    let out = Command::new(env!("CARGO_BIN_EXE_extwhit"))
        .args(["eval", "beta", "x=2", "y=3"])
        .env("EXTWHIT_TOL", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code().unwrap(), 0);
}

#[test]
fn eval_route_selection() {
    let a = extwhit(&["eval", "ext_chf_pnu", "b=1.5", "c=3.2", "z=2", "p=0.7", "nu=1.3", "--route", "integral", "--format", "json"]);
    let b = extwhit(&["eval", "ext_chf_pnu", "b=1.5", "c=3.2", "z=2", "p=0.7", "nu=1.3", "--route", "series", "--format", "json"]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(exit_code(&b), 0);
    let va: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    let vb: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    let ra: f64 = va["value_re"].as_str().unwrap().parse().unwrap();
    let rb: f64 = vb["value_re"].as_str().unwrap().parse().unwrap();
    assert!(((ra - rb) / rb).abs() < 1e-8);
    // whittaker routes agree as well
    let base = ["eval", "whittaker_ext", "kappa=0.5", "mu=1", "z=2", "p=1", "nu=0.5"];
    let mut values = Vec::new();
    for route in ["definition", "unit", "affine:-1:3", "semi", "symmetric"] {
        let mut args = base.to_vec();
        args.extend(["--route", route, "--format", "json"]);
        let out = extwhit(&args);
        assert_eq!(exit_code(&out), 0, "route {route}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        values.push(v["value_re"].as_str().unwrap().parse::<f64>().unwrap());
    }
    for w in values.windows(2) {
        assert!(((w[0] - w[1]) / w[1]).abs() < 1e-8);
    }
}
