use std::process::{Command, Output};

fn hodelta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodelta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hodelta(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn exact_prints_six_decimals() {
    let s = stdout(&["exact", "--g", "-0.5"]);
    assert!(s.contains("nu = -0.344424"), "{s}");
    let s = stdout(&["exact", "--g", "0"]);
    assert!(s.contains("nu = 0.000000"), "{s}");
}

#[test]
fn variational_dispatches_on_sign() {
    let s = stdout(&["variational", "--g", "1.0"]);
    assert!(s.contains("family = repulsive"));
    assert!(s.contains("alpha_min = 1.077488"), "{s}");
    assert!(s.contains("nu = 0.394997"), "{s}");
    let s = stdout(&["variational", "--g", "-0.5"]);
    assert!(s.contains("family = attractive"));
    assert!(s.contains("alpha_min = 0.860948"), "{s}");
}

#[test]
fn family_override() {
    let s = stdout(&["variational", "--g", "0", "--family", "attractive"]);
    assert!(
        s.contains("family = attractive") && s.contains("alpha_min = 1.000000"),
        "{s}"
    );
}

#[test]
fn zero_coupling_exact_and_variational_agree() {
    let pick = |s: &str| {
        s.lines()
            .find(|l| l.starts_with("nu ="))
            .unwrap()
            .to_string()
    };
    let e = stdout(&["exact", "--g", "0"]);
    let v = stdout(&["variational", "--g", "0"]);
    assert_eq!(pick(&e), pick(&v));
}

#[test]
fn table_two_written_to_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("results");
    let out = hodelta(&[
        "table",
        "--which",
        "2",
        "--format",
        "csv",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(
        out.stdout.is_empty(),
        "nothing on stdout when --out is given"
    );
    let body = std::fs::read_to_string(out_dir.join("table2.csv")).unwrap();
    let mut reader = csv::Reader::from_reader(body.as_bytes());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(&headers[0], "g");
    assert!(headers.iter().any(|h| h == "rpe_eps"));
    assert_eq!(reader.records().count(), 16);
}

#[test]
fn csv_output_is_deterministic() {
    let a = hodelta(&["figure", "--id", "alpha_min_vs_g", "--format", "csv"]);
    let b = hodelta(&["figure", "--id", "alpha_min_vs_g", "--format", "csv"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn figure_accepts_number_and_custom_couplings() {
    let s = stdout(&["figure", "--id", "fig7", "--g", "1,2", "--format", "csv"]);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("abs_g,"));
    let s = stdout(&[
        "figure",
        "--id",
        "minima_curves",
        "--g",
        "-1.5,-2",
        "--format",
        "csv",
    ]);
    assert!(s.starts_with("alpha,epsilon_g=-1.5,epsilon_g=-2"));
}

#[test]
fn json_output_parses() {
    let s = stdout(&["exact", "--g", "2", "--format", "json", "--full-precision"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    let nu = v["nu"].as_f64().unwrap();
    assert!((nu - 0.583_898).abs() < 1e-6);
    let s = stdout(&[
        "sweep", "--g-min", "-1", "--g-max", "1", "--step", "0.5", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 5);
}

#[test]
fn gamma_backend_flag_changes_exact_digits() {
    let hp = stdout(&["exact", "--g", "-2", "--full-precision"]);
    let ab = stdout(&[
        "exact",
        "--g",
        "-2",
        "--full-precision",
        "--gamma-backend",
        "appendixB",
    ]);
    assert_ne!(hp, ab);
}

#[test]
fn excited_grid_argmin() {
    let s = stdout(&[
        "excited",
        "--alpha-grid",
        "0.8,1.0,1.2",
        "--z-grid",
        "-0.5:0.5:0.5",
    ]);
    assert!(
        s.contains("minimum at alpha = 1.000000, z = 0.000000, epsilon = 1.500000"),
        "{s}"
    );
}

#[test]
fn oracle_reports_difference() {
    let s = stdout(&["oracle", "--g", "1", "--n", "1201", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert!(v["difference"].as_f64().unwrap().abs() < 2e-3);
    assert_eq!(v["points"].as_i64(), Some(1201));
}

#[test]
fn small_oracle_grid_warns() {
    let out = hodelta(&["oracle", "--g", "0", "--n", "201", "--half-width", "2.5"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn argument_errors_exit_two() {
    for args in [
        vec!["exact"],
        vec!["exact", "--g", "abc"],
        vec!["table", "--which", "3"],
        vec!["exact", "--g", "1", "--tol", "-1"],
        vec!["exact", "--g", "1", "--gamma-backend", "stirling"],
        vec!["frobnicate"],
    ] {
        assert_eq!(hodelta(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn numerical_errors_exit_one() {
    for args in [
        vec!["figure", "--id", "fig9"],
        vec!["oracle", "--g", "1", "--n", "100"],
        vec!["excited", "--alpha-grid", "0,1"],
        vec!["variational", "--g", "-200", "--family", "attractive"],
    ] {
        let out = hodelta(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}
