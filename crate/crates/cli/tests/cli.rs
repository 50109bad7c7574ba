//! End-to-end tests of the covosc binary: output shapes, exit-code taxonomy,
//! configuration precedence, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn covosc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covosc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn tmp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("covosc-test-{}-{}", std::process::id(), name));
    p
}

#[test]
fn boost_identity_reports_invariant() {
    let out = covosc(&["boost", "--eta", "0", "--point", "1,0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("boosted (z', t') = (1.0000000000000000e0, 0.0000000000000000e0)"));
    // u*v = 1/2 up to one rounding of 1/sqrt(2)^2
    let line = text
        .lines()
        .find(|l| l.trim_start().starts_with("invariant u*v"))
        .unwrap();
    let rest = line
        .trim()
        .strip_prefix("invariant u*v: before = ")
        .unwrap();
    let (before, after) = rest.split_once(" after = ").unwrap();
    let before: f64 = before.parse().unwrap();
    let after: f64 = after.parse().unwrap();
    assert!((before - 0.5).abs() < 1e-12);
    assert_eq!(before, after);
}

#[test]
fn boost_preserves_invariant_when_boosted() {
    let out = covosc(&["boost", "--eta", "1", "--point", "1,0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut invariants = Vec::new();
    for line in text.lines() {
        if let Some(rest) = line.trim().strip_prefix("invariant u*v: before = ") {
            let (before, after) = rest.split_once(" after = ").unwrap();
            invariants.push((
                before.parse::<f64>().unwrap(),
                after.parse::<f64>().unwrap(),
            ));
        }
    }
    assert_eq!(invariants.len(), 1);
    assert!((invariants[0].0 - 0.5).abs() < 1e-12);
    assert!((invariants[0].0 - invariants[0].1).abs() < 1e-12);
}

#[test]
fn boost_rejects_malformed_arguments() {
    let out = covosc(&["boost", "--eta", "abc", "--point", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = covosc(&["boost", "--eta", "1", "--point", "1;0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = covosc(&["boost", "--eta", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty(), "no results on nonzero exit");
}

#[test]
fn modes_reports_normal_mode_data() {
    let out = covosc(&["modes", "--A", "5", "--C", "3"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["command"], "modes");
    assert!((json["results"]["k"].as_f64().unwrap() - 4.0).abs() < 1e-12);
    assert!((json["results"]["eta"].as_f64().unwrap() + 0.34657359027997264).abs() < 1e-12);
    assert_eq!(json["config"]["mass"].as_f64().unwrap(), 1.0);
}

#[test]
fn modes_degenerate_coupling_is_a_domain_error() {
    let out = covosc(&["modes", "--A", "1", "--C", "1"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("degenerate coupling"));
}

#[test]
fn density_writes_deterministic_csv() {
    let path = tmp_path("density.csv");
    let args = [
        "density",
        "--eta",
        "0.5",
        "--n-z",
        "41",
        "--n-t",
        "41",
        "--z-min",
        "-6",
        "--z-max",
        "6",
        "--t-min",
        "-6",
        "--t-max",
        "6",
        "--out",
        path.to_str().unwrap(),
    ];
    let out = covosc(&args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).contains("axis_ratio = "));
    let first = std::fs::read(&path).unwrap();
    assert!(covosc(&args).status.success());
    let second = std::fs::read(&path).unwrap();
    assert_eq!(first, second, "repeated invocations must be byte-identical");

    let text = String::from_utf8(first).unwrap();
    let header = text.lines().next().unwrap();
    assert!(header.starts_with("# eta=5.0000000000000000e-1"));
    assert!(header.contains("n_z=41 n_t=41"));
    assert_eq!(text.lines().count(), 42);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn density_json_format() {
    let path = tmp_path("density.json");
    let out = covosc(&[
        "density",
        "--eta",
        "0",
        "--n-z",
        "5",
        "--n-t",
        "5",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["n_z"], 5);
    assert_eq!(json["values"].as_array().unwrap().len(), 5);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn density_domain_and_io_errors() {
    let out = covosc(&["density", "--eta", "11", "--out", "/tmp/unused.csv"]);
    assert_eq!(out.status.code(), Some(4));

    let out = covosc(&["density", "--eta", "1", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(out.status.code(), Some(3));

    let out = covosc(&["density", "--eta", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn residual_reports_zero_eigenvalue() {
    let out = covosc(&["residual", "--eta", "1", "--h", "1e-3"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let lambda = json["results"]["lambda"].as_f64().unwrap();
    let residual = json["results"]["max_residual"].as_f64().unwrap();
    assert!(lambda.abs() < 1e-5, "lambda = {lambda}");
    assert!(residual < 1e-5, "residual = {residual}");
    assert_eq!(json["config"]["signature"], "space-positive");
    assert_eq!(json["config"]["points"].as_array().unwrap().len(), 49);
}

#[test]
fn residual_four_d_signature_flip() {
    let out = covosc(&[
        "residual",
        "--four-d",
        "--h",
        "1e-3",
        "--signature",
        "time-positive",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let lambda = json["results"]["lambda"].as_f64().unwrap();
    assert!((lambda + 1.0).abs() < 1e-5, "lambda = {lambda}");
}

#[test]
fn residual_rejects_bad_step() {
    let out = covosc(&["residual", "--eta", "0", "--h", "0.5"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn expand_rest_frame_is_a_single_basis_vector() {
    let out = covosc(&["expand", "--eta", "0", "--nmax", "8"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let coeffs = json["results"]["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 9);
    assert!((coeffs[0].as_f64().unwrap() - 1.0).abs() < 1e-12);
    for c in &coeffs[1..] {
        assert!(c.as_f64().unwrap().abs() < 1e-12);
    }
}

#[test]
fn expand_low_order_is_a_convergence_error() {
    let out = covosc(&["expand", "--eta", "1", "--nmax", "8", "--order", "16"]);
    assert_eq!(out.status.code(), Some(5));
    assert!(out.stdout.is_empty());
}

#[test]
fn algebra_check_reports_closure() {
    let out = covosc(&["algebra-check", "--nmax", "6"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["results"]["n_max"], 6);
    assert_eq!(json["results"]["pairs"].as_array().unwrap().len(), 45);
    let max_interior = json["results"]["max_interior_residual"].as_f64().unwrap();
    assert!(max_interior <= 1e-10, "interior residual {max_interior}");

    let out = covosc(&["algebra-check", "--nmax", "3"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let path = tmp_path("config.json");
    std::fs::write(&path, r#"{"eta": 1.0, "n_max": 4}"#).unwrap();

    let out = covosc(&["expand", "--config", path.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["config"]["eta"].as_f64().unwrap(), 1.0);
    assert_eq!(json["config"]["n_max"], 4);

    let out = covosc(&["expand", "--eta", "0", "--config", path.to_str().unwrap()]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["config"]["eta"].as_f64().unwrap(), 0.0, "flag wins");
    let _ = std::fs::remove_file(&path);
}

#[test]
fn config_file_rejects_unknown_keys() {
    let path = tmp_path("bad-config.json");
    std::fs::write(&path, r#"{"eta": 1.0, "typo_key": 2}"#).unwrap();
    let out = covosc(&["expand", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let _ = std::fs::remove_file(&path);
}

#[test]
fn missing_config_file_is_an_io_error() {
    let out = covosc(&["expand", "--eta", "1", "--config", "/no/such/file.json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reports_are_deterministic() {
    let a = covosc(&["expand", "--eta", "0.7", "--nmax", "12"]);
    let b = covosc(&["expand", "--eta", "0.7", "--nmax", "12"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let a = covosc(&["algebra-check", "--nmax", "6"]);
    let b = covosc(&["algebra-check", "--nmax", "6"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_only_commands_reject_csv() {
    let out = covosc(&["modes", "--A", "2", "--C", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn report_commands_honor_out_flag_and_config() {
    let path = tmp_path("modes-report.json");
    let out = covosc(&[
        "modes",
        "--A",
        "5",
        "--C",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty(), "report goes to the file, not stdout");
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!((json["results"]["k"].as_f64().unwrap() - 4.0).abs() < 1e-12);
    let _ = std::fs::remove_file(&path);

    // `out` can come from the config file too
    let cfg = tmp_path("modes-config.json");
    let report = tmp_path("modes-report2.json");
    std::fs::write(
        &cfg,
        format!(r#"{{"A": 5.0, "C": 3.0, "out": "{}"}}"#, report.display()),
    )
    .unwrap();
    let out = covosc(&["modes", "--config", cfg.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(report.exists());
    let _ = std::fs::remove_file(&cfg);
    let _ = std::fs::remove_file(&report);
}
