use std::process::Command;

use qsl::cli::run_command;
use serde_json::Value;

fn qsl(args: &[&str]) -> (i32, String, String) {
    let out = run_command(std::iter::once("qsl").chain(args.iter().copied()));
    (out.code, out.stdout, out.stderr)
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = qsl(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn bv_point_mass() {
    let r = json(&["run", "--algorithm", "bv", "--s", "1011", "--mode", "exact"]);
    assert_eq!(r["distribution"], serde_json::json!({ "1011": 1.0 }));
    assert_eq!(r["queries"], 1);
    let keys: Vec<&String> = r.as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        ["algorithm", "params", "mode", "seed", "queries", "distribution", "distribution_rational", "verdict", "metrics"]
    );
}

#[test]
fn grover_five_eighths() {
    let r = json(&["run", "--algorithm", "grover", "--n", "3", "--xstar", "101", "--mode", "exact"]);
    assert_eq!(r["distribution"]["101"], 0.625);
    assert_eq!(r["distribution_rational"]["101"], "5/8");
    let total: f64 = r["distribution"].as_object().unwrap().values().map(|v| v.as_f64().unwrap()).sum();
    assert!((total - 1.0).abs() < 1e-12);
}

#[test]
fn algorithms_report_verdicts() {
    let cases: [(&[&str], &str); 6] = [
        (&["--algorithm", "dj", "--n", "4", "--b0", "1", "--perm", "random"], "balanced"),
        (&["--algorithm", "dj", "--n", "4", "--b1", "1", "--perm", "reverse"], "constant"),
        (&["--algorithm", "dj3", "--function", "11111111"], "constant"),
        (&["--algorithm", "simon", "--s", "110", "--perm", "random"], "two-to-one, s = 110"),
        (&["--algorithm", "simon", "--s", "000", "--b", "0"], "one-to-one"),
        (&["--algorithm", "shor15", "--a", "11"], "15 = 3 x 5"),
    ];
    for (args, want) in cases {
        let mut full = vec!["run"];
        full.extend_from_slice(args);
        let r = json(&full);
        let verdict = r["verdict"].as_str().unwrap();
        assert!(verdict.contains(want), "{args:?}: {verdict}");
    }
}

#[test]
fn sso_of_identical_files_is_one() {
    let dir = std::env::temp_dir().join(format!("qsl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (_, report, _) = qsl(&["run", "--algorithm", "shor15", "--a", "11"]);
    let a = dir.join("a.json");
    std::fs::write(&a, &report).unwrap();
    let a = a.to_str().unwrap();
    assert_eq!(json(&["sso", "--observed", a, "--ideal", a])["value"], 1.0);
    assert_eq!(json(&["entropy", "--file", a])["value"], 1.0);

    let bare = dir.join("b.json");
    std::fs::write(&bare, r#"{"0": 0.5, "1": 0.5}"#).unwrap();
    let bare = bare.to_str().unwrap();
    let (code, _, err) = qsl(&["sso", "--observed", a, "--ideal", bare]);
    assert_eq!(code, 2, "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn configuration_errors_exit_2() {
    let bad: [&[&str]; 10] = [
        &["run", "--algorithm", "bv", "--s", "10", "--trials", "10"],
        &["run", "--algorithm", "bv", "--s", "10x"],
        &["run", "--algorithm", "bv", "--s", "101", "--n", "4"],
        &["run", "--algorithm", "dj", "--n", "3", "--perm", "0,1,2"],
        &["run", "--algorithm", "dj", "--n", "3", "--b0", "2"],
        &["run", "--algorithm", "dj3", "--function", "00000001"],
        &["run", "--algorithm", "grover", "--xstar", "1"],
        &["run", "--algorithm", "shor15", "--a", "5"],
        &["sso", "--observed", "/nonexistent", "--ideal", "/nonexistent"],
        &["frobnicate"],
    ];
    for args in bad {
        let (code, out, err) = qsl(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
    assert_eq!(qsl(&["--help"]).0, 0);
}

#[test]
fn reports_are_byte_identical() {
    let runs: [&[&str]; 3] = [
        &["run", "--algorithm", "grover", "--xstar", "0110", "--mode", "sample", "--trials", "3000", "--seed", "8"],
        &["run", "--algorithm", "simon", "--s", "1010", "--perm", "random", "--seed", "4"],
        &["demo", "bb84", "--eve", "--rounds", "3000", "--seed", "2"],
    ];
    for args in runs {
        assert_eq!(qsl(args), qsl(args));
    }
    let a = qsl(&["run", "--algorithm", "grover", "--xstar", "011", "--mode", "sample", "--seed", "1"]);
    let b = qsl(&["run", "--algorithm", "grover", "--xstar", "011", "--mode", "sample", "--seed", "2"]);
    assert_ne!(a.1, b.1);
}

#[test]
fn csv_output() {
    let (code, out, _) = qsl(&["run", "--algorithm", "shor15", "--a", "11", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out, "outcome,probability\n000,0.5\n100,0.5\n");
}

#[test]
fn demos_and_catalog() {
    let ghz = json(&["demo", "ghz"]);
    assert_eq!(ghz["results"]["toffoli"]["conditional_entropy_bits"], 0.0);
    assert_eq!(ghz["results"]["cnot"]["conditional_entropy_bits"], 1.0);
    let singlet = json(&["demo", "singlet"]);
    assert_eq!(singlet["results"], serde_json::json!({ "Z": "-", "X": "-", "Y": "+" }));
    let cat = json(&["catalog", "dj3"]);
    let entries = cat["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 72);
    assert!(entries.iter().all(|e| e["correct"] == true));
}

#[test]
fn binary_uses_seed_from_environment() {
    let bin = env!("CARGO_BIN_EXE_qsl");
    let args = ["run", "--algorithm", "grover", "--xstar", "11", "--mode", "sample", "--trials", "500"];
    let env_run = Command::new(bin).args(args).env("QSL_SEED", "42").output().unwrap();
    let flag_run = Command::new(bin).args(args).args(["--seed", "42"]).env_remove("QSL_SEED").output().unwrap();
    assert!(env_run.status.success());
    assert_eq!(env_run.stdout, flag_run.stdout);
    let v: Value = serde_json::from_slice(&env_run.stdout).unwrap();
    assert_eq!(v["seed"], 42);

    let unknown = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(unknown.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("Usage"));
}
