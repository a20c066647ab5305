//! End-to-end tests of the command-line binary: exit codes, output
//! formats, and failure messages.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_su2-metrology"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn bound_qubit_reports_value_and_probe() {
    let out = run(&[
        "bound", "--model", "qubit", "--phi1", "0.5", "--phi2", "0.5", "--theta",
        "1.5707963267948966",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("model qubit"));
    assert!(text.contains("feasible 1"));
    let bound: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("bound "))
        .expect("bound line")
        .parse()
        .expect("parseable bound");
    assert!((bound - 4.035203429331967).abs() < 1e-12);
    assert!(text.lines().any(|l| l.starts_with("probe bloch ")));
}

#[test]
fn bound_accepts_explicit_probes() {
    // +z Bloch probe is valid but suboptimal
    let out = run(&[
        "bound", "--model", "qubit", "--phi1", "0.5", "--phi2", "0.5", "--theta", "1.2",
        "--probe", "0,0,1",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let with_probe: f64 = stdout(&out)
        .lines()
        .find_map(|l| l.strip_prefix("bound "))
        .unwrap()
        .parse()
        .unwrap();
    let out = run(&[
        "bound", "--model", "qubit", "--phi1", "0.5", "--phi2", "0.5", "--theta", "1.2",
    ]);
    let optimal: f64 = stdout(&out)
        .lines()
        .find_map(|l| l.strip_prefix("bound "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(with_probe > optimal);

    // a mixed probe (norm < 1) is worse again
    let out = run(&[
        "bound", "--model", "qubit", "--phi1", "0.5", "--phi2", "0.5", "--theta", "1.2",
        "--probe", "0,0,0.6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mixed: f64 = stdout(&out)
        .lines()
        .find_map(|l| l.strip_prefix("bound "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(mixed > with_probe);

    // qutrit probe as six re,im components
    let out = run(&[
        "bound", "--model", "qutrit", "--phi1", "0.5", "--phi2", "0.5", "--theta", "1.2",
        "--probe", "0.5,0,0,0.70710678118654752,0.5,0",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));

    // wrong component count is a usage error
    let out = run(&[
        "bound", "--model", "qutrit", "--phi1", "0.5", "--phi2", "0.5", "--theta", "1.2",
        "--probe", "0,0,1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn commuting_axes_exit_infeasible() {
    let out = run(&[
        "bound", "--model", "qubit", "--phi1", "0.4", "--phi2", "0.9", "--theta", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("commuting encodings: estimation infeasible"));

    let out = run(&[
        "optimal-probe", "--model", "qutrit", "--phi1", "0.5", "--phi2", "0.5", "--theta",
        "3.141592653589793",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_errors_exit_one() {
    // theta outside [0, pi]
    let out = run(&[
        "bound", "--model", "qubit", "--phi1", "0.5", "--phi2", "0.5", "--theta", "4.0",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // weight matrix not positive definite
    let out = run(&[
        "bound", "--model", "qubit", "--phi1", "0.5", "--phi2", "0.5", "--theta", "1.0",
        "--w", "1,2,1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("weight matrix not positive definite"));

    // malformed weight triple
    let out = run(&[
        "bound", "--model", "qubit", "--phi1", "0.5", "--phi2", "0.5", "--theta", "1.0",
        "--w", "1,0.2",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // unknown flag and missing required flag are usage errors, not clap's
    // default exit 2
    let out = run(&["bound", "--nonsense"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["scan", "--model", "qubit", "--phi1", "0.5", "--phi2", "0.5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&["scan", "--help"]).status.code(), Some(0));
}

#[test]
fn optimal_probe_outputs() {
    let out = run(&[
        "optimal-probe", "--model", "qubit", "--phi1", "0.7", "--phi2", "-0.3", "--theta", "1.2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let probe_line = text.lines().find(|l| l.starts_with("probe bloch ")).expect("probe line");
    let comps: Vec<f64> = probe_line
        .trim_start_matches("probe bloch ")
        .split_whitespace()
        .map(|s| s.parse().expect("parseable component"))
        .collect();
    assert_eq!(comps.len(), 3);
    let norm = (comps[0].powi(2) + comps[1].powi(2) + comps[2].powi(2)).sqrt();
    assert!((norm - 1.0).abs() < 1e-12);
    assert!(comps[2] > 0.0, "canonical sign picks the upper hemisphere");

    let out = run(&[
        "optimal-probe", "--model", "qutrit", "--phi1", "0.7", "--phi2", "-0.3", "--theta", "1.2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l.starts_with("probe amplitudes m=+1 ")));
}

#[test]
fn scan_writes_well_formed_csv() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("curve.csv");
    let out = run(&[
        "scan", "--model", "qubit", "--phi1", "0.5", "--phi2", "0.5", "--theta-min", "0",
        "--theta-max", "3.141592653589793", "--steps", "9", "--out",
        path.to_str().expect("utf-8 path"),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));

    let text = std::fs::read_to_string(&path).expect("csv written");
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theta,bound,feasible"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 9);
    // the collinear endpoints are infeasible, the interior is not
    assert!(rows[0].ends_with(",inf,0"));
    assert!(rows[8].ends_with(",inf,0"));
    for row in &rows[1..8] {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 3);
        assert_eq!(fields[2], "1");
        assert!(fields[1].parse::<f64>().expect("finite bound").is_finite());
    }

    // unwritable output path
    let out = run(&[
        "scan", "--model", "qubit", "--phi1", "0.5", "--phi2", "0.5", "--theta-min", "0.1",
        "--theta-max", "1.0", "--steps", "3", "--out", "/nonexistent-dir/x.csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cannot write"));

    // inverted range
    let out = run(&[
        "scan", "--model", "qubit", "--phi1", "0.5", "--phi2", "0.5", "--theta-min", "2.0",
        "--theta-max", "1.0", "--steps", "3", "--out",
        dir.path().join("y.csv").to_str().expect("utf-8 path"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("invalid scan range"));
}

#[test]
fn verify_passes_and_writes_json() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("report.json");
    let out = run(&[
        "verify", "--seed", "3", "--budget", "40", "--json",
        path.to_str().expect("utf-8 path"),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 20);
    assert!(!text.contains("\nFAIL"));

    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).expect("json written"))
            .expect("valid json");
    let records = json.as_array().expect("array of records");
    assert_eq!(records.len(), text.lines().filter(|l| l.contains("max|err|")).count());
    for record in records {
        let obj = record.as_object().expect("object");
        assert_eq!(obj.len(), 4);
        for key in ["name", "max_abs_error", "tolerance", "pass"] {
            assert!(obj.contains_key(key), "missing {key}");
        }
        assert_eq!(obj["pass"], serde_json::Value::Bool(true));
    }
}

#[test]
fn verify_budget_zero_warns_and_exits_zero() {
    let out = run(&["verify", "--budget", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning"));
    assert_eq!(stdout(&out), "");
}
