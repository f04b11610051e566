use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn qspc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qspc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn random_input(dir: &TempDir, d: usize, delta: &str) -> PathBuf {
    let path = dir.path().join("p.json");
    let out = qspc(&[
        "generate", "--family", "random", "--d", &d.to_string(), "--delta", delta, "--seed", "3", "-o",
        s(&path),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn required_n_prints_grid_size() {
    let out = qspc(&["required-n", "--eps", "1e-6", "--delta", "0.2", "--d", "100"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "20144");
}

#[test]
fn complement_known_delta_then_metrics() {
    let dir = TempDir::new().unwrap();
    let p = random_input(&dir, 12, "0.2");
    let q = dir.path().join("q.json");
    let out = qspc(&["complement", s(&p), "--delta", "0.2", "--n", "4096", "-o", s(&q)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&q);
    assert_eq!(doc["coeffs"].as_array().unwrap().len(), 13);
    assert_eq!(doc["diagnostics"]["n_used"], 4096);

    let out = qspc(&["metrics", s(&p), s(&q)]);
    assert!(out.status.success());
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["loss_tilde"].as_f64().unwrap() < 1e-12);
    assert!(report["phi_grid"].as_f64().unwrap() < 1e-12);
}

#[test]
fn complement_downscaled_meets_eps() {
    let dir = TempDir::new().unwrap();
    let p = random_input(&dir, 6, "0");
    let q = dir.path().join("q.json");
    let out = qspc(&["complement", s(&p), "--eps", "1e-3", "-o", s(&q)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(&stdout(&qspc(&["metrics", s(&p), s(&q)]))).unwrap();
    assert!(report["phi_l1_upper"].as_f64().unwrap() < 1e-3);
}

#[test]
fn complement_auto_reports_diagnostics() {
    let dir = TempDir::new().unwrap();
    let p = random_input(&dir, 20, "0.2");
    let out = qspc(&["complement", s(&p), "--auto", "--target", "1e-12"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc["diagnostics"]["loss"].as_f64().unwrap() <= 1e-12);
    assert!(doc["diagnostics"]["n_used"].as_u64().unwrap().is_power_of_two());
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", "{\"degree\": 1, \"coeffs\": [[0.5, 0.0]]}");
    let out = qspc(&["complement", s(&bad), "--n", "64"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("coeffs"));

    let missing = dir.path().join("missing.json");
    assert_eq!(qspc(&["complement", s(&missing), "--n", "64"]).status.code(), Some(3));
    assert_eq!(qspc(&["complement", "--no-such-flag"]).status.code(), Some(3));

    // |P| reaches 1 at z = 1, a grid point, so strict mode must refuse.
    let touching = write(&dir, "p.json", "{\"degree\": 1, \"coeffs\": [[0.5, 0.0], [0.5, 0.0]]}");
    let out = qspc(&["complement", s(&touching), "--n", "64", "--strict"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("grid point 0"));

    let out = qspc(&["required-n", "--eps", "1e-6", "--delta", "1.5", "--d", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(qspc(&["--help"]).status.success());
}

#[test]
fn clamp_mode_warns_with_rotation_hint() {
    let dir = TempDir::new().unwrap();
    let touching = write(&dir, "p.json", "{\"degree\": 1, \"coeffs\": [[0.5, 0.0], [0.5, 0.0]]}");
    let out = qspc(&["complement", s(&touching), "--n", "64"]);
    assert!(out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("clamped") && err.contains("pi/(4N)"));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["diagnostics"]["clamped_points"], 1);
}

#[test]
fn generate_signum_has_expected_degree() {
    let out = qspc(&["generate", "--family", "signum", "--a", "0.1", "--eps", "1e-4"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["degree"], 199);
    assert_eq!(doc["basis"], "chebyshev");
    assert_eq!(doc["parity"], "odd");

    let out = qspc(&["generate", "--family", "signum", "--a", "0.1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn convert_chebyshev_to_circle_and_laurent() {
    let dir = TempDir::new().unwrap();
    let cheb = write(
        &dir,
        "t1.json",
        "{\"degree\": 1, \"basis\": \"chebyshev\", \"parity\": \"odd\", \"coeffs\": [[0.0, 0.0], [1.0, 0.0]]}",
    );
    let circle = dir.path().join("c.json");
    let out = qspc(&["convert", s(&cheb), "--from", "cheb", "--mode", "parity", "-o", s(&circle)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&circle);
    assert_eq!(doc["coeffs"], serde_json::json!([[0.5, 0.0], [0.5, 0.0]]));

    let out = qspc(&["convert", s(&circle), "--from", "circle", "--to", "laurent"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["min_exp"], -1);
    assert_eq!(doc["coeffs"], serde_json::json!([[0.5, 0.0], [0.0, 0.0], [0.5, 0.0]]));
}

#[test]
fn bench_csv_is_deterministic() {
    let args = [
        "bench", "--family", "random", "--d", "16,32", "--delta", "0.2", "--n-from", "64", "--n-to", "512",
        "--seed", "7", "--no-timing",
    ];
    let first = qspc(&args);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    let text = stdout(&first);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("d,N,loss,phi_grid,runtime_ms,clamped_points"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.len() == 6 && r[4] == "0.000"));
    assert_eq!(rows[0][..2], ["16", "64"]);
    assert_eq!(rows[7][..2], ["32", "512"]);
    assert_eq!(stdout(&qspc(&args)), text);

    let threaded = Command::new(env!("CARGO_BIN_EXE_qspc"))
        .args(args)
        .env("QSPC_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(stdout(&threaded), text);
}

#[test]
fn oracle_check_passes_small_sweep() {
    let out = qspc(&["oracle-check", "--d", "1,2,3", "--seeds", "4"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.to_string().contains("max"));
}
