use std::f64::consts::PI;
use std::fs;
use std::process::{Command, Output};

use plasma_sheet::sweep::Table;

const BIN: &str = env!("CARGO_BIN_EXE_plasma-sheet");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("PLASMA_SHEET_TOLERANCE").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json_table(o: &Output) -> Table {
    Table::from_json(&serde_json::from_slice(&o.stdout).unwrap()).unwrap()
}

#[test]
fn identical_runs_are_byte_identical() {
    for args in [
        &["casimir", "--omega-a-min", "0.1", "--omega-a-max", "100", "--count", "6", "--scale", "log"][..],
        &["sphere", "--k0r-min", "0.5", "--k0r-max", "20", "--count", "9", "--l", "3", "--format", "json"][..],
        &["functions", "--family", "f", "--x-min", "0.001", "--x-max", "1000", "--count", "7", "--scale", "log"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success(), "{}", stderr(&a));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["dispersion"]).status.code(), Some(0));
    let failing = run(&["reflection", "--k0-min", "0.5", "--k0-max", "1", "--count", "2"]);
    assert_eq!(failing.status.code(), Some(1));
    assert!(stdout(&failing).lines().nth(2).unwrap().contains("light cone"));
    assert_eq!(run(&["dispersion", "--omega", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["casimir", "--no-such-flag", "1"]).status.code(), Some(2));
    assert_eq!(run(&["casimir", "--config", "/nonexistent/config.toml"]).status.code(), Some(2));
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.toml");
    fs::write(&path, "command = \"reflection\"\nomega = 2.0\nkpar = 1.0\nformat = \"json\"\n").unwrap();
    let p = path.to_str().unwrap();
    let from_file = json_table(&run(&["reflection", "--config", p]));
    assert_eq!(from_file.reals("kpar_over_omega").unwrap(), vec![0.5]);
    let overridden = json_table(&run(&["reflection", "--config", p, "--omega", "4"]));
    assert_eq!(overridden.reals("kpar_over_omega").unwrap(), vec![0.25]);
    assert_eq!(overridden.metadata.config["omega"], serde_json::json!(4.0));
}

#[test]
fn unknown_config_key_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    fs::write(&path, "omega = 1.0\nkpar_typo = 3.0\n").unwrap();
    let out = run(&["dispersion", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("kpar_typo"), "{}", stderr(&out));
}

#[test]
fn config_for_another_command_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("other.toml");
    fs::write(&path, "command = \"casimir\"\n").unwrap();
    assert_eq!(run(&["dispersion", "--config", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn casimir_polder_reaches_ideal_sheet() {
    let table = json_table(&run(&["casimir-polder", "--omega-a", "1e6", "--isotropic-alpha", "1", "--a", "1", "--format", "json"]));
    let e = table.reals("a4_energy").unwrap()[0];
    let ideal = -13.0 / (160.0 * PI * PI);
    assert!(((e - ideal) / ideal).abs() < 1e-3, "{e} vs {ideal}");
}

#[test]
fn dispersion_residuals() {
    let table = json_table(&run(&[
        "dispersion", "--omega", "1", "--kpar-min", "1e-3", "--kpar-max", "1e3", "--count", "50", "--scale", "log",
        "--format", "json",
    ]));
    assert_eq!(table.rows.len(), 50);
    assert_eq!(table.failed_rows(), 0);
    for r in table.reals("relative_residual").unwrap() {
        assert!(r.abs() <= 1e-10, "{r}");
    }
    assert!(table.reals("te_mode_exists").unwrap().iter().all(|v| *v == 0.0));
}

#[test]
fn csv_file_gets_metadata_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let p = path.to_str().unwrap();
    let out = run(&["charge", "--omega-a-min", "0.5", "--omega-a-max", "5", "--count", "3", "--raw-units", "-o", p]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
    let csv = fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.starts_with("omega_a,a_electrostatic,a_kinetic,a_delta1,a_total,a,omega,"));
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("out.csv.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["tool"], "plasma-sheet");
    assert_eq!(meta["command"], "charge");
    assert_eq!(meta["config"]["raw-units"], true);
    let mut keys: Vec<&str> = meta.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort();
    assert_eq!(keys, ["command", "config", "tolerance", "tool", "version"]);
}

#[test]
fn tolerance_from_environment() {
    let out = Command::new(BIN)
        .args(["functions", "--format", "json"])
        .env("PLASMA_SHEET_TOLERANCE", "1e-6")
        .output()
        .unwrap();
    assert_eq!(json_table(&out).metadata.tolerance, 1e-6);
    let bad = Command::new(BIN).args(["functions"]).env("PLASMA_SHEET_TOLERANCE", "tight").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn sphere_scan_mode() {
    let table = json_table(&run(&[
        "sphere", "--mode", "scan", "--omega-r", "10", "--l-min", "1", "--l-max", "3", "--format", "json",
    ]));
    assert_eq!(table.reals("l").unwrap(), vec![1.0, 2.0, 3.0]);
    assert!(table.reals("zero_count").unwrap().iter().all(|v| *v == 0.0));
}

#[test]
fn every_subcommand_has_help() {
    for name in ["reflection", "dispersion", "casimir", "casimir-polder", "charge", "sphere", "functions"] {
        let out = run(&[name, "--help"]);
        assert!(out.status.success());
        assert!(stdout(&out).contains("--tolerance"));
    }
}

#[test]
fn functions_g_family_table() {
    let out = run(&["functions", "--family", "g", "--x-min", "0.01", "--x-max", "100", "--count", "50", "--scale", "log"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,g_te,g_tm,g_3,error"));
    assert_eq!(lines.count(), 50);
}
