//! End-to-end tests of the `todamap` binary: output contents, exit-code
//! contract, and byte-level determinism.

use std::process::{Command, Output};

fn todamap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_todamap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = todamap(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn kappa_planar_quartic_values() {
    let text = stdout(&["kappa", "--nu", "2", "--genus", "0", "--max-order", "3", "--format", "csv"]);
    assert_eq!(text, "n,kappa,source\n1,2,recursion\n2,36,recursion\n3,1728,recursion\n");
}

#[test]
fn kappa_resonant_rows_report_table_source() {
    let text = stdout(&["kappa", "--nu", "2", "--genus", "1", "--max-order", "1", "--format", "csv"]);
    assert!(text.contains("1,1,table"), "{text}");
    let text = stdout(&["kappa", "--nu", "4", "--genus", "2", "--max-order", "1", "--format", "csv"]);
    assert!(text.contains("1,21,table"), "{text}");
}

#[test]
fn kappa_unresolved_resonance_exits_2() {
    // genus 4 at nu=2 has a resonant order outside the built-in table
    let out = todamap(&["kappa", "--nu", "2", "--genus", "4", "--max-order", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unresolved resonant constant"), "{err}");
}

#[test]
fn closed_form_e1_log_coefficient() {
    let text = stdout(&["closed-form", "--target", "e", "--genus", "1", "--nu", "3"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["c_log_nu_term"], "-1/12");
    assert_eq!(v["c_log_z0_term"], "0");
}

#[test]
fn closed_form_z1_matches_known_shape() {
    let text = stdout(&["closed-form", "--target", "z", "--genus", "1", "--nu", "2"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    // (2/3) z (z-1)^2 / (2-z)^4
    assert_eq!(v["numerator"][1], "2/3");
    assert_eq!(v["denominator"][0], "16");
    assert_eq!(v["denominator"][4], "1");
}

#[test]
fn oracle_census_json_counts_are_strings() {
    let text = stdout(&["oracle", "--nu", "2", "--vertices", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["total"], "105");
    assert_eq!(v["disconnected"], "9");
    assert_eq!(v["by_genus"]["0"], "36");
    assert_eq!(v["by_genus"]["1"], "60");
}

#[test]
fn oracle_budget_refusal_exits_4() {
    let out = todamap(&["oracle", "--nu", "2", "--vertices", "5"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn invalid_parameters_exit_3() {
    assert_eq!(todamap(&["kappa", "--nu", "1", "--genus", "0"]).status.code(), Some(3));
    assert_eq!(todamap(&["oracle", "--nu", "2", "--vertices", "1", "--legs", "3"]).status.code(), Some(3));
    assert_eq!(todamap(&["no-such-command"]).status.code(), Some(3));
}

#[test]
fn crosscheck_passes_and_exits_0() {
    let text = stdout(&["crosscheck", "--nu", "3", "--genus", "2", "--max-order", "6"]);
    assert!(text.ends_with("all checks passed\n"), "{text}");
    assert!(text.contains("forcing route equivalence g=2"), "{text}");
    assert!(text.contains("two-leg census"), "{text}");
}

#[test]
fn identical_config_gives_byte_identical_output() {
    for args in [
        vec!["eg", "--nu", "2", "--genus", "2", "--max-order", "8", "--format", "json"],
        vec!["oracle", "--nu", "2", "--vertices", "3", "--threads", "4", "--format", "json"],
        vec!["two-time", "--nu", "2", "--nu2", "4", "--max-order", "4", "--format", "csv"],
    ] {
        assert_eq!(stdout(&args), stdout(&args), "{args:?}");
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let one = stdout(&["oracle", "--nu", "3", "--vertices", "2", "--threads", "1", "--format", "json"]);
    let many = stdout(&["oracle", "--nu", "3", "--vertices", "2", "--threads", "8", "--format", "json"]);
    assert_eq!(one, many);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("todamap-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("kappa.csv");
    let out = todamap(&[
        "kappa", "--nu", "2", "--genus", "0", "--max-order", "2", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "n,kappa,source\n1,2,recursion\n2,36,recursion\n");
}
