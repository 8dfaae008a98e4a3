use std::path::Path;
use std::process::{Command, Output};

use rpoisson::lie::CATALOG;

fn rpoisson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rpoisson"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn every_catalog_entry_verifies() {
    for (name, _) in CATALOG {
        let o = rpoisson(&[
            "verify",
            "--catalog",
            name,
            "--samples",
            "16",
            "--degree-bound",
            "2",
        ]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{name}:\n{}{}",
            stdout(&o),
            stderr(&o)
        );
    }
}

#[test]
fn spec_file_with_generator_images_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "plane.json",
        r#"{"p": 3, "vars": ["x", "y"], "bracket": {"x,y": "1"}, "pmap": {"x": "0", "y": "0"}}"#,
    );
    let o = rpoisson(&["verify", "--spec", &spec, "--samples", "16"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("overall: pass\n"));
}

#[test]
fn semilinear_shift_fails_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "shift.json",
        r#"{"catalog": "classical2", "shift": {"x": "1"}}"#,
    );
    let o = rpoisson(&[
        "verify",
        "--spec",
        &spec,
        "--suite",
        "frobenius",
        "--samples",
        "16",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("[FAIL] square"), "{out}");
    assert!(out.contains("lhs:") && out.contains("rhs:"));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let even = write(dir.path(), "even.json", r#"{"p": 4, "vars": ["x"]}"#);
    let o = rpoisson(&["verify", "--spec", &even]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("p must be an odd prime"),
        "{}",
        stderr(&o)
    );

    let typo = write(
        dir.path(),
        "typo.json",
        "{\n  \"p\": 3,\n  \"brackt\": {}\n}",
    );
    let o = rpoisson(&["verify", "--spec", &typo]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let bad_poly = write(
        dir.path(),
        "poly.json",
        r#"{"p": 3, "vars": ["x", "y"], "bracket": {"x,y": "x +"}}"#,
    );
    let o = rpoisson(&["verify", "--spec", &bad_poly, "--suite", "poisson"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bracket"), "{}", stderr(&o));

    let o = rpoisson(&["verify", "--catalog", "no-such-entry"]);
    assert_eq!(o.status.code(), Some(2));
    let o = rpoisson(&["tograph", "--p", "5", "--n", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = rpoisson(&[
        "quantize",
        "--catalog",
        "trivial-extension",
        "--mode",
        "onesided",
        "--f",
        "x",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn non_constant_bracket_is_not_quantized() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "lin.json",
        r#"{"p": 3, "vars": ["x", "y"], "bracket": {"x,y": "x"}}"#,
    );
    let o = rpoisson(&[
        "quantize", "--spec", &spec, "--mode", "onesided", "--f", "x",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not constant"), "{}", stderr(&o));
}

#[test]
fn build_pmap_writes_a_table() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "plane.json",
        r#"{"p": 3, "vars": ["x", "y"], "bracket": {"x,y": "1"}, "pmap": {"x": "0", "y": "0"}}"#,
    );
    let out = dir.path().join("table.json");
    let o = rpoisson(&[
        "build-pmap",
        "--spec",
        &spec,
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let table: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let entries = table["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 10);
    assert!(entries
        .iter()
        .any(|e| e["monomial"] == "x*y" && e["value"] == "x*y"));
}

#[test]
fn build_pmap_names_a_missing_generator() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "partial.json",
        r#"{"p": 3, "vars": ["x", "y"], "bracket": {"x,y": "1"}, "pmap": {"x": "0"}}"#,
    );
    let o = rpoisson(&["build-pmap", "--spec", &spec]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("generator y"), "{}", stderr(&o));
}

#[test]
fn build_pmap_rejects_images_failing_the_jacobson_condition() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "bad.json",
        r#"{"p": 3, "vars": ["x", "y"], "bracket": {"x,y": "1"}, "pmap": {"x": "y", "y": "0"}}"#,
    );
    let o = rpoisson(&["build-pmap", "--spec", &spec]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    assert!(stderr(&o).contains("Jacobson"), "{}", stderr(&o));
}

#[test]
fn trivial_extension_table_is_finite() {
    let o = rpoisson(&["build-pmap", "--catalog", "trivial-extension", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["details"]["basis"], "finite");
    let mut keys: Vec<String> = v["details"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["monomial"].as_str().unwrap().to_string())
        .collect();
    keys.sort();
    assert_eq!(keys, ["1", "x", "y"]);
}

#[test]
fn quantize_reports_coefficients_and_closed_form() {
    let o = rpoisson(&[
        "quantize",
        "--catalog",
        "classical2",
        "--mode",
        "onesided",
        "--f",
        "xy",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["details"]["m"], serde_json::json!(["0", "x*y"]));
    assert_eq!(v["details"]["derived"], "x*y");
    assert_eq!(v["details"]["closed_form"], "x*y");
}

#[test]
fn tograph_census_for_small_orders() {
    let o = rpoisson(&["tograph", "--p", "3", "--n", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let classes = v["details"]["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0]["size"], "3");
    assert_eq!(classes[0]["divisible"], true);

    let o = rpoisson(&["tograph", "--p", "3", "--n", "2", "--f", "xy"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("combinatorial M_2 = x*y"));
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let runs: [&[&str]; 3] = [
        &["verify", "--catalog", "sl2-sym", "--seed", "7", "--json"],
        &[
            "quantize",
            "--catalog",
            "classical2-p5",
            "--mode",
            "onesided",
            "--f",
            "x^2 y + y^3",
            "--json",
        ],
        &[
            "lie-rinehart",
            "--catalog",
            "classical2",
            "--without-correction",
            "--samples",
            "8",
            "--json",
        ],
    ];
    for args in runs {
        let a = rpoisson(args);
        let b = rpoisson(args);
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
