//! End-to-end CLI tests through the real binary: file I/O, JSON round trips,
//! SVG output, and the exit-code contract.

use std::process::Command;

use mlcardioid::series::PowerSeries;
use mlcardioid::Complex64;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mlcardioid"))
}

#[test]
fn op_apply_round_trips_series_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("series.json");
    let f = PowerSeries::new(vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.37, -0.21),
        Complex64::new(-0.125, 3e-17),
    ])
    .unwrap();
    std::fs::write(&path, f.to_json()).unwrap();

    let out = bin()
        .args(["op-apply", "--alpha", "1", "--beta", "1", "--gamma", "1"])
        .arg("--series")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let parsed = PowerSeries::from_json(text.trim()).unwrap();
    // format round trip is bit-exact
    assert_eq!(parsed.to_json(), text.trim());
    // exp-case coefficients: a_{n+1}/n!
    assert!((parsed.coeff(2) - Complex64::new(0.37, -0.21)).norm() < 1e-15);
    assert!((parsed.coeff(3) - Complex64::new(-0.125, 3e-17) / 2.0).norm() < 1e-15);

    // the output is valid input again
    let path2 = dir.path().join("series2.json");
    std::fs::write(&path2, text.trim()).unwrap();
    let out2 = bin()
        .args(["op-apply", "--alpha", "2", "--beta", "1.5", "--gamma", "1", "--bernardi", "1"])
        .arg("--series")
        .arg(&path2)
        .output()
        .unwrap();
    assert!(out2.status.success());
}

#[test]
fn op_apply_missing_file_is_usage_error() {
    let out = bin()
        .args(["op-apply", "--alpha", "1", "--beta", "1", "--gamma", "1", "--series", "/nonexistent.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ml_eval_complex_argument() {
    let out = bin()
        .args(["ml-eval", "--alpha", "1", "--beta", "1", "--gamma", "1", "--z", "0.3,0.4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let re = v["value"][0].as_f64().unwrap();
    let im = v["value"][1].as_f64().unwrap();
    let want = Complex64::new(0.3, 0.4).exp();
    assert!((Complex64::new(re, im) - want).norm() < 1e-12);
}

#[test]
fn dominant_cli_value_and_residual() {
    let out = bin()
        .args(["dominant", "--a", "2", "--z", "0.3,0.2", "--residual"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let res = Complex64::new(
        v["residual"][0].as_f64().unwrap(),
        v["residual"][1].as_f64().unwrap(),
    );
    assert!(res.norm() < 1e-8);
    // a < eta makes mu negative: parameter error
    let bad = bin().args(["dominant", "--a", "0.5", "--z", "0.1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_single_theorem_reports() {
    let out = bin()
        .args(["verify", "--theorem", "thm31", "--gamma", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let report = &v.as_array().unwrap()[0];
    assert_eq!(report["theorem"], "thm31");
    assert_eq!(report["counterexample"], false);

    // inapplicable hypothesis is a parameter-level refusal, not a failure
    let out = bin()
        .args(["verify", "--theorem", "thm31", "--gamma", "0.5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // sharp-bound theorem with a Blaschke Schwarz function
    let out = bin()
        .args([
            "verify", "--theorem", "thm22", "--alpha", "2", "--beta", "3", "--lambda", "0.5",
            "--zeta", "2", "--schwarz", "blaschke", "--schwarz-a", "0.4,0.2",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_sweep_deterministic_output() {
    let run = || {
        bin()
            .args(["verify", "--sweep", "--seed", "42", "--trials", "24"])
            .output()
            .unwrap()
    };
    let a = run();
    let b = run();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let c = bin()
        .args(["verify", "--sweep", "--seed", "7", "--trials", "24"])
        .output()
        .unwrap();
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn plot_svg_cardioid_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cardioid.svg");
    let out = bin()
        .args(["plot-svg", "cardioid", "--samples", "512"])
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<polyline").count(), 1);

    // the boundary passes through h_c(1) = 3 and the cusp h_c(-1) = 1/3
    let region = mlcardioid::cardioid::CardioidRegion::new(512);
    let hits_3 = region.boundary().iter().any(|w| (w - Complex64::new(3.0, 0.0)).norm() < 1e-12);
    let hits_cusp = region
        .boundary()
        .iter()
        .any(|w| (w - Complex64::new(1.0 / 3.0, 0.0)).norm() < 1e-12);
    assert!(hits_3 && hits_cusp);
}

#[test]
fn plot_svg_dominant_has_two_curves() {
    let out = bin()
        .args(["plot-svg", "dominant", "--a", "2", "--samples", "256"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    assert_eq!(svg.matches("<polyline").count(), 2);
    assert!(svg.contains("dominant a=2"));

    // byte-stable across runs
    let again = bin()
        .args(["plot-svg", "dominant", "--a", "2", "--samples", "256"])
        .output()
        .unwrap();
    assert_eq!(svg, String::from_utf8(again.stdout).unwrap());

    // dominant kind needs --a
    let missing = bin().args(["plot-svg", "dominant"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn version_and_help() {
    let out = bin().arg("--version").output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("mlcardioid"));
}
