//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use std::f64::consts::TAU;

use mlcardioid::bounds::{sharp_bound, BoundOrigin};
use mlcardioid::briot_bouquet::{dominant, ode_residual, p_condition_margin, DominantSpec};
use mlcardioid::cardioid::{hc, min_real_on_circle, quartic_value, region};
use mlcardioid::series::{identity_residual, IdentityKind, PowerSeries};
use mlcardioid::special::{gamma, mittag_leffler, MLParams};
use mlcardioid::verify::{randomized_sweep, verify_re_part_theorem, Grid, SchwarzFn};
use mlcardioid::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(criterion: u32, description: &str, pass: bool, detail: String) {
    println!(
        "acceptance criterion {criterion}: {} — {description} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed: {description}: {detail}");
}

#[test]
fn criterion_01_special_functions() {
    let p = MLParams::new(1.0, 1.0, 1.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut max_err = 0.0f64;
    for _ in 0..100 {
        let z = Complex64::from_polar(rng.gen_range(0.0..0.9), rng.gen_range(0.0..TAU));
        let err = (mittag_leffler(&p, z, 1e-15).unwrap() - z.exp()).norm();
        max_err = max_err.max(err);
    }
    let g5 = gamma(Complex64::new(5.0, 0.0)).unwrap().re;
    let gh = gamma(Complex64::new(0.5, 0.0)).unwrap().re;
    let g5_err = (g5 - 24.0).abs() / 24.0;
    let gh_err = (gh - std::f64::consts::PI.sqrt()).abs() / std::f64::consts::PI.sqrt();
    let pass = max_err < 1e-12 && g5_err < 1e-12 && gh_err < 1e-12;
    report(
        1,
        "Mittag-Leffler matches exp; Gamma(5) and Gamma(1/2) exact",
        pass,
        format!("max |E-exp| = {max_err:.3e}, Gamma rel errors {g5_err:.3e}, {gh_err:.3e}"),
    );
}

#[test]
fn criterion_02_operator_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1dea);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let p = MLParams::new(
            rng.gen_range(0.5..3.0),
            rng.gen_range(0.5..3.0),
            rng.gen_range(0.5..3.0),
        )
        .unwrap();
        let sigma = rng.gen_range(-0.5..3.0);
        let mut coeffs = vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
        for _ in 2..=16 {
            coeffs.push(Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        }
        let f = PowerSeries::new(coeffs).unwrap();
        worst = worst.max(identity_residual(IdentityKind::Rec1, &p, None, &f).unwrap());
        worst = worst.max(identity_residual(IdentityKind::Rec2, &p, None, &f).unwrap());
        worst =
            worst.max(identity_residual(IdentityKind::BernardiInt, &p, Some(sigma), &f).unwrap());
    }
    report(
        2,
        "operator recurrences and Bernardi identity hold coefficientwise",
        worst < 1e-10,
        format!("worst residual = {worst:.3e} over 100 draws"),
    );
}

#[test]
fn criterion_03_sharp_bound() {
    let closed_err = (sharp_bound(1.0).unwrap() - 13.0 / 18.0).abs();

    let mut quad_err = 0.0f64;
    for c in [0.25, 0.5, 1.0, 2.0, 5.0, 10.0] {
        let quad = common::adaptive_quad(&|u| common::bound_integrand(c, u), 0.0, 1.0, 1e-12);
        quad_err = quad_err.max((sharp_bound(c).unwrap() - quad).abs());
    }

    let mut monotone = true;
    let mut in_range = true;
    let mut prev = f64::INFINITY;
    for k in 0..100 {
        // log grid from 1e-2 to 1e2
        let c = 10f64.powf(-2.0 + 4.0 * k as f64 / 99.0);
        let b = sharp_bound(c).unwrap();
        if b >= prev {
            monotone = false;
        }
        if !(0.5 < b && b < 1.0) {
            in_range = false;
        }
        prev = b;
    }

    let pass = closed_err < 1e-12 && quad_err < 1e-10 && monotone && in_range;
    report(
        3,
        "sharp bound closed form, quadrature agreement, monotonicity, range",
        pass,
        format!("closed-form gap {closed_err:.3e}, worst quadrature gap {quad_err:.3e}, monotone {monotone}, range {in_range}"),
    );
}

#[test]
fn criterion_04_cardioid_geometry() {
    let mut min_re_err = 0.0f64;
    for r in [0.1, 0.25, 0.4, 0.5] {
        let sampled = common::boundary_min_re(r, 4096);
        min_re_err = min_re_err.max((min_real_on_circle(r).unwrap() - sampled).abs());
    }

    let mut quartic_max = 0.0f64;
    for k in 0..256 {
        let w = hc(Complex64::from_polar(1.0, TAU * k as f64 / 256.0));
        quartic_max = quartic_max.max(quartic_value(w).abs());
    }

    let w1 = region().winding_number(Complex64::new(1.0, 0.0));
    let w4 = region().winding_number(Complex64::new(4.0, 0.0));

    let pass = min_re_err < 1e-6 && quartic_max < 1e-9 && w1 == 1 && w4 == 0;
    report(
        4,
        "minimum real part, quartic boundary locus, winding numbers",
        pass,
        format!("min-Re gap {min_re_err:.3e}, max |quartic| {quartic_max:.3e}, winding ({w1}, {w4})"),
    );
}

#[test]
fn criterion_05_dominant_ode() {
    let radii: Vec<f64> = (1..=17).map(|j| 0.5 * j as f64 / 17.0).collect();
    let mut max_residual = 0.0f64;
    let mut origin_exact = true;
    let mut max_truncation_gap = 0.0f64;
    for a in [1.0, 1.5, 2.0, 3.0, 5.0] {
        let spec = DominantSpec::generic(1.0, a - 1.0).unwrap();
        if dominant(&spec, Complex64::new(0.0, 0.0), 64).unwrap() != Complex64::new(1.0, 0.0) {
            origin_exact = false;
        }
        for &r in &radii {
            for k in 0..17 {
                let z = Complex64::from_polar(r, TAU * k as f64 / 17.0);
                max_residual = max_residual.max(ode_residual(&spec, z, 64).unwrap().norm());
                let gap =
                    (dominant(&spec, z, 64).unwrap() - dominant(&spec, z, 96).unwrap()).norm();
                max_truncation_gap = max_truncation_gap.max(gap);
            }
        }
    }
    let pass = max_residual < 1e-8 && origin_exact && max_truncation_gap < 1e-10;
    report(
        5,
        "dominant ODE residual, exact origin value, truncation stability",
        pass,
        format!("max residual {max_residual:.3e}, q(0)=1 exact {origin_exact}, N=64 vs 96 gap {max_truncation_gap:.3e}"),
    );
}

#[test]
fn criterion_06_dominant_subordination() {
    let mut all_inside = true;
    let mut worst = f64::NEG_INFINITY;
    for a in [1.0, 2.0, 5.0] {
        let spec = DominantSpec::generic(1.0, a - 1.0).unwrap();
        let ev = spec.evaluator(64);
        for r in [0.3, 0.6, 0.9] {
            for k in 0..64 {
                let z = Complex64::from_polar(r, TAU * k as f64 / 64.0);
                let q = ev.evaluate(z).unwrap();
                if !region().contains(q).unwrap_or(false) {
                    all_inside = false;
                }
                worst = worst.max(quartic_value(q));
            }
        }
    }
    report(
        6,
        "dominant values stay in the cardioid (q subordinate to h_c)",
        all_inside,
        format!("worst quartic value {worst:.3e} (negative = inside)"),
    );
}

#[test]
fn criterion_07_p_condition() {
    // 10^6-sample minimization oracle for min Re(4z/3 + 2z²/3) on |z| = 1
    let n = 1_000_000;
    let mut oracle_min = f64::INFINITY;
    for k in 0..n {
        let t = TAU * k as f64 / n as f64;
        oracle_min = oracle_min.min(4.0 / 3.0 * t.cos() + 2.0 / 3.0 * (2.0 * t).cos());
    }
    let err1 = (p_condition_margin(1.0) - (1.0 + oracle_min)).abs();
    let err2 = (p_condition_margin(2.0) - (2.0 + oracle_min)).abs();
    let pass = err1 < 1e-9 && err2 < 1e-9;
    report(
        7,
        "positivity margin matches the minimization oracle",
        pass,
        format!("margin(1) gap {err1:.3e}, margin(2) gap {err2:.3e}"),
    );
}

#[test]
fn criterion_08_theorem_sweeps() {
    // 200 trials per family; trials cycle through the six families
    let reports = randomized_sweep(42, 1200);
    let counterexamples = reports.iter().filter(|r| r.counterexample).count();
    let rerun = randomized_sweep(42, 1200);
    let deterministic = reports
        .iter()
        .zip(rerun.iter())
        .all(|(a, b)| a.to_json() == b.to_json());
    let pass = counterexamples == 0 && deterministic;
    report(
        8,
        "randomized sweeps find no counterexamples and are deterministic",
        pass,
        format!("{} trials, {counterexamples} counterexamples, deterministic {deterministic}", reports.len()),
    );
}

#[test]
fn criterion_09_sharpness() {
    let origin = BoundOrigin::Thm21 { gamma: 1.0, lambda: 1.0 };
    let near_extremal = Complex64::new(-0.5 + 1e-3, 0.0);
    let grid = Grid::from_points(vec![near_extremal]);
    let rep = verify_re_part_theorem(&origin, 1.0, &SchwarzFn::identity(), &grid).unwrap();
    let tight = rep.conclusion_pass && rep.conclusion_margin.abs() < 5e-3;

    // reconstructed hypothesis combination equals h_c coefficientwise
    let id = SchwarzFn::identity();
    let f = |z: Complex64| mlcardioid::verify::lambda_combination(1.0, &id, z);
    let h = 0.5;
    let c0 = f(Complex64::new(0.0, 0.0));
    let c1 = (f(Complex64::new(h, 0.0)) - f(Complex64::new(-h, 0.0))) / (2.0 * h);
    let c2 = (f(Complex64::new(h, 0.0)) + f(Complex64::new(-h, 0.0)) - c0 * 2.0) / (2.0 * h * h);
    let coeff_gap = (c0 - Complex64::new(1.0, 0.0))
        .norm()
        .max((c1 - Complex64::new(4.0 / 3.0, 0.0)).norm())
        .max((c2 - Complex64::new(2.0 / 3.0, 0.0)).norm());

    let pass = tight && coeff_gap < 1e-12;
    report(
        9,
        "extremal margin is tight and the hypothesis combination is exactly h_c",
        pass,
        format!("margin {:.3e}, coefficient gap {coeff_gap:.3e}", rep.conclusion_margin),
    );
}

#[test]
fn criterion_10_cli_contract() {
    use std::process::Command;
    let bin = env!("CARGO_BIN_EXE_mlcardioid");

    let bound = Command::new(bin)
        .args(["bound", "--theorem", "thm21", "--gamma", "1", "--lambda", "1", "--zeta", "1"])
        .output()
        .unwrap();
    let bound_ok = bound.status.success()
        && String::from_utf8_lossy(&bound.stdout).trim()
            == r#"{"c":1.0,"bound":0.7222222222222222}"#;

    let ml = Command::new(bin)
        .args(["ml-eval", "--alpha", "1", "--beta", "1", "--gamma", "1", "--z", "0"])
        .output()
        .unwrap();
    let ml_ok = ml.status.success()
        && String::from_utf8_lossy(&ml.stdout).trim() == r#"{"value":[1.0,0.0]}"#;

    let sweep = Command::new(bin)
        .args(["verify", "--sweep", "--seed", "42", "--trials", "100"])
        .output()
        .unwrap();
    let reports: serde_json::Value =
        serde_json::from_slice(&sweep.stdout).expect("sweep output is JSON");
    let sweep_ok = sweep.status.code() == Some(0) && reports.as_array().map(|a| a.len()) == Some(100);

    // golden-file stability of the SVG output
    let svg1 = Command::new(bin).args(["plot-svg", "cardioid"]).output().unwrap();
    let svg2 = Command::new(bin).args(["plot-svg", "cardioid"]).output().unwrap();
    let svg_ok = svg1.status.success() && svg1.stdout == svg2.stdout && !svg1.stdout.is_empty();

    // exit-code contract: usage error 2, forced verification failure 1
    let usage = Command::new(bin).args(["bound", "--theorem", "thm21"]).output().unwrap();
    let corrupted = Command::new(bin)
        .args([
            "verify", "--theorem", "thm21", "--gamma", "1", "--lambda", "1",
            "--inflate-bound", "0.5",
        ])
        .output()
        .unwrap();
    let exit_ok = usage.status.code() == Some(2) && corrupted.status.code() == Some(1);

    let pass = bound_ok && ml_ok && sweep_ok && svg_ok && exit_ok;
    report(
        10,
        "CLI outputs, SVG stability and exit codes match the contract",
        pass,
        format!("bound {bound_ok}, ml-eval {ml_ok}, sweep {sweep_ok}, svg {svg_ok}, exits {exit_ok}"),
    );
}
