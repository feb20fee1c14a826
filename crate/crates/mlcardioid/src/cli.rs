//! Command-line front end: JSON machine output on stdout, human diagnostics
//! on stderr. Exit codes: 0 success, 1 verification failure, 2 usage or
//! parameter error.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use crate::bounds::{sharp_bound_root, BoundOrigin, BoundQuery};
use crate::briot_bouquet::DominantSpec;
use crate::cardioid::CardioidRegion;
use crate::series::{apply_operator, bernardi, PowerSeries};
use crate::special::{mittag_leffler, MLParams};
use crate::svg::{emit_svg, Curve, PlotSpec};
use crate::verify::{
    randomized_sweep, verify_dominant_theorem, verify_re_part_theorem_with, DominantTheorem,
    Grid, SchwarzFn, VerificationReport,
};
use crate::{Error, Result};

const EXIT_OK: i32 = 0;
const EXIT_VERIFICATION_FAILURE: i32 = 1;
const EXIT_USAGE: i32 = 2;

fn parse_complex(s: &str) -> std::result::Result<Complex64, String> {
    let mut parts = s.splitn(2, ',');
    let re = parts
        .next()
        .unwrap_or_default()
        .trim()
        .parse::<f64>()
        .map_err(|e| format!("bad real part in {s:?}: {e}"))?;
    let im = match parts.next() {
        Some(p) => p.trim().parse::<f64>().map_err(|e| format!("bad imaginary part in {s:?}: {e}"))?,
        None => 0.0,
    };
    Ok(Complex64::new(re, im))
}

#[derive(Parser)]
#[command(
    name = "mlcardioid",
    version,
    about = "Mittag-Leffler convolution operators, cardioid geometry, and dominant verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    Thm21,
    Thm22,
    Thm23,
    Thm31,
    Thm32,
    Thm33,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SchwarzArg {
    Identity,
    Monomial,
    Blaschke,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PlotKind {
    Cardioid,
    Dominant,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the three-parameter Mittag-Leffler function at z
    MlEval {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        gamma: f64,
        /// Complex argument as RE or RE,IM
        #[arg(long, value_parser = parse_complex)]
        z: Complex64,
        #[arg(long, default_value_t = 1e-14)]
        tol: f64,
    },
    /// Apply the convolution operator to a series file
    OpApply {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        gamma: f64,
        /// JSON series file: {"coeffs": [[re, im], ...]}
        #[arg(long)]
        series: PathBuf,
        /// Apply the Bernardi operator with this sigma first
        #[arg(long)]
        bernardi: Option<f64>,
    },
    /// Evaluate the best dominant q at z
    Dominant {
        /// Effective exponent a = mu + eta
        #[arg(long)]
        a: f64,
        #[arg(long, default_value_t = 1.0)]
        eta: f64,
        #[arg(long, value_parser = parse_complex)]
        z: Complex64,
        #[arg(long, default_value_t = 64)]
        order: usize,
        /// Also report the differential-equation residual at z
        #[arg(long)]
        residual: bool,
    },
    /// Sharp lower bound for a real-part theorem
    Bound {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        sigma: Option<f64>,
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        zeta: f64,
    },
    /// Verify a single theorem or run a randomized sweep
    Verify {
        #[arg(long, value_enum)]
        theorem: Option<TheoremArg>,
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        sigma: Option<f64>,
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        zeta: f64,
        #[arg(long, value_enum, default_value_t = SchwarzArg::Identity)]
        schwarz: SchwarzArg,
        #[arg(long, default_value_t = 2)]
        schwarz_k: u32,
        #[arg(long, default_value_t = 0.0)]
        schwarz_theta: f64,
        #[arg(long, value_parser = parse_complex, default_value = "0.3")]
        schwarz_a: Complex64,
        /// Run a randomized sweep over all theorem families
        #[arg(long)]
        sweep: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Test hook: add an offset to the sharp bound to force failures
        #[arg(long, hide = true, default_value_t = 0.0)]
        inflate_bound: f64,
    },
    /// Emit an SVG plot of the cardioid boundary or a dominant image
    PlotSvg {
        #[arg(value_enum)]
        kind: PlotKind,
        /// Effective exponent for the dominant plot
        #[arg(long)]
        a: Option<f64>,
        #[arg(long, default_value_t = 1.0)]
        eta: f64,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 2048)]
        samples: usize,
    },
}

#[derive(Serialize)]
struct ValueOut {
    value: [f64; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<[f64; 2]>,
}

#[derive(Serialize)]
struct BoundOut {
    c: f64,
    bound: f64,
}

/// Parses `args` (including the program name) and runs one subcommand.
/// Returns the process exit code.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };

    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn require(name: &str, v: Option<f64>) -> Result<f64> {
    v.ok_or_else(|| Error::Param(format!("--{name} is required for this theorem")))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::MlEval { alpha, beta, gamma, z, tol } => {
            let p = MLParams::new(alpha, beta, gamma)?;
            let v = mittag_leffler(&p, z, tol)?;
            let payload = ValueOut { value: [v.re, v.im], residual: None };
            writeln!(out, "{}", serde_json::to_string(&payload)?)?;
            Ok(EXIT_OK)
        }
        Command::OpApply { alpha, beta, gamma, series, bernardi: sigma } => {
            let p = MLParams::new(alpha, beta, gamma)?;
            let text = std::fs::read_to_string(&series)
                .map_err(|e| Error::Io(format!("{}: {e}", series.display())))?;
            let mut f = PowerSeries::from_json(&text)?;
            if let Some(s) = sigma {
                f = bernardi(s, &f)?;
            }
            let result = apply_operator(&p, &f)?;
            writeln!(out, "{}", result.to_json())?;
            Ok(EXIT_OK)
        }
        Command::Dominant { a, eta, z, order, residual } => {
            let spec = DominantSpec::generic(eta, a - eta)?;
            let ev = spec.evaluator(order);
            let q = ev.evaluate(z)?;
            let res = if residual {
                let r = ev.ode_residual(z)?;
                Some([r.re, r.im])
            } else {
                None
            };
            let payload = ValueOut { value: [q.re, q.im], residual: res };
            writeln!(out, "{}", serde_json::to_string(&payload)?)?;
            Ok(EXIT_OK)
        }
        Command::Bound { theorem, gamma, alpha, beta, sigma, lambda, zeta } => {
            let origin = bound_origin(theorem, gamma, alpha, beta, sigma, lambda)?;
            let query = BoundQuery::from_origin(origin, zeta)?;
            let payload = BoundOut { c: query.c, bound: sharp_bound_root(&query)? };
            writeln!(out, "{}", serde_json::to_string(&payload)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            theorem,
            gamma,
            alpha,
            beta,
            sigma,
            lambda,
            zeta,
            schwarz,
            schwarz_k,
            schwarz_theta,
            schwarz_a,
            sweep,
            seed,
            trials,
            inflate_bound,
        } => {
            let reports: Vec<VerificationReport> = if sweep {
                if trials == 0 {
                    return Err(Error::Param("--trials must be at least 1".into()));
                }
                randomized_sweep(seed, trials)
            } else if let Some(tag) = theorem {
                let grid = Grid::default_polar();
                let report = match tag {
                    TheoremArg::Thm21 | TheoremArg::Thm22 | TheoremArg::Thm23 => {
                        let origin = bound_origin(tag, gamma, alpha, beta, sigma, lambda)?;
                        let sf = match schwarz {
                            SchwarzArg::Identity => SchwarzFn::identity(),
                            SchwarzArg::Monomial => SchwarzFn::monomial(schwarz_k, schwarz_theta)?,
                            SchwarzArg::Blaschke => SchwarzFn::blaschke_times_z(schwarz_a)?,
                        };
                        verify_re_part_theorem_with(&origin, zeta, &sf, &grid, inflate_bound)?
                    }
                    TheoremArg::Thm31 => verify_dominant_theorem(
                        &DominantTheorem::Thm31 { gamma: require("gamma", gamma)? },
                        &grid,
                        64,
                    )?,
                    TheoremArg::Thm32 => verify_dominant_theorem(
                        &DominantTheorem::Thm32 {
                            alpha: require("alpha", alpha)?,
                            beta: require("beta", beta)?,
                        },
                        &grid,
                        64,
                    )?,
                    TheoremArg::Thm33 => verify_dominant_theorem(
                        &DominantTheorem::Thm33 { sigma: require("sigma", sigma)? },
                        &grid,
                        64,
                    )?,
                };
                vec![report]
            } else {
                return Err(Error::Param("verify needs --sweep or --theorem".into()));
            };

            writeln!(out, "{}", serde_json::to_string(&reports)?)?;
            if reports.iter().any(|r| r.counterexample) {
                Ok(EXIT_VERIFICATION_FAILURE)
            } else {
                Ok(EXIT_OK)
            }
        }
        Command::PlotSvg { kind, a, eta, out: out_path, samples } => {
            let region = CardioidRegion::new(samples);
            let mut boundary: Vec<Complex64> = region.boundary().to_vec();
            boundary.push(boundary[0]); // close the loop
            let mut curves = vec![Curve { label: "cardioid".into(), points: boundary }];
            if kind == PlotKind::Dominant {
                let a = require("a", a)?;
                let spec = DominantSpec::generic(eta, a - eta)?;
                let ev = spec.evaluator(64);
                let mut image = Vec::with_capacity(samples + 1);
                for k in 0..samples {
                    let z = Complex64::from_polar(
                        0.99,
                        std::f64::consts::TAU * k as f64 / samples as f64,
                    );
                    image.push(ev.evaluate(z)?);
                }
                image.push(image[0]);
                curves.push(Curve { label: format!("dominant a={a}"), points: image });
            }
            let svg = emit_svg(&PlotSpec::new(curves));
            match out_path {
                Some(path) => std::fs::write(&path, svg)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
                None => write!(out, "{svg}")?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn bound_origin(
    theorem: TheoremArg,
    gamma: Option<f64>,
    alpha: Option<f64>,
    beta: Option<f64>,
    sigma: Option<f64>,
    lambda: Option<f64>,
) -> Result<BoundOrigin> {
    match theorem {
        TheoremArg::Thm21 => Ok(BoundOrigin::Thm21 {
            gamma: require("gamma", gamma)?,
            lambda: require("lambda", lambda)?,
        }),
        TheoremArg::Thm22 => Ok(BoundOrigin::Thm22 {
            alpha: require("alpha", alpha)?,
            beta: require("beta", beta)?,
            lambda: require("lambda", lambda)?,
        }),
        TheoremArg::Thm23 => Ok(BoundOrigin::Thm23 {
            sigma: require("sigma", sigma)?,
            lambda: require("lambda", lambda)?,
        }),
        _ => Err(Error::Param("bound supports thm21, thm22 and thm23 only".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("0").unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(parse_complex("1.5,-2").unwrap(), Complex64::new(1.5, -2.0));
        assert_eq!(parse_complex("0.3, 0.2").unwrap(), Complex64::new(0.3, 0.2));
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("1.0,xyz").is_err());
    }

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("mlcardioid").chain(args.iter().copied());
        let code = run_from(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ml_eval_at_zero() {
        let (code, out, _) =
            run(&["ml-eval", "--alpha", "1", "--beta", "1", "--gamma", "1", "--z", "0"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"value":[1.0,0.0]}"#);
    }

    #[test]
    fn bound_thm21_contract() {
        let (code, out, _) = run(&[
            "bound", "--theorem", "thm21", "--gamma", "1", "--lambda", "1", "--zeta", "1",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"c":1.0,"bound":0.7222222222222222}"#);
    }

    #[test]
    fn usage_error_exits_two() {
        let (code, _, err) = run(&["bound", "--theorem", "thm21", "--gamma", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("lambda"));

        let (code, _, _) = run(&["no-such-command"]);
        assert_eq!(code, 2);

        let (code, _, _) = run(&["ml-eval", "--alpha", "-1", "--beta", "1", "--gamma", "1", "--z", "0"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn verify_needs_mode() {
        let (code, _, err) = run(&["verify"]);
        assert_eq!(code, 2);
        assert!(err.contains("--sweep") || err.contains("--theorem"));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("ml-eval"));
    }
}
