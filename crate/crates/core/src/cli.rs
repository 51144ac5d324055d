//! Command-line front end. [`run`] is the whole program minus process
//! plumbing, so it can be driven from tests.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;

use crate::covariant::RicciConvention;
use crate::error::{Error, Result};
use crate::fields::Weights;
use crate::json;
use crate::quantization::{alpha, betas, is_resonant, quantize, quantize_with, Coefficient, ResonantCase};
use crate::rational::{self, format_rational, parse_rational, Rational};
use crate::verification::{run_all, run_suite, Suite, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "projquant", version, about = "Projectively invariant quantization with exact arithmetic")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the quantization coefficients for the given weights.
    Coeffs(WeightArgs),
    /// Quantize a symbol over a connection read from a JSON file.
    Quantize(QuantizeArgs),
    /// Run the verification suites and write a JSON report.
    Verify(VerifyArgs),
    /// Run every suite at the default configuration.
    Selftest,
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value = "1/2", value_parser = rational_arg, allow_hyphen_values = true)]
    pub lambda: Rational,
    #[arg(long, default_value = "1/2", value_parser = rational_arg, allow_hyphen_values = true)]
    pub mu: Rational,
}

#[derive(Debug, Args)]
pub struct QuantizeArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Defaults to standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub lambda: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub mu: Option<Rational>,
    /// Resonant case (1, 2 or 3); required at resonant weights.
    #[arg(long, value_parser = case_arg)]
    pub case: Option<ResonantCase>,
    /// Free coefficient of resonant case 1.
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub beta2: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub weights: WeightArgs,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    /// One of invariance, flat-reduction, sl-equivariance, table1; all by default.
    #[arg(long, value_parser = suite_arg)]
    pub suite: Option<Suite>,
    #[arg(long, value_parser = case_arg)]
    pub case: Option<ResonantCase>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    pub beta2: Option<Rational>,
    /// Add 1 to one coefficient (alpha, beta1, beta2, beta3).
    #[arg(long, value_parser = coefficient_arg)]
    pub perturb: Option<Coefficient>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn case_arg(s: &str) -> std::result::Result<ResonantCase, String> {
    let id: u8 = s.parse().map_err(|_| format!("`{s}` is not a case number"))?;
    ResonantCase::from_id(id).map_err(|e| e.to_string())
}

fn suite_arg(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn coefficient_arg(s: &str) -> std::result::Result<Coefficient, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let result = match cfg.command {
        Command::Coeffs(a) => cmd_coeffs(&a, out),
        Command::Quantize(a) => cmd_quantize(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Selftest => cmd_selftest(out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Schema(format!("i/o: {e}"))
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| Error::Schema(format!("{}: {e}", p.display()))),
        None => writeln!(out, "{text}").map_err(io_err),
    }
}

/// `alpha=… beta1=… beta2=… beta3=…`, or the matching resonant cases.
pub fn cmd_coeffs(a: &WeightArgs, out: &mut dyn Write) -> Result<i32> {
    if a.n < 1 {
        return Err(Error::UnsupportedDimension { n: a.n, reason: "n must be at least 1" });
    }
    let w = Weights::new(a.lambda.clone(), a.mu.clone());
    let delta = w.delta();
    let mut fields = Vec::new();
    match alpha(&w) {
        Ok(al) => fields.push(format!("alpha={}", format_rational(&al))),
        Err(_) if w.lambda.is_zero() => fields.push("alpha=0".to_string()),
        Err(_) => fields.push("alpha=none".to_string()),
    }
    if a.n >= 2 && !is_resonant(a.n, &delta) {
        let c = betas(a.n, &w)?;
        for (name, v) in ["beta1", "beta2", "beta3"].iter().zip(c.betas()?) {
            fields.push(format!("{name}={}", format_rational(&v)));
        }
    }
    writeln!(out, "{}", fields.join(" ")).map_err(io_err)?;
    if a.n >= 2 && is_resonant(a.n, &delta) {
        writeln!(
            out,
            "delta={} is resonant; the generic coefficients are undefined",
            format_rational(&delta)
        )
        .map_err(io_err)?;
        for case in ResonantCase::with_delta(a.n, &delta) {
            writeln!(out, "{}", case_row(a.n, case, &w)).map_err(io_err)?;
        }
    }
    Ok(EXIT_OK)
}

fn case_row(n: usize, case: ResonantCase, w: &Weights) -> String {
    let cw = case.weights(n);
    let c = case.coeffs(n, &rational::zero());
    let [b1, b2, b3] = c.betas().expect("resonant cases carry betas");
    let (b1, b2) = match case {
        ResonantCase::Upper => ("2*beta2".to_string(), "free".to_string()),
        _ => (format_rational(&b1), format_rational(&b2)),
    };
    let here = if &cw == w { " (these weights)" } else { "" };
    format!(
        "case {}: lambda={} mu={} beta1={b1} beta2={b2} beta3={}{here}",
        case.id(),
        format_rational(&cw.lambda),
        format_rational(&cw.mu),
        format_rational(&b3),
    )
}

pub fn cmd_quantize(a: &QuantizeArgs, out: &mut dyn Write) -> Result<i32> {
    let text = fs::read_to_string(&a.input).map_err(|e| Error::Schema(format!("{}: {e}", a.input.display())))?;
    let (g, t) = json::quantize_input_from_json(&text)?;
    let n = g.n();
    let op = match a.case {
        Some(case) => {
            let cw = case.weights(n);
            for (given, expected, name) in [(&a.lambda, &cw.lambda, "lambda"), (&a.mu, &cw.mu, "mu")] {
                if let Some(v) = given {
                    if v != expected {
                        return Err(Error::WeightMismatch {
                            expected: format!("{name}={} for case {}", format_rational(expected), case.id()),
                            found: format_rational(v),
                        });
                    }
                }
            }
            let b2 = a.beta2.clone().unwrap_or_else(rational::zero);
            quantize_with(&g, &t, &cw, &case.coeffs(n, &b2), RicciConvention::Invariant)?
        }
        None => {
            if a.beta2.is_some() {
                return Err(Error::Schema("--beta2 is only meaningful with --case 1".into()));
            }
            let w = Weights::new(
                a.lambda.clone().unwrap_or_else(|| rational::rat(1, 2)),
                a.mu.clone().unwrap_or_else(|| rational::rat(1, 2)),
            );
            let delta = w.delta();
            if t.has_deg2() && is_resonant(n, &delta) {
                let ids: Vec<String> = ResonantCase::with_delta(n, &delta)
                    .iter()
                    .map(|c| c.id().to_string())
                    .collect();
                return Err(Error::ResonantWeight {
                    delta: format_rational(&delta),
                    hint: format!(
                        "pick one of the resonant cases with --case ({}); their weights are listed by `coeffs`",
                        ids.join(" or ")
                    ),
                });
            }
            quantize(&g, &t, &w)?
        }
    };
    emit(out, a.out.as_ref(), &json::diffop_to_json(&op))?;
    Ok(EXIT_OK)
}

pub fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    if a.weights.n < 1 {
        return Err(Error::UnsupportedDimension { n: a.weights.n, reason: "n must be at least 1" });
    }
    let cfg = SuiteConfig {
        n: a.weights.n,
        weights: Weights::new(a.weights.lambda.clone(), a.weights.mu.clone()),
        seed: a.seed,
        samples: a.samples,
        perturb: a.perturb,
        case: a.case,
        beta2: a.beta2.clone(),
    };
    let reports = match a.suite {
        Some(s) => run_suite(s, &cfg)?,
        None => run_all(&cfg)?,
    };
    emit(out, a.out.as_ref(), &json::reports_to_json(&reports))?;
    Ok(if reports.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_CHECK_FAILED })
}

pub fn cmd_selftest(out: &mut dyn Write) -> Result<i32> {
    let cfg = SuiteConfig::new(2, Weights::new(rational::rat(1, 2), rational::rat(1, 2)));
    let reports = run_all(&cfg)?;
    for r in &reports {
        writeln!(out, "{} {}: {}", if r.passed { "ok  " } else { "FAIL" }, r.name, r.detail).map_err(io_err)?;
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    writeln!(out, "{} checks, {failed} failed", reports.len()).map_err(io_err)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["projquant"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn coeffs_default() {
        let (code, out, _) = run_str(&["coeffs"]);
        assert_eq!(code, 0);
        assert_eq!(out, "alpha=1/2 beta1=1 beta2=3/16 beta3=9/16\n");
    }

    #[test]
    fn coeffs_delta_one() {
        let (_, out, _) = run_str(&["coeffs", "--lambda", "0", "--mu", "1"]);
        assert!(out.starts_with("alpha=0 "), "{out}");
    }

    #[test]
    fn coeffs_resonant_lists_cases() {
        let (code, out, _) = run_str(&["coeffs", "--lambda", "0", "--mu", "4/3"]);
        assert_eq!(code, 0);
        assert!(out.contains("case 2: lambda=0 mu=4/3 beta1=2 beta2=0 beta3=0 (these weights)"), "{out}");
        assert!(out.contains("case 3: lambda=-1/3 mu=1"), "{out}");
        assert!(!out.contains("case 1"));
    }

    #[test]
    fn bad_input_is_usage_error() {
        assert_eq!(run_str(&["coeffs", "--lambda", "1/0"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["coeffs", "--n", "0"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
    }
}
