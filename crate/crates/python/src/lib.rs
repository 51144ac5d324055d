//! Python bindings. Rationals cross the boundary as strings ("3/16") and
//! fields as the JSON documents read and written by the command line.

use std::collections::BTreeMap;

use projquant::json;
use projquant::quantization::{self, is_resonant, ResonantCase};
use projquant::rational::{parse_rational, zero};
use projquant::verification::{self, Suite, SuiteConfig};
use projquant::{Rational, Weights};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn value_err(e: projquant::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(text: &str) -> PyResult<Rational> {
    parse_rational(text).map_err(value_err)
}

fn weights(lambda: &str, mu: &str) -> PyResult<Weights> {
    Ok(Weights::new(rational(lambda)?, rational(mu)?))
}

fn resonant_case(id: u8) -> PyResult<ResonantCase> {
    ResonantCase::from_id(id).map_err(value_err)
}

/// Quantization coefficients at the given weights, as exact fraction strings.
/// Coefficients undefined at these weights are omitted.
#[pyfunction]
#[pyo3(signature = (n, lambda_, mu))]
fn coeffs(n: usize, lambda_: &str, mu: &str) -> PyResult<BTreeMap<String, String>> {
    let w = weights(lambda_, mu)?;
    let mut out = BTreeMap::new();
    if let Ok(a) = quantization::alpha(&w) {
        out.insert("alpha".to_string(), a.to_string());
    }
    if n >= 2 && !is_resonant(n, &w.delta()) {
        let b = quantization::betas(n, &w).map_err(value_err)?.betas().map_err(value_err)?;
        for (name, v) in ["beta1", "beta2", "beta3"].into_iter().zip(b) {
            out.insert(name.to_string(), v.to_string());
        }
    }
    Ok(out)
}

/// Ids of the resonant cases whose δ matches `lambda_` and `mu`.
#[pyfunction]
#[pyo3(signature = (n, lambda_, mu))]
fn resonant_cases(n: usize, lambda_: &str, mu: &str) -> PyResult<Vec<u32>> {
    let w = weights(lambda_, mu)?;
    Ok(ResonantCase::with_delta(n, &w.delta()).into_iter().map(|c| u32::from(c.id())).collect())
}

/// Quantize a `{"connection": ..., "symbol": ...}` document; returns the
/// operator document.
#[pyfunction]
#[pyo3(signature = (input, lambda_, mu))]
fn quantize(input: &str, lambda_: &str, mu: &str) -> PyResult<String> {
    let (g, t) = json::quantize_input_from_json(input).map_err(value_err)?;
    let a = quantization::quantize(&g, &t, &weights(lambda_, mu)?).map_err(value_err)?;
    Ok(json::diffop_to_json(&a))
}

/// Quantize at a resonant case, with the free β₂ when the case has one.
#[pyfunction]
#[pyo3(signature = (input, case, beta2=None))]
fn quantize_resonant(input: &str, case: u8, beta2: Option<&str>) -> PyResult<String> {
    let (g, t) = json::quantize_input_from_json(input).map_err(value_err)?;
    let b2 = beta2.map(rational).transpose()?.unwrap_or_else(zero);
    let a = quantization::quantize_resonant(&g, &t, resonant_case(case)?, &b2).map_err(value_err)?;
    Ok(json::diffop_to_json(&a))
}

/// Recover the symbol of an operator document relative to a connection.
#[pyfunction]
fn dequantize(connection: &str, op: &str) -> PyResult<String> {
    let g = json::connection_from_json(connection).map_err(value_err)?;
    let a = json::diffop_from_json(op).map_err(value_err)?;
    let t = quantization::dequantize(&g, &a).map_err(value_err)?;
    Ok(json::symbol_to_json(&t))
}

/// Run verification suites; returns the JSON report list.
#[pyfunction]
#[pyo3(signature = (
    n=2, lambda_="1/2", mu="1/2", suite=None, seed=1, samples=20, perturb=None, case=None, beta2=None
))]
#[allow(clippy::too_many_arguments)]
fn verify(
    n: usize,
    lambda_: &str,
    mu: &str,
    suite: Option<&str>,
    seed: u64,
    samples: usize,
    perturb: Option<&str>,
    case: Option<u8>,
    beta2: Option<&str>,
) -> PyResult<String> {
    let mut cfg = SuiteConfig::new(n, weights(lambda_, mu)?);
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.perturb = perturb.map(str::parse).transpose().map_err(value_err)?;
    cfg.case = case.map(resonant_case).transpose()?;
    cfg.beta2 = beta2.map(rational).transpose()?;
    let reports = match suite {
        Some(s) => verification::run_suite(s.parse::<Suite>().map_err(value_err)?, &cfg),
        None => verification::run_all(&cfg),
    }
    .map_err(value_err)?;
    Ok(json::reports_to_json(&reports))
}

#[pymodule]
fn projquant_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(coeffs, m)?)?;
    m.add_function(wrap_pyfunction!(resonant_cases, m)?)?;
    m.add_function(wrap_pyfunction!(quantize, m)?)?;
    m.add_function(wrap_pyfunction!(quantize_resonant, m)?)?;
    m.add_function(wrap_pyfunction!(dequantize, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
