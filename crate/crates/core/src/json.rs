//! JSON wire forms.
//!
//! Tensor entries are keyed by 1-based comma-separated index strings
//! (`"1,2"`, `"1,2,2"`); omitted entries are zero. Polynomials are lists of
//! `{"exp": [...], "coef": "p/q"}` terms.

use std::collections::BTreeMap;

use ndarray::{Array2, Array3};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{Connection, OneForm, SymbolField, VectorField, Weights};
use crate::operators::DiffOp;
use crate::poly::{Polynomial, TermWire};
use crate::rational::{self, Rational};
use crate::verification::CheckReport;

pub type PolyWire = Vec<TermWire>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectionWire {
    pub n: usize,
    #[serde(default)]
    pub gamma: BTreeMap<String, PolyWire>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolWire {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(with = "rational::text")]
    pub delta: Rational,
    #[serde(default)]
    pub deg2: BTreeMap<String, PolyWire>,
    #[serde(default)]
    pub deg1: Option<Vec<PolyWire>>,
    #[serde(default)]
    pub deg0: PolyWire,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiffOpWire {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(with = "rational::text")]
    pub lambda: Rational,
    #[serde(with = "rational::text")]
    pub mu: Rational,
    #[serde(default)]
    pub a2: BTreeMap<String, PolyWire>,
    #[serde(default)]
    pub a1: Option<Vec<PolyWire>>,
    #[serde(default)]
    pub a0: PolyWire,
}

/// Input of the `quantize` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuantizeInput {
    pub connection: ConnectionWire,
    pub symbol: SymbolWire,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportWire {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<DiffOpWire>,
}

fn parse_index(key: &str, arity: usize, n: usize) -> Result<Vec<usize>> {
    let parts: Vec<&str> = key.split(',').map(str::trim).collect();
    if parts.len() != arity {
        return Err(Error::Schema(format!("index `{key}` should have {arity} components")));
    }
    parts
        .iter()
        .map(|p| {
            let i: usize = p
                .parse()
                .map_err(|_| Error::Schema(format!("index `{key}` is not a list of integers")))?;
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            Ok(i - 1)
        })
        .collect()
}

fn index_key(idx: &[usize]) -> String {
    idx.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}

fn poly_list(n: usize, list: &[PolyWire]) -> Result<Vec<Polynomial>> {
    if list.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: list.len(),
        });
    }
    list.iter().map(|p| Polynomial::from_wire(n, p)).collect()
}

fn matrix_from_wire(n: usize, entries: &BTreeMap<String, PolyWire>) -> Result<Array2<Polynomial>> {
    let mut m = Array2::from_elem((n, n), Polynomial::zero(n));
    for (k, p) in entries {
        let idx = parse_index(k, 2, n)?;
        m[[idx[0], idx[1]]] = Polynomial::from_wire(n, p)?;
    }
    Ok(m)
}

fn matrix_to_wire(m: &Array2<Polynomial>) -> BTreeMap<String, PolyWire> {
    m.indexed_iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|((i, j), p)| (index_key(&[i, j]), p.to_wire()))
        .collect()
}

fn resolve_n(explicit: Option<usize>, field: Option<usize>, list: Option<usize>) -> Result<usize> {
    let n = explicit
        .or(field)
        .or(list)
        .ok_or_else(|| Error::Schema("cannot determine the dimension; give \"n\" or a component list".into()))?;
    for other in [field, list].into_iter().flatten() {
        if other != n {
            return Err(Error::DimensionMismatch { expected: n, found: other });
        }
    }
    Ok(n)
}

impl ConnectionWire {
    pub fn from_connection(g: &Connection) -> Self {
        let gamma = g
            .christoffel()
            .indexed_iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|((i, j, k), p)| (index_key(&[i, j, k]), p.to_wire()))
            .collect();
        Self { n: g.n(), gamma }
    }

    /// Both `Γ^i_jk` and `Γ^i_kj` must be present (or both omitted).
    pub fn to_connection(&self) -> Result<Connection> {
        let n = self.n;
        let mut gamma = Array3::from_elem((n, n, n), Polynomial::zero(n));
        for (k, p) in &self.gamma {
            let idx = parse_index(k, 3, n)?;
            gamma[[idx[0], idx[1], idx[2]]] = Polynomial::from_wire(n, p)?;
        }
        Connection::new(gamma)
    }
}

impl SymbolWire {
    pub fn from_symbol(t: &SymbolField) -> Self {
        Self {
            n: Some(t.n()),
            delta: t.delta().clone(),
            deg2: matrix_to_wire(t.deg2()),
            deg1: Some(t.deg1().iter().map(Polynomial::to_wire).collect()),
            deg0: t.deg0().to_wire(),
        }
    }

    /// `n` overrides the dimension when the surrounding document fixes it.
    pub fn to_symbol(&self, n: Option<usize>) -> Result<SymbolField> {
        let n = resolve_n(n, self.n, self.deg1.as_ref().map(Vec::len))?;
        let deg1 = match &self.deg1 {
            Some(list) => poly_list(n, list)?,
            None => vec![Polynomial::zero(n); n],
        };
        SymbolField::new(
            self.delta.clone(),
            matrix_from_wire(n, &self.deg2)?,
            deg1,
            Polynomial::from_wire(n, &self.deg0)?,
        )
    }
}

impl DiffOpWire {
    /// Panics if `a` carries third-order terms, which never leave the
    /// operator module.
    pub fn from_op(a: &DiffOp) -> Self {
        assert!(a.a3().iter().all(Polynomial::is_zero), "third-order terms are not serialized");
        Self {
            n: Some(a.n()),
            lambda: a.weights.lambda.clone(),
            mu: a.weights.mu.clone(),
            a2: matrix_to_wire(a.a2()),
            a1: Some(a.a1().iter().map(Polynomial::to_wire).collect()),
            a0: a.a0().to_wire(),
        }
    }

    pub fn to_op(&self) -> Result<DiffOp> {
        let n = resolve_n(None, self.n, self.a1.as_ref().map(Vec::len))?;
        let a1 = match &self.a1 {
            Some(list) => poly_list(n, list)?,
            None => vec![Polynomial::zero(n); n],
        };
        DiffOp::new(
            Weights::new(self.lambda.clone(), self.mu.clone()),
            matrix_from_wire(n, &self.a2)?,
            a1,
            Polynomial::from_wire(n, &self.a0)?,
        )
    }
}

impl QuantizeInput {
    pub fn decode(&self) -> Result<(Connection, SymbolField)> {
        let g = self.connection.to_connection()?;
        let t = self.symbol.to_symbol(Some(g.n()))?;
        Ok((g, t))
    }
}

impl From<&CheckReport> for ReportWire {
    fn from(r: &CheckReport) -> Self {
        Self {
            name: r.name.clone(),
            passed: r.passed,
            detail: r.detail.clone(),
            seed: r.seed,
            residual: r.residual.as_ref().map(DiffOpWire::from_op),
        }
    }
}

pub fn one_form_to_wire(w: &OneForm) -> Vec<PolyWire> {
    w.components().iter().map(Polynomial::to_wire).collect()
}

pub fn one_form_from_wire(list: &[PolyWire]) -> Result<OneForm> {
    OneForm::new(poly_list(list.len(), list)?)
}

pub fn vector_field_to_wire(x: &VectorField) -> Vec<PolyWire> {
    x.components().iter().map(Polynomial::to_wire).collect()
}

pub fn vector_field_from_wire(list: &[PolyWire]) -> Result<VectorField> {
    VectorField::new(poly_list(list.len(), list)?)
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("wire types always serialize")
}

pub fn connection_from_json(text: &str) -> Result<Connection> {
    parse::<ConnectionWire>(text)?.to_connection()
}

pub fn connection_to_json(g: &Connection) -> String {
    pretty(&ConnectionWire::from_connection(g))
}

pub fn symbol_from_json(text: &str) -> Result<SymbolField> {
    parse::<SymbolWire>(text)?.to_symbol(None)
}

pub fn symbol_to_json(t: &SymbolField) -> String {
    pretty(&SymbolWire::from_symbol(t))
}

pub fn diffop_from_json(text: &str) -> Result<DiffOp> {
    parse::<DiffOpWire>(text)?.to_op()
}

pub fn diffop_to_json(a: &DiffOp) -> String {
    pretty(&DiffOpWire::from_op(a))
}

pub fn quantize_input_from_json(text: &str) -> Result<(Connection, SymbolField)> {
    parse::<QuantizeInput>(text)?.decode()
}

pub fn quantize_input_to_json(g: &Connection, t: &SymbolField) -> String {
    pretty(&QuantizeInput {
        connection: ConnectionWire::from_connection(g),
        symbol: SymbolWire::from_symbol(t),
    })
}

pub fn reports_to_json(reports: &[CheckReport]) -> String {
    pretty(&reports.iter().map(ReportWire::from).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::verification::Sampler;

    #[test]
    fn connection_round_trip() {
        let mut s = Sampler::new(11);
        let g = s.connection(3);
        assert_eq!(connection_from_json(&connection_to_json(&g)).unwrap(), g);
    }

    #[test]
    fn symbol_and_op_round_trip() {
        let mut s = Sampler::new(5);
        let t = s.symbol(2, &rat(-2, 3));
        assert_eq!(symbol_from_json(&symbol_to_json(&t)).unwrap(), t);
        let a = crate::quantization::quantize(&s.connection(2), &t, &Weights::new(rat(1, 3), rat(-1, 3))).unwrap();
        assert_eq!(diffop_from_json(&diffop_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn half_specified_connection_is_rejected() {
        let text = r#"{"n": 2, "gamma": {"1,1,2": [{"exp": [1, 0], "coef": "1"}]}}"#;
        assert!(matches!(connection_from_json(text), Err(Error::Asymmetric(_))));
        let ok = r#"{"n": 2, "gamma": {"1,1,2": [{"exp": [1, 0], "coef": "1"}], "1,2,1": [{"exp": [1, 0], "coef": "1"}]}}"#;
        let g = connection_from_json(ok).unwrap();
        assert_eq!(g.get(0, 1, 0), &Polynomial::var(2, 0).unwrap());
    }

    #[test]
    fn bad_index_and_unknown_field() {
        let text = r#"{"n": 2, "gamma": {"3,1,1": []}}"#;
        assert!(matches!(connection_from_json(text), Err(Error::IndexOutOfRange { index: 3, n: 2 })));
        assert!(matches!(connection_from_json(r#"{"n": 2, "gama": {}}"#), Err(Error::Schema(_))));
        assert!(matches!(symbol_from_json(r#"{"delta": "x"}"#), Err(Error::Schema(_))));
    }

    #[test]
    fn symbol_dimension_from_context() {
        let text = r#"{"connection": {"n": 2}, "symbol": {"delta": "0", "deg2": {"1,1": [{"exp": [0, 0], "coef": "1"}]}}}"#;
        let (g, t) = quantize_input_from_json(text).unwrap();
        assert!(g.is_zero());
        assert_eq!(t.deg2()[[0, 0]], Polynomial::one(2));
        assert!(symbol_from_json(r#"{"delta": "0"}"#).is_err());
    }
}
