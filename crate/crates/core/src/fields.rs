//! Weighted tensor fields on a single oriented coordinate chart.
//!
//! Indices are 0-based in the API (`x^(i+1)` is coordinate `i`); the JSON
//! wire forms use 1-based labels.

use ndarray::{Array2, Array3};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

/// The weights of an operator module `F_lambda -> F_mu`. The symbol weight
/// `delta = mu - lambda` is always derived, never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weights {
    pub lambda: Rational,
    pub mu: Rational,
}

impl Weights {
    pub fn new(lambda: Rational, mu: Rational) -> Self {
        Self { lambda, mu }
    }

    pub fn delta(&self) -> Rational {
        &self.mu - &self.lambda
    }
}

/// A lambda-density, given by its local coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Density {
    pub weight: Rational,
    pub coeff: Polynomial,
}

impl Density {
    pub fn new(weight: Rational, coeff: Polynomial) -> Self {
        Self { weight, coeff }
    }

    pub fn n(&self) -> usize {
        self.coeff.n()
    }
}

fn check_components(n: usize, comps: &[Polynomial]) -> Result<()> {
    if comps.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: comps.len(),
        });
    }
    for c in comps {
        if c.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: c.n(),
            });
        }
    }
    Ok(())
}

/// A differential 1-form `omega_i dx^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneForm(Vec<Polynomial>);

impl OneForm {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let n = components.len();
        check_components(n, &components)?;
        Ok(Self(components))
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![Polynomial::zero(n); n])
    }

    /// The exact form `d f`.
    pub fn differential(f: &Polynomial) -> Self {
        Self((0..f.n()).map(|i| f.d(i)).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.0
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self(self.0.iter().map(|p| p.scale(c)).collect())
    }

    /// Whether `d omega = 0`, i.e. `d_i omega_j == d_j omega_i`.
    pub fn is_closed(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.0[j].d(i) == self.0[i].d(j)))
    }
}

/// A vector field `X^i d_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField(Vec<Polynomial>);

impl VectorField {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let n = components.len();
        check_components(n, &components)?;
        Ok(Self(components))
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![Polynomial::zero(n); n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.0
    }

    /// `D(X) = d_i X^i`.
    pub fn divergence(&self) -> Polynomial {
        let mut acc = Polynomial::zero(self.n());
        for (i, c) in self.0.iter().enumerate() {
            acc += c.d(i);
        }
        acc
    }

    /// Directional derivative `X^i d_i f`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(self.n());
        for (i, c) in self.0.iter().enumerate() {
            acc += c * f.d(i);
        }
        acc
    }

    /// Lie bracket `[X, Y]^i = X(Y^i) - Y(X^i)`.
    pub fn bracket(&self, other: &Self) -> Self {
        Self(
            (0..self.n())
                .map(|i| self.apply(&other.0[i]) - other.apply(&self.0[i]))
                .collect(),
        )
    }
}

/// `(m + m^T) / 2`.
pub fn symmetrize2(m: &Array2<Polynomial>) -> Array2<Polynomial> {
    let half = rational::rat(1, 2);
    Array2::from_shape_fn(m.dim(), |(i, j)| (&m[[i, j]] + &m[[j, i]]).scale(&half))
}

fn check_square(n: usize, m: &Array2<Polynomial>, what: &str) -> Result<()> {
    if m.dim() != (n, n) {
        return Err(Error::Schema(format!(
            "{what} must be {n}x{n}, found {:?}",
            m.dim()
        )));
    }
    if let Some(p) = m.iter().find(|p| p.n() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: p.n(),
        });
    }
    Ok(())
}

fn check_symmetric(m: &Array2<Polynomial>, what: &str) -> Result<()> {
    let (n, _) = m.dim();
    for i in 0..n {
        for j in i + 1..n {
            if m[[i, j]] != m[[j, i]] {
                return Err(Error::Asymmetric(format!(
                    "{what}[{},{}] != {what}[{},{}]",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    Ok(())
}

/// A symbol `T^{ij} xi_i xi_j + T^i xi_i + T^0` with values in
/// delta-densities. Degrees above two are not representable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolField {
    delta: Rational,
    deg2: Array2<Polynomial>,
    deg1: Vec<Polynomial>,
    deg0: Polynomial,
}

impl SymbolField {
    /// Rejects an asymmetric `deg2`.
    pub fn new(
        delta: Rational,
        deg2: Array2<Polynomial>,
        deg1: Vec<Polynomial>,
        deg0: Polynomial,
    ) -> Result<Self> {
        let n = deg1.len();
        check_components(n, &deg1)?;
        check_square(n, &deg2, "deg2")?;
        check_symmetric(&deg2, "deg2")?;
        if deg0.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: deg0.n(),
            });
        }
        Ok(Self {
            delta,
            deg2,
            deg1,
            deg0,
        })
    }

    /// Like [`SymbolField::new`] but symmetrizes `deg2` instead of
    /// rejecting it.
    pub fn new_symmetrized(
        delta: Rational,
        deg2: Array2<Polynomial>,
        deg1: Vec<Polynomial>,
        deg0: Polynomial,
    ) -> Result<Self> {
        let n = deg1.len();
        check_square(n, &deg2, "deg2")?;
        Self::new(delta, symmetrize2(&deg2), deg1, deg0)
    }

    pub fn zero(n: usize, delta: Rational) -> Self {
        Self {
            delta,
            deg2: Array2::from_elem((n, n), Polynomial::zero(n)),
            deg1: vec![Polynomial::zero(n); n],
            deg0: Polynomial::zero(n),
        }
    }

    /// Pure second-degree symbol.
    pub fn quadratic(delta: Rational, deg2: Array2<Polynomial>) -> Result<Self> {
        let n = deg2.nrows();
        Self::new(delta, deg2, vec![Polynomial::zero(n); n], Polynomial::zero(n))
    }

    /// Symbol of degree at most one.
    pub fn linear(delta: Rational, deg1: Vec<Polynomial>, deg0: Polynomial) -> Result<Self> {
        let n = deg1.len();
        Self::new(delta, Array2::from_elem((n, n), Polynomial::zero(n)), deg1, deg0)
    }

    pub fn n(&self) -> usize {
        self.deg1.len()
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    pub fn deg2(&self) -> &Array2<Polynomial> {
        &self.deg2
    }

    pub fn deg1(&self) -> &[Polynomial] {
        &self.deg1
    }

    pub fn deg0(&self) -> &Polynomial {
        &self.deg0
    }

    pub fn is_zero(&self) -> bool {
        self.deg2.iter().all(Polynomial::is_zero)
            && self.deg1.iter().all(Polynomial::is_zero)
            && self.deg0.is_zero()
    }

    pub fn has_deg2(&self) -> bool {
        self.deg2.iter().any(|p| !p.is_zero())
    }

    pub fn has_lower(&self) -> bool {
        self.deg1.iter().any(|p| !p.is_zero()) || !self.deg0.is_zero()
    }

    /// Splits into the degree-2 part and the degree-<=1 part.
    pub fn split(&self) -> (SymbolField, SymbolField) {
        let n = self.n();
        let top = Self {
            delta: self.delta.clone(),
            deg2: self.deg2.clone(),
            deg1: vec![Polynomial::zero(n); n],
            deg0: Polynomial::zero(n),
        };
        let lower = Self {
            delta: self.delta.clone(),
            deg2: Array2::from_elem((n, n), Polynomial::zero(n)),
            deg1: self.deg1.clone(),
            deg0: self.deg0.clone(),
        };
        (top, lower)
    }

    /// Componentwise sum; both summands must carry the same weight.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.delta != other.delta {
            return Err(Error::WeightMismatch {
                expected: rational::format_rational(&self.delta),
                found: rational::format_rational(&other.delta),
            });
        }
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Self {
            delta: self.delta.clone(),
            deg2: &self.deg2 + &other.deg2,
            deg1: self.deg1.iter().zip(&other.deg1).map(|(a, b)| a + b).collect(),
            deg0: &self.deg0 + &other.deg0,
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            delta: self.delta.clone(),
            deg2: self.deg2.mapv(|p| p.scale(c)),
            deg1: self.deg1.iter().map(|p| p.scale(c)).collect(),
            deg0: self.deg0.scale(c),
        }
    }
}

/// `symbol_split`: the direct-sum decomposition into degree 2 and degree <= 1.
pub fn symbol_split(t: &SymbolField) -> (SymbolField, SymbolField) {
    t.split()
}

/// A torsion-free affine connection, `gamma[[i, j, k]] = Γ^i_{jk}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    gamma: Array3<Polynomial>,
}

impl Connection {
    /// Rejects data that is not symmetric in the lower indices.
    pub fn new(gamma: Array3<Polynomial>) -> Result<Self> {
        let (n, a, b) = gamma.dim();
        if a != n || b != n {
            return Err(Error::Schema(format!(
                "Christoffel array must be {n}x{n}x{n}, found {:?}",
                gamma.dim()
            )));
        }
        if let Some(p) = gamma.iter().find(|p| p.n() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.n(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                for k in j + 1..n {
                    if gamma[[i, j, k]] != gamma[[i, k, j]] {
                        return Err(Error::Asymmetric(format!(
                            "Gamma^{}_{}{} != Gamma^{}_{}{}",
                            i + 1,
                            j + 1,
                            k + 1,
                            i + 1,
                            k + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(Self { gamma })
    }

    /// Builds a connection from a generator evaluated on `j <= k` only; the
    /// `k < j` slots are filled by symmetry.
    pub fn from_lower_triangle(
        n: usize,
        mut f: impl FnMut(usize, usize, usize) -> Polynomial,
    ) -> Self {
        let mut gamma = Array3::from_elem((n, n, n), Polynomial::zero(n));
        for i in 0..n {
            for j in 0..n {
                for k in j..n {
                    let p = f(i, j, k);
                    gamma[[i, k, j]] = p.clone();
                    gamma[[i, j, k]] = p;
                }
            }
        }
        Self { gamma }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            gamma: Array3::from_elem((n, n, n), Polynomial::zero(n)),
        }
    }

    pub fn n(&self) -> usize {
        self.gamma.dim().0
    }

    /// `Γ^i_{jk}`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Polynomial {
        &self.gamma[[i, j, k]]
    }

    pub fn christoffel(&self) -> &Array3<Polynomial> {
        &self.gamma
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(Polynomial::is_zero)
    }

    /// `Γ_i = Γ^l_{il}`.
    pub fn trace(&self) -> OneForm {
        let n = self.n();
        OneForm(
            (0..n)
                .map(|i| {
                    let mut acc = Polynomial::zero(n);
                    for l in 0..n {
                        acc += &self.gamma[[l, i, l]];
                    }
                    acc
                })
                .collect(),
        )
    }
}

pub fn connection_trace(g: &Connection) -> OneForm {
    g.trace()
}

/// Quantization coefficients; absent entries are not applicable to the
/// weights at hand (resonance or dimension).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QuantCoeffs {
    pub alpha: Option<Rational>,
    pub beta1: Option<Rational>,
    pub beta2: Option<Rational>,
    pub beta3: Option<Rational>,
}

impl QuantCoeffs {
    pub fn second_order(beta1: Rational, beta2: Rational, beta3: Rational) -> Self {
        Self {
            alpha: None,
            beta1: Some(beta1),
            beta2: Some(beta2),
            beta3: Some(beta3),
        }
    }

    pub fn with_alpha(mut self, alpha: Rational) -> Self {
        self.alpha = Some(alpha);
        self
    }

    /// `(beta1, beta2, beta3)` if all are present.
    pub fn betas(&self) -> Result<[Rational; 3]> {
        Ok([
            self.beta1.clone().ok_or(Error::MissingCoefficient("beta1"))?,
            self.beta2.clone().ok_or(Error::MissingCoefficient("beta2"))?,
            self.beta3.clone().ok_or(Error::MissingCoefficient("beta3"))?,
        ])
    }

    pub fn alpha(&self) -> Result<Rational> {
        self.alpha.clone().ok_or(Error::MissingCoefficient("alpha"))
    }
}
