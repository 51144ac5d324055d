//! Linear differential operators `F_λ → F_μ` in raw coordinate form and the
//! `Vect(M)` actions on densities, symbols and operators.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use ndarray::{Array2, Array3};

use crate::covariant::Differentiable;
use crate::error::{Error, Result};
use crate::fields::{symmetrize2, Density, SymbolField, VectorField, Weights};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

/// Highest order a [`DiffOp`] can hold (composition workspace).
pub const MAX_ORDER: usize = 3;

/// A linear differential expression `Σ c_I ∂^I` acting on an unspecified
/// density, keyed by the sorted list of derivative indices `I`.
///
/// The coefficient of `∂_1 ∂_2` here is the full coefficient of that
/// derivative, i.e. twice the symmetric-tensor entry `a^{12}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpExpr {
    n: usize,
    coeffs: BTreeMap<Vec<usize>, Polynomial>,
}

impl OpExpr {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// The identity: `φ ↦ φ`.
    pub fn identity(n: usize) -> Self {
        Self::multiplication(Polynomial::one(n))
    }

    /// `φ ↦ f φ`.
    pub fn multiplication(f: Polynomial) -> Self {
        let mut e = Self::zero(f.n());
        e.add_term(Vec::new(), f);
        e
    }

    /// `φ ↦ ∂_i φ`.
    pub fn partial(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.add_term(vec![i], Polynomial::one(n));
        e
    }

    fn add_term(&mut self, mut key: Vec<usize>, c: Polynomial) {
        if c.is_zero() {
            return;
        }
        key.sort_unstable();
        match self.coeffs.entry(key) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn order(&self) -> usize {
        self.coeffs.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Coefficient of `∂^I` (`I` in any order).
    pub fn coefficient(&self, idx: &[usize]) -> Polynomial {
        let mut key = idx.to_vec();
        key.sort_unstable();
        self.coeffs
            .get(&key)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.n))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), v.scale(c));
        }
        out
    }

    /// Evaluates the expression on a concrete coefficient function.
    pub fn apply(&self, phi: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero(self.n);
        for (idx, c) in &self.coeffs {
            let mut d = phi.clone();
            for &i in idx {
                d = d.d(i);
            }
            acc += c * d;
        }
        acc
    }

    /// `self ∘ inner`, expanded by the Leibniz rule.
    pub fn compose(&self, inner: &OpExpr) -> OpExpr {
        let mut out = OpExpr::zero(self.n);
        for (idx, c) in &self.coeffs {
            let mut e = inner.clone();
            for &i in idx {
                e = e.deriv(i);
            }
            out = out.plus(&e.times(c));
        }
        out
    }
}

impl Differentiable for OpExpr {
    fn zero_like(&self) -> Self {
        OpExpr::zero(self.n)
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), -v);
        }
        out
    }

    fn times(&self, f: &Polynomial) -> Self {
        let mut out = OpExpr::zero(self.n);
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), v * f);
        }
        out
    }

    /// `∂_i ∘ self`: `∂_i(c ∂^I φ) = (∂_i c) ∂^I φ + c ∂_i ∂^I φ`.
    fn deriv(&self, i: usize) -> Self {
        let mut out = OpExpr::zero(self.n);
        for (k, v) in &self.coeffs {
            out.add_term(k.clone(), v.d(i));
            let mut up = k.clone();
            up.push(i);
            out.add_term(up, v.clone());
        }
        out
    }
}

/// Number of distinct orderings of a multi-index.
fn orderings(idx: &[usize]) -> i64 {
    let mut counts = BTreeMap::new();
    for &i in idx {
        *counts.entry(i).or_insert(0i64) += 1;
    }
    let fact = |k: i64| (1..=k).product::<i64>();
    fact(idx.len() as i64) / counts.values().map(|&c| fact(c)).product::<i64>()
}

/// A differential operator `F_λ → F_μ`:
/// `a3^{ijk} ∂_i∂_j∂_k + a2^{ij} ∂_i∂_j + a1^i ∂_i + a0` with fully
/// symmetric `a2`, `a3`. Public constructors only build order ≤ 2; the
/// `a3` slot is filled by compositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffOp {
    pub weights: Weights,
    a3: Array3<Polynomial>,
    a2: Array2<Polynomial>,
    a1: Vec<Polynomial>,
    a0: Polynomial,
}

impl DiffOp {
    /// Order ≤ 2 operator; rejects asymmetric `a2`.
    pub fn new(
        weights: Weights,
        a2: Array2<Polynomial>,
        a1: Vec<Polynomial>,
        a0: Polynomial,
    ) -> Result<Self> {
        let n = a1.len();
        if a2.dim() != (n, n) {
            return Err(Error::Schema(format!("a2 must be {n}x{n}, found {:?}", a2.dim())));
        }
        for p in a2.iter().chain(a1.iter()).chain(std::iter::once(&a0)) {
            if p.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.n(),
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if a2[[i, j]] != a2[[j, i]] {
                    return Err(Error::Asymmetric(format!("a2[{},{}]", i + 1, j + 1)));
                }
            }
        }
        Ok(Self {
            weights,
            a3: Array3::from_elem((n, n, n), Polynomial::zero(n)),
            a2,
            a1,
            a0,
        })
    }

    pub fn new_symmetrized(
        weights: Weights,
        a2: Array2<Polynomial>,
        a1: Vec<Polynomial>,
        a0: Polynomial,
    ) -> Result<Self> {
        let sym = symmetrize2(&a2);
        Self::new(weights, sym, a1, a0)
    }

    pub fn zero(n: usize, weights: Weights) -> Self {
        Self::from_expr(weights, &OpExpr::zero(n)).expect("zero has order 0")
    }

    /// Multiplication by `f`.
    pub fn multiplication(weights: Weights, f: Polynomial) -> Self {
        Self::from_expr(weights, &OpExpr::multiplication(f)).expect("order 0")
    }

    /// `L^λ_X = X^i ∂_i + λ ∂_i(X^i)` acting on λ-densities.
    pub fn density_lie(x: &VectorField, weight: &Rational) -> Self {
        let n = x.n();
        let mut e = OpExpr::multiplication(x.divergence().scale(weight));
        for (i, xi) in x.components().iter().enumerate() {
            e = e.plus(&OpExpr::partial(n, i).times(xi));
        }
        Self::from_expr(Weights::new(weight.clone(), weight.clone()), &e).expect("order 1")
    }

    /// Converts a raw expression, splitting mixed-derivative coefficients
    /// evenly over the symmetric slots.
    pub fn from_expr(weights: Weights, e: &OpExpr) -> Result<Self> {
        let order = e.order();
        if order > MAX_ORDER {
            return Err(Error::Order(format!(
                "order {order} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        let n = e.n();
        let mut a3 = Array3::from_elem((n, n, n), Polynomial::zero(n));
        let mut a2 = Array2::from_elem((n, n), Polynomial::zero(n));
        let mut a1 = vec![Polynomial::zero(n); n];
        let mut a0 = Polynomial::zero(n);
        for (idx, c) in &e.coeffs {
            let share = c.scale(&rational::rat(1, orderings(idx)));
            match idx.as_slice() {
                [] => a0 = share,
                [i] => a1[*i] = share,
                [i, j] => {
                    a2[[*i, *j]] = share.clone();
                    a2[[*j, *i]] = share;
                }
                [i, j, k] => {
                    for (p, q, r) in [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
                        a3[[*p, *q, *r]] = share.clone();
                    }
                }
                _ => unreachable!("order checked above"),
            }
        }
        Ok(Self {
            weights,
            a3,
            a2,
            a1,
            a0,
        })
    }

    pub fn to_expr(&self) -> OpExpr {
        let n = self.n();
        let mut e = OpExpr::zero(n);
        e.add_term(Vec::new(), self.a0.clone());
        for i in 0..n {
            e.add_term(vec![i], self.a1[i].clone());
            for j in i..n {
                let idx = vec![i, j];
                let m = orderings(&idx);
                e.add_term(idx, self.a2[[i, j]].scale(&rational::int(m)));
                for k in j..n {
                    let idx = vec![i, j, k];
                    let m = orderings(&idx);
                    e.add_term(idx, self.a3[[i, j, k]].scale(&rational::int(m)));
                }
            }
        }
        e
    }

    pub fn n(&self) -> usize {
        self.a1.len()
    }

    pub fn a3(&self) -> &Array3<Polynomial> {
        &self.a3
    }

    pub fn a2(&self) -> &Array2<Polynomial> {
        &self.a2
    }

    pub fn a1(&self) -> &[Polynomial] {
        &self.a1
    }

    pub fn a0(&self) -> &Polynomial {
        &self.a0
    }

    pub fn is_zero(&self) -> bool {
        self.to_expr().is_zero()
    }

    pub fn order(&self) -> usize {
        self.to_expr().order()
    }

    fn check_same_module(&self, other: &Self) -> Result<()> {
        if self.weights != other.weights {
            return Err(Error::WeightMismatch {
                expected: format!(
                    "({}, {})",
                    rational::format_rational(&self.weights.lambda),
                    rational::format_rational(&self.weights.mu)
                ),
                found: format!(
                    "({}, {})",
                    rational::format_rational(&other.weights.lambda),
                    rational::format_rational(&other.weights.mu)
                ),
            });
        }
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_module(other)?;
        Self::from_expr(self.weights.clone(), &self.to_expr().plus(&other.to_expr()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_module(other)?;
        Self::from_expr(self.weights.clone(), &self.to_expr().minus(&other.to_expr()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_expr(self.weights.clone(), &self.to_expr().scale(c)).expect("order unchanged")
    }
}

fn weight_mismatch(expected: &Rational, found: &Rational) -> Error {
    Error::WeightMismatch {
        expected: rational::format_rational(expected),
        found: rational::format_rational(found),
    }
}

pub fn apply(a: &DiffOp, phi: &Density) -> Result<Density> {
    if phi.weight != a.weights.lambda {
        return Err(weight_mismatch(&a.weights.lambda, &phi.weight));
    }
    if phi.n() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: a.n(),
            found: phi.n(),
        });
    }
    Ok(Density::new(a.weights.mu.clone(), a.to_expr().apply(&phi.coeff)))
}

/// `outer ∘ inner` for `inner: F_λ → F_ν`, `outer: F_ν → F_μ`.
pub fn compose(outer: &DiffOp, inner: &DiffOp) -> Result<DiffOp> {
    if outer.weights.lambda != inner.weights.mu {
        return Err(weight_mismatch(&inner.weights.mu, &outer.weights.lambda));
    }
    if outer.n() != inner.n() {
        return Err(Error::DimensionMismatch {
            expected: outer.n(),
            found: inner.n(),
        });
    }
    let (p, q) = (outer.order(), inner.order());
    if p + q > MAX_ORDER {
        return Err(Error::Order(format!(
            "composition of orders {p} and {q} exceeds {MAX_ORDER}"
        )));
    }
    let weights = Weights::new(inner.weights.lambda.clone(), outer.weights.mu.clone());
    DiffOp::from_expr(weights, &outer.to_expr().compose(&inner.to_expr()))
}

/// `L^λ_X φ = X^i ∂_i φ + λ ∂_i(X^i) φ`.
pub fn lie_density(x: &VectorField, phi: &Density) -> Result<Density> {
    if x.n() != phi.n() {
        return Err(Error::DimensionMismatch {
            expected: x.n(),
            found: phi.n(),
        });
    }
    let out = x.apply(&phi.coeff) + x.divergence().scale(&phi.weight) * &phi.coeff;
    Ok(Density::new(phi.weight.clone(), out))
}

/// `L^δ_X T = L_X T + δ D(X) T` with `L_X = X^i ∂_i − ξ_j ∂_i(X^j) ∂_{ξ_i}`.
pub fn lie_symbol(x: &VectorField, t: &SymbolField) -> Result<SymbolField> {
    let n = x.n();
    if n != t.n() {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: t.n(),
        });
    }
    let xs = x.components();
    let wdiv = x.divergence().scale(t.delta());
    let deg2 = Array2::from_shape_fn((n, n), |(i, j)| {
        let tij = &t.deg2()[[i, j]];
        let mut acc = x.apply(tij) + &wdiv * tij;
        for k in 0..n {
            acc -= &t.deg2()[[k, j]] * xs[i].d(k);
            acc -= &t.deg2()[[i, k]] * xs[j].d(k);
        }
        acc
    });
    let deg1 = (0..n)
        .map(|i| {
            let ti = &t.deg1()[i];
            let mut acc = x.apply(ti) + &wdiv * ti;
            for k in 0..n {
                acc -= &t.deg1()[k] * xs[i].d(k);
            }
            acc
        })
        .collect();
    let deg0 = x.apply(t.deg0()) + &wdiv * t.deg0();
    SymbolField::new(t.delta().clone(), deg2, deg1, deg0)
}

/// `L^{λ,μ}_X A = L^μ_X ∘ A − A ∘ L^λ_X`, for `A` of order ≤ 2.
pub fn lie_operator(x: &VectorField, a: &DiffOp) -> Result<DiffOp> {
    if x.n() != a.n() {
        return Err(Error::DimensionMismatch {
            expected: x.n(),
            found: a.n(),
        });
    }
    if a.a3.iter().any(|p| !p.is_zero()) {
        return Err(Error::Order("lie_operator expects an operator of order <= 2".into()));
    }
    let left = compose(&DiffOp::density_lie(x, &a.weights.mu), a)?;
    let right = compose(a, &DiffOp::density_lie(x, &a.weights.lambda))?;
    let out = left.try_sub(&right)?;
    assert!(
        out.a3.iter().all(Polynomial::is_zero),
        "third-order part of a Lie derivative must cancel"
    );
    Ok(out)
}

/// The top-order coefficient tensor, as a degree-2 symbol of weight μ − λ.
pub fn principal_symbol(a: &DiffOp) -> Result<SymbolField> {
    if a.a3.iter().any(|p| !p.is_zero()) {
        return Err(Error::Order("principal_symbol expects order <= 2".into()));
    }
    SymbolField::quadratic(a.weights.delta(), a.a2.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i).unwrap()
    }

    fn w(l: Rational, m: Rational) -> Weights {
        Weights::new(l, m)
    }

    fn first_order(weights: Weights, a1: Vec<Polynomial>, a0: Polynomial) -> DiffOp {
        let n = a1.len();
        DiffOp::new(weights, Array2::from_elem((n, n), Polynomial::zero(n)), a1, a0).unwrap()
    }

    #[test]
    fn apply_basic() {
        let n = 2;
        let w0 = w(int(0), int(0));
        let mult = DiffOp::multiplication(w0.clone(), x(n, 1));
        let phi = Density::new(int(0), x(n, 0) * x(n, 0));
        assert_eq!(apply(&mult, &phi).unwrap().coeff, x(n, 1) * &phi.coeff);

        let d1 = first_order(w0.clone(), vec![Polynomial::one(n), Polynomial::zero(n)], Polynomial::zero(n));
        assert_eq!(apply(&d1, &phi).unwrap().coeff, x(n, 0).scale(&int(2)));

        let wrong = Density::new(int(1), Polynomial::one(n));
        assert!(matches!(apply(&d1, &wrong), Err(Error::WeightMismatch { .. })));
    }

    #[test]
    fn compose_leibniz() {
        let n = 1;
        let w0 = w(int(0), int(0));
        let d1 = first_order(w0.clone(), vec![Polynomial::one(n)], Polynomial::zero(n));
        let xd1 = first_order(w0.clone(), vec![x(n, 0)], Polynomial::zero(n));
        let got = compose(&d1, &xd1).unwrap();
        let mut a2 = Array2::from_elem((1, 1), Polynomial::zero(n));
        a2[[0, 0]] = x(n, 0);
        let expected = DiffOp::new(w0.clone(), a2, vec![Polynomial::one(n)], Polynomial::zero(n)).unwrap();
        assert_eq!(got, expected);

        let id = DiffOp::multiplication(w0, Polynomial::one(n));
        assert_eq!(compose(&id, &xd1).unwrap(), xd1);
    }

    #[test]
    fn compose_checks_weights_and_order() {
        let n = 2;
        let a = DiffOp::multiplication(w(int(1), int(2)), Polynomial::one(n));
        let b = DiffOp::multiplication(w(int(0), int(0)), Polynomial::one(n));
        assert!(matches!(compose(&a, &b), Err(Error::WeightMismatch { .. })));

        let sq = DiffOp::new(
            w(int(0), int(0)),
            Array2::from_elem((n, n), Polynomial::one(n)),
            vec![Polynomial::zero(n); n],
            Polynomial::zero(n),
        )
        .unwrap();
        assert!(matches!(compose(&sq, &sq), Err(Error::Order(_))));
    }

    #[test]
    fn third_order_apply_matches_nested_apply() {
        let n = 2;
        let w0 = w(int(0), int(0));
        let a = first_order(w0.clone(), vec![x(n, 1), x(n, 0) * x(n, 0)], Polynomial::one(n));
        let b = DiffOp::new(
            w0,
            Array2::from_shape_fn((n, n), |(i, j)| x(n, i) * x(n, j)),
            vec![x(n, 0), Polynomial::zero(n)],
            x(n, 1),
        )
        .unwrap();
        let ab = compose(&a, &b).unwrap();
        assert_eq!(ab.order(), 3);
        let phi = Density::new(int(0), x(n, 0).scale(&int(3)) * x(n, 0) * x(n, 0) * x(n, 1) * x(n, 1) + x(n, 1));
        assert_eq!(apply(&ab, &phi).unwrap(), apply(&a, &apply(&b, &phi).unwrap()).unwrap());
    }

    #[test]
    fn lie_density_examples() {
        let n = 2;
        let phi = Density::new(rat(1, 3), x(n, 0) * x(n, 1) + x(n, 1));
        let d1 = VectorField::new(vec![Polynomial::one(n), Polynomial::zero(n)]).unwrap();
        assert_eq!(lie_density(&d1, &phi).unwrap().coeff, phi.coeff.d(0));

        let euler = VectorField::new(vec![x(n, 0), Polynomial::zero(n)]).unwrap();
        let expected = x(n, 0) * phi.coeff.d(0) + phi.coeff.scale(&rat(1, 3));
        assert_eq!(lie_density(&euler, &phi).unwrap().coeff, expected);
    }

    #[test]
    fn lie_symbol_examples() {
        let n = 2;
        let m = Array2::from_shape_fn((n, n), |(i, j)| x(n, i) * x(n, j));
        let t = SymbolField::new(rat(1, 2), m, vec![x(n, 1), Polynomial::one(n)], x(n, 0)).unwrap();
        let d1 = VectorField::new(vec![Polynomial::one(n), Polynomial::zero(n)]).unwrap();
        let got = lie_symbol(&d1, &t).unwrap();
        assert_eq!(got.deg2(), &t.deg2().mapv(|p| p.d(0)));
        assert_eq!(got.deg1(), &[t.deg1()[0].d(0), t.deg1()[1].d(0)][..]);
        assert_eq!(got.deg0(), &t.deg0().d(0));

        let euler = VectorField::new(vec![x(n, 0), Polynomial::zero(n)]).unwrap();
        let xi1 = SymbolField::linear(int(0), vec![Polynomial::one(n), Polynomial::zero(n)], Polynomial::zero(n)).unwrap();
        let got = lie_symbol(&euler, &xi1).unwrap();
        assert_eq!(got.deg1(), &[Polynomial::constant(n, int(-1)), Polynomial::zero(n)][..]);
    }

    #[test]
    fn lie_operator_examples() {
        let n = 2;
        let w0 = w(int(0), int(0));
        let a = DiffOp::new(
            w(rat(1, 3), rat(3, 4)),
            Array2::from_shape_fn((n, n), |(i, j)| Polynomial::constant(n, int((i + j + 1) as i64))),
            vec![Polynomial::constant(n, int(2)), Polynomial::zero(n)],
            Polynomial::constant(n, rat(1, 5)),
        )
        .unwrap();
        let d2 = VectorField::new(vec![Polynomial::zero(n), Polynomial::one(n)]).unwrap();
        assert!(lie_operator(&d2, &a).unwrap().is_zero());

        let d1 = first_order(w0.clone(), vec![Polynomial::one(n), Polynomial::zero(n)], Polynomial::zero(n));
        let euler = VectorField::new(vec![x(n, 0), Polynomial::zero(n)]).unwrap();
        assert_eq!(lie_operator(&euler, &d1).unwrap(), d1.scale(&int(-1)));
    }

    #[test]
    fn principal_symbol_examples() {
        let n = 2;
        let m = Array2::from_shape_fn((n, n), |(i, j)| x(n, i) + x(n, j));
        let a = DiffOp::new(w(rat(1, 2), int(2)), m.clone(), vec![x(n, 0); n], Polynomial::one(n)).unwrap();
        let s = principal_symbol(&a).unwrap();
        assert_eq!(s.deg2(), &m);
        assert_eq!(s.delta(), &rat(3, 2));
        assert!(!s.has_lower());
        let zero_order = DiffOp::multiplication(w(int(0), int(1)), x(n, 1));
        assert!(principal_symbol(&zero_order).unwrap().is_zero());
    }

    #[test]
    fn symmetric_storage_round_trips() {
        let n = 3;
        let a2 = Array2::from_shape_fn((n, n), |(i, j)| x(n, i) * x(n, j) + Polynomial::constant(n, int((i * j) as i64)));
        let a = DiffOp::new(w(int(0), int(0)), a2, vec![x(n, 2); n], Polynomial::one(n)).unwrap();
        assert_eq!(DiffOp::from_expr(a.weights.clone(), &a.to_expr()).unwrap(), a);
        assert_eq!(a.to_expr().coefficient(&[1, 0]), a.a2()[[0, 1]].scale(&int(2)));
    }

    #[test]
    fn asymmetric_a2_rejected() {
        let n = 2;
        let mut a2 = Array2::from_elem((n, n), Polynomial::zero(n));
        a2[[0, 1]] = Polynomial::one(n);
        let bad = DiffOp::new(w(int(0), int(0)), a2.clone(), vec![Polynomial::zero(n); n], Polynomial::zero(n));
        assert!(matches!(bad, Err(Error::Asymmetric(_))));
        let ok = DiffOp::new_symmetrized(w(int(0), int(0)), a2, vec![Polynomial::zero(n); n], Polynomial::zero(n)).unwrap();
        assert_eq!(ok.a2()[[1, 0]], Polynomial::constant(n, rat(1, 2)));
    }
}
