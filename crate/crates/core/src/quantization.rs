//! Projectively invariant quantization of symbols of degree ≤ 2.
//!
//! For a torsion-free connection Γ and weights (λ, μ), δ = μ − λ:
//!
//! * degree ≤ 1: `Q¹(T) = T^i ∇_i + α ∇_i(T^i) + T^0`, `α = λ / (1 − δ)`;
//! * degree 2: `Q²(T) = T^{ij} ∇_i ∇_j + β₁ ∇_j T^{ij} ∇_i + β₂ ∇_i ∇_j T^{ij}
//!   + β₃ R_ij T^{ij}`.
//!
//! Both maps depend only on the projective class of Γ. The covariant
//! expressions are expanded into raw coordinate form by running the
//! covariant derivatives on an [`OpExpr`] standing for the argument density.

use num_traits::Zero;

use crate::covariant::{
    covariant_covector, covariant_density, covariant_divergence, ricci_with, sym2_divergence,
    Differentiable, RicciConvention,
};
use crate::error::{Error, Result};
use crate::fields::{Connection, QuantCoeffs, SymbolField, Weights};
use crate::operators::{DiffOp, OpExpr};
use crate::poly::Polynomial;
use crate::rational::{self, format_rational, Rational};

/// `α = λ / (1 − δ)`.
pub fn alpha(w: &Weights) -> Result<Rational> {
    let eta = rational::one() - w.delta();
    if eta.is_zero() {
        return Err(Error::ResonantWeight {
            delta: format_rational(&w.delta()),
            hint: "no first-order coefficient at delta = 1; for (lambda, mu) = (0, 1) use q1_delta_one"
                .into(),
        });
    }
    Ok(&w.lambda / eta)
}

/// The two weights δ where the second-order coefficients have poles:
/// `[(n+2)/(n+1), (n+3)/(n+1)]`.
pub fn resonant_deltas(n: usize) -> [Rational; 2] {
    let n = n as i64;
    [rational::rat(n + 2, n + 1), rational::rat(n + 3, n + 1)]
}

pub fn is_resonant(n: usize, delta: &Rational) -> bool {
    resonant_deltas(n).contains(delta)
}

fn require_n2(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "second-order quantization requires n >= 2",
        });
    }
    Ok(())
}

/// `β₁, β₂, β₃`, plus `α` when δ ≠ 1.
pub fn betas(n: usize, w: &Weights) -> Result<QuantCoeffs> {
    require_n2(n)?;
    let delta = w.delta();
    if is_resonant(n, &delta) {
        return Err(Error::ResonantWeight {
            delta: format_rational(&delta),
            hint: "generic coefficients have a pole here; use q2_resonant with one of the resonant cases"
                .into(),
        });
    }
    let n1 = rational::int(n as i64 + 1);
    let one = rational::one();
    let two = rational::int(2);
    let lam = &w.lambda;
    let eta = &one - &delta;
    let s = &eta * &n1; // (1 − δ)(1 + n)
    let beta1 = (&two + &two * lam * &n1) / (&two + &s);
    let beta2 = lam * &n1 * (&one + lam * &n1) / ((&s + &one) * (&s + &two));
    let beta3 = lam * (&w.mu - &one) * &n1 * &n1
        / ((&one - rational::int(n as i64)) * (&s + &one));
    Ok(QuantCoeffs {
        alpha: alpha(w).ok(),
        beta1: Some(beta1),
        beta2: Some(beta2),
        beta3: Some(beta3),
    })
}

/// The resonant weights where an isomorphism still exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResonantCase {
    /// δ = (n+3)/(n+1), (λ, μ) = (−1/(n+1), (n+2)/(n+1)); β₂ is free,
    /// β₁ = 2β₂, β₃ = 1/(1−n).
    Upper,
    /// δ = (n+2)/(n+1), (λ, μ) = (0, (n+2)/(n+1)); β = (2, 0, 0).
    ZeroLambda,
    /// δ = (n+2)/(n+1), (λ, μ) = (−1/(n+1), 1); β = (0, 0, 1/(1−n)).
    UnitMu,
}

impl ResonantCase {
    pub const ALL: [ResonantCase; 3] = [Self::Upper, Self::ZeroLambda, Self::UnitMu];

    /// 1-based row id as used on the command line.
    pub fn id(self) -> u8 {
        match self {
            Self::Upper => 1,
            Self::ZeroLambda => 2,
            Self::UnitMu => 3,
        }
    }

    pub fn from_id(id: u8) -> Result<Self> {
        match id {
            1 => Ok(Self::Upper),
            2 => Ok(Self::ZeroLambda),
            3 => Ok(Self::UnitMu),
            other => Err(Error::Schema(format!("unknown resonant case {other} (expected 1, 2 or 3)"))),
        }
    }

    pub fn weights(self, n: usize) -> Weights {
        let n = n as i64;
        let minus = rational::rat(-1, n + 1);
        let upper = rational::rat(n + 2, n + 1);
        match self {
            Self::Upper => Weights::new(minus, upper),
            Self::ZeroLambda => Weights::new(rational::zero(), upper),
            Self::UnitMu => Weights::new(minus, rational::one()),
        }
    }

    pub fn delta(self, n: usize) -> Rational {
        self.weights(n).delta()
    }

    /// The coefficients of this row; `beta2_free` is only read for
    /// [`ResonantCase::Upper`].
    pub fn coeffs(self, n: usize, beta2_free: &Rational) -> QuantCoeffs {
        let b3 = rational::rat(1, 1 - n as i64);
        let (b1, b2, b3) = match self {
            Self::Upper => (beta2_free * rational::int(2), beta2_free.clone(), b3),
            Self::ZeroLambda => (rational::int(2), rational::zero(), rational::zero()),
            Self::UnitMu => (rational::zero(), rational::zero(), b3),
        };
        QuantCoeffs::second_order(b1, b2, b3).with_alpha(alpha(&self.weights(n)).expect("delta != 1"))
    }

    /// Cases whose δ equals `delta`.
    pub fn with_delta(n: usize, delta: &Rational) -> Vec<ResonantCase> {
        Self::ALL.into_iter().filter(|c| &c.delta(n) == delta).collect()
    }
}

fn check_symbol_weight(t: &SymbolField, w: &Weights) -> Result<()> {
    if t.delta() != &w.delta() {
        return Err(Error::WeightMismatch {
            expected: format_rational(&w.delta()),
            found: format_rational(t.delta()),
        });
    }
    Ok(())
}

fn check_connection(g: &Connection, t: &SymbolField) -> Result<()> {
    if g.n() != t.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: t.n(),
        });
    }
    Ok(())
}

fn lower_only(t: &SymbolField) -> Result<()> {
    if t.has_deg2() {
        return Err(Error::InvalidSymbol("first-order quantization needs deg2 == 0".into()));
    }
    Ok(())
}

fn top_only(t: &SymbolField) -> Result<()> {
    if t.has_lower() {
        return Err(Error::InvalidSymbol(
            "second-order quantization needs deg1 == 0 and deg0 == 0".into(),
        ));
    }
    Ok(())
}

/// `T^i ∇_i + α ∇_i(T^i) + T^0` with an explicit α; no resonance check.
pub fn q1_with_alpha(g: &Connection, t: &SymbolField, w: &Weights, alpha: &Rational) -> Result<DiffOp> {
    check_connection(g, t)?;
    check_symbol_weight(t, w)?;
    lower_only(t)?;
    let n = g.n();
    let trace = g.trace();
    let grad = covariant_density(&trace, &w.lambda, &OpExpr::identity(n));
    let mut e = OpExpr::multiplication(
        covariant_divergence(g, &trace, t.delta(), t.deg1()).scale(alpha) + t.deg0(),
    );
    for (gi, ti) in grad.iter().zip(t.deg1()) {
        if !ti.is_zero() {
            e = e.plus(&gi.times(ti));
        }
    }
    DiffOp::from_expr(w.clone(), &e)
}

pub fn q1(g: &Connection, t: &SymbolField, w: &Weights) -> Result<DiffOp> {
    let a = alpha(w)?;
    q1_with_alpha(g, t, w, &a)
}

/// The first-order isomorphism at δ = 1, (λ, μ) = (0, 1), with α = 0.
pub fn q1_delta_one(g: &Connection, t: &SymbolField) -> Result<DiffOp> {
    q1_delta_one_with_alpha(g, t, &rational::zero())
}

/// At (λ, μ) = (0, 1) the term `∇_i T^i = ∂_i T^i` is connection-free, so
/// every α gives an invariant map; α = 0 is the conventional choice.
pub fn q1_delta_one_with_alpha(g: &Connection, t: &SymbolField, alpha: &Rational) -> Result<DiffOp> {
    q1_with_alpha(g, t, &Weights::new(rational::zero(), rational::one()), alpha)
}

/// [`q2`] with explicit coefficients and Ricci convention; no resonance
/// check (used for perturbation experiments and the resonant cases).
pub fn q2_with_betas(
    g: &Connection,
    t: &SymbolField,
    w: &Weights,
    betas: &[Rational; 3],
    convention: RicciConvention,
) -> Result<DiffOp> {
    check_connection(g, t)?;
    check_symbol_weight(t, w)?;
    top_only(t)?;
    let n = g.n();
    require_n2(n)?;
    let [b1, b2, b3] = betas;
    let delta = w.delta();
    let tt = t.deg2();
    let trace = g.trace();

    let grad = covariant_density(&trace, &w.lambda, &OpExpr::identity(n));
    let hess = covariant_covector(g, &trace, &w.lambda, &grad);
    let mut e = OpExpr::zero(n);
    for ((i, j), tij) in tt.indexed_iter() {
        if !tij.is_zero() {
            e = e.plus(&hess[[i, j]].times(tij));
        }
    }

    let div = sym2_divergence(g, &trace, &delta, tt);
    if !b1.is_zero() {
        for (gi, vi) in grad.iter().zip(&div) {
            if !vi.is_zero() {
                e = e.plus(&gi.times(&vi.scale(b1)));
            }
        }
    }

    let mut zeroth = Polynomial::zero(n);
    if !b2.is_zero() {
        zeroth += covariant_divergence(g, &trace, &delta, &div).scale(b2);
    }
    if !b3.is_zero() {
        let r = ricci_with(g, convention)?;
        for ((i, j), tij) in tt.indexed_iter() {
            zeroth += (&r.0[[i, j]] * tij).scale(b3);
        }
    }
    e = e.plus(&OpExpr::multiplication(zeroth));
    DiffOp::from_expr(w.clone(), &e)
}

pub fn q2(g: &Connection, t: &SymbolField, w: &Weights) -> Result<DiffOp> {
    require_n2(g.n())?;
    let coeffs = betas(g.n(), w)?;
    q2_with_betas(g, t, w, &coeffs.betas()?, RicciConvention::Invariant)
}

/// Second-order quantization at one of the resonant weights.
pub fn q2_resonant(
    g: &Connection,
    t: &SymbolField,
    case: ResonantCase,
    beta2_free: &Rational,
) -> Result<DiffOp> {
    let n = g.n();
    require_n2(n)?;
    let coeffs = case.coeffs(n, beta2_free);
    q2_with_betas(g, t, &case.weights(n), &coeffs.betas()?, RicciConvention::Invariant)
}

/// `T^{ij} ∂_i∂_j + β₁ (∂_j T^{ij}) ∂_i + β₂ ∂_i∂_j T^{ij}`, written
/// directly in coordinates without any connection code.
pub fn q2_flat_oracle(t: &SymbolField, w: &Weights) -> Result<DiffOp> {
    let n = t.n();
    let coeffs = betas(n, w)?;
    let [b1, b2, _] = coeffs.betas()?;
    q2_flat_with(t, w, &b1, &b2)
}

pub(crate) fn q2_flat_with(t: &SymbolField, w: &Weights, b1: &Rational, b2: &Rational) -> Result<DiffOp> {
    check_symbol_weight(t, w)?;
    top_only(t)?;
    let n = t.n();
    require_n2(n)?;
    let tt = t.deg2();
    let a1: Vec<Polynomial> = (0..n)
        .map(|i| {
            let mut acc = Polynomial::zero(n);
            for j in 0..n {
                acc += tt[[i, j]].d(j);
            }
            acc.scale(b1)
        })
        .collect();
    let mut a0 = Polynomial::zero(n);
    for ((i, j), tij) in tt.indexed_iter() {
        a0 += tij.d(j).d(i);
    }
    DiffOp::new(w.clone(), tt.clone(), a1, a0.scale(b2))
}

/// Quantization of a full symbol with explicit coefficients: the degree-2
/// part goes through Q², the rest through Q¹.
pub fn quantize_with(
    g: &Connection,
    t: &SymbolField,
    w: &Weights,
    coeffs: &QuantCoeffs,
    convention: RicciConvention,
) -> Result<DiffOp> {
    check_connection(g, t)?;
    check_symbol_weight(t, w)?;
    let (top, lower) = t.split();
    let mut out = DiffOp::zero(g.n(), w.clone());
    if top.has_deg2() {
        out = out.try_add(&q2_with_betas(g, &top, w, &coeffs.betas()?, convention)?)?;
    }
    if lower.has_lower() {
        out = out.try_add(&q1_with_alpha(g, &lower, w, &coeffs.alpha()?)?)?;
    }
    Ok(out)
}

/// Coefficients [`quantize`] would use for a symbol with the given parts.
fn default_coeffs(n: usize, w: &Weights, needs_top: bool, needs_lower: bool) -> Result<QuantCoeffs> {
    let mut coeffs = if needs_top { betas(n, w)? } else { QuantCoeffs::default() };
    if needs_lower {
        coeffs.alpha = Some(alpha(w)?);
    }
    Ok(coeffs)
}

pub fn quantize(g: &Connection, t: &SymbolField, w: &Weights) -> Result<DiffOp> {
    check_connection(g, t)?;
    let coeffs = default_coeffs(g.n(), w, t.has_deg2(), t.has_lower())?;
    quantize_with(g, t, w, &coeffs, RicciConvention::Invariant)
}

/// Full quantization at a resonant case.
pub fn quantize_resonant(
    g: &Connection,
    t: &SymbolField,
    case: ResonantCase,
    beta2_free: &Rational,
) -> Result<DiffOp> {
    let n = g.n();
    require_n2(n)?;
    let w = case.weights(n);
    quantize_with(g, t, &w, &case.coeffs(n, beta2_free), RicciConvention::Invariant)
}

/// Inverse of [`quantize_with`] on operators of order ≤ 2, by peeling off
/// the principal part order by order.
pub fn dequantize_with(
    g: &Connection,
    a: &DiffOp,
    coeffs: &QuantCoeffs,
    convention: RicciConvention,
) -> Result<SymbolField> {
    let n = g.n();
    if a.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.n(),
        });
    }
    if a.a3().iter().any(|p| !p.is_zero()) {
        return Err(Error::Order("dequantize expects order <= 2".into()));
    }
    let w = &a.weights;
    let delta = w.delta();
    let top = SymbolField::quadratic(delta.clone(), a.a2().clone())?;
    let mut rest = a.clone();
    if top.has_deg2() {
        rest = rest.try_sub(&q2_with_betas(g, &top, w, &coeffs.betas()?, convention)?)?;
    }
    debug_assert!(rest.a2().iter().all(Polynomial::is_zero));
    let first = SymbolField::linear(delta.clone(), rest.a1().to_vec(), Polynomial::zero(n))?;
    if first.has_lower() {
        rest = rest.try_sub(&q1_with_alpha(g, &first, w, &coeffs.alpha()?)?)?;
    }
    debug_assert!(rest.a1().iter().all(Polynomial::is_zero));
    SymbolField::new(delta, top.deg2().clone(), first.deg1().to_vec(), rest.a0().clone())
}

pub fn dequantize(g: &Connection, a: &DiffOp) -> Result<SymbolField> {
    let mut coeffs = if a.a2().iter().any(|p| !p.is_zero()) {
        betas(g.n(), &a.weights)?
    } else {
        QuantCoeffs::default()
    };
    coeffs.alpha = alpha(&a.weights).ok();
    dequantize_with(g, a, &coeffs, RicciConvention::Invariant)
}

/// Names of the individual quantization coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Alpha,
    Beta1,
    Beta2,
    Beta3,
}

impl Coefficient {
    pub const BETAS: [Coefficient; 3] = [Self::Beta1, Self::Beta2, Self::Beta3];

    pub fn name(self) -> &'static str {
        match self {
            Self::Alpha => "alpha",
            Self::Beta1 => "beta1",
            Self::Beta2 => "beta2",
            Self::Beta3 => "beta3",
        }
    }
}

impl std::str::FromStr for Coefficient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(Self::Alpha),
            "beta1" => Ok(Self::Beta1),
            "beta2" => Ok(Self::Beta2),
            "beta3" => Ok(Self::Beta3),
            other => Err(Error::Schema(format!("unknown coefficient `{other}`"))),
        }
    }
}

/// Returns `coeffs` with `by` added to one coefficient.
pub fn perturb(coeffs: &QuantCoeffs, which: Coefficient, by: &Rational) -> Result<QuantCoeffs> {
    let mut out = coeffs.clone();
    let slot = match which {
        Coefficient::Alpha => &mut out.alpha,
        Coefficient::Beta1 => &mut out.beta1,
        Coefficient::Beta2 => &mut out.beta2,
        Coefficient::Beta3 => &mut out.beta3,
    };
    let v = slot.take().ok_or(Error::MissingCoefficient(which.name()))?;
    *slot = Some(v + by);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use ndarray::Array2;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(2, i).unwrap()
    }

    fn c(v: Rational) -> Polynomial {
        Polynomial::constant(2, v)
    }

    fn half() -> Weights {
        Weights::new(rat(1, 2), rat(1, 2))
    }

    fn t11(delta: Rational, p: Polynomial) -> SymbolField {
        let mut m = Array2::from_elem((2, 2), Polynomial::zero(2));
        m[[0, 0]] = p;
        SymbolField::quadratic(delta, m).unwrap()
    }

    fn betas_of(n: usize, l: Rational, m: Rational) -> [Rational; 3] {
        betas(n, &Weights::new(l, m)).unwrap().betas().unwrap()
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(&half()).unwrap(), rat(1, 2));
        assert_eq!(alpha(&Weights::new(int(0), rat(2, 7))).unwrap(), int(0));
        assert!(matches!(alpha(&Weights::new(int(1), int(2))), Err(Error::ResonantWeight { .. })));
    }

    #[test]
    fn beta_values() {
        assert_eq!(betas_of(2, rat(1, 2), rat(1, 2)), [int(1), rat(3, 16), rat(9, 16)]);
        assert_eq!(betas_of(2, int(0), int(0)), [rat(2, 5), int(0), int(0)]);
        assert!(betas(2, &Weights::new(int(0), rat(5, 3))).is_err());
        assert!(betas(2, &Weights::new(int(0), rat(4, 3))).is_err());
        assert!(matches!(betas(1, &half()), Err(Error::UnsupportedDimension { .. })));
    }

    #[test]
    fn q1_examples() {
        let g = Connection::zero(2);
        let t = SymbolField::linear(int(0), vec![x(0), Polynomial::zero(2)], Polynomial::zero(2)).unwrap();
        let a = q1(&g, &t, &half()).unwrap();
        assert_eq!(a.a1(), &[x(0), Polynomial::zero(2)][..]);
        assert_eq!(a.a0(), &c(rat(1, 2)));

        let t0 = SymbolField::linear(int(0), vec![Polynomial::zero(2); 2], x(1)).unwrap();
        let a = q1(&g, &t0, &half()).unwrap();
        assert_eq!(a, DiffOp::multiplication(half(), x(1)));

        let w = Weights::new(int(0), rat(1, 3));
        let t = SymbolField::linear(rat(1, 3), vec![x(1), x(0) * x(0)], c(int(4))).unwrap();
        let a = q1(&g, &t, &w).unwrap();
        assert_eq!(a.a1(), t.deg1());
        assert_eq!(a.a0(), &c(int(4)));
    }

    #[test]
    fn q1_rejects_bad_input() {
        let g = Connection::zero(2);
        let zero = || Polynomial::zero(2);
        let t = t11(int(0), Polynomial::one(2));
        assert!(matches!(q1(&g, &t, &half()), Err(Error::InvalidSymbol(_))));
        let lin = SymbolField::linear(int(1), vec![x(0), x(1)], zero()).unwrap();
        assert!(q1(&g, &lin, &Weights::new(int(0), int(1))).is_err());
        let wrong = SymbolField::linear(int(3), vec![x(0), x(1)], zero()).unwrap();
        assert!(matches!(q1(&g, &wrong, &half()), Err(Error::WeightMismatch { .. })));
    }

    #[test]
    fn q1_at_delta_one() {
        let g = Connection::zero(2);
        let zero = || Polynomial::zero(2);
        let e1 = SymbolField::linear(int(1), vec![Polynomial::one(2), zero()], zero()).unwrap();
        let a = q1_delta_one(&g, &e1).unwrap();
        let expected = DiffOp::new(
            Weights::new(int(0), int(1)),
            Array2::from_elem((2, 2), zero()),
            vec![Polynomial::one(2), zero()],
            zero(),
        )
        .unwrap();
        assert_eq!(a, expected);
    }

    #[test]
    fn q2_examples() {
        let g = Connection::zero(2);
        let a = q2(&g, &t11(int(0), x(0) * x(0)), &half()).unwrap();
        assert_eq!(a.a2()[[0, 0]], x(0) * x(0));
        assert_eq!(a.a1(), &[x(0).scale(&int(2)), Polynomial::zero(2)][..]);
        assert_eq!(a.a0(), &c(rat(3, 8)));
        assert_eq!(a, q2_flat_oracle(&t11(int(0), x(0) * x(0)), &half()).unwrap());

        let k = t11(int(0), c(int(5)));
        let a = q2(&g, &k, &half()).unwrap();
        assert!(a.a1().iter().all(Polynomial::is_zero) && a.a0().is_zero());

        let w = Weights::new(int(0), int(0));
        let a = q2(&g, &t11(int(0), x(0) * x(1)), &w).unwrap();
        assert_eq!(a.a1()[0], x(1).scale(&rat(2, 5)));
        assert!(a.a0().is_zero());
    }

    #[test]
    fn resonant_examples() {
        let g = Connection::zero(2);
        let d = ResonantCase::ZeroLambda.delta(2);
        assert_eq!(d, rat(4, 3));
        let a = q2_resonant(&g, &t11(d, x(0) * x(1)), ResonantCase::ZeroLambda, &int(0)).unwrap();
        assert_eq!(a.a1()[0], x(1).scale(&int(2)));
        assert!(a.a0().is_zero());

        let t = t11(rat(4, 3), x(0) * x(0));
        let a = q2_resonant(&g, &t, ResonantCase::UnitMu, &int(0)).unwrap();
        assert!(a.a1().iter().all(Polynomial::is_zero) && a.a0().is_zero());

        assert_eq!(ResonantCase::Upper.delta(2), rat(5, 3));
        let c1 = ResonantCase::Upper.coeffs(2, &rat(7, 3));
        assert_eq!(c1.betas().unwrap(), [rat(14, 3), rat(7, 3), int(-1)]);
        assert_eq!(
            ResonantCase::with_delta(2, &rat(4, 3)),
            vec![ResonantCase::ZeroLambda, ResonantCase::UnitMu]
        );
        assert!(ResonantCase::from_id(4).is_err());
    }

    #[test]
    fn quantize_and_dequantize() {
        let mut m = Array2::from_elem((2, 2), Polynomial::zero(2));
        m[[0, 1]] = x(0);
        m[[1, 0]] = x(0);
        let conn = Connection::from_lower_triangle(2, |i, j, k| {
            if (i, j, k) == (1, 0, 1) { x(1) } else { Polynomial::zero(2) }
        });
        let t = SymbolField::new(int(0), m, vec![x(1), Polynomial::one(2)], x(0)).unwrap();
        let a = quantize(&conn, &t, &half()).unwrap();
        assert_eq!(dequantize(&conn, &a).unwrap(), t);
        assert!(quantize(&conn, &SymbolField::zero(2, int(0)), &half()).unwrap().is_zero());
    }

    #[test]
    fn perturb_one_coefficient() {
        let base = betas(2, &half()).unwrap();
        let p = perturb(&base, Coefficient::Beta2, &int(1)).unwrap();
        assert_eq!(p.betas().unwrap(), [int(1), rat(19, 16), rat(9, 16)]);
        assert_eq!(p.alpha, base.alpha);
        assert!(perturb(&QuantCoeffs::default(), Coefficient::Alpha, &int(1)).is_err());
        assert_eq!("beta3".parse::<Coefficient>().unwrap(), Coefficient::Beta3);
    }
}
