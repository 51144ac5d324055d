//! Covariant derivatives of weighted fields, projective changes of
//! connection and the Ricci tensor.
//!
//! The derivatives acting on densities are generic over [`Differentiable`]
//! so the same code computes both concrete values (`V = Polynomial`) and
//! operator coefficients (`V = OpExpr`, an expression linear in an
//! unspecified density). The quantization maps are built the second way.

use ndarray::{Array2, Array3};

use crate::error::{Error, Result};
use crate::fields::{Connection, Density, OneForm, SymbolField};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};

/// Anything that can be differentiated in a coordinate direction and
/// multiplied by a polynomial function.
pub trait Differentiable: Clone {
    fn zero_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, f: &Polynomial) -> Self;
    fn deriv(&self, i: usize) -> Self;
}

impl Differentiable for Polynomial {
    fn zero_like(&self) -> Self {
        Polynomial::zero(self.n())
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, f: &Polynomial) -> Self {
        self * f
    }
    fn deriv(&self, i: usize) -> Self {
        self.d(i)
    }
}

/// Section of `Ω¹(M) ⊗ F_λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CovectorDensity {
    pub weight: Rational,
    pub components: Vec<Polynomial>,
}

/// `R_ij`; not symmetric in general.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RicciTensor(pub Array2<Polynomial>);

impl RicciTensor {
    pub fn components(&self) -> &Array2<Polynomial> {
        &self.0
    }

    pub fn is_symmetric(&self) -> bool {
        let (n, _) = self.0.dim();
        (0..n).all(|i| (0..n).all(|j| self.0[[i, j]] == self.0[[j, i]]))
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// `∇_i φ = ∂_i φ − λ Γ_i φ`.
pub fn covariant_density<V: Differentiable>(
    trace: &OneForm,
    weight: &Rational,
    phi: &V,
) -> Vec<V> {
    trace
        .components()
        .iter()
        .enumerate()
        .map(|(i, gi)| phi.deriv(i).minus(&phi.times(&gi.scale(weight))))
        .collect()
}

/// `∇_i θ_j = ∂_i θ_j − Γ^k_ij θ_k − λ Γ_i θ_j` for a covector of weight λ.
pub fn covariant_covector<V: Differentiable>(
    g: &Connection,
    trace: &OneForm,
    weight: &Rational,
    theta: &[V],
) -> Array2<V> {
    let n = g.n();
    Array2::from_shape_fn((n, n), |(i, j)| {
        let mut acc = theta[j].deriv(i);
        for (k, tk) in theta.iter().enumerate() {
            let c = g.get(k, i, j);
            if !c.is_zero() {
                acc = acc.minus(&tk.times(c));
            }
        }
        acc.minus(&theta[j].times(&trace.components()[i].scale(weight)))
    })
}

/// `∇_j T^i = ∂_j T^i + Γ^i_jl T^l − δ Γ_j T^i`, returned as `[[i, j]]`.
pub fn covariant_vector(
    g: &Connection,
    trace: &OneForm,
    delta: &Rational,
    t: &[Polynomial],
) -> Array2<Polynomial> {
    let n = g.n();
    Array2::from_shape_fn((n, n), |(i, j)| {
        let mut acc = t[i].d(j);
        for (l, tl) in t.iter().enumerate() {
            acc += g.get(i, j, l) * tl;
        }
        acc - (&t[i] * &trace.components()[j]).scale(delta)
    })
}

/// `∇_i T^i` for a vector of weight δ.
pub fn covariant_divergence(
    g: &Connection,
    trace: &OneForm,
    delta: &Rational,
    t: &[Polynomial],
) -> Polynomial {
    // trace of `covariant_vector`; only the diagonal is formed
    let n = g.n();
    let mut acc = Polynomial::zero(n);
    for i in 0..n {
        acc += t[i].d(i);
        for (l, tl) in t.iter().enumerate() {
            acc += g.get(i, i, l) * tl;
        }
        acc -= (&t[i] * &trace.components()[i]).scale(delta);
    }
    acc
}

pub fn covariant_sym2(
    g: &Connection,
    trace: &OneForm,
    delta: &Rational,
    t: &Array2<Polynomial>,
) -> Array3<Polynomial> {
    let n = g.n();
    Array3::from_shape_fn((n, n, n), |(i, j, k)| {
        let mut acc = t[[i, j]].d(k);
        for l in 0..n {
            acc += g.get(i, l, k) * &t[[l, j]];
            acc += g.get(j, l, k) * &t[[i, l]];
        }
        acc - (&t[[i, j]] * &trace.components()[k]).scale(delta)
    })
}

/// `V^i = ∇_j T^{ij}`, a vector of weight δ.
pub fn sym2_divergence(
    g: &Connection,
    trace: &OneForm,
    delta: &Rational,
    t: &Array2<Polynomial>,
) -> Vec<Polynomial> {
    // `Σ_j ∇_j T^{ij}`, forming only the traced entries of `covariant_sym2`
    let n = g.n();
    (0..n)
        .map(|i| {
            let mut acc = Polynomial::zero(n);
            for j in 0..n {
                acc += t[[i, j]].d(j);
                for l in 0..n {
                    acc += g.get(i, l, j) * &t[[l, j]];
                    acc += g.get(j, l, j) * &t[[i, l]];
                }
                acc -= (&t[[i, j]] * &trace.components()[j]).scale(delta);
            }
            acc
        })
        .collect()
}

pub fn nabla_density(g: &Connection, phi: &Density) -> Result<CovectorDensity> {
    check_dim(g.n(), phi.n())?;
    Ok(CovectorDensity {
        weight: phi.weight.clone(),
        components: covariant_density(&g.trace(), &phi.weight, &phi.coeff),
    })
}

/// `∇_i θ_j`, returned as `[[i, j]]`; the result carries the weight of θ.
pub fn nabla_covector_density(g: &Connection, theta: &CovectorDensity) -> Result<Array2<Polynomial>> {
    check_dim(g.n(), theta.components.len())?;
    for c in &theta.components {
        check_dim(g.n(), c.n())?;
    }
    Ok(covariant_covector(g, &g.trace(), &theta.weight, &theta.components))
}

/// `∇_j T^i` of the degree-1 part of `t`, as `[[i, j]]`.
pub fn nabla_vector(g: &Connection, t: &SymbolField) -> Result<Array2<Polynomial>> {
    check_dim(g.n(), t.n())?;
    Ok(covariant_vector(g, &g.trace(), t.delta(), t.deg1()))
}

/// `∇_k T^{ij}` of the degree-2 part of `t`, as `[[i, j, k]]`.
pub fn nabla_sym2(g: &Connection, t: &SymbolField) -> Result<Array3<Polynomial>> {
    check_dim(g.n(), t.n())?;
    Ok(covariant_sym2(g, &g.trace(), t.delta(), t.deg2()))
}

/// `Γ~^i_jk = Γ^i_jk + δ^i_j ω_k + δ^i_k ω_j`.
pub fn projective_shift(g: &Connection, omega: &OneForm) -> Result<Connection> {
    let n = g.n();
    check_dim(n, omega.n())?;
    let w = omega.components();
    Ok(Connection::from_lower_triangle(n, |i, j, k| {
        let mut p = g.get(i, j, k).clone();
        if i == j {
            p += &w[k];
        }
        if i == k {
            p += &w[j];
        }
        p
    }))
}

/// `Γ^i_jk = (δ^i_j θ_k + δ^i_k θ_j) / (n + 1)`.
pub fn projectively_flat_connection(theta: &OneForm) -> Connection {
    let n = theta.n();
    let shifted = theta.scale(&rational::rat(1, n as i64 + 1));
    projective_shift(&Connection::zero(n), &shifted).expect("dimensions agree")
}

/// Sign convention for the contracted curvature.
///
/// Only [`RicciConvention::Invariant`] makes the second-order quantization
/// map independent of the projective class; the other sign is kept for the
/// discrimination tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RicciConvention {
    /// `R_ij = ∂_i Γ^k_kj − ∂_k Γ^k_ij + Γ^k_il Γ^l_kj − Γ^k_kl Γ^l_ij`.
    #[default]
    Invariant,
    /// `R^k_{ikj}` with the usual curvature sign, the negative of
    /// [`RicciConvention::Invariant`].
    Opposite,
}

/// Ricci tensor in the convention used by the quantization maps.
pub fn ricci(g: &Connection) -> Result<RicciTensor> {
    ricci_with(g, RicciConvention::Invariant)
}

pub fn ricci_with(g: &Connection, convention: RicciConvention) -> Result<RicciTensor> {
    let n = g.n();
    if n < 2 {
        return Err(Error::UnsupportedDimension {
            n,
            reason: "the Ricci tensor is only used for n >= 2",
        });
    }
    // textbook contraction R^k_{ikj}
    let r = Array2::from_shape_fn((n, n), |(i, j)| {
        let mut acc = Polynomial::zero(n);
        for k in 0..n {
            acc += g.get(k, i, j).d(k);
            acc -= g.get(k, k, j).d(i);
            for l in 0..n {
                acc += g.get(k, k, l) * g.get(l, i, j);
                acc -= g.get(k, i, l) * g.get(l, k, j);
            }
        }
        match convention {
            RicciConvention::Opposite => acc,
            RicciConvention::Invariant => -acc,
        }
    });
    Ok(RicciTensor(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i).unwrap()
    }

    fn c(n: usize, v: Rational) -> Polynomial {
        Polynomial::constant(n, v)
    }

    fn const_form(n: usize, vals: &[Rational]) -> OneForm {
        OneForm::new(vals.iter().map(|v| c(n, v.clone())).collect()).unwrap()
    }

    #[test]
    fn density_derivative_reduces_to_partials() {
        let n = 2;
        let phi = Density::new(rat(2, 3), x(n, 0) * x(n, 0) * x(n, 1));
        let flat = nabla_density(&Connection::zero(n), &phi).unwrap();
        assert_eq!(flat.components, vec![phi.coeff.d(0), phi.coeff.d(1)]);

        let g = projectively_flat_connection(&OneForm::new(vec![x(n, 1), x(n, 0)]).unwrap());
        let weightless = Density::new(int(0), phi.coeff.clone());
        let got = nabla_density(&g, &weightless).unwrap();
        assert_eq!(got.components, vec![phi.coeff.d(0), phi.coeff.d(1)]);
    }

    #[test]
    fn density_derivative_under_constant_shift() {
        // Γ_i = 3 ω_i, so ∇_i 1 = -3 ω_i for λ = 1.
        let n = 2;
        let cc = rat(5, 7);
        let g = projective_shift(&Connection::zero(n), &const_form(n, &[cc.clone(), int(0)])).unwrap();
        let got = nabla_density(&g, &Density::new(int(1), Polynomial::one(n))).unwrap();
        assert_eq!(got.components, vec![c(n, -cc * int(3)), Polynomial::zero(n)]);
    }

    #[test]
    fn shift_of_zero_by_constant_form() {
        let n = 2;
        let cc = rat(3, 2);
        let g = projective_shift(&Connection::zero(n), &const_form(n, &[cc.clone(), int(0)])).unwrap();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let expected = match (i, j, k) {
                        (0, 0, 0) => c(n, &cc * int(2)),
                        (1, 0, 1) | (1, 1, 0) => c(n, cc.clone()),
                        _ => Polynomial::zero(n),
                    };
                    assert_eq!(g.get(i, j, k), &expected, "Γ^{i}_{j}{k}");
                }
            }
        }
    }

    #[test]
    fn shift_by_zero_and_inverse() {
        let n = 3;
        let g = Connection::from_lower_triangle(n, |i, j, k| x(n, i) * x(n, j) + c(n, int(k as i64)));
        assert_eq!(projective_shift(&g, &OneForm::zero(n)).unwrap(), g);
        let omega = OneForm::new(vec![x(n, 2), c(n, rat(1, 2)), x(n, 0) * x(n, 1)]).unwrap();
        let back = projective_shift(&projective_shift(&g, &omega).unwrap(), &omega.scale(&int(-1))).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn flat_connection_properties() {
        let n = 3;
        assert!(projectively_flat_connection(&OneForm::zero(n)).is_zero());
        let theta = OneForm::new(vec![x(n, 1), x(n, 0) * x(n, 2), c(n, rat(-2, 3))]).unwrap();
        let g = projectively_flat_connection(&theta);
        assert_eq!(g.trace(), theta);
        let via_shift = projective_shift(&Connection::zero(n), &theta.scale(&rat(1, 4))).unwrap();
        assert_eq!(g, via_shift);
    }

    #[test]
    fn trace_shifts_by_n_plus_one_omega() {
        let n = 2;
        let g = Connection::from_lower_triangle(n, |i, j, k| x(n, (i + j + k) % n));
        let omega = OneForm::new(vec![x(n, 0) * x(n, 1), c(n, rat(1, 3))]).unwrap();
        let shifted = projective_shift(&g, &omega).unwrap().trace();
        let expected: Vec<_> = g
            .trace()
            .components()
            .iter()
            .zip(omega.components())
            .map(|(a, w)| a + w.scale(&int(3)))
            .collect();
        assert_eq!(shifted.components(), expected.as_slice());
    }

    #[test]
    fn covector_derivative_flat_and_exact() {
        let n = 2;
        let theta = CovectorDensity {
            weight: rat(1, 2),
            components: vec![x(n, 1) * x(n, 1), x(n, 0)],
        };
        let flat = nabla_covector_density(&Connection::zero(n), &theta).unwrap();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(flat[[i, j]], theta.components[j].d(i));
            }
        }

        let g = Connection::from_lower_triangle(n, |i, j, k| x(n, i) + c(n, int((j * k) as i64)));
        let f = x(n, 0) * x(n, 0) * x(n, 1) + x(n, 1);
        let exact = nabla_density(&g, &Density::new(int(0), f)).unwrap();
        let hess = nabla_covector_density(&g, &exact).unwrap();
        assert_eq!(hess[[0, 1]], hess[[1, 0]]);
    }

    #[test]
    fn vector_derivative_cases() {
        let n = 2;
        let t = SymbolField::linear(rat(1, 3), vec![x(n, 0) * x(n, 1), x(n, 1)], Polynomial::zero(n)).unwrap();
        let flat = nabla_vector(&Connection::zero(n), &t).unwrap();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(flat[[i, j]], t.deg1()[i].d(j));
            }
        }

        let g = Connection::from_lower_triangle(n, |i, j, k| c(n, int((1 + i + 2 * j + 3 * k) as i64)));
        let tc = SymbolField::linear(int(0), vec![c(n, int(2)), c(n, int(-1))], Polynomial::zero(n)).unwrap();
        let got = nabla_vector(&g, &tc).unwrap();
        for i in 0..n {
            for j in 0..n {
                let mut e = Polynomial::zero(n);
                for l in 0..n {
                    e += g.get(i, j, l) * &tc.deg1()[l];
                }
                assert_eq!(got[[i, j]], e);
            }
        }
    }

    #[test]
    fn sym2_derivative_cases() {
        let n = 2;
        let m = Array2::from_shape_fn((n, n), |(i, j)| x(n, i) * x(n, j) + c(n, int((i + j) as i64)));
        let t = SymbolField::quadratic(rat(1, 2), m).unwrap();
        let flat = nabla_sym2(&Connection::zero(n), &t).unwrap();
        for ((i, j, k), v) in flat.indexed_iter() {
            assert_eq!(v, &t.deg2()[[i, j]].d(k));
        }

        let g = Connection::from_lower_triangle(n, |i, j, k| x(n, i) * x(n, (j + k) % n));
        let got = nabla_sym2(&g, &t).unwrap();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    assert_eq!(got[[i, j, k]], got[[j, i, k]]);
                }
            }
        }

        let gc = Connection::from_lower_triangle(n, |i, j, k| c(n, int((i + j * k) as i64)));
        let tc = SymbolField::quadratic(int(0), Array2::from_shape_fn((n, n), |(i, j)| c(n, int((1 + i + j) as i64)))).unwrap();
        let got = nabla_sym2(&gc, &tc).unwrap();
        for ((i, j, k), v) in got.indexed_iter() {
            let mut e = Polynomial::zero(n);
            for l in 0..n {
                e += gc.get(i, l, k) * &tc.deg2()[[l, j]] + gc.get(j, l, k) * &tc.deg2()[[i, l]];
            }
            assert_eq!(v, &e);
        }
    }

    #[test]
    fn ricci_of_constant_shift() {
        // R_ij = -(n - 1) ω_i ω_j in the invariant convention.
        let n = 2;
        let cc = rat(2, 5);
        let g = projective_shift(&Connection::zero(n), &const_form(n, &[cc.clone(), int(0)])).unwrap();
        let r = ricci(&g).unwrap();
        assert_eq!(r.0[[0, 0]], c(n, -(&cc * &cc)));
        assert!(r.0[[0, 1]].is_zero() && r.0[[1, 0]].is_zero() && r.0[[1, 1]].is_zero());
        let opposite = ricci_with(&g, RicciConvention::Opposite).unwrap();
        assert_eq!(opposite.0[[0, 0]], c(n, &cc * &cc));

        assert!(ricci(&Connection::zero(3)).unwrap().0.iter().all(Polynomial::is_zero));
    }

    #[test]
    fn ricci_single_entry() {
        let n = 2;
        let g = Connection::from_lower_triangle(n, |i, j, k| {
            if (i, j, k) == (0, 1, 1) {
                x(n, 0)
            } else {
                Polynomial::zero(n)
            }
        });
        let r = ricci(&g).unwrap();
        assert_eq!(r.0[[1, 1]], c(n, int(-1)));
        assert!(r.0[[0, 0]].is_zero() && r.0[[0, 1]].is_zero() && r.0[[1, 0]].is_zero());
        assert_eq!(ricci_with(&g, RicciConvention::Opposite).unwrap().0[[1, 1]], Polynomial::one(n));
    }

    #[test]
    fn ricci_rejects_n_one() {
        assert!(matches!(
            ricci(&Connection::zero(1)),
            Err(Error::UnsupportedDimension { n: 1, .. })
        ));
    }
}
