//! Exact projectively invariant quantization of second-order symbols.
//!
//! The crate maps symbols `T^{ij} ξ_i ξ_j + T^i ξ_i + T^0` with values in
//! δ-densities to differential operators between λ- and μ-densities, using
//! a torsion-free connection only through its projective class. All
//! arithmetic is exact (rational coefficients, polynomial fields), so every
//! invariance or equivariance statement is checked as a zero residual.
//!
//! Module map:
//!
//! * [`rational`], [`poly`]: exact rationals and multivariate polynomials;
//! * [`fields`]: weights, densities, forms, vector fields, symbols, connections;
//! * [`covariant`]: covariant derivatives, projective shifts, Ricci tensor;
//! * [`operators`]: differential operators and the `Vect(M)` actions;
//! * [`quantization`]: the quantization maps and their coefficients;
//! * [`verification`]: executable invariance and equivariance checks;
//! * [`json`]: wire formats; [`cli`]: the command-line front end.

pub mod cli;
pub mod covariant;
pub mod error;
pub mod fields;
pub mod json;
pub mod operators;
pub mod poly;
pub mod quantization;
pub mod rational;
pub mod verification;

pub use covariant::{
    nabla_covector_density, nabla_density, nabla_sym2, nabla_vector, projective_shift,
    projectively_flat_connection, ricci, ricci_with, CovectorDensity, RicciConvention, RicciTensor,
};
pub use error::{Error, Result};
pub use fields::{
    connection_trace, symbol_split, symmetrize2, Connection, Density, OneForm, QuantCoeffs,
    SymbolField, VectorField, Weights,
};
pub use operators::{apply, compose, lie_density, lie_operator, lie_symbol, principal_symbol, DiffOp, OpExpr};
pub use poly::Polynomial;
pub use quantization::{
    alpha, betas, dequantize, q1, q1_delta_one, q2, q2_flat_oracle, q2_resonant, quantize,
    Coefficient, ResonantCase,
};
pub use rational::Rational;
