//! Multivariate polynomials with exact rational coefficients in the chart
//! coordinates `x¹ … xⁿ`.
//!
//! Every coordinate-dependent quantity in the crate (densities, Christoffel
//! symbols, symbol components, operator coefficients) is a [`Polynomial`],
//! and every partial derivative is [`Polynomial::partial`].

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Exponent multi-index, one entry per coordinate.
pub type Exponent = Vec<u32>;

/// A polynomial in `n` variables. Zero coefficients are never stored, so
/// structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Exponent, Rational>,
}

/// Binary ring operations accepted by [`Polynomial::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Self::zero(n);
        p.insert(vec![0; n], c);
        p
    }

    /// The coordinate function `x^(i+1)` (indices are 0-based).
    pub fn var(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut exp = vec![0; n];
        exp[i] = 1;
        Ok(Self::monomial(exp, rational::one()))
    }

    /// `coef · x^exp`; the dimension is `exp.len()`.
    pub fn monomial(exp: Exponent, coef: Rational) -> Self {
        let mut p = Self::zero(exp.len());
        p.insert(exp, coef);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut p = Self::zero(n);
        for (exp, coef) in terms {
            if exp.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: exp.len(),
                });
            }
            p.insert(exp, coef);
        }
        Ok(p)
    }

    fn insert(&mut self, exp: Exponent, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coef;
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
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Coefficient of `x^exp` (zero when absent).
    pub fn coefficient(&self, exp: &[u32]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.n])
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        match op {
            ArithOp::Add => self.try_add(other),
            ArithOp::Sub => self.try_sub(other),
            ArithOp::Mul => self.try_mul(other),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.n));
        }
        // Clear denominators so the inner loop is integer-only; each output
        // coefficient is reduced once at the end.
        let (da, a) = self.integer_form();
        let (db, b) = other.integer_form();
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let exp: Exponent = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                let prod = ca * cb;
                match acc.entry(exp) {
                    Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    Entry::Occupied(mut o) => *o.get_mut() += prod,
                }
            }
        }
        let den = da * db;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                let r = if den.is_one() { Rational::from_integer(c) } else { Rational::new(c, den.clone()) };
                (e, r)
            })
            .collect();
        Ok(Self { n: self.n, terms })
    }

    /// `(d, [(e, c·d)])` with `d` the lcm of the denominators.
    fn integer_form(&self) -> (BigInt, Vec<(&Exponent, BigInt)>) {
        let d = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .terms
            .iter()
            .map(|(e, c)| (e, c.numer() * (&d / c.denom())))
            .collect();
        (d, ints)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }

    /// Formal partial derivative with respect to `x^(i+1)` (0-based `i`).
    pub fn partial(&self, i: usize) -> Result<Self> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut exp = e.clone();
            exp[i] -= 1;
            out.insert(exp, c * Rational::from_integer(e[i].into()));
        }
        Ok(out)
    }

    /// Partial derivative for indices already known to be in range.
    pub(crate) fn d(&self, i: usize) -> Self {
        self.partial(i).expect("coordinate index in range")
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    term *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += term;
        }
        Ok(acc)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut mono = String::new();
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => mono.push_str(&format!("x{}", i + 1)),
                    _ => mono.push_str(&format!("x{}^{}", i + 1, p)),
                }
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            let sep = match (k, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let body = if mono.is_empty() {
                rational::format_rational(&mag)
            } else if mag.is_one() {
                mono
            } else {
                format!("{}*{}", rational::format_rational(&mag), mono)
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial dimension mismatch")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.n, rhs.n, "polynomial dimension mismatch");
        for (e, c) in &rhs.terms {
            self.insert(e.clone(), c.clone());
        }
    }
}

impl AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        *self += &rhs;
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.n, rhs.n, "polynomial dimension mismatch");
        for (e, c) in &rhs.terms {
            self.insert(e.clone(), -c.clone());
        }
    }
}

impl SubAssign<Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: Polynomial) {
        *self -= &rhs;
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Mul<&Rational> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Rational) -> Polynomial {
        self.scale(rhs)
    }
}

impl Mul<&Rational> for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Rational) -> Polynomial {
        self.scale(rhs)
    }
}

/// One term of the canonical text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermWire {
    pub exp: Exponent,
    #[serde(with = "crate::rational::text")]
    pub coef: Rational,
}

impl Polynomial {
    /// Canonical wire form: terms sorted lexicographically by exponent.
    pub fn to_wire(&self) -> Vec<TermWire> {
        self.terms
            .iter()
            .map(|(e, c)| TermWire {
                exp: e.clone(),
                coef: c.clone(),
            })
            .collect()
    }

    /// Reads the wire form in dimension `n`. Empty lists are the zero
    /// polynomial.
    pub fn from_wire(n: usize, terms: &[TermWire]) -> Result<Self> {
        Self::from_terms(n, terms.iter().map(|t| (t.exp.clone(), t.coef.clone())))
            .map_err(|e| Error::Schema(format!("polynomial term: {e}")))
    }
}
