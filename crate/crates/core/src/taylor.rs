//! Truncated Taylor arithmetic on matrix curves: the independent ground
//! truth for the jet group laws.
//!
//! A [`MatrixJet`] of order `k` stores the derivatives `A_n = A^{(n)}(0)` for
//! `n = 0..=k`, so that `A(t) = sum t^n / n! A_n mod t^{k+1}`. Products then
//! follow the Leibniz rule with integer binomials. Nothing in this module
//! touches set partitions.

use num_traits::Zero;

use crate::algebra::{AlgebraKind, AlgebraSpec, GroupPoint};
use crate::error::{input, Result};
use crate::exact::{binomial, factorial, Matrix};
use crate::jet::{JetElement, Side};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixJet<T> {
    coeffs: Vec<Matrix<T>>,
}

fn binom<T: Scalar>(n: usize, i: usize) -> T {
    T::from_bigint(&binomial(n as u64, i as i64))
}

impl<T: Scalar> MatrixJet<T> {
    pub fn new(coeffs: Vec<Matrix<T>>) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return input("a matrix jet needs at least the constant term");
        };
        let shape = (first.rows(), first.cols());
        if coeffs.iter().any(|c| (c.rows(), c.cols()) != shape) {
            return input("matrix jet coefficients must share one shape");
        }
        Ok(Self { coeffs })
    }

    pub fn constant(m: Matrix<T>, k: usize) -> Self {
        let zero = Matrix::zeros(m.rows(), m.cols());
        let mut coeffs = vec![m];
        coeffs.extend(std::iter::repeat_n(zero, k));
        Self { coeffs }
    }

    pub fn identity(n: usize, k: usize) -> Self {
        Self::constant(Matrix::identity(n), k)
    }

    /// Truncation order.
    pub fn k(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Matrix<T>] {
        &self.coeffs
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs[0].is_identity() && self.coeffs[1..].iter().all(Matrix::is_zero)
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.k() != other.k() {
            return input(format!("jet orders differ: {} vs {}", self.k(), other.k()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs =
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(Self { coeffs })
    }

    pub fn scale(&self, s: &T) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect() }
    }

    /// `(AB)_n = sum_i C(n, i) A_i B_{n-i}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for n in 0..=self.k() {
            let mut acc = Matrix::zeros(self.coeffs[0].rows(), other.coeffs[0].cols());
            for i in 0..=n {
                let (a, b) = (&self.coeffs[i], &other.coeffs[n - i]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b)?.scale(&binom(n, i)))?;
            }
            coeffs.push(acc);
        }
        Ok(Self { coeffs })
    }

    /// `B_0 = A_0^{-1}`, `B_n = -A_0^{-1} sum_{i >= 1} C(n, i) A_i B_{n-i}`.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inverse()?;
        let mut out = vec![inv0.clone()];
        for n in 1..=self.k() {
            let mut acc = Matrix::zeros(inv0.rows(), inv0.cols());
            for i in 1..=n {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[i].mul(&out[n - i])?.scale(&binom(n, i)))?;
            }
            out.push(inv0.mul(&acc)?.scale(&-T::one()));
        }
        Ok(Self { coeffs: out })
    }

    /// `A'`, of order `k - 1`.
    pub fn derivative(&self) -> Result<Self> {
        if self.k() == 0 {
            return input("cannot differentiate an order-0 jet");
        }
        Ok(Self { coeffs: self.coeffs[1..].to_vec() })
    }

    pub fn truncate(&self, k: usize) -> Result<Self> {
        if k > self.k() {
            return input(format!("cannot raise jet order {} to {k}", self.k()));
        }
        Ok(Self { coeffs: self.coeffs[..=k].to_vec() })
    }

    /// `A' A^{-1}` (right) or `A^{-1} A'` (left), of order `k - 1`.
    pub fn log_derivative(&self, side: Side) -> Result<Self> {
        let d = self.derivative()?;
        let inv = self.inverse()?.truncate(d.k())?;
        match side {
            Side::Right => d.mul(&inv),
            Side::Left => inv.mul(&d),
        }
    }

    /// `exp(X) = sum_{m <= k} X^m / m!`, exact because `X_0 = 0`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return input("exp_jet needs a vanishing constant term");
        }
        let n = self.coeffs[0].rows();
        if !self.coeffs[0].is_square() {
            return input("exp_jet needs square coefficients");
        }
        let mut power = Self::identity(n, self.k());
        let mut sum = power.clone();
        for m in 1..=self.k() {
            power = power.mul(self)?;
            let inv_fact = T::one() / T::from_bigint(&factorial(m as u64));
            sum = sum.add(&power.scale(&inv_fact))?;
        }
        Ok(sum)
    }
}

pub fn mjet_mul<T: Scalar>(a: &MatrixJet<T>, b: &MatrixJet<T>) -> Result<MatrixJet<T>> {
    a.mul(b)
}

pub fn mjet_inverse<T: Scalar>(a: &MatrixJet<T>) -> Result<MatrixJet<T>> {
    a.inverse()
}

pub fn exp_jet<T: Scalar>(x: &MatrixJet<T>) -> Result<MatrixJet<T>> {
    x.exp()
}

fn require_matrix<T: Scalar>(alg: &AlgebraSpec<T>) -> Result<usize> {
    if alg.kind() != AlgebraKind::Matrix {
        return input(format!("algebra {} has no matrix realization", alg.name()));
    }
    Ok(alg.matrix_size().unwrap())
}

/// `(c(0), (delta c)(0), (delta c)'(0), ...)` for the chosen logarithmic
/// derivative.
pub fn trivialize<T: Scalar>(
    alg: &AlgebraSpec<T>,
    c: &MatrixJet<T>,
    side: Side,
) -> Result<JetElement<T>> {
    let n = require_matrix(alg)?;
    if c.coeffs[0].rows() != n || !c.coeffs[0].is_square() {
        return input(format!("expected {n}x{n} coefficients"));
    }
    let delta = c.log_derivative(side)?;
    let x = delta.coeffs.iter().map(|m| alg.coordinates(m)).collect::<Result<Vec<_>>>()?;
    JetElement::new(GroupPoint::Matrix(c.coeffs[0].clone()), x, side)
}

/// The jet of the curve with `c(0) = g` and logarithmic derivative
/// `x'(t)`, where `x(t) = sum t^n / n! x_n`.
pub fn from_trivialization<T: Scalar>(
    alg: &AlgebraSpec<T>,
    j: &JetElement<T>,
) -> Result<MatrixJet<T>> {
    let n = require_matrix(alg)?;
    j.validate(alg)?;
    let g = match &j.g {
        GroupPoint::Identity => Matrix::identity(n),
        GroupPoint::Matrix(m) if m.rows() == n && m.is_square() => m.clone(),
        GroupPoint::Matrix(_) => return input(format!("group element must be {n}x{n}")),
        GroupPoint::Automorphism(_) => {
            return input("the Taylor oracle needs a matrix group element")
        }
    };
    let xs = j.x.iter().map(|x| alg.to_matrix(x)).collect::<Result<Vec<_>>>()?;
    // C_{m+1} = sum_i C(m, i) X_{i+1} C_{m-i}, mirrored on the left side
    let mut c = vec![g];
    for m in 0..j.k() {
        let mut acc = Matrix::zeros(n, n);
        for i in 0..=m {
            if xs[i].is_zero() {
                continue;
            }
            let term = match j.side {
                Side::Right => xs[i].mul(&c[m - i])?,
                Side::Left => c[m - i].mul(&xs[i])?,
            };
            acc = acc.add(&term.scale(&binom(m, i)))?;
        }
        c.push(acc);
    }
    MatrixJet::new(c)
}

/// `j^k(cb)` for curves representing the two jets.
pub fn oracle_multiply<T: Scalar>(
    alg: &AlgebraSpec<T>,
    a: &JetElement<T>,
    b: &JetElement<T>,
) -> Result<JetElement<T>> {
    if a.side != b.side {
        return input("cannot multiply jets in different trivializations");
    }
    if a.k() != b.k() {
        return input(format!("jet orders differ: {} vs {}", a.k(), b.k()));
    }
    let prod = from_trivialization(alg, a)?.mul(&from_trivialization(alg, b)?)?;
    trivialize(alg, &prod, a.side)
}

/// `j^k(c^{-1})`.
pub fn oracle_inverse<T: Scalar>(alg: &AlgebraSpec<T>, a: &JetElement<T>) -> Result<JetElement<T>> {
    let inv = from_trivialization(alg, a)?.inverse()?;
    trivialize(alg, &inv, a.side)
}

/// Re-expresses a jet in the opposite trivialization.
pub fn convert_side<T: Scalar>(alg: &AlgebraSpec<T>, a: &JetElement<T>) -> Result<JetElement<T>> {
    trivialize(alg, &from_trivialization(alg, a)?, a.side.other())
}

/// The jet of `x(t) = sum_{n >= 1} t^n / n! x_n` as a matrix curve.
pub fn algebra_curve<T: Scalar>(
    alg: &AlgebraSpec<T>,
    x: &[crate::algebra::AlgebraElement<T>],
) -> Result<MatrixJet<T>> {
    let n = require_matrix(alg)?;
    let mut coeffs = vec![Matrix::zeros(n, n)];
    for v in x {
        coeffs.push(alg.to_matrix(v)?);
    }
    MatrixJet::new(coeffs)
}

/// `j^k((exp x(t)) g)`: differs from the jet with trivialization
/// `(g, x_1, ..., x_k)` from order three on.
pub fn exponential_curve<T: Scalar>(
    alg: &AlgebraSpec<T>,
    g: &Matrix<T>,
    x: &[crate::algebra::AlgebraElement<T>],
) -> Result<MatrixJet<T>> {
    let curve = algebra_curve(alg, x)?;
    curve.exp()?.mul(&MatrixJet::constant(g.clone(), curve.k()))
}

impl<T: Scalar> MatrixJet<T> {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.entries().iter().all(Zero::is_zero))
    }
}
