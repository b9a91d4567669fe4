//! The jet group `J^k G` as `G x g^k` in right or left trivialization.
//!
//! Right trivialization, with `lambda` running over anti-lexicographically
//! ordered partitions of `{1..n}` and `i_r = |lambda_r|`:
//!
//! ```text
//! z_n = x_n + sum_lambda ad(x_{i_{l-1}}) ... ad(x_{i_1}) Ad_g y_{i_l}
//! w_n = sum_lambda (-1)^l Ad_{g^-1} ad(x_{i_1}) ... ad(x_{i_{l-1}}) x_{i_l}
//! ```
//!
//! Grouping partitions by block sizes turns each sum into a sum over
//! compositions weighted by [`count_with_sizes`]. Both forms are available
//! through [`Summation`] and must agree.

use std::fmt;
use std::str::FromStr;


use crate::algebra::{AdOperator, AlgebraElement, AlgebraSpec, GroupPoint};
use crate::error::{input, Error, Result};
use crate::exact::factorial;
use crate::partitions::{compositions, count_with_sizes, enumerate_partitions, MAX_ENUMERATION};
use crate::scalar::Scalar;

/// Which logarithmic derivative the coordinates come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `c' c^{-1}`
    Right,
    /// `c^{-1} c'`
    Left,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Right => "right",
            Side::Left => "left",
        })
    }
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            _ => input(format!("side must be \"right\" or \"left\", got {s:?}")),
        }
    }
}

/// How the partition sums are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Summation {
    /// One term per partition in `P_n`.
    Partitions,
    /// One term per composition of `n`, scaled by the number of partitions
    /// with those block sizes.
    #[default]
    Compositions,
}

/// A trivialized `k`-jet `(g, x_1, ..., x_k)`.
#[derive(Debug, Clone)]
pub struct JetElement<T> {
    pub g: GroupPoint<T>,
    pub x: Vec<AlgebraElement<T>>,
    pub side: Side,
}

impl<T: Scalar> PartialEq for JetElement<T> {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side && self.g == other.g && self.x == other.x
    }
}

impl<T: Scalar> JetElement<T> {
    pub fn new(g: GroupPoint<T>, x: Vec<AlgebraElement<T>>, side: Side) -> Result<Self> {
        if x.is_empty() {
            return input("jet order k must be at least 1");
        }
        Ok(Self { g, x, side })
    }

    pub fn identity(alg: &AlgebraSpec<T>, k: usize, side: Side) -> Result<Self> {
        Self::new(GroupPoint::Identity, vec![alg.zero(); k], side)
    }

    /// Element of the identity fiber `J_k(g)`.
    pub fn fiber(x: Vec<AlgebraElement<T>>, side: Side) -> Result<Self> {
        Self::new(GroupPoint::Identity, x, side)
    }

    /// `(e, x)` with `x` placed at component `i` (1-based), right trivialized.
    pub fn pure(alg: &AlgebraSpec<T>, k: usize, i: usize, x: AlgebraElement<T>) -> Result<Self> {
        if i == 0 || i > k {
            return input(format!("component index {i} outside 1..={k}"));
        }
        alg.check_element(&x)?;
        let mut comps = vec![alg.zero(); k];
        comps[i - 1] = x;
        Self::fiber(comps, Side::Right)
    }

    pub fn k(&self) -> usize {
        self.x.len()
    }

    pub fn validate(&self, alg: &AlgebraSpec<T>) -> Result<()> {
        if self.x.is_empty() {
            return input("jet order k must be at least 1");
        }
        for x in &self.x {
            alg.check_element(x)?;
        }
        if alg.is_leibniz() && !self.g.is_identity() {
            return input("Leibniz algebras only carry identity-fiber elements");
        }
        Ok(())
    }

    fn compatible(&self, alg: &AlgebraSpec<T>, other: &Self) -> Result<()> {
        self.validate(alg)?;
        other.validate(alg)?;
        if self.k() != other.k() {
            return input(format!("jet orders differ: {} vs {}", self.k(), other.k()));
        }
        if self.side != other.side {
            return input("cannot multiply jets in different trivializations");
        }
        Ok(())
    }
}

/// The weighted block-size sequences `(coefficient, (i_1, ..., i_l))` that
/// make up the order-`n` sum.
pub(crate) fn terms<T: Scalar>(n: usize, how: Summation) -> Result<Vec<(T, Vec<usize>)>> {
    Ok(match how {
        Summation::Partitions => {
            if n > MAX_ENUMERATION {
                return input(format!(
                    "partition summation supports n <= {MAX_ENUMERATION}; use compositions"
                ));
            }
            enumerate_partitions(n)?.into_iter().map(|p| (T::one(), p.sizes().0)).collect()
        }
        Summation::Compositions => compositions(n)
            .into_iter()
            .map(|c| (T::from_bigint(&count_with_sizes(&c)), c.0))
            .collect(),
    })
}

/// `ad(ads[m-1]) ... ad(ads[0]) base`: the first entry is applied first.
pub(crate) fn ad_chain<'a, T: Scalar>(
    alg: &AlgebraSpec<T>,
    ads: impl IntoIterator<Item = &'a AlgebraElement<T>>,
    base: AlgebraElement<T>,
) -> AlgebraElement<T> {
    let mut v = base;
    for a in ads {
        if v.is_zero() {
            break;
        }
        v = alg.bracket_unchecked(a, &v);
    }
    v
}

fn sign<T: Scalar>(negative: bool) -> T {
    if negative { -T::one() } else { T::one() }
}

/// Group product in the jets' common trivialization.
pub fn multiply<T: Scalar>(
    alg: &AlgebraSpec<T>,
    a: &JetElement<T>,
    b: &JetElement<T>,
) -> Result<JetElement<T>> {
    multiply_with(alg, a, b, Summation::default())
}

pub fn multiply_with<T: Scalar>(
    alg: &AlgebraSpec<T>,
    a: &JetElement<T>,
    b: &JetElement<T>,
    how: Summation,
) -> Result<JetElement<T>> {
    a.compatible(alg, b)?;
    let g = a.g.mul(&b.g)?;
    let x = match a.side {
        Side::Right => {
            let ad_g = alg.adjoint_operator(&a.g)?;
            fiber_product(alg, &a.x, &b.x, &ad_g, false, how)?
        }
        Side::Left => {
            // roles swap: y is bracketed onto Ad_{h^-1} x with alternating sign
            let ad = alg.adjoint_operator(&b.g.inverse()?)?;
            fiber_product(alg, &b.x, &a.x, &ad, true, how)?
        }
    };
    JetElement::new(g, x, a.side)
}

/// `z_n = x_n + sum (+-) N ad(x_{i_{l-1}})...ad(x_{i_1}) op(y_{i_l})`, with
/// sign `(-1)^{l-1}` when `alternate`.
fn fiber_product<T: Scalar>(
    alg: &AlgebraSpec<T>,
    x: &[AlgebraElement<T>],
    y: &[AlgebraElement<T>],
    op: &AdOperator<T>,
    alternate: bool,
    how: Summation,
) -> Result<Vec<AlgebraElement<T>>> {
    let opy: Vec<_> = y.iter().map(|v| op.apply(v)).collect();
    let mut out = Vec::with_capacity(x.len());
    for n in 1..=x.len() {
        let mut z = x[n - 1].clone();
        for (coef, sizes) in terms::<T>(n, how)? {
            let (&last, front) = sizes.split_last().unwrap();
            let v = ad_chain(alg, front.iter().map(|&i| &x[i - 1]), opy[last - 1].clone());
            let s = sign::<T>(alternate && front.len() % 2 == 1);
            z.add_scaled(&(s * coef), &v);
        }
        out.push(z);
    }
    Ok(out)
}

/// Group inverse in the jet's trivialization.
pub fn inverse<T: Scalar>(alg: &AlgebraSpec<T>, a: &JetElement<T>) -> Result<JetElement<T>> {
    inverse_with(alg, a, Summation::default())
}

pub fn inverse_with<T: Scalar>(
    alg: &AlgebraSpec<T>,
    a: &JetElement<T>,
    how: Summation,
) -> Result<JetElement<T>> {
    a.validate(alg)?;
    let g_inv = a.g.inverse()?;
    // right: (-1)^l Ad_{g^-1}; left: -Ad_g
    let (op, alternate) = match a.side {
        Side::Right => (alg.adjoint_operator(&g_inv)?, true),
        Side::Left => (alg.adjoint_operator(&a.g)?, false),
    };
    let mut w = Vec::with_capacity(a.k());
    for n in 1..=a.k() {
        let mut acc = alg.zero();
        for (coef, sizes) in terms::<T>(n, how)? {
            let (&last, front) = sizes.split_last().unwrap();
            // ad(x_{i_1}) is outermost
            let v = ad_chain(alg, front.iter().rev().map(|&i| &a.x[i - 1]), a.x[last - 1].clone());
            let s = sign::<T>(if alternate { sizes.len() % 2 == 1 } else { true });
            acc.add_scaled(&(s * coef), &v);
        }
        w.push(op.apply(&acc));
    }
    JetElement::new(g_inv, w, a.side)
}

/// `(ni + j - 1)! / (n! (i!)^n (j - 1)!)`, the weight of `ad(x_i)^n y_j` in a
/// product of pure elements.
pub fn pure_coefficient<T: Scalar>(i: usize, j: usize, n: usize) -> T {
    let (i, j, n) = (i as u64, j as u64, n as u64);
    let num = factorial(n * i + j - 1);
    let den = factorial(n) * factorial(i).pow(n as u32) * factorial(j - 1);
    T::from_bigint(&(num / den))
}

/// `(e, x at i) (e, y at j)` in `J_k(g)`, right trivialized. Uses the closed
/// form for `i < j` and the general product otherwise.
pub fn pure_product<T: Scalar>(
    alg: &AlgebraSpec<T>,
    i: usize,
    x: &AlgebraElement<T>,
    j: usize,
    y: &AlgebraElement<T>,
    k: usize,
) -> Result<JetElement<T>> {
    let a = JetElement::pure(alg, k, i, x.clone())?;
    let b = JetElement::pure(alg, k, j, y.clone())?;
    if i >= j {
        return multiply(alg, &a, &b);
    }
    let mut comps = vec![alg.zero(); k];
    comps[i - 1] = x.clone();
    comps[j - 1] = y.clone();
    let mut ad_power = y.clone();
    for n in 1.. {
        let idx = n * i + j;
        if idx > k {
            break;
        }
        ad_power = alg.bracket_unchecked(x, &ad_power);
        comps[idx - 1].add_scaled(&pure_coefficient(i, j, n), &ad_power);
    }
    JetElement::fiber(comps, Side::Right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{builtin, Algebra, Element, Rational};

    fn el(v: &[i64]) -> Element {
        AlgebraElement(v.iter().map(|&c| Rational::from_i64(c)).collect())
    }

    fn fiber(v: &[&[i64]]) -> JetElement<Rational> {
        JetElement::fiber(v.iter().map(|c| el(c)).collect(), Side::Right).unwrap()
    }

    fn sl2() -> Algebra {
        builtin("sl2").unwrap()
    }

    #[test]
    fn second_order_fiber_product() {
        let a = sl2();
        let x = fiber(&[&[1, 2, 0], &[0, -1, 3]]);
        let y = fiber(&[&[0, 1, 1], &[2, 2, 2]]);
        let z = multiply(&a, &x, &y).unwrap();
        let br = a.bracket(&x.x[0], &y.x[0]).unwrap();
        assert_eq!(z.x[0], x.x[0].add(&y.x[0]));
        assert_eq!(z.x[1], x.x[1].add(&y.x[1]).add(&br));
    }

    #[test]
    fn identity_is_neutral() {
        let a = sl2();
        let x = fiber(&[&[1, 2, 0], &[0, -1, 3], &[5, 0, 1]]);
        let e = JetElement::identity(&a, 3, Side::Right).unwrap();
        assert_eq!(multiply(&a, &x, &e).unwrap(), x);
        assert_eq!(multiply(&a, &e, &x).unwrap(), x);
    }

    #[test]
    fn inverse_examples() {
        let a = sl2();
        let x = fiber(&[&[1, 2, 0], &[0, -1, 3]]);
        let w = inverse(&a, &x).unwrap();
        assert_eq!(w, fiber(&[&[-1, -2, 0], &[0, 1, -3]]));

        let l: Algebra = builtin("leibniz2").unwrap();
        let w = inverse(&l, &fiber(&[&[1, 0], &[0, 0]])).unwrap();
        assert_eq!(w, fiber(&[&[-1, 0], &[0, 1]]));

        let x = fiber(&[&[1, 2, 0], &[0, -1, 3], &[4, 1, -2]]);
        let w = inverse(&a, &x).unwrap();
        let want = x.x[2].neg().add(&a.bracket(&x.x[0], &x.x[1]).unwrap());
        assert_eq!(w.x[2], want);
        let e = JetElement::identity(&a, 3, Side::Right).unwrap();
        assert_eq!(multiply(&a, &x, &w).unwrap(), e);
    }

    #[test]
    fn mismatches_are_rejected() {
        let a = sl2();
        let x = fiber(&[&[1, 2, 0], &[0, -1, 3]]);
        let y = fiber(&[&[1, 2, 0]]);
        assert!(matches!(multiply(&a, &x, &y), Err(Error::Input(_))));
        let mut left = x.clone();
        left.side = Side::Left;
        assert!(matches!(multiply(&a, &x, &left), Err(Error::Input(_))));
        assert!(JetElement::<Rational>::fiber(vec![], Side::Right).is_err());
        let bad = fiber(&[&[1, 2]]);
        assert!(multiply(&a, &bad, &bad).is_err());
        let ab: Algebra = builtin("abelian(3)").unwrap();
        let mut g = x.clone();
        g.g = GroupPoint::Matrix(crate::Matrix::from_ints(&[&[1, 1], &[0, 1]]));
        assert!(matches!(multiply(&ab, &g, &x), Err(Error::Input(_))));
        let singular = JetElement {
            g: GroupPoint::Matrix(crate::Matrix::from_ints(&[&[1, 1], &[1, 1]])),
            ..x.clone()
        };
        assert_eq!(inverse(&a, &singular), Err(Error::Singular));
    }

    #[test]
    fn pure_examples() {
        let a = sl2();
        let (x, y) = (el(&[1, 1, 0]), el(&[0, 2, -1]));
        let p = pure_product(&a, 1, &x, 1, &y, 4).unwrap();
        let mut ad = y.clone();
        assert_eq!(p.x[0], x.add(&y));
        for n in 1..4 {
            ad = a.bracket(&x, &ad).unwrap();
            assert_eq!(p.x[n], ad);
        }
        let p = pure_product(&a, 1, &x, 2, &y, 4).unwrap();
        let b1 = a.bracket(&x, &y).unwrap();
        let b2 = a.bracket(&x, &b1).unwrap();
        assert_eq!(p.x, vec![x.clone(), y.clone(), b1.scale(&Rational::from_i64(2)), b2.scale(&Rational::from_i64(3))]);
        let p = pure_product(&a, 1, &a.zero(), 3, &y, 4).unwrap();
        assert_eq!(p.x, vec![a.zero(), a.zero(), y.clone(), a.zero()]);
        assert!(pure_product(&a, 0, &x, 2, &y, 4).is_err());
        assert!(pure_product(&a, 1, &x, 5, &y, 4).is_err());
    }

    #[test]
    fn pure_coefficients() {
        assert_eq!(pure_coefficient::<Rational>(1, 2, 1), Rational::from_i64(2));
        assert_eq!(pure_coefficient::<Rational>(1, 2, 2), Rational::from_i64(3));
        // (i+j-1)!/(i!(j-1)!) for n = 1
        assert_eq!(pure_coefficient::<Rational>(2, 3, 1), Rational::from_i64(6));
    }
}
