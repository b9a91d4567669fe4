//! The abelian extension `g -> J^k G -> J^{k-1} G` in right trivialization:
//! its group 2-cocycle `c_k`, the Lie algebra 2-cocycle `sigma_k`, and the
//! truncated polynomial bracket on `J^k g`.
//!
//! `c_k` collects every summand of the top component of the `J^k` product
//! except the single-block one, so that
//! `z_k = x_k + Ad_g y_k + c_k(A, B)`; the extension action is `Ad_g`.
//! Coordinates on `J^k g` follow `x(t) = xi + sum t^n / n! x_n`, which makes
//! the bracket `[x, y]_n = sum_i C(n, i) [x_i, y_{n-i}]`.

use crate::algebra::{AlgebraElement, AlgebraSpec};
use crate::check::CheckReport;
use crate::error::{input, Result};
use crate::exact::{binomial, Matrix};
use crate::jet::{self, ad_chain, terms, JetElement, Side, Summation};
use crate::random::Lcg;
use crate::scalar::Scalar;

/// `(xi, x_1, ..., x_k)` in `J^k g`.
#[derive(Debug, Clone, PartialEq)]
pub struct JetAlgebraElement<T> {
    pub xi: AlgebraElement<T>,
    pub x: Vec<AlgebraElement<T>>,
}

impl<T: Scalar> JetAlgebraElement<T> {
    pub fn new(xi: AlgebraElement<T>, x: Vec<AlgebraElement<T>>) -> Self {
        Self { xi, x }
    }

    pub fn k(&self) -> usize {
        self.x.len()
    }

    /// Component `n`, with component 0 being `xi`.
    pub fn component(&self, n: usize) -> &AlgebraElement<T> {
        if n == 0 { &self.xi } else { &self.x[n - 1] }
    }

    fn validate(&self, alg: &AlgebraSpec<T>) -> Result<()> {
        alg.check_element(&self.xi)?;
        self.x.iter().try_for_each(|x| alg.check_element(x))
    }
}

fn binom<T: Scalar>(n: usize, i: usize) -> T {
    T::from_bigint(&binomial(n as u64, i as i64))
}

fn check_extension_order(k: usize) -> Result<()> {
    if k < 2 {
        return input(format!("extension order k = {k} must be at least 2"));
    }
    Ok(())
}

/// `c_k(A, B)` for right-trivialized `A, B` in `J^{k-1} G`.
pub fn group_cocycle<T: Scalar>(
    alg: &AlgebraSpec<T>,
    k: usize,
    a: &JetElement<T>,
    b: &JetElement<T>,
) -> Result<AlgebraElement<T>> {
    group_cocycle_with(alg, k, a, b, Summation::default())
}

pub fn group_cocycle_with<T: Scalar>(
    alg: &AlgebraSpec<T>,
    k: usize,
    a: &JetElement<T>,
    b: &JetElement<T>,
    how: Summation,
) -> Result<AlgebraElement<T>> {
    check_extension_order(k)?;
    a.validate(alg)?;
    b.validate(alg)?;
    if a.k() != k - 1 || b.k() != k - 1 {
        return input(format!("c_{k} takes elements of order {}", k - 1));
    }
    if a.side != Side::Right || b.side != Side::Right {
        return input("the extension cocycle is defined in the right trivialization");
    }
    let ad_g = alg.adjoint_operator(&a.g)?;
    let ady: Vec<_> = b.x.iter().map(|y| ad_g.apply(y)).collect();
    let mut acc = alg.zero();
    for (coef, sizes) in terms::<T>(k, how)? {
        if sizes.len() < 2 {
            continue;
        }
        let (&last, front) = sizes.split_last().unwrap();
        let v = ad_chain(alg, front.iter().map(|&i| &a.x[i - 1]), ady[last - 1].clone());
        acc.add_scaled(&coef, &v);
    }
    Ok(acc)
}

/// `sigma_k(A, B) = sum_{i=1}^{k-1} C(k, i) [x_i, y_{k-i}]` on `J^{k-1} g`.
pub fn algebra_cocycle<T: Scalar>(
    alg: &AlgebraSpec<T>,
    k: usize,
    a: &JetAlgebraElement<T>,
    b: &JetAlgebraElement<T>,
) -> Result<AlgebraElement<T>> {
    check_extension_order(k)?;
    a.validate(alg)?;
    b.validate(alg)?;
    if a.k() != k - 1 || b.k() != k - 1 {
        return input(format!("sigma_{k} takes elements of order {}", k - 1));
    }
    let mut acc = alg.zero();
    for i in 1..k {
        let v = alg.bracket_unchecked(&a.x[i - 1], &b.x[k - i - 1]);
        acc.add_scaled(&binom(k, i), &v);
    }
    Ok(acc)
}

/// The bracket of `g (x) R[X]/(X^{k+1})` in divided-power coordinates.
pub fn jet_algebra_bracket<T: Scalar>(
    alg: &AlgebraSpec<T>,
    a: &JetAlgebraElement<T>,
    b: &JetAlgebraElement<T>,
) -> Result<JetAlgebraElement<T>> {
    a.validate(alg)?;
    b.validate(alg)?;
    if a.k() != b.k() {
        return input(format!("jet algebra orders differ: {} vs {}", a.k(), b.k()));
    }
    let comps: Vec<_> = (0..=a.k())
        .map(|n| {
            let mut acc = alg.zero();
            for i in 0..=n {
                let v = alg.bracket_unchecked(a.component(i), b.component(n - i));
                acc.add_scaled(&binom(n, i), &v);
            }
            acc
        })
        .collect();
    let mut it = comps.into_iter();
    let xi = it.next().unwrap();
    Ok(JetAlgebraElement::new(xi, it.collect()))
}

/// Coefficient of `s t` in a map `(s, t) -> g` that is polynomial of degree
/// at most `deg_s` in `s` and affine in `t`, recovered exactly by
/// interpolation at `s = 0..=deg_s`, `t = 0, 1`.
pub fn st_coefficient<T: Scalar>(
    dim: usize,
    deg_s: usize,
    f: impl Fn(&T, &T) -> Result<AlgebraElement<T>>,
) -> Result<AlgebraElement<T>> {
    let nodes: Vec<T> = (0..=deg_s.max(1)).map(|s| T::from_i64(s as i64)).collect();
    let d = nodes.len();
    let mut vandermonde = Matrix::zeros(d, d);
    for (i, s) in nodes.iter().enumerate() {
        let mut p = T::one();
        for j in 0..d {
            vandermonde.set(i, j, p.clone());
            p = p * s.clone();
        }
    }
    let inv = vandermonde.inverse()?;
    let mut out = AlgebraElement::zero(dim);
    for (i, s) in nodes.iter().enumerate() {
        let h = f(s, &T::one())?.sub(&f(s, &T::zero())?);
        out.add_scaled(inv.get(1, i), &h);
    }
    Ok(out)
}

fn fiber_jet<T: Scalar>(x: &[AlgebraElement<T>], s: &T) -> Result<JetElement<T>> {
    JetElement::fiber(x.iter().map(|v| v.scale(s)).collect(), Side::Right)
}

/// `d/ds d/dt c_k((e, s x), (e, t y))` at zero.
pub fn polarized_cocycle<T: Scalar>(
    alg: &AlgebraSpec<T>,
    k: usize,
    x: &[AlgebraElement<T>],
    y: &[AlgebraElement<T>],
) -> Result<AlgebraElement<T>> {
    st_coefficient(alg.dim(), k - 1, |s, t| {
        group_cocycle(alg, k, &fiber_jet(x, s)?, &fiber_jet(y, t)?)
    })
}

/// Bilinear part of the fiber product `m(s x, t y)` minus its swap, per
/// component.
pub fn polarized_commutator<T: Scalar>(
    alg: &AlgebraSpec<T>,
    x: &[AlgebraElement<T>],
    y: &[AlgebraElement<T>],
) -> Result<Vec<AlgebraElement<T>>> {
    let k = x.len();
    let part = |u: &[AlgebraElement<T>], v: &[AlgebraElement<T>], n: usize| {
        st_coefficient(alg.dim(), k, |s, t| {
            Ok(jet::multiply(alg, &fiber_jet(u, s)?, &fiber_jet(v, t)?)?.x[n].clone())
        })
    };
    (0..k).map(|n| Ok(part(x, y, n)?.sub(&part(y, x, n)?))).collect()
}

type GroupCocycleFn<'a, T> =
    dyn Fn(&JetElement<T>, &JetElement<T>) -> Result<AlgebraElement<T>> + 'a;

/// Checks on random triples that `c_k` is a normalized 2-cocycle for the
/// action `Ad_g`, and that it reconstructs the `J^k` product of lifts.
pub fn verify_group_cocycle<T: Scalar>(
    alg: &AlgebraSpec<T>,
    k: usize,
    trials: usize,
    seed: u64,
) -> Result<CheckReport> {
    verify_group_cocycle_with(alg, k, trials, seed, &|a, b| group_cocycle(alg, k, a, b))
}

pub fn verify_group_cocycle_with<T: Scalar>(
    alg: &AlgebraSpec<T>,
    k: usize,
    trials: usize,
    seed: u64,
    cocycle: &GroupCocycleFn<'_, T>,
) -> Result<CheckReport> {
    check_extension_order(k)?;
    let name = format!("group cocycle c_{k} ({})", alg.name());
    let mut rng = Lcg::new(seed);
    let with_group = !alg.is_leibniz();
    let id = JetElement::identity(alg, k - 1, Side::Right)?;
    for trial in 0..trials {
        let a = rng.jet(alg, k - 1, Side::Right, with_group)?;
        let b = rng.jet(alg, k - 1, Side::Right, with_group)?;
        let c = rng.jet(alg, k - 1, Side::Right, with_group)?;
        let ab = jet::multiply(alg, &a, &b)?;
        let bc = jet::multiply(alg, &b, &c)?;
        let delta = alg
            .adjoint(&a.g, &cocycle(&b, &c)?)?
            .sub(&cocycle(&ab, &c)?)
            .add(&cocycle(&a, &bc)?)
            .sub(&cocycle(&a, &b)?);
        if !delta.is_zero() {
            return Ok(CheckReport::fail(name, format!("trial {trial}: cocycle identity off by {delta}")));
        }
        if !cocycle(&a, &id)?.is_zero() || !cocycle(&id, &b)?.is_zero() {
            return Ok(CheckReport::fail(name, format!("trial {trial}: not normalized")));
        }
        let c_ab = cocycle(&a, &b)?;
        for _ in 0..2 {
            let (top_a, top_b) = (rng.element(alg), rng.element(alg));
            let lift = |j: &JetElement<T>, top: &AlgebraElement<T>| {
                let mut x = j.x.clone();
                x.push(top.clone());
                JetElement::new(j.g.clone(), x, Side::Right)
            };
            let full = jet::multiply(alg, &lift(&a, &top_a)?, &lift(&b, &top_b)?)?;
            let want_top = top_a.add(&alg.adjoint(&a.g, &top_b)?).add(&c_ab);
            if full.x[..k - 1] != ab.x[..] || full.g != ab.g || full.x[k - 1] != want_top {
                return Ok(CheckReport::fail(
                    name,
                    format!("trial {trial}: lifted product does not match quotient product plus cocycle"),
                ));
            }
        }
    }
    Ok(CheckReport::pass(name, format!("{trials} trials")))
}

/// Checks the Lie algebra 2-cocycle identity for `sigma_k` with respect to
/// the polynomial bracket and action `[xi, v]`, and that `sigma_k` is the
/// antisymmetrized bilinear part of `c_k`. Skipped for Leibniz algebras.
pub fn verify_algebra_cocycle<T: Scalar>(
    alg: &AlgebraSpec<T>,
    k: usize,
    trials: usize,
    seed: u64,
) -> Result<CheckReport> {
    check_extension_order(k)?;
    let name = format!("algebra cocycle sigma_{k} ({})", alg.name());
    if alg.is_leibniz() {
        return Ok(CheckReport::skip(name, "needs an antisymmetric bracket"));
    }
    let mut rng = Lcg::new(seed);
    for trial in 0..trials {
        let a = rng.jet_algebra(alg, k - 1);
        let b = rng.jet_algebra(alg, k - 1);
        let c = rng.jet_algebra(alg, k - 1);
        let sigma = |p: &JetAlgebraElement<T>, q: &JetAlgebraElement<T>| algebra_cocycle(alg, k, p, q);
        let term = |p: &JetAlgebraElement<T>, q: &JetAlgebraElement<T>, r: &JetAlgebraElement<T>| {
            let pq = jet_algebra_bracket(alg, p, q)?;
            Ok::<_, crate::Error>(sigma(&pq, r)?.sub(&alg.bracket_unchecked(&p.xi, &sigma(q, r)?)))
        };
        let total = term(&a, &b, &c)?.add(&term(&b, &c, &a)?).add(&term(&c, &a, &b)?);
        if !total.is_zero() {
            return Ok(CheckReport::fail(name, format!("trial {trial}: 2-cocycle identity off by {total}")));
        }
        let polar = polarized_cocycle(alg, k, &a.x, &b.x)?.sub(&polarized_cocycle(alg, k, &b.x, &a.x)?);
        if polar != sigma(&a, &b)? {
            return Ok(CheckReport::fail(
                name,
                format!("trial {trial}: sigma differs from the polarized group cocycle"),
            ));
        }
    }
    Ok(CheckReport::pass(name, format!("{trials} trials")))
}
