//! The higher tangent group `T^k G = G x (+)_{alpha} eps^alpha g`, indexed by
//! nonempty subsets `alpha` of `{1..k}`, together with the action of `S_k`
//! permuting the infinitesimal units and the embedding of `J^k G` as its
//! fixed points.
//!
//! Partitions of a subset `alpha` are never enumerated directly: those of
//! `{1..|alpha|}` are transported along the increasing bijection onto
//! `alpha`.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AdOperator, AlgebraElement, AlgebraSpec, GroupPoint};
use crate::error::{input, Error, Result};
use crate::jet::{ad_chain, JetElement, Side};
use crate::partitions::enumerate_partitions;
use crate::scalar::Scalar;

/// Largest supported tangent order.
pub const MAX_TANGENT_ORDER: usize = 8;

/// A nonempty subset of `{1..k}`, bit `e - 1` standing for element `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub u32);

impl MultiIndex {
    pub fn from_elements(elems: &[usize]) -> Result<Self> {
        let mut m = 0u32;
        for &e in elems {
            if e == 0 || e > MAX_TANGENT_ORDER {
                return input(format!("multi-index element {e} outside 1..={MAX_TANGENT_ORDER}"));
            }
            if m & 1 << (e - 1) != 0 {
                return input(format!("multi-index element {e} repeated"));
            }
            m |= 1 << (e - 1);
        }
        if m == 0 {
            return input("empty multi-index");
        }
        Ok(Self(m))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Elements in ascending order.
    pub fn elements(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 & 1 << b != 0).map(|b| b + 1).collect()
    }

    pub fn max(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    fn slot(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.elements() {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let elems: Option<Vec<usize>> =
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect();
        let Some(elems) = elems else {
            return input(format!("malformed multi-index {s:?}"));
        };
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return input(format!("multi-index {s:?} must list ascending digits"));
        }
        Self::from_elements(&elems)
    }
}

/// A permutation of `{1..k}` given by its images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let k = image.len();
        let mut seen = vec![false; k + 1];
        for &v in &image {
            if v == 0 || v > k || seen[v] {
                return input(format!("{image:?} is not a permutation of 1..={k}"));
            }
            seen[v] = true;
        }
        Ok(Self { image })
    }

    pub fn identity(k: usize) -> Self {
        Self { image: (1..=k).collect() }
    }

    /// The transposition of `a` and `b`.
    pub fn swap(k: usize, a: usize, b: usize) -> Result<Self> {
        let mut image: Vec<usize> = (1..=k).collect();
        if a == 0 || b == 0 || a > k || b > k {
            return input("transposition outside 1..=k");
        }
        image.swap(a - 1, b - 1);
        Ok(Self { image })
    }

    pub fn k(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, e: usize) -> usize {
        self.image[e - 1]
    }

    pub fn apply_index(&self, alpha: MultiIndex) -> MultiIndex {
        MultiIndex(alpha.elements().into_iter().fold(0, |m, e| m | 1 << (self.apply(e) - 1)))
    }

    /// `self o other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.k() != other.k() {
            return input("permutations of different sizes");
        }
        Ok(Self { image: (1..=self.k()).map(|e| self.apply(other.apply(e))).collect() })
    }

    /// All of `S_k` (lexicographic).
    pub fn all(k: usize) -> Vec<Self> {
        fn go(rest: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if rest.is_empty() {
                out.push(Permutation { image: acc.clone() });
                return;
            }
            for i in 0..rest.len() {
                let v = rest.remove(i);
                acc.push(v);
                go(rest, acc, out);
                acc.pop();
                rest.insert(i, v);
            }
        }
        let mut out = Vec::new();
        go(&mut (1..=k).collect(), &mut Vec::new(), &mut out);
        out
    }
}

/// A trivialized element `(g, (x_alpha))` of `T^k G`; all `2^k - 1`
/// components are stored.
#[derive(Debug, Clone)]
pub struct TangentElement<T> {
    k: usize,
    pub g: GroupPoint<T>,
    components: Vec<AlgebraElement<T>>,
    pub side: Side,
}

impl<T: Scalar> PartialEq for TangentElement<T> {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.side == other.side && self.g == other.g && self.components == other.components
    }
}

impl<T: Scalar> TangentElement<T> {
    /// `components[alpha - 1]` is the component at bitmask `alpha`.
    pub fn new(
        k: usize,
        g: GroupPoint<T>,
        components: Vec<AlgebraElement<T>>,
        side: Side,
    ) -> Result<Self> {
        check_order(k)?;
        if components.len() != (1 << k) - 1 {
            return input(format!(
                "order {k} needs {} components, got {}",
                (1 << k) - 1,
                components.len()
            ));
        }
        Ok(Self { k, g, components, side })
    }

    pub fn identity(alg: &AlgebraSpec<T>, k: usize, side: Side) -> Result<Self> {
        check_order(k)?;
        Self::new(k, GroupPoint::Identity, vec![alg.zero(); (1 << k) - 1], side)
    }

    /// `(e, eps^alpha x)`.
    pub fn pure(
        alg: &AlgebraSpec<T>,
        k: usize,
        alpha: MultiIndex,
        x: AlgebraElement<T>,
        side: Side,
    ) -> Result<Self> {
        let mut t = Self::identity(alg, k, side)?;
        if alpha.is_empty() || alpha.max() > k {
            return input(format!("multi-index {alpha} outside order {k}"));
        }
        t.components[alpha.slot()] = x;
        Ok(t)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn component(&self, alpha: MultiIndex) -> &AlgebraElement<T> {
        &self.components[alpha.slot()]
    }

    pub fn components(&self) -> &[AlgebraElement<T>] {
        &self.components
    }

    /// All multi-indices in bitmask order.
    pub fn indices(&self) -> impl Iterator<Item = MultiIndex> {
        (1..1u32 << self.k).map(MultiIndex)
    }

    pub fn validate(&self, alg: &AlgebraSpec<T>) -> Result<()> {
        for c in &self.components {
            alg.check_element(c)?;
        }
        if alg.is_leibniz() && !self.g.is_identity() {
            return input("Leibniz algebras only carry identity-fiber elements");
        }
        Ok(())
    }

    fn compatible(&self, alg: &AlgebraSpec<T>, other: &Self) -> Result<()> {
        self.validate(alg)?;
        other.validate(alg)?;
        if self.k != other.k {
            return input(format!("tangent orders differ: {} vs {}", self.k, other.k));
        }
        if self.side != other.side {
            return input("cannot multiply elements in different trivializations");
        }
        Ok(())
    }
}

fn check_order(k: usize) -> Result<()> {
    if k == 0 || k > MAX_TANGENT_ORDER {
        return input(format!("tangent order {k} outside 1..={MAX_TANGENT_ORDER}"));
    }
    Ok(())
}

/// `P(alpha)` for every nonempty `alpha` of `{1..k}`, as lists of block masks.
struct SubsetPartitions {
    by_alpha: Vec<Vec<Vec<u32>>>,
}

impl SubsetPartitions {
    fn new(k: usize) -> Result<Self> {
        let local: Vec<Vec<Vec<u32>>> = (1..=k)
            .map(|n| Ok(enumerate_partitions(n)?.iter().map(|p| p.block_masks()).collect()))
            .collect::<Result<_>>()?;
        let by_alpha = (1..1u32 << k)
            .map(|alpha| {
                let elems = MultiIndex(alpha).elements();
                local[elems.len() - 1]
                    .iter()
                    .map(|blocks| {
                        blocks
                            .iter()
                            .map(|&b| {
                                // bit i of the local mask stands for elems[i]
                                (0..elems.len())
                                    .filter(|i| b & 1 << i != 0)
                                    .fold(0u32, |m, i| m | 1 << (elems[i] - 1))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(Self { by_alpha })
    }

    fn of(&self, alpha: u32) -> &[Vec<u32>] {
        &self.by_alpha[alpha as usize - 1]
    }
}

fn at<T>(v: &[AlgebraElement<T>], mask: u32) -> &AlgebraElement<T> {
    &v[mask as usize - 1]
}

pub fn multiply<T: Scalar>(
    alg: &AlgebraSpec<T>,
    a: &TangentElement<T>,
    b: &TangentElement<T>,
) -> Result<TangentElement<T>> {
    a.compatible(alg, b)?;
    let g = a.g.mul(&b.g)?;
    let comps = match a.side {
        Side::Right => {
            let op = alg.adjoint_operator(&a.g)?;
            fiber_product(alg, a.k, &a.components, &b.components, &op, false)?
        }
        Side::Left => {
            let op = alg.adjoint_operator(&b.g.inverse()?)?;
            fiber_product(alg, a.k, &b.components, &a.components, &op, true)?
        }
    };
    TangentElement::new(a.k, g, comps, a.side)
}

fn fiber_product<T: Scalar>(
    alg: &AlgebraSpec<T>,
    k: usize,
    x: &[AlgebraElement<T>],
    y: &[AlgebraElement<T>],
    op: &AdOperator<T>,
    alternate: bool,
) -> Result<Vec<AlgebraElement<T>>> {
    let parts = SubsetPartitions::new(k)?;
    let opy: Vec<_> = y.iter().map(|v| op.apply(v)).collect();
    let minus = -T::one();
    Ok((1..1u32 << k)
        .map(|alpha| {
            let mut z = at(x, alpha).clone();
            for blocks in parts.of(alpha) {
                let (&last, front) = blocks.split_last().unwrap();
                let v = ad_chain(alg, front.iter().map(|&m| at(x, m)), at(&opy, last).clone());
                if alternate && front.len() % 2 == 1 {
                    z.add_scaled(&minus, &v);
                } else {
                    z.add_assign(&v);
                }
            }
            z
        })
        .collect())
}

pub fn inverse<T: Scalar>(alg: &AlgebraSpec<T>, a: &TangentElement<T>) -> Result<TangentElement<T>> {
    a.validate(alg)?;
    let g_inv = a.g.inverse()?;
    let (op, alternate) = match a.side {
        Side::Right => (alg.adjoint_operator(&g_inv)?, true),
        Side::Left => (alg.adjoint_operator(&a.g)?, false),
    };
    let parts = SubsetPartitions::new(a.k)?;
    let minus = -T::one();
    let comps = (1..1u32 << a.k)
        .map(|alpha| {
            let mut acc = alg.zero();
            for blocks in parts.of(alpha) {
                let (&last, front) = blocks.split_last().unwrap();
                // ad(x_{lambda_1}) outermost, as for jets
                let v = ad_chain(
                    alg,
                    front.iter().rev().map(|&m| at(&a.components, m)),
                    at(&a.components, last).clone(),
                );
                let negative = if alternate { blocks.len() % 2 == 1 } else { true };
                if negative {
                    acc.add_scaled(&minus, &v);
                } else {
                    acc.add_assign(&v);
                }
            }
            op.apply(&acc)
        })
        .collect();
    TangentElement::new(a.k, g_inv, comps, a.side)
}

/// `sigma . (g, (eps^alpha x_alpha)) = (g, (eps^{sigma(alpha)} x_alpha))`.
pub fn permute<T: Scalar>(sigma: &Permutation, a: &TangentElement<T>) -> Result<TangentElement<T>> {
    if sigma.k() != a.k {
        return input(format!("permutation of {} letters acting on order {}", sigma.k(), a.k));
    }
    let mut comps = a.components.clone();
    for alpha in a.indices() {
        comps[sigma.apply_index(alpha).slot()] = a.component(alpha).clone();
    }
    TangentElement::new(a.k, a.g.clone(), comps, a.side)
}

/// True when every component depends only on `|alpha|`.
pub fn is_symmetric<T: Scalar>(a: &TangentElement<T>) -> bool {
    a.indices().all(|alpha| {
        let rep = MultiIndex((1 << alpha.len()) - 1);
        a.component(alpha) == a.component(rep)
    })
}

/// `x_alpha := x_{|alpha|}`.
pub fn embed_jet<T: Scalar>(j: &JetElement<T>) -> Result<TangentElement<T>> {
    let k = j.k();
    check_order(k)?;
    let comps = (1..1u32 << k).map(|alpha| j.x[alpha.count_ones() as usize - 1].clone()).collect();
    TangentElement::new(k, j.g.clone(), comps, j.side)
}

pub fn project_jet<T: Scalar>(a: &TangentElement<T>) -> Result<JetElement<T>> {
    if !is_symmetric(a) {
        return input("element is not fixed by the permutation action");
    }
    let x = (1..=a.k).map(|n| a.component(MultiIndex((1 << n) - 1)).clone()).collect();
    JetElement::new(a.g.clone(), x, a.side)
}

/// Multi-indices of `{1..k}` with those containing `k` first:
/// `order(k) = [b + {k} for b in order(k-1)] ++ [{k}] ++ order(k-1)`.
pub fn factor_order(k: usize) -> Vec<MultiIndex> {
    if k == 0 {
        return Vec::new();
    }
    let prev = factor_order(k - 1);
    let top = 1u32 << (k - 1);
    let mut out: Vec<MultiIndex> = prev.iter().map(|b| MultiIndex(b.0 | top)).collect();
    out.push(MultiIndex(top));
    out.extend(prev);
    out
}

/// Writes a right-trivialized element as a product of pure elements, one per
/// multi-index in [`factor_order`], followed by `(g, 0)` when `g` is not the
/// identity.
pub fn factor_pure<T: Scalar>(
    alg: &AlgebraSpec<T>,
    a: &TangentElement<T>,
) -> Result<Vec<TangentElement<T>>> {
    a.validate(alg)?;
    if a.side != Side::Right {
        return input("pure factorization is defined for the right trivialization");
    }
    let mut out = factor_order(a.k)
        .into_iter()
        .map(|alpha| TangentElement::pure(alg, a.k, alpha, a.component(alpha).clone(), Side::Right))
        .collect::<Result<Vec<_>>>()?;
    if !a.g.is_identity() {
        out.push(TangentElement::new(a.k, a.g.clone(), vec![alg.zero(); (1 << a.k) - 1], a.side)?);
    }
    Ok(out)
}

/// Left-to-right product of a nonempty list.
pub fn fold_product<T: Scalar>(
    alg: &AlgebraSpec<T>,
    factors: &[TangentElement<T>],
) -> Result<TangentElement<T>> {
    let (first, rest) = factors.split_first().ok_or_else(|| Error::Input("no factors".into()))?;
    rest.iter().try_fold(first.clone(), |acc, f| multiply(alg, &acc, f))
}
