//! Seeded generation of small rational test inputs.
//!
//! The generator is a plain 64-bit linear congruential recurrence so that
//! any implementation can replay the same inputs from a seed:
//!
//! ```text
//! state <- state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
//! ```
//!
//! Each draw advances the state once and uses its upper 32 bits. A random
//! coefficient is `p / q` with `p = draw mod 19 - 9` and `q = draw mod 4 + 1`
//! (two draws).

use crate::algebra::{AlgebraElement, AlgebraKind, AlgebraSpec, GroupPoint};
use crate::cocycle::JetAlgebraElement;
use crate::error::Result;
use crate::exact::Matrix;
use crate::jet::{JetElement, Side};
use crate::scalar::Scalar;
use crate::tangent::TangentElement;

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish draw in `0..n` by reduction.
    pub fn below(&mut self, n: u32) -> u32 {
        self.next_u32() % n
    }

    /// `p / q` with `|p| <= 9`, `1 <= q <= 4`.
    pub fn rational<T: Scalar>(&mut self) -> T {
        let p = self.below(19) as i64 - 9;
        let q = self.below(4) as i64 + 1;
        T::ratio(p, q)
    }

    pub fn element<T: Scalar>(&mut self, alg: &AlgebraSpec<T>) -> AlgebraElement<T> {
        AlgebraElement((0..alg.dim()).map(|_| self.rational()).collect())
    }

    pub fn elements<T: Scalar>(&mut self, alg: &AlgebraSpec<T>, n: usize) -> Vec<AlgebraElement<T>> {
        (0..n).map(|_| self.element(alg)).collect()
    }

    /// A non-identity group point for matrix algebras, the identity
    /// otherwise.
    ///
    /// Uses the Cayley transform `(I - X)^{-1} (I + X)` of a random `X` in the
    /// algebra, which lands in the group for all built-in matrix algebras.
    /// Candidates whose conjugation leaves the basis span are discarded.
    pub fn group_point<T: Scalar>(&mut self, alg: &AlgebraSpec<T>) -> GroupPoint<T> {
        if alg.kind() != AlgebraKind::Matrix {
            return GroupPoint::Identity;
        }
        let n = alg.matrix_size().unwrap();
        for _ in 0..8 {
            let x = alg.to_matrix(&self.element(alg)).expect("matrix algebra");
            let id = Matrix::identity(n);
            let Ok(inv) = id.sub(&x).and_then(|m| m.inverse()) else {
                continue;
            };
            let g = inv.mul(&id.add(&x).unwrap()).unwrap();
            if g.is_identity() {
                continue;
            }
            let g = GroupPoint::Matrix(g);
            if alg.adjoint_operator(&g).is_ok() {
                return g;
            }
        }
        GroupPoint::Identity
    }

    pub fn jet<T: Scalar>(
        &mut self,
        alg: &AlgebraSpec<T>,
        k: usize,
        side: Side,
        with_group: bool,
    ) -> Result<JetElement<T>> {
        let g = if with_group { self.group_point(alg) } else { GroupPoint::Identity };
        JetElement::new(g, self.elements(alg, k), side)
    }

    pub fn tangent<T: Scalar>(
        &mut self,
        alg: &AlgebraSpec<T>,
        k: usize,
        side: Side,
        with_group: bool,
    ) -> Result<TangentElement<T>> {
        let g = if with_group { self.group_point(alg) } else { GroupPoint::Identity };
        TangentElement::new(k, g, self.elements(alg, (1 << k) - 1), side)
    }

    /// `(xi, x_1, ..., x_k)` in the truncated polynomial algebra.
    pub fn jet_algebra<T: Scalar>(&mut self, alg: &AlgebraSpec<T>, k: usize) -> JetAlgebraElement<T> {
        let xi = self.element(alg);
        JetAlgebraElement::new(xi, self.elements(alg, k))
    }
}
