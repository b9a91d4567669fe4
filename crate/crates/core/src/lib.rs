//! Exact group laws on jet groups `J^k G` and higher tangent groups `T^k G`
//! of Lie groups, in right and left trivialization.
//!
//! The group laws are sums over anti-lexicographically ordered set
//! partitions ([`partitions`]) of iterated brackets ([`algebra`]). Every law
//! is cross-checked against an independent truncated-Taylor computation on
//! matrix curves ([`taylor`]). All arithmetic is exact; the library is
//! generic over the [`Scalar`] field and fixes arbitrary-precision rationals
//! through the aliases below.

pub mod algebra;
pub mod check;
pub mod cocycle;
pub mod error;
pub mod exact;
pub mod io;
pub mod jet;
pub mod partitions;
pub mod random;
pub mod scalar;
pub mod tangent;
pub mod taylor;

pub use algebra::{builtin, AlgebraElement, AlgebraKind, AlgebraSpec, GroupPoint};
pub use error::{Error, Result};
pub use exact::{bell_number, binomial, Matrix};
pub use jet::{JetElement, Side, Summation};
pub use partitions::{Composition, Partition};
pub use scalar::Scalar;
pub use tangent::{MultiIndex, Permutation, TangentElement};
pub use taylor::MatrixJet;

/// Arbitrary-precision rational, always in lowest terms.
pub type Rational = num_rational::BigRational;
pub type RationalMatrix = Matrix<Rational>;
pub type Algebra = AlgebraSpec<Rational>;
pub type Element = AlgebraElement<Rational>;
pub type Point = GroupPoint<Rational>;
pub type Jet = JetElement<Rational>;
pub type Tangent = TangentElement<Rational>;
pub type JetAlgebra = cocycle::JetAlgebraElement<Rational>;
pub type RationalJet = MatrixJet<Rational>;
