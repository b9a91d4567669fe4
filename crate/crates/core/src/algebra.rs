//! Finite-dimensional Lie and left Leibniz algebras.
//!
//! Elements always live in basis coordinates. Matrix algebras keep their
//! basis around for conjugation and for the Taylor oracle, but brackets are
//! evaluated through structure constants derived once at construction.

use std::fmt;

use num_traits::Zero;

use crate::error::{input, Error, Result};
use crate::exact::Matrix;
use crate::scalar::Scalar;

/// Coordinates of an algebra element in the chosen basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement<T>(pub Vec<T>);

impl<T: Scalar> AlgebraElement<T> {
    pub fn zero(dim: usize) -> Self {
        Self(vec![T::zero(); dim])
    }

    /// The `i`-th basis vector (0-based).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = T::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a.clone() + b.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a.clone() - b.clone()).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a.clone()).collect())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self(self.0.iter().map(|a| a.clone() * s.clone()).collect())
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: &T, other: &Self) {
        if s.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a = a.clone() + s.clone() * b.clone();
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a = a.clone() + b.clone();
            }
        }
    }
}

impl<T: Scalar> fmt::Display for AlgebraElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    StructureConstants,
    Matrix,
}

/// A point of the group acting on the algebra.
#[derive(Debug, Clone)]
pub enum GroupPoint<T> {
    Identity,
    /// An invertible matrix of a matrix group; acts by conjugation.
    Matrix(Matrix<T>),
    /// An explicit bracket automorphism acting on coordinates.
    Automorphism(Matrix<T>),
}

impl<T: Scalar> GroupPoint<T> {
    pub fn is_identity(&self) -> bool {
        match self {
            GroupPoint::Identity => true,
            GroupPoint::Matrix(m) | GroupPoint::Automorphism(m) => m.is_identity(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        use GroupPoint::*;
        Ok(match (self, other) {
            (Identity, p) | (p, Identity) => p.clone(),
            (Matrix(a), Matrix(b)) => Matrix(a.mul(b)?),
            (Automorphism(a), Automorphism(b)) => Automorphism(a.mul(b)?),
            _ => return input("cannot compose a matrix group point with an automorphism"),
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(match self {
            GroupPoint::Identity => GroupPoint::Identity,
            GroupPoint::Matrix(m) => GroupPoint::Matrix(m.inverse()?),
            GroupPoint::Automorphism(m) => GroupPoint::Automorphism(m.inverse()?),
        })
    }
}

impl<T: Scalar> PartialEq for GroupPoint<T> {
    fn eq(&self, other: &Self) -> bool {
        use GroupPoint::*;
        match (self, other) {
            (Identity, p) | (p, Identity) => p.is_identity(),
            (Matrix(a), Matrix(b)) | (Automorphism(a), Automorphism(b)) => a == b,
            _ => false,
        }
    }
}

/// `Ad_g` as a linear map on coordinates.
#[derive(Debug, Clone)]
pub enum AdOperator<T> {
    Identity,
    Linear(Matrix<T>),
}

impl<T: Scalar> AdOperator<T> {
    pub fn apply(&self, x: &AlgebraElement<T>) -> AlgebraElement<T> {
        match self {
            AdOperator::Identity => x.clone(),
            AdOperator::Linear(m) => {
                AlgebraElement(m.mul_vec(&x.0).expect("operator sized to the algebra"))
            }
        }
    }
}

/// Recovers basis coordinates of a matrix in the span of a matrix basis.
#[derive(Debug, Clone)]
struct CoordinateMap<T> {
    /// Flattened entries on which the basis restricts to an invertible system.
    pivots: Vec<usize>,
    solve: Matrix<T>,
}

/// A finite-dimensional Lie or left Leibniz algebra.
#[derive(Debug, Clone)]
pub struct AlgebraSpec<T> {
    name: String,
    dim: usize,
    leibniz: bool,
    kind: AlgebraKind,
    /// `table[i * dim + j]` holds the coordinates of `[e_i, e_j]`.
    table: Vec<AlgebraElement<T>>,
    basis: Vec<Matrix<T>>,
    coords: Option<CoordinateMap<T>>,
}

/// Outcome of an axiom check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraReport {
    pub passed: bool,
    pub failure: Option<String>,
}

impl<T: Scalar> AlgebraSpec<T> {
    /// Builds an algebra from the nonzero products `[e_i, e_j] = sum_m c^m e_m`.
    /// Axioms are not enforced here; see [`AlgebraSpec::verify`].
    pub fn from_structure_constants(
        name: impl Into<String>,
        dim: usize,
        leibniz: bool,
        brackets: Vec<(usize, usize, Vec<T>)>,
    ) -> Result<Self> {
        if dim == 0 {
            return input("algebra dimension must be positive");
        }
        let mut table = vec![AlgebraElement::zero(dim); dim * dim];
        let mut set = vec![false; dim * dim];
        for (i, j, c) in brackets {
            if i >= dim || j >= dim {
                return input(format!("bracket index ({i}, {j}) outside dimension {dim}"));
            }
            if c.len() != dim {
                return input(format!("bracket ({i}, {j}) has {} coefficients, want {dim}", c.len()));
            }
            if set[i * dim + j] {
                return input(format!("bracket ({i}, {j}) given twice"));
            }
            set[i * dim + j] = true;
            table[i * dim + j] = AlgebraElement(c);
        }
        Ok(Self {
            name: name.into(),
            dim,
            leibniz,
            kind: AlgebraKind::StructureConstants,
            table,
            basis: Vec::new(),
            coords: None,
        })
    }

    /// Builds a matrix Lie algebra; the basis must be linearly independent and
    /// closed under commutators.
    pub fn from_matrix_basis(name: impl Into<String>, basis: Vec<Matrix<T>>) -> Result<Self> {
        let Some(first) = basis.first() else {
            return input("empty matrix basis");
        };
        let n = first.rows();
        if basis.iter().any(|b| b.rows() != n || b.cols() != n) {
            return input("matrix basis elements must be square of equal size");
        }
        let dim = basis.len();
        let flat = Matrix::new(
            dim,
            n * n,
            basis.iter().flat_map(|b| b.entries().iter().cloned()).collect(),
        )?;
        let pivots = flat.pivot_columns();
        if pivots.len() != dim {
            return input("matrix basis is linearly dependent");
        }
        let mut restricted = Matrix::zeros(dim, dim);
        for (p, &entry) in pivots.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                restricted.set(p, j, b.entries()[entry].clone());
            }
        }
        let coords = CoordinateMap { pivots, solve: restricted.inverse()? };
        let mut spec = Self {
            name: name.into(),
            dim,
            leibniz: false,
            kind: AlgebraKind::Matrix,
            table: Vec::new(),
            basis,
            coords: Some(coords),
        };
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let c = spec.basis[i].commutator(&spec.basis[j])?;
                let v = spec.coordinates(&c).map_err(|_| {
                    Error::Input(format!("basis not closed under commutator at ({i}, {j})"))
                })?;
                table.push(v);
            }
        }
        spec.table = table;
        Ok(spec)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_leibniz(&self) -> bool {
        self.leibniz
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn basis(&self) -> &[Matrix<T>] {
        &self.basis
    }

    /// Size of the matrices of a matrix algebra.
    pub fn matrix_size(&self) -> Option<usize> {
        self.basis.first().map(Matrix::rows)
    }

    /// Nonzero structure constants as `(i, j, coefficients)`.
    pub fn structure_constants(&self) -> Vec<(usize, usize, &AlgebraElement<T>)> {
        let d = self.dim;
        (0..d * d)
            .filter(|&ij| !self.table[ij].is_zero())
            .map(|ij| (ij / d, ij % d, &self.table[ij]))
            .collect()
    }

    pub fn zero(&self) -> AlgebraElement<T> {
        AlgebraElement::zero(self.dim)
    }

    pub fn check_element(&self, x: &AlgebraElement<T>) -> Result<()> {
        if x.dim() != self.dim {
            return input(format!(
                "element has {} coordinates, algebra {} has dimension {}",
                x.dim(),
                self.name,
                self.dim
            ));
        }
        Ok(())
    }

    pub fn bracket(&self, x: &AlgebraElement<T>, y: &AlgebraElement<T>) -> Result<AlgebraElement<T>> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    /// Structure-constant contraction; callers guarantee dimensions.
    pub(crate) fn bracket_unchecked(
        &self,
        x: &AlgebraElement<T>,
        y: &AlgebraElement<T>,
    ) -> AlgebraElement<T> {
        let d = self.dim;
        let mut out = AlgebraElement::zero(d);
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = &self.table[i * d + j];
                if !c.is_zero() {
                    out.add_scaled(&(xi.clone() * yj.clone()), c);
                }
            }
        }
        out
    }

    pub fn to_matrix(&self, x: &AlgebraElement<T>) -> Result<Matrix<T>> {
        if self.kind != AlgebraKind::Matrix {
            return input(format!("algebra {} has no matrix realization", self.name));
        }
        self.check_element(x)?;
        let n = self.matrix_size().unwrap();
        let mut m = Matrix::zeros(n, n);
        for (c, b) in x.0.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = m.add(&b.scale(c))?;
            }
        }
        Ok(m)
    }

    /// Basis coordinates of a matrix, or a representation error when it lies
    /// outside the span.
    pub fn coordinates(&self, m: &Matrix<T>) -> Result<AlgebraElement<T>> {
        let Some(map) = &self.coords else {
            return input(format!("algebra {} has no matrix realization", self.name));
        };
        let n = self.matrix_size().unwrap();
        if m.rows() != n || m.cols() != n {
            return input(format!("expected a {n}x{n} matrix"));
        }
        let rhs: Vec<T> = map.pivots.iter().map(|&p| m.entries()[p].clone()).collect();
        let x = AlgebraElement(map.solve.mul_vec(&rhs)?);
        if &self.to_matrix(&x)? != m {
            return Err(Error::Representation(format!(
                "matrix {m} is not in the span of the {} basis",
                self.name
            )));
        }
        Ok(x)
    }

    /// `XY - YX` re-expressed in coordinates, bypassing the structure constants.
    pub fn matrix_bracket(
        &self,
        x: &AlgebraElement<T>,
        y: &AlgebraElement<T>,
    ) -> Result<AlgebraElement<T>> {
        let c = self.to_matrix(x)?.commutator(&self.to_matrix(y)?)?;
        self.coordinates(&c)
    }

    /// Validates a group point against this algebra and returns `Ad_g`.
    pub fn adjoint_operator(&self, g: &GroupPoint<T>) -> Result<AdOperator<T>> {
        match g {
            GroupPoint::Identity => Ok(AdOperator::Identity),
            GroupPoint::Matrix(m) => {
                if self.kind != AlgebraKind::Matrix {
                    return input(format!(
                        "algebra {} is abstract; use an automorphism or the identity",
                        self.name
                    ));
                }
                let n = self.matrix_size().unwrap();
                if m.rows() != n || m.cols() != n {
                    return input(format!("group element must be {n}x{n}"));
                }
                let inv = m.inverse()?;
                let mut op = Matrix::zeros(self.dim, self.dim);
                for (j, b) in self.basis.iter().enumerate() {
                    let col = self.coordinates(&m.mul(b)?.mul(&inv)?)?;
                    for (i, c) in col.0.into_iter().enumerate() {
                        op.set(i, j, c);
                    }
                }
                Ok(AdOperator::Linear(op))
            }
            GroupPoint::Automorphism(a) => {
                if a.rows() != self.dim || a.cols() != self.dim {
                    return input(format!("automorphism must be {0}x{0}", self.dim));
                }
                a.inverse()?;
                let op = AdOperator::Linear(a.clone());
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        let (ei, ej) =
                            (AlgebraElement::basis(self.dim, i), AlgebraElement::basis(self.dim, j));
                        let lhs = op.apply(&self.bracket_unchecked(&ei, &ej));
                        let rhs = self.bracket_unchecked(&op.apply(&ei), &op.apply(&ej));
                        if lhs != rhs {
                            return Err(Error::Representation(format!(
                                "matrix does not preserve the bracket on (e{i}, e{j})"
                            )));
                        }
                    }
                }
                Ok(op)
            }
        }
    }

    pub fn adjoint(&self, g: &GroupPoint<T>, x: &AlgebraElement<T>) -> Result<AlgebraElement<T>> {
        self.check_element(x)?;
        Ok(self.adjoint_operator(g)?.apply(x))
    }

    /// Exhaustive axiom check on basis triples. For matrix algebras the
    /// structure constants are also compared against commutators.
    pub fn verify(&self) -> AlgebraReport {
        let d = self.dim;
        let e = |i| AlgebraElement::<T>::basis(d, i);
        let fail = |msg: String| AlgebraReport { passed: false, failure: Some(msg) };
        let br = |x: &AlgebraElement<T>, y: &AlgebraElement<T>| self.bracket_unchecked(x, y);
        if self.kind == AlgebraKind::Matrix {
            for i in 0..d {
                for j in 0..d {
                    match self.matrix_bracket(&e(i), &e(j)) {
                        Ok(v) if v == br(&e(i), &e(j)) => {}
                        _ => return fail(format!("table disagrees with commutator at (e{i}, e{j})")),
                    }
                }
            }
        }
        if !self.leibniz {
            for i in 0..d {
                for j in 0..d {
                    if br(&e(i), &e(j)) != br(&e(j), &e(i)).neg() {
                        return fail(format!("antisymmetry fails on (e{i}, e{j})"));
                    }
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (x, y, z) = (e(i), e(j), e(k));
                    // left Leibniz: [x,[y,z]] = [[x,y],z] + [y,[x,z]]; for an
                    // antisymmetric bracket this is the Jacobi identity
                    let lhs = br(&x, &br(&y, &z));
                    let rhs = br(&br(&x, &y), &z).add(&br(&y, &br(&x, &z)));
                    if lhs != rhs {
                        let which = if self.leibniz { "left Leibniz identity" } else { "Jacobi" };
                        return fail(format!("{which} fails on (e{i}, e{j}, e{k})"));
                    }
                }
            }
        }
        AlgebraReport { passed: true, failure: None }
    }
}

/// Names accepted by [`builtin`].
pub const BUILTIN_NAMES: &[&str] =
    &["abelian(n)", "heis3", "sl2", "so3", "nilpotent_upper(n)", "leibniz2"];

/// The built-in algebras. `heis3`, `sl2`, `so3` and `nilpotent_upper(n)` are
/// matrix algebras; `abelian(n)` and `leibniz2` are given by structure
/// constants.
pub fn builtin<T: Scalar>(name: &str) -> Result<AlgebraSpec<T>> {
    let name = name.trim();
    let int = |v: i64| T::from_i64(v);
    if let Some(n) = parse_call(name, "abelian")? {
        return AlgebraSpec::from_structure_constants(name, n, false, Vec::new());
    }
    if let Some(n) = parse_call(name, "nilpotent_upper")? {
        if n < 2 {
            return input("nilpotent_upper(n) needs n >= 2");
        }
        let mut basis = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut m = Matrix::zeros(n, n);
                m.set(i, j, T::one());
                basis.push(m);
            }
        }
        return AlgebraSpec::from_matrix_basis(name, basis);
    }
    match name {
        "heis3" => AlgebraSpec::from_matrix_basis(
            name,
            vec![
                Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]),
                Matrix::from_ints(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]),
                Matrix::from_ints(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]),
            ],
        ),
        "sl2" => AlgebraSpec::from_matrix_basis(
            name,
            vec![
                Matrix::from_ints(&[&[0, 1], &[0, 0]]),
                Matrix::from_ints(&[&[0, 0], &[1, 0]]),
                Matrix::from_ints(&[&[1, 0], &[0, -1]]),
            ],
        ),
        // infinitesimal rotations; [L_i, L_j] = eps_ijk L_k
        "so3" => AlgebraSpec::from_matrix_basis(
            name,
            vec![
                Matrix::from_ints(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]),
                Matrix::from_ints(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]),
                Matrix::from_ints(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]),
            ],
        ),
        "leibniz2" => {
            AlgebraSpec::from_structure_constants(name, 2, true, vec![(0, 0, vec![int(0), int(1)])])
        }
        _ => input(format!("unknown algebra {name:?}; known: {}", BUILTIN_NAMES.join(", "))),
    }
}

fn parse_call(name: &str, func: &str) -> Result<Option<usize>> {
    let Some(rest) = name.strip_prefix(func) else {
        return Ok(None);
    };
    let arg = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|a| a.trim().parse::<usize>().ok());
    match arg {
        Some(n) if n > 0 => Ok(Some(n)),
        _ => input(format!("malformed algebra name {name:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;

    type Spec = AlgebraSpec<Rational>;
    type El = AlgebraElement<Rational>;

    fn el(v: &[i64]) -> El {
        AlgebraElement(v.iter().map(|&c| Rational::from_i64(c)).collect())
    }

    fn arb_el(dim: usize) -> impl Strategy<Value = El> {
        prop::collection::vec((-9i64..=9, 1i64..=4), dim)
            .prop_map(|v| AlgebraElement(v.into_iter().map(|(p, q)| Rational::ratio(p, q)).collect()))
    }

    #[test]
    fn sl2_brackets() {
        let sl2: Spec = builtin("sl2").unwrap();
        let (e, f, h) = (el(&[1, 0, 0]), el(&[0, 1, 0]), el(&[0, 0, 1]));
        assert_eq!(sl2.bracket(&e, &f).unwrap(), h);
        assert_eq!(sl2.bracket(&h, &e).unwrap(), e.scale(&Rational::from_i64(2)));
        assert_eq!(sl2.bracket(&h, &f).unwrap(), f.scale(&Rational::from_i64(-2)));
        assert!(sl2.bracket(&e, &e).unwrap().is_zero());
        assert!(sl2.bracket(&e, &el(&[1, 0])).is_err());
    }

    #[test]
    fn leibniz2_bracket() {
        let l: Spec = builtin("leibniz2").unwrap();
        assert!(l.is_leibniz());
        assert_eq!(l.bracket(&el(&[1, 0]), &el(&[1, 0])).unwrap(), el(&[0, 1]));
        assert!(l.verify().passed);
        // the same table declared as a Lie algebra violates antisymmetry
        let lie = Spec::from_structure_constants("x", 2, false, vec![(0, 0, vec![Rational::from_i64(0), Rational::from_i64(1)])])
            .unwrap();
        let report = lie.verify();
        assert!(!report.passed);
        assert!(report.failure.unwrap().contains("antisymmetry"));
    }

    #[test]
    fn builtins_verify() {
        for name in ["abelian(2)", "abelian(5)", "heis3", "sl2", "so3", "nilpotent_upper(4)", "leibniz2"] {
            let a: Spec = builtin(name).unwrap();
            assert!(a.verify().passed, "{name}: {:?}", a.verify());
        }
        let ab: Spec = builtin("abelian(2)").unwrap();
        assert_eq!(ab.dim(), 2);
        assert!(ab.structure_constants().is_empty());
        let h: Spec = builtin("heis3").unwrap();
        assert_eq!(h.bracket(&el(&[1, 0, 0]), &el(&[0, 1, 0])).unwrap(), el(&[0, 0, 1]));
        assert_eq!(h.bracket(&el(&[0, 1, 0]), &el(&[1, 0, 0])).unwrap(), el(&[0, 0, -1]));
        for i in 0..3 {
            assert!(h.bracket(&el(&[0, 0, 1]), &AlgebraElement::basis(3, i)).unwrap().is_zero());
        }
        let n4: Spec = builtin("nilpotent_upper(4)").unwrap();
        assert_eq!(n4.dim(), 6);
        assert!(builtin::<Rational>("gl7").is_err());
        assert!(builtin::<Rational>("abelian(x)").is_err());
        assert!(builtin::<Rational>("abelian(0)").is_err());
    }

    #[test]
    fn so3_is_cross_product() {
        let so3: Spec = builtin("so3").unwrap();
        let (x, y) = (el(&[1, 2, 3]), el(&[-4, 0, 5]));
        // (2*5 - 3*0, 3*(-4) - 1*5, 1*0 - 2*(-4))
        assert_eq!(so3.bracket(&x, &y).unwrap(), el(&[10, -17, 8]));
    }

    #[test]
    fn constructed_violation_fails() {
        let bad = Spec::from_structure_constants(
            "bad",
            2,
            false,
            vec![(0, 1, vec![Rational::from_i64(1), Rational::from_i64(0)])],
        )
        .unwrap();
        assert!(!bad.verify().passed);
        assert!(Spec::from_structure_constants("x", 2, false, vec![(0, 2, vec![])]).is_err());
        assert!(Spec::from_matrix_basis(
            "dep",
            vec![Matrix::from_ints(&[&[0, 1], &[0, 0]]), Matrix::from_ints(&[&[0, 2], &[0, 0]])]
        )
        .is_err());
        // span{E12, E21} is not closed
        assert!(Spec::from_matrix_basis(
            "open",
            vec![Matrix::from_ints(&[&[0, 1], &[0, 0]]), Matrix::from_ints(&[&[0, 0], &[1, 0]])]
        )
        .is_err());
    }

    #[test]
    fn sl2_conjugation_by_hand() {
        let sl2: Spec = builtin("sl2").unwrap();
        let g = GroupPoint::Matrix(Matrix::from_ints(&[&[1, 1], &[0, 1]]));
        // [[1,1],[0,1]] f [[1,-1],[0,1]] = [[1,-1],[1,-1]] = f + h - e
        assert_eq!(sl2.adjoint(&g, &el(&[0, 1, 0])).unwrap(), el(&[-1, 1, 1]));
        assert_eq!(sl2.adjoint(&GroupPoint::Identity, &el(&[3, 1, 2])).unwrap(), el(&[3, 1, 2]));
    }

    #[test]
    fn adjoint_errors() {
        let sl2: Spec = builtin("sl2").unwrap();
        let singular = GroupPoint::Matrix(Matrix::from_ints(&[&[1, 1], &[1, 1]]));
        assert_eq!(sl2.adjoint(&singular, &el(&[1, 0, 0])), Err(Error::Singular));
        let h: Spec = builtin("heis3").unwrap();
        // a lower-triangular conjugation leaves the Heisenberg span
        let g = GroupPoint::Matrix(Matrix::from_ints(&[&[1, 0, 0], &[1, 1, 0], &[0, 0, 1]]));
        assert!(matches!(h.adjoint(&g, &el(&[1, 0, 0])), Err(Error::Representation(_))));
        let ab: Spec = builtin("abelian(2)").unwrap();
        let m = GroupPoint::Matrix(Matrix::identity(2));
        assert!(matches!(ab.adjoint(&m, &el(&[1, 0])), Err(Error::Input(_))));
        let swap = GroupPoint::Automorphism(Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        assert_eq!(ab.adjoint(&swap, &el(&[1, 2])).unwrap(), el(&[2, 1]));
        let l: Spec = builtin("leibniz2").unwrap();
        assert!(matches!(l.adjoint(&swap, &el(&[1, 0])), Err(Error::Representation(_))));
    }

    #[test]
    fn group_point_equality() {
        let i2 = GroupPoint::<Rational>::Matrix(Matrix::identity(2));
        assert_eq!(i2, GroupPoint::Identity);
        assert_ne!(GroupPoint::Matrix(Matrix::<Rational>::from_ints(&[&[1, 1], &[0, 1]])), GroupPoint::Identity);
    }

    proptest! {
        #[test]
        fn matrix_and_table_brackets_agree(x in arb_el(3), y in arb_el(3)) {
            for name in ["sl2", "so3", "heis3"] {
                let a: Spec = builtin(name).unwrap();
                prop_assert_eq!(a.bracket(&x, &y).unwrap(), a.matrix_bracket(&x, &y).unwrap());
            }
        }

        #[test]
        fn conjugation_is_an_automorphism(x in arb_el(3), y in arb_el(3), a in -5i64..5, b in -5i64..5) {
            let sl2: Spec = builtin("sl2").unwrap();
            let g = GroupPoint::Matrix(
                Matrix::from_ints(&[&[1, a], &[0, 1]]).mul(&Matrix::from_ints(&[&[1, 0], &[b, 1]])).unwrap(),
            );
            let lhs = sl2.adjoint(&g, &sl2.bracket(&x, &y).unwrap()).unwrap();
            let rhs = sl2.bracket(&sl2.adjoint(&g, &x).unwrap(), &sl2.adjoint(&g, &y).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
