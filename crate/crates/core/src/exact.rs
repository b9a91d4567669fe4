//! Dense exact matrices and the integer combinatorics behind the group laws.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{input, Error, Result};
use crate::scalar::Scalar;

/// Largest `n` accepted by [`bell_number`] unless a bound is passed explicitly.
pub const DEFAULT_BELL_BOUND: usize = 12;

/// A dense row-major matrix over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return input("matrix dimensions must be positive");
        }
        if entries.len() != rows * cols {
            return input(format!(
                "matrix {rows}x{cols} needs {} entries, got {}",
                rows * cols,
                entries.len()
            ));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return input("ragged matrix rows");
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from small integers; handy for fixed bases.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_i64(v)).collect())
                .collect(),
        )
        .expect("well-formed integer matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = T::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.cols).map(<[T]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c { v.is_one() } else { v.is_zero() }
                })
            })
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return input(format!(
                "shape mismatch {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Self { entries, ..*self })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(Self { entries, ..*self })
    }

    pub fn scale(&self, s: &T) -> Self {
        let entries = self.entries.iter().map(|a| a.clone() * s.clone()).collect();
        Self { entries, ..*self }
    }

    /// Exact product; `self.cols` must equal `other.rows`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] = out.entries[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    /// `XY - YX`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return input(format!("vector of length {} for {} columns", v.len(), self.cols));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect())
    }

    /// Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return input("inverse of a non-square matrix");
        }
        let n = self.rows;
        let mut work = self.to_rows();
        let mut inv = Self::identity(n).to_rows();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !work[r][col].is_zero()).ok_or(Error::Singular)?;
            work.swap(col, pivot);
            inv.swap(col, pivot);
            let p = work[col][col].clone();
            for j in 0..n {
                work[col][j] = work[col][j].clone() / p.clone();
                inv[col][j] = inv[col][j].clone() / p.clone();
            }
            for r in 0..n {
                if r == col || work[r][col].is_zero() {
                    continue;
                }
                let f = work[r][col].clone();
                for j in 0..n {
                    let w = work[col][j].clone() * f.clone();
                    work[r][j] = work[r][j].clone() - w;
                    let v = inv[col][j].clone() * f.clone();
                    inv[r][j] = inv[r][j].clone() - v;
                }
            }
        }
        Self::from_rows(inv)
    }

    /// Indices of pivot columns in the row echelon form, i.e. a maximal set of
    /// linearly independent columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut work = self.to_rows();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !work[r][col].is_zero()) else {
                continue;
            };
            work.swap(rank, p);
            let pv = work[rank][col].clone();
            for r in rank + 1..self.rows {
                if work[r][col].is_zero() {
                    continue;
                }
                let f = work[r][col].clone() / pv.clone();
                for j in col..self.cols {
                    let w = work[rank][j].clone() * f.clone();
                    work[r][j] = work[r][j].clone() - w;
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.pivot_columns().len()
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.cols).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Bell number `B_n` with the default bound.
pub fn bell_number(n: usize) -> Result<BigInt> {
    bell_number_bounded(n, DEFAULT_BELL_BOUND)
}

/// `B_{m+1} = sum_j C(m, j) B_j`, rejecting `n > bound`.
pub fn bell_number_bounded(n: usize, bound: usize) -> Result<BigInt> {
    if n > bound {
        return input(format!("bell number index {n} exceeds bound {bound}"));
    }
    let mut bell = vec![BigInt::one()];
    for m in 0..n {
        let next = (0..=m)
            .map(|j| binomial(m as u64, j as i64) * &bell[j])
            .fold(BigInt::zero(), |a, b| a + b);
        bell.push(next);
    }
    Ok(bell.swap_remove(n))
}
