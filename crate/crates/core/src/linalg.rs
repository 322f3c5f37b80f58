//! Exact square-matrix algebra over the rationals.
//!
//! The determinant is the inductive last-row cofactor expansion. Minors are
//! memoised by their column set, so the cost is `O(2^n n)` instead of `n!`
//! while every value is still produced by the same expansion.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("zero on the diagonal at row {0}")]
    ZeroDiagonal(usize),
    #[error("matrix is not upper triangular: entry ({row}, {col}) is nonzero")]
    NotTriangular { row: usize, col: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("rows have unequal lengths")]
    Ragged,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    // row-major
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(LinalgError::Ragged);
            }
            entries.extend(row);
        }
        Ok(Self { n, entries })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, LinalgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::arith::rat(v)).collect())
                .collect(),
        )
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let mut m = Self::zero(d.len());
        for (i, v) in d.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|v| v * c).collect(),
        }
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.first_below_diagonal().is_none()
    }

    fn first_below_diagonal(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (0..i).map(move |j| (i, j)))
            .find(|&(i, j)| !self.get(i, j).is_zero())
    }

    /// The minor with row `r` and column `c` deleted.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let n = self.n - 1;
        let mut entries = Vec::with_capacity(n * n);
        for i in (0..self.n).filter(|&i| i != r) {
            for j in (0..self.n).filter(|&j| j != c) {
                entries.push(self.get(i, j).clone());
            }
        }
        Self { n, entries }
    }

    /// Determinant by cofactor expansion along the last row,
    /// `det A = sum_i (-1)^(n+i) A[n][i] det(minor(n, i))` (1-based).
    pub fn determinant(&self) -> Rational {
        let mut memo = HashMap::new();
        let all: Vec<usize> = (0..self.n).collect();
        self.det_cols(&all, &mut memo)
    }

    // determinant of the submatrix on rows 0..cols.len() and the given
    // (increasing) columns, expanding along its last row
    fn det_cols(&self, cols: &[usize], memo: &mut HashMap<Vec<usize>, Rational>) -> Rational {
        let k = cols.len();
        if k == 0 {
            return Rational::one();
        }
        if let Some(v) = memo.get(cols) {
            return v.clone();
        }
        let row = k - 1;
        let mut acc = Rational::zero();
        for (pos, &c) in cols.iter().enumerate() {
            let a = self.get(row, c);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a * self.det_cols(&rest, memo);
            // (-1)^(k + pos + 1) with 1-based positions is (-1)^(row + pos)
            if (row + pos).is_multiple_of(2) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        memo.insert(cols.to_vec(), acc.clone());
        acc
    }

    /// Determinant by cofactor expansion along row `r`.
    pub fn determinant_along_row(&self, r: usize) -> Rational {
        if self.n == 0 {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        for c in 0..self.n {
            let a = self.get(r, c);
            if a.is_zero() {
                continue;
            }
            let term = a * self.minor(r, c).determinant();
            if (r + c).is_multiple_of(2) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    /// Determinant by cofactor expansion along column `c`.
    pub fn determinant_along_col(&self, c: usize) -> Rational {
        self.transpose().determinant_along_row(c)
    }

    pub fn cofactor(&self, i: usize, j: usize) -> Rational {
        let d = self.minor(i, j).determinant();
        if (i + j).is_multiple_of(2) {
            d
        } else {
            -d
        }
    }

    /// Transposed cofactor matrix, `A adj(A) = adj(A) A = det(A) I`.
    pub fn adjugate(&self) -> Self {
        let mut adj = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                adj.set(j, i, self.cofactor(i, j));
            }
        }
        adj
    }

    pub fn adjugate_inverse(&self) -> Result<Self, LinalgError> {
        let det = self.determinant();
        if det.is_zero() {
            return Err(LinalgError::SingularMatrix);
        }
        Ok(self.adjugate().scale(&(Rational::one() / det)))
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if x.len() != self.n {
            return Err(LinalgError::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok((0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Solves `A x = b` for upper-triangular `A` with nonzero diagonal by
    /// back-substitution.
    pub fn triangular_solve(&self, b: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if b.len() != self.n {
            return Err(LinalgError::DimensionMismatch {
                expected: self.n,
                got: b.len(),
            });
        }
        if let Some((row, col)) = self.first_below_diagonal() {
            return Err(LinalgError::NotTriangular { row, col });
        }
        if let Some(i) = (0..self.n).find(|&i| self.get(i, i).is_zero()) {
            return Err(LinalgError::ZeroDiagonal(i));
        }
        let mut x = vec![Rational::zero(); self.n];
        for i in (0..self.n).rev() {
            let mut s = b[i].clone();
            for (j, xj) in x.iter().enumerate().skip(i + 1) {
                s -= self.get(i, j) * xj;
            }
            x[i] = s / self.get(i, i);
        }
        Ok(x)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.n, rhs.n, "matrix dimensions differ");
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut s = Rational::zero();
                for k in 0..n {
                    s += self.get(i, k) * rhs.get(k, j);
                }
                out.set(i, j, s);
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, v) in self.row(i).iter().enumerate() {
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

/// Gram matrix `G[i][j] = <v_i, v_j>` of a list of vectors.
pub fn gram(vectors: &[Vec<Rational>]) -> Matrix {
    let k = vectors.len();
    let mut g = Matrix::zero(k);
    for i in 0..k {
        for j in 0..k {
            let dot = vectors[i]
                .iter()
                .zip(&vectors[j])
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
            g.set(i, j, dot);
        }
    }
    g
}

/// Linear independence over the rationals: the Gram determinant of real
/// vectors vanishes exactly when they are dependent. Vectors are padded with
/// zeros to a common length.
pub fn linearly_independent(vectors: &[Vec<Rational>]) -> bool {
    let len = vectors.iter().map(Vec::len).max().unwrap_or(0);
    let padded: Vec<Vec<Rational>> = vectors
        .iter()
        .map(|v| {
            let mut v = v.clone();
            v.resize(len, Rational::zero());
            v
        })
        .collect();
    !gram(&padded).determinant().is_zero()
}

/// Rank as the size of a greedily grown independent subfamily, which for a
/// matroid is maximal.
pub fn rank(vectors: &[Vec<Rational>]) -> usize {
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for v in vectors {
        basis.push(v.clone());
        if !linearly_independent(&basis) {
            basis.pop();
        }
    }
    basis.len()
}
