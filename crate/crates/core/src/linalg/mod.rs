//! Exact dense linear algebra over `Q`.
//!
//! Matrices are small (at most a few hundred rows) and entries are exact
//! rationals, so Gaussian elimination with first-nonzero pivoting is used
//! throughout. [`SparseSystem`] handles the large, very sparse homogeneous
//! systems that appear when computing intertwiner spaces.

mod sparse;

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use sparse::SparseSystem;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rat = BigRational;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Result of [`RatMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: RatMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn scalar(n: usize, c: Rat) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diagonal(entries: &[Rat]) -> RatMatrix {
        let mut m = RatMatrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> RatMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<RatMatrix, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RatMatrix {
            rows: n,
            cols,
            data,
        })
    }

    /// Integer matrix from literal rows. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> RatMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged integer matrix"
        );
        RatMatrix::from_fn(rows.len(), cols, |i, j| rat(rows[i][j]))
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rat>]) -> RatMatrix {
        assert!(
            columns.iter().all(|c| c.len() == rows),
            "column length mismatch"
        );
        RatMatrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Nonzero entries as `(row, col, value)` triples.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Rat)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    /// Kronecker product: `(A⊗B)[i·rB+k, j·cB+l] = A[i,j]·B[k,l]`.
    pub fn kron(&self, other: &RatMatrix) -> RatMatrix {
        let (rb, cb) = (other.rows, other.cols);
        let mut out = RatMatrix::zeros(self.rows * rb, self.cols * cb);
        for (i, j, a) in self.nonzeros() {
            for (k, l, b) in other.nonzeros() {
                out[(i * rb + k, j * cb + l)] = a * b;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn select_rows(&self, idx: &[usize]) -> RatMatrix {
        RatMatrix::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> RatMatrix {
        RatMatrix::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }

    /// Principal submatrix on `idx`.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> RatMatrix {
        RatMatrix::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    pub fn hstack(blocks: &[&RatMatrix]) -> RatMatrix {
        let rows = blocks.first().map_or(0, |b| b.rows);
        assert!(blocks.iter().all(|b| b.rows == rows), "hstack row mismatch");
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = RatMatrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            for (i, j, v) in b.nonzeros() {
                out[(i, off + j)] = v.clone();
            }
            off += b.cols;
        }
        out
    }

    pub fn vstack(blocks: &[&RatMatrix]) -> RatMatrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        assert!(
            blocks.iter().all(|b| b.cols == cols),
            "vstack column mismatch"
        );
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        RatMatrix { rows, cols, data }
    }

    pub fn block_diag(blocks: &[&RatMatrix]) -> RatMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = RatMatrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for (i, j, v) in b.nonzeros() {
                out[(r0 + i, c0 + j)] = v.clone();
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    // Reduces in place, pivoting only in the first `limit` columns.
    fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self[(r, c)].recip();
            let support: Vec<usize> = (c..cols).filter(|&j| !self[(r, j)].is_zero()).collect();
            for &j in &support {
                let v = &self.data[r * cols + j] * &inv;
                self.data[r * cols + j] = v;
            }
            for i in 0..rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for &j in &support {
                    let delta = &f * &self.data[r * cols + j];
                    self.data[i * cols + j] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right null space, `cols - rank` vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Basis of the column space, taken from the pivot columns of `self`.
    pub fn column_space(&self) -> Vec<Vec<Rat>> {
        self.rref().pivots.iter().map(|&j| self.column(j)).collect()
    }

    /// Some `x` with `self·x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        let col = RatMatrix::from_columns(self.rows, &[b.to_vec()]);
        let mut aug = RatMatrix::hstack(&[self, &col]);
        let pivots = aug.rref_in_place(self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug[(i, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Result<RatMatrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = RatMatrix::hstack(&[self, &RatMatrix::identity(n)]);
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return Err(LinalgError::Singular);
        }
        Ok(RatMatrix::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u32) -> RatMatrix {
        assert!(self.is_square(), "pow of non-square matrix");
        let mut base = self.clone();
        let mut acc = RatMatrix::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Largest absolute value among numerators and denominators, for
    /// diagnostics.
    pub fn height(&self) -> BigInt {
        self.data
            .iter()
            .map(|v| v.numer().abs().max(v.denom().clone()))
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for (i, k, a) in self.nonzeros() {
            for j in 0..rhs.cols {
                let b = &rhs.data[k * rhs.cols + j];
                if !b.is_zero() {
                    out.data[i * rhs.cols + j] += a * b;
                }
            }
        }
        out
    }
}

impl Mul for RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: RatMatrix) -> RatMatrix {
        &self * &rhs
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix sum shape mismatch"
        );
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Add for RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: RatMatrix) -> RatMatrix {
        &self + &rhs
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix difference shape mismatch"
        );
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Sub for RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: RatMatrix) -> RatMatrix {
        &self - &rhs
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }
}

impl Neg for RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        -&self
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix {}x{} {}", self.rows, self.cols, self)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
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

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let r = RatMatrix::identity(3).rref();
        assert_eq!(r.matrix, RatMatrix::identity(3));
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);

        let r = RatMatrix::zeros(2, 2).rref();
        assert_eq!(r.matrix, RatMatrix::zeros(2, 2));
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);

        assert_eq!(RatMatrix::from_i64(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(RatMatrix::identity(2).kernel_basis().is_empty());
        assert_eq!(RatMatrix::zeros(2, 3).kernel_basis().len(), 3);
        let k = RatMatrix::from_i64(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![v(&[-1, 1])]);
    }

    #[test]
    fn solve_examples() {
        let b = v(&[3, -4, 5]);
        assert_eq!(RatMatrix::identity(3).solve(&b).unwrap(), Some(b));
        let a = RatMatrix::from_i64(&[&[1, 0], &[1, 0]]);
        assert_eq!(a.solve(&v(&[1, 2])).unwrap(), None);
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(
            RatMatrix::from_i64(&[&[2]]).solve(&v(&[1])).unwrap(),
            Some(vec![half])
        );
        assert_eq!(
            a.solve(&v(&[1])),
            Err(LinalgError::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn kron_examples() {
        assert_eq!(
            RatMatrix::identity(2).kron(&RatMatrix::identity(3)),
            RatMatrix::identity(6)
        );
        let a = RatMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        assert!(a.kron(&RatMatrix::zeros(2, 3)).is_zero());
        assert_eq!(
            RatMatrix::from_i64(&[&[0, 1], &[0, 0]]).kron(&RatMatrix::from_i64(&[&[2]])),
            RatMatrix::from_i64(&[&[0, 2], &[0, 0]])
        );
    }

    #[test]
    fn inverse_examples() {
        assert!(RatMatrix::identity(4).is_invertible());
        assert!(!RatMatrix::zeros(1, 1).is_invertible());
        assert_eq!(
            RatMatrix::from_i64(&[&[1, 1], &[0, 1]]).inverse().unwrap(),
            RatMatrix::from_i64(&[&[1, -1], &[0, 1]])
        );
        assert_eq!(RatMatrix::zeros(2, 2).inverse(), Err(LinalgError::Singular));
        assert!(matches!(
            RatMatrix::zeros(2, 3).inverse(),
            Err(LinalgError::NotSquare { .. })
        ));
    }

    #[test]
    fn stacking_and_power() {
        let a = RatMatrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(a.pow(2).is_zero());
        assert_eq!(a.pow(0), RatMatrix::identity(2));
        let d = RatMatrix::block_diag(&[&a, &RatMatrix::identity(1)]);
        assert_eq!(d.rows(), 3);
        assert_eq!(d.rank(), 2);
        let h = RatMatrix::hstack(&[&a, &RatMatrix::identity(2)]);
        assert_eq!(h.cols(), 4);
        assert_eq!(RatMatrix::vstack(&[&a, &a]).rows(), 4);
        assert_eq!(d.trace(), rat(1));
    }
}
