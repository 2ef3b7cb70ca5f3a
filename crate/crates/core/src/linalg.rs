//! Dense exact linear algebra over a [`Scalar`] field.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::scalar::{Rational, Scalar};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// `y += a·x`, skipping zero entries of `x`.
pub fn axpy<F: Scalar>(y: &mut [F], a: &F, x: &[F]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += a.clone() * xi;
        }
    }
}

pub fn dot<F: Scalar>(x: &[F], y: &[F]) -> F {
    let mut acc = F::zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc += a.clone() * b;
        }
    }
    acc
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from equal-length rows.
    ///
    /// # Panics
    /// If the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[F] {
        &self.data
    }

    pub fn into_data(self) -> Vec<F> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Transpose combined with the base-ring conjugation.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn map(&self, f: impl Fn(&F) -> F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &F) -> Self {
        self.map(|x| x.clone() * s)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if !a.is_zero() {
                    axpy(out_row, a, other.row(k));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> F {
        let mut acc = F::zero();
        for i in 0..self.rows.min(self.cols) {
            acc += &self[(i, i)];
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for x in m.row_mut(r) {
                if !x.is_zero() {
                    *x = x.clone() * &inv;
                }
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = -m[(i, c)].clone();
                    axpy(m.row_mut(i), &f, &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        // Row-echelon only (no back substitution) is enough for the rank.
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            let pivot_row = m.row(r).to_vec();
            for i in r + 1..m.rows {
                if !m[(i, c)].is_zero() {
                    let f = -(m[(i, c)].clone() * &inv);
                    axpy(m.row_mut(i), &f, &pivot_row);
                }
            }
            r += 1;
        }
        r
    }

    /// Basis of the right null space `{v : A v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(k, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> F {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            let inv = pivot.inv().expect("nonzero pivot");
            let pivot_row = m.row(c).to_vec();
            for i in c + 1..n {
                if !m[(i, c)].is_zero() {
                    let f = -(m[(i, c)].clone() * &inv);
                    axpy(m.row_mut(i), &f, &pivot_row);
                }
            }
            det = det * pivot;
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }

    /// Solves `A x = b`, returning one solution if the system is consistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let aug =
            Self::from_fn(
                self.rows,
                self.cols + 1,
                |i, j| {
                    if j < self.cols {
                        self[(i, j)].clone()
                    } else {
                        b[i].clone()
                    }
                },
            );
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = r[(k, self.cols)].clone();
        }
        Some(x)
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i..self.cols).all(|j| self[(i, j)] == -self[(j, i)].clone()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Pfaffian of a skew-symmetric matrix, by expansion along the first row;
    /// `None` for non-skew input. Normalized so that `Pf(J ⊕ … ⊕ J) = 1` with
    /// `J = [[0, 1], [−1, 0]]`.
    pub fn pfaffian(&self) -> Option<F> {
        if !self.is_skew() {
            return None;
        }
        if self.rows % 2 == 1 {
            return Some(F::zero());
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Some(self.pfaffian_rec(&idx))
    }

    fn pfaffian_rec(&self, idx: &[usize]) -> F {
        if idx.is_empty() {
            return F::one();
        }
        let first = idx[0];
        let mut acc = F::zero();
        for k in 1..idx.len() {
            let a = &self[(first, idx[k])];
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx[1..].iter().enumerate().filter(|&(j, _)| j + 1 != k).map(|(_, &v)| v).collect();
            let term = a.clone() * self.pfaffian_rec(&rest);
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    /// Coefficients `[c_0, …, c_n]` of `det(t·I − A) = Σ c_k t^k`
    /// (Faddeev-LeVerrier).
    pub fn char_poly(&self) -> Vec<F> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = −tr(A M_k)/k
            let mut mk = self.mul(&m);
            for i in 0..n {
                mk[(i, i)] += &coeffs[n - k + 1];
            }
            let t = self.mul(&mk).trace();
            let kinv = F::from_i64(k as i64).inv().expect("nonzero");
            coeffs[n - k] = -(t * kinv);
            m = mk;
        }
        coeffs
    }

    /// True when this Hermitian matrix is positive definite (all leading
    /// pivots of an unpivoted LDL* factorization are positive reals).
    pub fn is_positive_definite(&self) -> bool {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        for c in 0..n {
            let pivot = m[(c, c)].clone();
            if !pivot.im().is_zero() || pivot.re() <= Rational::ZERO {
                return false;
            }
            let inv = pivot.inv().expect("nonzero pivot");
            let pivot_row = m.row(c).to_vec();
            for i in c + 1..n {
                if !m[(i, c)].is_zero() {
                    let f = -(m[(i, c)].clone() * &inv);
                    axpy(m.row_mut(i), &f, &pivot_row);
                }
            }
        }
        true
    }

    pub fn is_negative_definite(&self) -> bool {
        self.neg().is_positive_definite()
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Scalar> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally grown basis of a subspace of `F^dim`, kept in reduced
/// echelon form, that can express members in terms of the accepted vectors.
#[derive(Clone, Debug)]
pub struct SubspaceBasis<F> {
    dim: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    // rows[k] = Σ_m combos[k][m] · accepted[m]
    combos: Vec<Vec<F>>,
    accepted: Vec<Vec<F>>,
}

impl<F: Scalar> SubspaceBasis<F> {
    pub fn new(dim: usize) -> Self {
        SubspaceBasis { dim, rows: Vec::new(), pivots: Vec::new(), combos: Vec::new(), accepted: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.accepted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.accepted.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// The accepted (independent) vectors, in insertion order.
    pub fn vectors(&self) -> &[Vec<F>] {
        &self.accepted
    }

    /// Adds `v` if it is independent of the current span; returns whether it was added.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.dim);
        let original = v.clone();
        let mut v = v;
        let m = self.accepted.len();
        let mut combo = vec![F::zero(); m + 1];
        for (k, &p) in self.pivots.iter().enumerate() {
            if !v[p].is_zero() {
                let f = -v[p].clone();
                axpy(&mut v, &f, &self.rows[k]);
                axpy(&mut combo[..m], &f, &self.combos[k]);
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        combo[m] = F::one();
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut().chain(combo.iter_mut()) {
            if !x.is_zero() {
                *x = x.clone() * &inv;
            }
        }
        for k in 0..self.rows.len() {
            if !self.rows[k][p].is_zero() {
                let f = -self.rows[k][p].clone();
                axpy(&mut self.rows[k], &f, &v);
                self.combos[k].push(F::zero());
                axpy(&mut self.combos[k], &f, &combo);
            } else {
                self.combos[k].push(F::zero());
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        self.combos.push(combo);
        self.accepted.push(original);
        true
    }

    /// Coefficients of `v` with respect to [`SubspaceBasis::vectors`], or
    /// `None` if `v` is not in the span.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let mut residual = v.to_vec();
        let mut out = vec![F::zero(); self.accepted.len()];
        for (k, &p) in self.pivots.iter().enumerate() {
            let c = v[p].clone();
            if !c.is_zero() {
                axpy(&mut residual, &-c.clone(), &self.rows[k]);
                axpy(&mut out, &c, &self.combos[k]);
            }
        }
        residual.iter().all(F::is_zero).then_some(out)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coords(v).is_some()
    }
}
