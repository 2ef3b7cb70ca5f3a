//! Matrices over the associative Cayley-Dickson levels `R`, `C`, `H`
//! (rational base), acting on columns with scalars on the right.

use std::ops::{Index, IndexMut};

use rand::Rng;

use crate::cayley_dickson::CDNumber;
use crate::sampling;
use crate::scalar::Rational;

type K = CDNumber<Rational>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KMatrix {
    rows: usize,
    cols: usize,
    level: usize,
    data: Vec<K>,
}

impl KMatrix {
    pub fn zeros(rows: usize, cols: usize, level: usize) -> Self {
        assert!(level <= 2, "matrices need an associative division algebra");
        KMatrix { rows, cols, level, data: vec![K::zero(level); rows * cols] }
    }

    pub fn identity(n: usize, level: usize) -> Self {
        Self::scalar(n, K::one(level))
    }

    /// `q·I`.
    pub fn scalar(n: usize, q: K) -> Self {
        let mut m = Self::zeros(n, n, q.level());
        for i in 0..n {
            m[(i, i)] = q.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, level: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let x = f(i, j);
                assert_eq!(x.level(), level);
                data.push(x);
            }
        }
        KMatrix { rows, cols, level, data }
    }

    pub fn random<R: Rng + ?Sized>(rows: usize, cols: usize, level: usize, rng: &mut R, bound: i64) -> Self {
        Self::from_fn(rows, cols, level, |_, _| sampling::cd(rng, level, bound))
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(K::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, self.level, |i, j| self[(i, j)].clone() + &other[(i, j)])
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, self.level, |i, j| self[(i, j)].clone() - &other[(i, j)])
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, self.level, |i, j| -self[(i, j)].clone())
    }

    pub fn scale_real(&self, s: &Rational) -> Self {
        Self::from_fn(self.rows, self.cols, self.level, |i, j| self[(i, j)].scale(s))
    }

    /// Entrywise right multiplication `A·q`.
    pub fn mul_right(&self, q: &K) -> Self {
        Self::from_fn(self.rows, self.cols, self.level, |i, j| self[(i, j)].mul(q))
    }

    /// Entrywise left multiplication `q·A`.
    pub fn mul_left(&self, q: &K) -> Self {
        Self::from_fn(self.rows, self.cols, self.level, |i, j| q.mul(&self[(i, j)]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        assert_eq!(self.level, other.level, "level mismatch");
        let mut out = Self::zeros(self.rows, other.cols, self.level);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let t = a.mul(b);
                        let slot = &mut out.data[i * other.cols + j];
                        *slot = std::mem::replace(slot, K::zero(self.level)) + t;
                    }
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.level, |i, j| self[(j, i)].conj())
    }

    /// `Re tr(A)`.
    pub fn re_trace(&self) -> Rational {
        let mut acc = Rational::ZERO;
        for i in 0..self.rows.min(self.cols) {
            acc += self[(i, i)].real();
        }
        acc
    }

    /// `Re tr(A B)` without forming the product.
    pub fn re_trace_product(&self, other: &Self) -> Rational {
        assert_eq!((self.cols, self.rows), (other.rows, other.cols));
        let mut acc = Rational::ZERO;
        for i in 0..self.rows {
            for k in 0..self.cols {
                let (a, b) = (&self[(i, k)], &other[(k, i)]);
                if !a.is_zero() && !b.is_zero() {
                    // Re(ab) = a₀b₀ − Σ_{k≥1} a_k b_k
                    for (t, (x, y)) in a.coeffs().iter().zip(b.coeffs()).enumerate() {
                        if t == 0 {
                            acc += x * y;
                        } else {
                            acc -= x * y;
                        }
                    }
                }
            }
        }
        acc
    }

    /// Gauss-Jordan inverse over the division ring (row operations on the left).
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n, self.level);
        for c in 0..n {
            let p = (c..n).find(|&i| !a[(i, c)].is_zero())?;
            a.swap_rows(c, p);
            inv.swap_rows(c, p);
            let pinv = a[(c, c)].inverse()?;
            a.scale_row_left(c, &pinv);
            inv.scale_row_left(c, &pinv);
            for i in 0..n {
                if i != c && !a[(i, c)].is_zero() {
                    let f = -a[(i, c)].clone();
                    a.add_row_multiple(i, &f, c);
                    inv.add_row_multiple(i, &f, c);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row_left(&mut self, r: usize, q: &K) {
        for j in 0..self.cols {
            let v = q.mul(&self[(r, j)]);
            self[(r, j)] = v;
        }
    }

    /// row_i += f · row_src
    fn add_row_multiple(&mut self, i: usize, f: &K, src: usize) {
        for j in 0..self.cols {
            let t = f.mul(&self[(src, j)]);
            if !t.is_zero() {
                let v = self[(i, j)].clone() + t;
                self[(i, j)] = v;
            }
        }
    }

    /// Real coordinates, entry by entry in row-major order.
    pub fn to_real_coords(&self) -> Vec<Rational> {
        self.data.iter().flat_map(|x| x.coeffs().iter().cloned()).collect()
    }

    pub fn from_real_coords(rows: usize, cols: usize, level: usize, c: &[Rational]) -> Self {
        let d = 1 << level;
        assert_eq!(c.len(), rows * cols * d);
        Self::from_fn(rows, cols, level, |i, j| {
            let off = (i * cols + j) * d;
            K::new(c[off..off + d].to_vec()).expect("level")
        })
    }

    /// Sub-block of rows `r0..r0+nr`, columns `c0..c0+nc`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        Self::from_fn(nr, nc, self.level, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Keeps the first `cols` columns.
    pub fn truncate_cols(&self, cols: usize) -> Self {
        self.block(0, 0, self.rows, cols)
    }

    /// Appends zero columns up to `cols`.
    pub fn pad_cols(&self, cols: usize) -> Self {
        assert!(cols >= self.cols);
        Self::from_fn(self.rows, cols, self.level, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                K::zero(self.level)
            }
        })
    }

    /// Stacks `top` over `bottom`.
    pub fn vstack(top: &Self, bottom: &Self) -> Self {
        assert_eq!(top.cols, bottom.cols);
        Self::from_fn(top.rows + bottom.rows, top.cols, top.level, |i, j| {
            if i < top.rows {
                top[(i, j)].clone()
            } else {
                bottom[(i - top.rows, j)].clone()
            }
        })
    }

    pub fn to_rows(&self) -> Vec<Vec<K>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self[(i, j)].clone()).collect()).collect()
    }

    pub fn from_rows(level: usize, rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_fn(r, c, level, |i, j| rows[i][j].clone())
    }

    /// Rank as a right `K`-module map, i.e. the real rank divided by `dim K`.
    pub fn k_rank(&self) -> usize {
        let d = 1 << self.level;
        // Real matrix of v ↦ A v on K^cols: column (j, t) = A (e_j · e_t).
        let mut cols = Vec::new();
        for j in 0..self.cols {
            for t in 0..d {
                let unit = K::unit(self.level, t);
                let mut col = Vec::with_capacity(self.rows * d);
                for i in 0..self.rows {
                    col.extend(self[(i, j)].mul(&unit).into_coeffs());
                }
                cols.push(col);
            }
        }
        let m = crate::linalg::Matrix::from_fn(self.rows * d, self.cols * d, |i, j| cols[j][i].clone());
        m.rank() / d
    }
}

impl Index<(usize, usize)> for KMatrix {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for KMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.data[i * self.cols + j]
    }
}
