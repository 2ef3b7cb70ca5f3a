//! The Cayley-Dickson tower `R ⊂ C ⊂ H ⊂ O` over an exact scalar ring.
//!
//! Level `k` elements have `2^k` coefficients in the basis `e_0 = 1, e_1, …`.
//! A level `k+1` element `(p, q)` stores `p` in the first half of the
//! coefficients and `q` in the second half, and multiplies by
//!
//! ```text
//! (p, q)(r, s) = (p r − s̄ q,  s p + q r̄)
//! ```
//!
//! The basis multiplication table used by [`CDNumber::mul`] is generated once
//! from this recursion (see [`basis_product`]).

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Highest supported level (octonions).
pub const MAX_LEVEL: usize = 3;

/// Element of the Cayley-Dickson algebra of a given level over `F`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CDNumber<F> {
    coeffs: Vec<F>,
}

fn level_of(len: usize) -> Result<usize> {
    match len {
        1 => Ok(0),
        2 => Ok(1),
        4 => Ok(2),
        8 => Ok(3),
        n => Err(Error::InvalidLevel(n)),
    }
}

/// `e_a · e_b = sign · e_index` at the given level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisProduct {
    pub index: usize,
    pub negative: bool,
}

fn recursive_mul_i64(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.len() == 1 {
        return vec![a[0] * b[0]];
    }
    let h = a.len() / 2;
    let (p, q) = a.split_at(h);
    let (r, s) = b.split_at(h);
    let conj = |x: &[i64]| -> Vec<i64> { x.iter().enumerate().map(|(k, v)| if k == 0 { *v } else { -v }).collect() };
    let pr = recursive_mul_i64(p, r);
    let sbq = recursive_mul_i64(&conj(s), q);
    let sp = recursive_mul_i64(s, p);
    let qrb = recursive_mul_i64(q, &conj(r));
    let mut out: Vec<i64> = pr.iter().zip(&sbq).map(|(x, y)| x - y).collect();
    out.extend(sp.iter().zip(&qrb).map(|(x, y)| x + y));
    out
}

fn tables() -> &'static [Vec<BasisProduct>; MAX_LEVEL + 1] {
    static TABLES: OnceLock<[Vec<BasisProduct>; MAX_LEVEL + 1]> = OnceLock::new();
    TABLES.get_or_init(|| {
        std::array::from_fn(|level| {
            let dim = 1 << level;
            let unit = |k: usize| {
                let mut v = vec![0i64; dim];
                v[k] = 1;
                v
            };
            let mut table = Vec::with_capacity(dim * dim);
            for a in 0..dim {
                for b in 0..dim {
                    let prod = recursive_mul_i64(&unit(a), &unit(b));
                    let nz: Vec<usize> = (0..dim).filter(|&k| prod[k] != 0).collect();
                    assert!(nz.len() == 1 && prod[nz[0]].abs() == 1);
                    table.push(BasisProduct { index: nz[0], negative: prod[nz[0]] < 0 });
                }
            }
            table
        })
    })
}

/// Product of basis units `e_a e_b` at `level`, read from the generated table.
pub fn basis_product(level: usize, a: usize, b: usize) -> BasisProduct {
    tables()[level][(a << level) + b]
}

impl<F: Scalar> CDNumber<F> {
    /// Builds an element from its `2^level` coefficients.
    pub fn new(coeffs: Vec<F>) -> Result<Self> {
        let level = level_of(coeffs.len())?;
        if level > MAX_LEVEL {
            return Err(Error::InvalidLevel(coeffs.len()));
        }
        Ok(CDNumber { coeffs })
    }

    pub fn zero(level: usize) -> Self {
        CDNumber { coeffs: vec![F::zero(); 1 << level] }
    }

    pub fn one(level: usize) -> Self {
        Self::from_scalar(level, F::one())
    }

    pub fn from_scalar(level: usize, s: F) -> Self {
        let mut x = Self::zero(level);
        x.coeffs[0] = s;
        x
    }

    /// Basis unit `e_k`.
    pub fn unit(level: usize, k: usize) -> Self {
        let mut x = Self::zero(level);
        x.coeffs[k] = F::one();
        x
    }

    pub fn level(&self) -> usize {
        self.coeffs.len().trailing_zeros() as usize
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &F {
        &self.coeffs[k]
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F::is_zero)
    }

    /// Real part (the `e_0` coefficient).
    pub fn real(&self) -> F {
        self.coeffs[0].clone()
    }

    /// Cayley-Dickson conjugate: negates every non-real coefficient.
    pub fn conj(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(k, c)| if k == 0 { c.clone() } else { -c.clone() }).collect();
        CDNumber { coeffs }
    }

    /// Applies the base-ring involution to every coefficient.
    pub fn conj_scalars(&self) -> Self {
        CDNumber { coeffs: self.coeffs.iter().map(F::conj).collect() }
    }

    /// Norm `N(x) = x x̄ = Σ c_k²`, bilinear in the base ring (isotropic over `Q(i)`).
    pub fn norm(&self) -> F {
        let mut acc = F::zero();
        for c in &self.coeffs {
            if !c.is_zero() {
                acc += c.clone() * c;
            }
        }
        acc
    }

    /// Symmetric bilinear form `Re(x ȳ) = Σ x_k y_k`.
    pub fn inner(&self, other: &Self) -> F {
        let mut acc = F::zero();
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            if !a.is_zero() && !b.is_zero() {
                acc += a.clone() * b;
            }
        }
        acc
    }

    pub fn scale(&self, s: &F) -> Self {
        CDNumber { coeffs: self.coeffs.iter().map(|c| c.clone() * s).collect() }
    }

    fn check_level(&self, other: &Self) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::LevelMismatch { left: self.level(), right: other.level() })
        }
    }

    /// Product, failing on a level mismatch.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        Ok(self.mul(other))
    }

    /// Product via the generated basis table.
    ///
    /// # Panics
    /// If the levels differ; use [`CDNumber::try_mul`] for a fallible variant.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "Cayley-Dickson level mismatch");
        let level = self.level();
        let dim = self.dim();
        let table = &tables()[level];
        let mut out = vec![F::zero(); dim];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let bp = table[a * dim + b];
                let t = x.clone() * y;
                if bp.negative {
                    out[bp.index] -= t;
                } else {
                    out[bp.index] += t;
                }
            }
        }
        CDNumber { coeffs: out }
    }

    /// Product computed directly from the doubling recursion.
    pub fn mul_recursive(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "Cayley-Dickson level mismatch");
        if self.dim() == 1 {
            return CDNumber { coeffs: vec![self.coeffs[0].clone() * &other.coeffs[0]] };
        }
        let (p, q) = self.halves();
        let (r, s) = other.halves();
        let first = p.mul_recursive(&r) - s.conj().mul_recursive(&q);
        let second = s.mul_recursive(&p) + q.mul_recursive(&r.conj());
        let mut coeffs = first.coeffs;
        coeffs.extend(second.coeffs);
        CDNumber { coeffs }
    }

    /// Splits a level `k+1` element into its pair `(p, q)` of level `k`.
    pub fn halves(&self) -> (Self, Self) {
        let h = self.dim() / 2;
        (CDNumber { coeffs: self.coeffs[..h].to_vec() }, CDNumber { coeffs: self.coeffs[h..].to_vec() })
    }

    /// Associator `(ab)c − a(bc)`.
    pub fn associator(a: &Self, b: &Self, c: &Self) -> Result<Self> {
        a.check_level(b)?;
        a.check_level(c)?;
        Ok(a.mul(b).mul(c) - a.mul(&b.mul(c)))
    }

    /// Two-sided inverse `x̄ / N(x)`; `None` when the norm vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        Some(self.conj().scale(&n))
    }

    /// Embeds into a higher level by zero padding.
    pub fn lift(&self, level: usize) -> Self {
        assert!(level >= self.level());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(1 << level, F::zero());
        CDNumber { coeffs }
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> CDNumber<G> {
        CDNumber { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<F: Scalar> Add for CDNumber<F> {
    type Output = CDNumber<F>;
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.dim(), rhs.dim(), "Cayley-Dickson level mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        self
    }
}

impl<F: Scalar> Add<&CDNumber<F>> for CDNumber<F> {
    type Output = CDNumber<F>;
    fn add(mut self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim(), "Cayley-Dickson level mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self
    }
}

impl<F: Scalar> Sub for CDNumber<F> {
    type Output = CDNumber<F>;
    fn sub(mut self, rhs: Self) -> Self {
        assert_eq!(self.dim(), rhs.dim(), "Cayley-Dickson level mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a -= b;
        }
        self
    }
}

impl<F: Scalar> Sub<&CDNumber<F>> for CDNumber<F> {
    type Output = CDNumber<F>;
    fn sub(mut self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim(), "Cayley-Dickson level mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self
    }
}

impl<F: Scalar> Neg for CDNumber<F> {
    type Output = CDNumber<F>;
    fn neg(self) -> Self {
        CDNumber { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<F: Scalar> fmt::Display for CDNumber<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})e{k}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
