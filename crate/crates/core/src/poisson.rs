//! Lie-Poisson structures on `g` (identified with `g*` by an invariant form)
//! and the rank of the Poisson bivector as a stratum detector.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rand::Rng;

use crate::error::{Error, Result};
use crate::kmatrix::KMatrix;
use crate::linalg::Matrix;
use crate::reduction::{pairing, DualPairCase, V_DIM};
use crate::sampling;
use crate::scalar::Rational;
use crate::tkk::TkkAlgebra;

/// A finite-dimensional real Lie algebra in coordinates over a fixed basis,
/// with a nondegenerate invariant symmetric form.
pub trait LieAlgebra: Send + Sync {
    fn dim(&self) -> usize;

    fn label(&self) -> String;

    /// Coordinates of `[x, y]`.
    fn bracket_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational>;

    /// Gram matrix of the invariant form on the basis.
    fn form_gram(&self) -> Matrix<Rational>;

    /// Matrix of `ad(x)`: column `j` holds the coordinates of `[x, e_j]`.
    fn ad_matrix(&self, x: &[Rational]) -> Matrix<Rational> {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.bracket_coords(x, &unit(n, j))).collect();
        Matrix::from_fn(n, n, |r, c| cols[c][r].clone())
    }
}

fn unit(n: usize, j: usize) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; n];
    v[j] = Rational::ONE;
    v
}

impl LieAlgebra for TkkAlgebra {
    fn dim(&self) -> usize {
        TkkAlgebra::dim(self)
    }

    fn label(&self) -> String {
        self.case().name().to_string()
    }

    fn bracket_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let b = self.bracket(&self.from_coords(x), &self.from_coords(y)).expect("same algebra");
        self.coords(&b)
    }

    fn form_gram(&self) -> Matrix<Rational> {
        TkkAlgebra::form_gram(self).clone()
    }

    fn ad_matrix(&self, x: &[Rational]) -> Matrix<Rational> {
        TkkAlgebra::ad_matrix(self, &self.from_coords(x))
    }
}

/// The Lie algebra `g = u(V, B)` of a dual pair, with basis
/// [`DualPairCase::g_basis`] and the half-trace form `½ Re tr(AB)`.
pub struct ClassicalAlgebra {
    case: DualPairCase,
    basis: Vec<KMatrix>,
}

impl ClassicalAlgebra {
    pub fn new(case: DualPairCase) -> Self {
        ClassicalAlgebra { case, basis: case.g_basis() }
    }

    pub fn case(&self) -> DualPairCase {
        self.case
    }

    pub fn basis(&self) -> &[KMatrix] {
        &self.basis
    }

    pub fn to_matrix(&self, c: &[Rational]) -> KMatrix {
        assert_eq!(c.len(), self.basis.len());
        let zero = KMatrix::zeros(V_DIM, V_DIM, self.case.level());
        c.iter().zip(&self.basis).fold(zero, |acc, (x, b)| if x.is_zero() { acc } else { acc.add(&b.scale_real(x)) })
    }

    /// Coordinates of `η ∈ g`; the basis element `−M·H` has coordinate read
    /// off from the hermitian matrix `H = Mη`.
    pub fn coords(&self, eta: &KMatrix) -> Result<Vec<Rational>> {
        if !self.case.in_g(eta) {
            return Err(Error::CaseMismatch(self.case.name().into(), "matrix outside g".into()));
        }
        let h = self.case.form_matrix().mul(eta);
        let mut out = Vec::with_capacity(self.basis.len());
        for a in 0..V_DIM {
            out.push(h[(a, a)].real());
            for b in a + 1..V_DIM {
                out.extend(h[(a, b)].coeffs().iter().cloned());
            }
        }
        Ok(out)
    }
}

impl LieAlgebra for ClassicalAlgebra {
    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn label(&self) -> String {
        format!("g({})", self.case.name())
    }

    fn bracket_coords(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let (a, b) = (self.to_matrix(x), self.to_matrix(y));
        self.coords(&a.mul(&b).sub(&b.mul(&a))).expect("g is closed under brackets")
    }

    fn form_gram(&self) -> Matrix<Rational> {
        let n = self.basis.len();
        Matrix::from_fn(n, n, |i, j| pairing(&self.basis[i], &self.basis[j]))
    }

    fn ad_matrix(&self, x: &[Rational]) -> Matrix<Rational> {
        let a = self.to_matrix(x);
        let n = self.basis.len();
        let cols: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .map(|b| self.coords(&a.mul(b).sub(&b.mul(&a))).expect("g is closed under brackets"))
            .collect();
        Matrix::from_fn(n, n, |r, c| cols[c][r].clone())
    }
}

/// Monomials are sorted multisets of variable indices.
type Monomial = Vec<usize>;

/// Polynomial with exact coefficients in the coordinates of a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyFn {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl PolyFn {
    pub fn zero(nvars: usize) -> Self {
        PolyFn { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.push(Vec::new(), c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut p = Self::zero(nvars);
        p.push(vec![i], Rational::ONE);
        p
    }

    /// `x ↦ Σ c_i x_i`.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let mut p = Self::zero(coeffs.len());
        for (i, c) in coeffs.iter().enumerate() {
            p.push(vec![i], c.clone());
        }
        p
    }

    /// `x ↦ xᵀ Q x`.
    pub fn quadratic(q: &Matrix<Rational>) -> Self {
        let n = q.nrows();
        let mut p = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut m = vec![i, j];
                m.sort_unstable();
                p.push(m, q[(i, j)].clone());
            }
        }
        p
    }

    /// Random polynomial with up to `terms` monomials of degree `≤ degree`.
    pub fn random<R: Rng + ?Sized>(nvars: usize, rng: &mut R, terms: usize, degree: usize) -> Self {
        let mut p = Self::zero(nvars);
        for _ in 0..terms {
            let d = rng.gen_range(0..=degree);
            let mut m: Monomial = (0..d).map(|_| rng.gen_range(0..nvars)).collect();
            m.sort_unstable();
            p.push(m, Rational::from(sampling::small_int(rng, 3)));
        }
        p
    }

    fn push(&mut self, m: Monomial, c: Rational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Rational)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.push(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.nvars);
        if !s.is_zero() {
            for (m, c) in &self.terms {
                out.terms.insert(m.clone(), c.clone() * s);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                m.extend_from_slice(m2);
                m.sort_unstable();
                out.push(m, c1.clone() * c2);
            }
        }
        out
    }

    /// `∂/∂x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let k = m.iter().filter(|&&v| v == i).count();
            if k > 0 {
                let mut rest = m.clone();
                let pos = rest.iter().position(|&v| v == i).expect("present");
                rest.remove(pos);
                out.push(rest, c.clone() * Rational::from(k as i64));
            }
        }
        out
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.nvars);
        let mut acc = Rational::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &v in m {
                t *= &x[v];
            }
            acc += t;
        }
        acc
    }
}

impl fmt::Display for PolyFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for v in m {
                write!(f, "·x{v}")?;
            }
        }
        Ok(())
    }
}

/// Lie-Poisson structure of a Lie algebra: `{f, g}(x) = β(x, [∇f, ∇g])`
/// where `∇` is the gradient with respect to the invariant form `β`.
pub struct LiePoisson<'a, L: LieAlgebra + ?Sized> {
    alg: &'a L,
    gram: Matrix<Rational>,
    gram_inv: Matrix<Rational>,
    /// `λ[i][j]` = coefficients of the linear function `x ↦ β(x, [e_i, e_j])`.
    lambda: OnceLock<Vec<Vec<Vec<Rational>>>>,
}

impl<'a, L: LieAlgebra + ?Sized> LiePoisson<'a, L> {
    pub fn new(alg: &'a L) -> Result<Self> {
        let gram = alg.form_gram();
        let gram_inv = gram.inverse().ok_or_else(|| Error::Degenerate("invariant form is degenerate".into()))?;
        Ok(LiePoisson { alg, gram, gram_inv, lambda: OnceLock::new() })
    }

    pub fn algebra(&self) -> &L {
        self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    fn check(&self, f: &PolyFn) -> Result<()> {
        if f.nvars != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "polynomial in {} variables on an algebra of dimension {}",
                f.nvars,
                self.dim()
            )));
        }
        Ok(())
    }

    fn lambda(&self) -> &Vec<Vec<Vec<Rational>>> {
        self.lambda.get_or_init(|| {
            let n = self.dim();
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let c = self.alg.bracket_coords(&unit(n, i), &unit(n, j));
                            self.gram.mul_vec(&c)
                        })
                        .collect()
                })
                .collect()
        })
    }

    /// Coordinates of the form-dual vector: `β(a, x) = Σ (K a)_k x_k`.
    pub fn linear_function(&self, a: &[Rational]) -> PolyFn {
        PolyFn::linear(&self.gram.mul_vec(a))
    }

    /// The quadratic Casimir `x ↦ β(x, x)`.
    pub fn casimir(&self) -> PolyFn {
        PolyFn::quadratic(&self.gram)
    }

    /// `∇f` as a vector of polynomials: `K⁻¹ ∂f`.
    pub fn gradient(&self, f: &PolyFn) -> Vec<PolyFn> {
        let n = self.dim();
        let partials: Vec<PolyFn> = (0..n).map(|i| f.derivative(i)).collect();
        (0..n)
            .map(|i| {
                let mut acc = PolyFn::zero(n);
                for (k, p) in partials.iter().enumerate() {
                    let c = &self.gram_inv[(i, k)];
                    if !c.is_zero() && !p.is_zero() {
                        acc = acc.add(&p.scale(c));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn bracket(&self, f: &PolyFn, g: &PolyFn) -> Result<PolyFn> {
        self.check(f)?;
        self.check(g)?;
        let n = self.dim();
        let (gf, gg) = (self.gradient(f), self.gradient(g));
        let lambda = self.lambda();
        let mut out = PolyFn::zero(n);
        for (i, fi) in gf.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, gj) in gg.iter().enumerate() {
                if gj.is_zero() || lambda[i][j].iter().all(Rational::is_zero) {
                    continue;
                }
                let lin = PolyFn::linear(&lambda[i][j]);
                out = out.add(&fi.mul(gj).mul(&lin));
            }
        }
        Ok(out)
    }

    /// `Λ_ij(x) = β(x, [e_i, e_j]) = β([x, e_i], e_j)`, i.e. `ad(x)ᵀ K`.
    pub fn bivector_at(&self, x: &[Rational]) -> Result<Matrix<Rational>> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "point with {} coordinates on an algebra of dimension {}",
                x.len(),
                self.dim()
            )));
        }
        Ok(self.alg.ad_matrix(x).transpose().mul(&self.gram))
    }

    /// Rank of the Poisson bivector at `x`, the dimension of the adjoint orbit.
    pub fn rank_at(&self, x: &[Rational]) -> Result<usize> {
        Ok(self.bivector_at(x)?.rank())
    }
}
