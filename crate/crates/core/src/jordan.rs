//! Rank-3 Jordan algebras `H₃(K)` for `K ∈ {R, C, H, O}` and their
//! complexifications (obtained by taking the base ring to be [`Gaussian`]).
//!
//! An element stores its three diagonal scalars and the upper off-diagonal
//! entries `[X₂₃, X₁₃, X₁₂]`; the lower entries are their Cayley-Dickson
//! conjugates.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cayley_dickson::CDNumber;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::sampling;
use crate::scalar::{Gaussian, Rational, Scalar};
use crate::strata::StratumLabel;

/// The division algebra `K` of the off-diagonal entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DivisionAlgebra {
    R,
    C,
    H,
    O,
}

impl DivisionAlgebra {
    pub const ALL: [DivisionAlgebra; 4] = [Self::R, Self::C, Self::H, Self::O];

    /// Cayley-Dickson level of `K`.
    pub fn level(self) -> usize {
        match self {
            Self::R => 0,
            Self::C => 1,
            Self::H => 2,
            Self::O => 3,
        }
    }

    pub fn from_level(level: usize) -> Option<Self> {
        Self::ALL.get(level).copied()
    }

    /// Real dimension of `K`.
    pub fn dim(self) -> usize {
        1 << self.level()
    }

    /// Real dimension of `H₃(K)`: 6, 9, 15, 27.
    pub fn jordan_dim(self) -> usize {
        3 + 3 * self.dim()
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::R => "R",
            Self::C => "C",
            Self::H => "H",
            Self::O => "O",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "R" => Ok(Self::R),
            "C" => Ok(Self::C),
            "H" => Ok(Self::H),
            "O" => Ok(Self::O),
            _ => Err(Error::Unknown { kind: "algebra", name: s.to_string() }),
        }
    }
}

impl fmt::Display for DivisionAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coefficients of the generic characteristic polynomial
/// `λ³ − tr·λ² + σ₂·λ − det`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sigma<F> {
    pub tr: F,
    pub sigma2: F,
    pub det: F,
}

/// Hermitian 3×3 matrix over a Cayley-Dickson algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JordanElement<F> {
    algebra: DivisionAlgebra,
    diag: [F; 3],
    off: [CDNumber<F>; 3],
}

/// Slot of the upper entry `(i, j)`, `i < j`, in `[X₂₃, X₁₃, X₁₂]`.
fn off_slot(i: usize, j: usize) -> usize {
    3 - i - j
}

/// `Re(a b)`, computed without forming the full product.
fn re_mul<F: Scalar>(a: &CDNumber<F>, b: &CDNumber<F>) -> F {
    let mut acc = F::zero();
    for (k, (x, y)) in a.coeffs().iter().zip(b.coeffs()).enumerate() {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        if k == 0 {
            acc += x.clone() * y;
        } else {
            acc -= x.clone() * y;
        }
    }
    acc
}

fn half<F: Scalar>() -> F {
    F::from_rational(Rational::ONE / Rational::from(2))
}

/// Image of a base scalar in `Q(i)`.
pub fn to_gaussian<F: Scalar>(x: &F) -> Gaussian {
    Gaussian::new(x.re(), x.im())
}

impl<F: Scalar> JordanElement<F> {
    /// Builds an element, checking that the entries live at the algebra's level.
    pub fn new(algebra: DivisionAlgebra, diag: [F; 3], off: [CDNumber<F>; 3]) -> Result<Self> {
        for x in &off {
            if x.level() != algebra.level() {
                return Err(Error::LevelMismatch { left: algebra.level(), right: x.level() });
            }
        }
        Ok(JordanElement { algebra, diag, off })
    }

    pub fn zero(algebra: DivisionAlgebra) -> Self {
        let z = CDNumber::zero(algebra.level());
        JordanElement { algebra, diag: [F::zero(), F::zero(), F::zero()], off: [z.clone(), z.clone(), z] }
    }

    pub fn identity(algebra: DivisionAlgebra) -> Self {
        Self::diagonal(algebra, [F::one(), F::one(), F::one()])
    }

    pub fn diagonal(algebra: DivisionAlgebra, diag: [F; 3]) -> Self {
        let mut x = Self::zero(algebra);
        x.diag = diag;
        x
    }

    /// Diagonal matrix unit `E_ii`.
    pub fn idempotent(algebra: DivisionAlgebra, i: usize) -> Self {
        let mut x = Self::zero(algebra);
        x.diag[i] = F::one();
        x
    }

    /// Hermitian element with `X_ij = a` (and `X_ji = ā`), `i ≠ j`, zero elsewhere.
    pub fn off_diagonal(algebra: DivisionAlgebra, i: usize, j: usize, a: CDNumber<F>) -> Self {
        assert!(i != j && i < 3 && j < 3);
        let mut x = Self::zero(algebra);
        let a = if i < j { a } else { a.conj() };
        x.off[off_slot(i.min(j), i.max(j))] = a;
        x
    }

    pub fn algebra(&self) -> DivisionAlgebra {
        self.algebra
    }

    pub fn diag(&self) -> &[F; 3] {
        &self.diag
    }

    /// Upper off-diagonal entries `[X₂₃, X₁₃, X₁₂]`.
    pub fn off(&self) -> &[CDNumber<F>; 3] {
        &self.off
    }

    /// Matrix entry `X_ij` (0-based).
    pub fn entry(&self, i: usize, j: usize) -> CDNumber<F> {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => CDNumber::from_scalar(self.algebra.level(), self.diag[i].clone()),
            std::cmp::Ordering::Less => self.off[off_slot(i, j)].clone(),
            std::cmp::Ordering::Greater => self.off[off_slot(j, i)].conj(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(F::is_zero) && self.off.iter().all(CDNumber::is_zero)
    }

    fn check_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(self.algebra.to_string(), other.algebra.to_string()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_algebra(other)?;
        Ok(self.add(other))
    }

    /// Sum. Panics on an algebra mismatch (see [`JordanElement::try_add`]).
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        JordanElement {
            algebra: self.algebra,
            diag: std::array::from_fn(|i| self.diag[i].clone() + &other.diag[i]),
            off: std::array::from_fn(|i| self.off[i].clone() + &other.off[i]),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        JordanElement {
            algebra: self.algebra,
            diag: std::array::from_fn(|i| self.diag[i].clone() - &other.diag[i]),
            off: std::array::from_fn(|i| self.off[i].clone() - &other.off[i]),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn scale(&self, s: &F) -> Self {
        JordanElement {
            algebra: self.algebra,
            diag: std::array::from_fn(|i| self.diag[i].clone() * s),
            off: std::array::from_fn(|i| self.off[i].scale(s)),
        }
    }

    /// Jordan product `½(XY + YX)`.
    pub fn jordan_mul(&self, other: &Self) -> Result<Self> {
        self.check_algebra(other)?;
        Ok(self.circ(other))
    }

    /// Jordan product without the tag check.
    pub(crate) fn circ(&self, other: &Self) -> Self {
        let x: [[CDNumber<F>; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| self.entry(i, j)));
        let y: [[CDNumber<F>; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| other.entry(i, j)));
        // (XY + YX)_ii = 2 Σ_k Re(X_ik Y_ki)
        let diag = std::array::from_fn(|i| {
            let mut acc = F::zero();
            for k in 0..3 {
                acc += re_mul(&x[i][k], &y[k][i]);
            }
            acc
        });
        let h = half::<F>();
        let off = std::array::from_fn(|slot| {
            let (i, j) = match slot {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let mut acc = CDNumber::zero(self.algebra.level());
            for k in 0..3 {
                acc = acc + x[i][k].mul(&y[k][j]) + y[i][k].mul(&x[k][j]);
            }
            acc.scale(&h)
        });
        JordanElement { algebra: self.algebra, diag, off }
    }

    pub fn square(&self) -> Self {
        self.circ(self)
    }

    pub fn trace(&self) -> F {
        self.diag[0].clone() + &self.diag[1] + &self.diag[2]
    }

    /// `tr(X ∘ Y)`.
    pub fn trace_form(&self, other: &Self) -> Result<F> {
        self.check_algebra(other)?;
        Ok(self.trace_form_unchecked(other))
    }

    pub(crate) fn trace_form_unchecked(&self, other: &Self) -> F {
        let mut acc = F::zero();
        for i in 0..3 {
            acc += self.diag[i].clone() * &other.diag[i];
        }
        let mut offs = F::zero();
        for k in 0..3 {
            offs += self.off[k].inner(&other.off[k]);
        }
        acc + offs.clone() + offs
    }

    /// Freudenthal cubic norm
    /// `abc − a N(x) − b N(y) − c N(z) + 2 Re((z x) ȳ)` with
    /// `x = X₂₃, y = X₁₃, z = X₁₂`.
    pub fn det(&self) -> F {
        let [a, b, c] = &self.diag;
        let [x, y, z] = &self.off;
        let two = F::from_i64(2);
        a.clone() * b * c - a.clone() * x.norm() - b.clone() * y.norm() - c.clone() * z.norm()
            + two * re_mul(&z.mul(x), &y.conj())
    }

    pub fn sigma(&self) -> Sigma<F> {
        let tr = self.trace();
        let tr2 = self.square().trace();
        let sigma2 = (tr.clone() * &tr - tr2) * half::<F>();
        Sigma { tr, sigma2, det: self.det() }
    }

    /// Adjugate `X# = X² − tr(X) X + σ₂(X) I`.
    pub fn sharp(&self) -> Self {
        let sq = self.square();
        let tr = self.trace();
        let sigma2 = (tr.clone() * &tr - sq.trace()) * half::<F>();
        sq.sub(&self.scale(&tr)).add(&Self::identity(self.algebra).scale(&sigma2))
    }

    /// Jordan rank: 0, 1, 2 or 3 according to the vanishing of `X`, `X#`, `det X`.
    pub fn jordan_rank(&self) -> StratumLabel {
        let s = if self.is_zero() {
            0
        } else if self.sharp().is_zero() {
            1
        } else if self.det().is_zero() {
            2
        } else {
            3
        };
        StratumLabel::new(s).expect("rank is at most 3")
    }

    /// Quadratic representation `U_A(X) = 2A∘(A∘X) − (A∘A)∘X` with `self = A`.
    pub fn quadratic_rep(&self, x: &Self) -> Result<Self> {
        self.check_algebra(x)?;
        let ax = self.circ(x);
        let two = F::from_i64(2);
        Ok(self.circ(&ax).scale(&two).sub(&self.square().circ(x)))
    }

    /// Real dimension of the ambient algebra over the base ring.
    pub fn dim(&self) -> usize {
        self.algebra.jordan_dim()
    }

    /// Coordinates `[d₁, d₂, d₃, X₂₃…, X₁₃…, X₁₂…]` in the canonical basis.
    pub fn to_coords(&self) -> Vec<F> {
        let mut v: Vec<F> = self.diag.to_vec();
        for x in &self.off {
            v.extend(x.coeffs().iter().cloned());
        }
        v
    }

    pub fn from_coords(algebra: DivisionAlgebra, coords: &[F]) -> Result<Self> {
        if coords.len() != algebra.jordan_dim() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coordinates for H3({algebra}), got {}",
                algebra.jordan_dim(),
                coords.len()
            )));
        }
        let d = algebra.dim();
        let diag = std::array::from_fn(|i| coords[i].clone());
        let off =
            std::array::from_fn(|k| CDNumber::new(coords[3 + k * d..3 + (k + 1) * d].to_vec()).expect("valid level"));
        Ok(JordanElement { algebra, diag, off })
    }

    /// The `k`-th canonical basis element.
    pub fn basis(algebra: DivisionAlgebra, k: usize) -> Self {
        let mut c = vec![F::zero(); algebra.jordan_dim()];
        c[k] = F::one();
        Self::from_coords(algebra, &c).expect("valid dimension")
    }

    /// Random element with small integer coefficients.
    pub fn random<R: Rng + ?Sized>(algebra: DivisionAlgebra, rng: &mut R, bound: i64) -> Self {
        let coords = sampling::vector(rng, algebra.jordan_dim(), bound);
        Self::from_coords(algebra, &coords).expect("valid dimension")
    }

    /// Image in the complexification.
    pub fn complexify(&self) -> JordanElement<Gaussian> {
        JordanElement {
            algebra: self.algebra,
            diag: std::array::from_fn(|i| to_gaussian(&self.diag[i])),
            off: std::array::from_fn(|k| self.off[k].map(to_gaussian)),
        }
    }

    /// Entrywise map of the scalars.
    pub fn map_scalars<G: Scalar>(&self, f: impl Fn(&F) -> G) -> JordanElement<G> {
        JordanElement {
            algebra: self.algebra,
            diag: std::array::from_fn(|i| f(&self.diag[i])),
            off: std::array::from_fn(|k| self.off[k].map(&f)),
        }
    }

    /// Matrix model of the complexification: the symmetric 3×3 matrix (K = R),
    /// the 3×3 matrix with `a + b e₁ ↦ a + 𝔦b` (K = C), or the skew 6×6 matrix
    /// of [`JordanElement::to_skew6`] (K = H). Not available for K = O.
    pub fn matrix_model(&self) -> Result<Matrix<Gaussian>> {
        match self.algebra {
            DivisionAlgebra::R | DivisionAlgebra::C => Ok(Matrix::from_fn(3, 3, |i, j| {
                let e = self.entry(i, j);
                let re = to_gaussian(e.coeff(0));
                if e.dim() == 1 {
                    re
                } else {
                    re + to_gaussian(e.coeff(1)).mul_i()
                }
            })),
            DivisionAlgebra::H => Ok(self.to_skew6()),
            DivisionAlgebra::O => Err(Error::AlgebraMismatch("O".into(), "R|C|H".into())),
        }
    }

    /// Jordan rank predicted by the matrix model: the matrix rank for
    /// K = R, C and half of it for K = H.
    pub fn matrix_model_rank(&self) -> Result<usize> {
        let m = self.matrix_model()?;
        Ok(match self.algebra {
            DivisionAlgebra::H => m.rank() / 2,
            _ => m.rank(),
        })
    }

    /// Skew 6×6 model of a quaternionic element: `χ(X)·J₆`, where `χ` sends
    /// `a + b e₁ + c e₂ + d e₃` to `[[a + 𝔦b, c + 𝔦d], [−c + 𝔦d, a − 𝔦b]]`
    /// blockwise and `J₆ = diag(J, J, J)`, `J = [[0, 1], [−1, 0]]`.
    ///
    /// # Panics
    /// If the algebra is not `H`.
    pub fn to_skew6(&self) -> Matrix<Gaussian> {
        assert_eq!(self.algebra, DivisionAlgebra::H, "skew model needs H");
        let mut chi = Matrix::<Gaussian>::zeros(6, 6);
        for p in 0..3 {
            for q in 0..3 {
                let b = quaternion_block(&self.entry(p, q));
                for r in 0..2 {
                    for c in 0..2 {
                        chi[(2 * p + r, 2 * q + c)] = b[r][c].clone();
                    }
                }
            }
        }
        chi.mul(&j6())
    }
}

impl JordanElement<Gaussian> {
    /// Inverse of [`JordanElement::matrix_model`] for the complexified
    /// algebras R (symmetric input), C (any 3×3) and H (skew 6×6).
    pub fn from_matrix_model(algebra: DivisionAlgebra, m: &Matrix<Gaussian>) -> Result<Self> {
        match algebra {
            DivisionAlgebra::R => {
                if m.nrows() != 3 || !m.is_symmetric() {
                    return Err(Error::DimensionMismatch("expected a symmetric 3x3 matrix".into()));
                }
                let diag = std::array::from_fn(|i| m[(i, i)].clone());
                let off = [(1, 2), (0, 2), (0, 1)].map(|(i, j)| CDNumber::from_scalar(0, m[(i, j)].clone()));
                Self::new(algebra, diag, off)
            }
            DivisionAlgebra::C => {
                if m.nrows() != 3 || m.ncols() != 3 {
                    return Err(Error::DimensionMismatch("expected a 3x3 matrix".into()));
                }
                let h = half::<Gaussian>();
                let diag = std::array::from_fn(|i| m[(i, i)].clone());
                let off = [(1, 2), (0, 2), (0, 1)].map(|(i, j)| {
                    let a = (m[(i, j)].clone() + &m[(j, i)]) * &h;
                    // (M_ij − M_ji)/(2𝔦) = −𝔦 (M_ij − M_ji)/2
                    let b = -((m[(i, j)].clone() - &m[(j, i)]) * &h).mul_i();
                    CDNumber::new(vec![a, b]).expect("level 1")
                });
                Self::new(algebra, diag, off)
            }
            DivisionAlgebra::H => Self::from_skew6(m),
            DivisionAlgebra::O => Err(Error::AlgebraMismatch("O".into(), "R|C|H".into())),
        }
    }

    /// Inverse of [`JordanElement::to_skew6`]; fails on non-skew input.
    pub fn from_skew6(s: &Matrix<Gaussian>) -> Result<Self> {
        if s.nrows() != 6 || s.ncols() != 6 {
            return Err(Error::DimensionMismatch("expected a 6x6 matrix".into()));
        }
        if !s.is_skew() {
            return Err(Error::NotSkew);
        }
        // J₆⁻¹ = −J₆
        let m = s.mul(&j6()).neg();
        let h = half::<Gaussian>();
        let block_to_q = |p: usize, q: usize| {
            let b = |r: usize, c: usize| m[(2 * p + r, 2 * q + c)].clone();
            let a = (b(0, 0) + b(1, 1)) * &h;
            let bi = -((b(0, 0) - b(1, 1)) * &h).mul_i();
            let c = (b(0, 1) - b(1, 0)) * &h;
            let d = -((b(0, 1) + b(1, 0)) * &h).mul_i();
            CDNumber::new(vec![a, bi, c, d]).expect("level 2")
        };
        let diag = std::array::from_fn(|p| block_to_q(p, p).real());
        let off = [(1, 2), (0, 2), (0, 1)].map(|(p, q)| block_to_q(p, q));
        Self::new(DivisionAlgebra::H, diag, off)
    }
}

fn quaternion_block<F: Scalar>(x: &CDNumber<F>) -> [[Gaussian; 2]; 2] {
    let g = |k: usize| to_gaussian(x.coeff(k));
    let (a, b, c, d) = (g(0), g(1), g(2), g(3));
    [[a.clone() + b.mul_i(), c.clone() + d.mul_i()], [-c + d.mul_i(), a - b.mul_i()]]
}

/// `J₆ = diag(J, J, J)` with `J = [[0, 1], [−1, 0]]`.
pub fn j6() -> Matrix<Gaussian> {
    let mut j = Matrix::zeros(6, 6);
    for b in 0..3 {
        j[(2 * b, 2 * b + 1)] = Gaussian::one();
        j[(2 * b + 1, 2 * b)] = -Gaussian::one();
    }
    j
}

impl<F: Scalar> fmt::Display for JordanElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..3 {
            let row: Vec<String> = (0..3).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::rng_for;

    type J = JordanElement<Rational>;

    fn cofactor_det(m: &Matrix<Gaussian>) -> Gaussian {
        let n = m.nrows();
        if n == 1 {
            return m[(0, 0)].clone();
        }
        let mut acc = Gaussian::zero();
        for j in 0..n {
            let minor = Matrix::from_fn(n - 1, n - 1, |r, c| m[(r + 1, if c < j { c } else { c + 1 })].clone());
            let t = m[(0, j)].clone() * cofactor_det(&minor);
            if j % 2 == 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        acc
    }

    #[test]
    fn unit_and_idempotents() {
        let mut rng = rng_for(1, "unit");
        for alg in DivisionAlgebra::ALL {
            let x = J::random(alg, &mut rng, 3);
            let i = J::identity(alg);
            assert_eq!(x.jordan_mul(&i).unwrap(), x);
            let e = J::idempotent(alg, 0);
            assert_eq!(e.square(), e);
            assert_eq!(i.trace(), Rational::from(3));
            assert!(J::idempotent(alg, 0).trace_form(&J::idempotent(alg, 1)).unwrap().is_zero());
        }
    }

    #[test]
    fn algebra_mismatch_is_an_error() {
        let a = J::identity(DivisionAlgebra::R);
        let b = J::identity(DivisionAlgebra::O);
        assert!(matches!(a.jordan_mul(&b), Err(Error::AlgebraMismatch(..))));
    }

    #[test]
    fn small_ranks_and_dets() {
        let alg = DivisionAlgebra::O;
        let d = |a: i64, b: i64, c: i64| J::diagonal(alg, [a, b, c].map(Rational::from));
        assert_eq!(d(1, 0, 0).jordan_rank().get(), 1);
        assert_eq!(d(1, 1, 0).jordan_rank().get(), 2);
        assert_eq!(d(1, 1, 1).jordan_rank().get(), 3);
        assert_eq!(J::zero(alg).jordan_rank().get(), 0);
        assert_eq!(d(2, 3, 5).det(), Rational::from(30));
        assert_eq!(J::identity(alg).sharp(), J::identity(alg));
        assert!(J::idempotent(alg, 0).sharp().is_zero());
        assert_eq!(d(1, 1, 0).sharp(), J::idempotent(alg, 2));
    }

    #[test]
    fn det_matches_classical_determinant() {
        let mut rng = rng_for(2, "det");
        for alg in [DivisionAlgebra::R, DivisionAlgebra::C] {
            for _ in 0..50 {
                let x = J::random(alg, &mut rng, 4);
                let m = x.matrix_model().unwrap();
                assert_eq!(to_gaussian(&x.det()), cofactor_det(&m));
                assert_eq!(to_gaussian(&x.det()), m.det());
            }
        }
    }

    #[test]
    fn adjugate_identity_and_cayley_hamilton() {
        let mut rng = rng_for(3, "sharp");
        for alg in DivisionAlgebra::ALL {
            for _ in 0..20 {
                let x = JordanElement::<Gaussian>::random(alg, &mut rng, 3);
                let det = x.det();
                assert_eq!(x.circ(&x.sharp()), JordanElement::identity(alg).scale(&det));
                let s = x.sigma();
                let x2 = x.square();
                let x3 = x2.circ(&x);
                let ch =
                    x3.sub(&x2.scale(&s.tr)).add(&x.scale(&s.sigma2)).sub(&JordanElement::identity(alg).scale(&s.det));
                assert!(ch.is_zero());
            }
        }
    }

    #[test]
    fn jordan_identity_and_commutativity() {
        let mut rng = rng_for(4, "jordan");
        for alg in DivisionAlgebra::ALL {
            for _ in 0..10 {
                let x = J::random(alg, &mut rng, 3);
                let y = J::random(alg, &mut rng, 3);
                assert_eq!(x.circ(&y), y.circ(&x));
                let x2 = x.square();
                assert_eq!(x2.circ(&y).circ(&x), x2.circ(&y.circ(&x)));
            }
        }
    }

    #[test]
    fn quadratic_representation_scales_det() {
        let mut rng = rng_for(5, "uax");
        for alg in DivisionAlgebra::ALL {
            for _ in 0..10 {
                let a = J::random(alg, &mut rng, 2);
                let x = J::random(alg, &mut rng, 2);
                let u = a.quadratic_rep(&x).unwrap();
                assert_eq!(u.det(), a.det() * a.det() * x.det());
            }
        }
    }

    #[test]
    fn quaternion_block_map_is_multiplicative() {
        for a in 0..4 {
            for b in 0..4 {
                let ea = CDNumber::<Rational>::unit(2, a);
                let eb = CDNumber::<Rational>::unit(2, b);
                let lhs = quaternion_block(&ea.mul(&eb));
                let (x, y) = (quaternion_block(&ea), quaternion_block(&eb));
                for r in 0..2 {
                    for c in 0..2 {
                        let v = x[r][0].clone() * &y[0][c] + x[r][1].clone() * &y[1][c];
                        assert_eq!(lhs[r][c], v);
                    }
                }
            }
        }
    }

    #[test]
    fn skew_model_roundtrip_rank_and_pfaffian() {
        let mut rng = rng_for(6, "skew");
        for _ in 0..30 {
            let x = JordanElement::<Gaussian>::random(DivisionAlgebra::H, &mut rng, 3);
            let s = x.to_skew6();
            assert!(s.is_skew());
            assert_eq!(JordanElement::from_skew6(&s).unwrap(), x);
            assert_eq!(s.pfaffian().unwrap(), x.det());
        }
        let s = J::identity(DivisionAlgebra::H).to_skew6();
        assert_eq!(s, j6());
        assert!(JordanElement::from_skew6(&Matrix::identity(6)).is_err());
    }

    #[test]
    fn complex_model_roundtrip() {
        let mut rng = rng_for(7, "cmodel");
        for _ in 0..20 {
            let m = Matrix::from_fn(3, 3, |_, _| sampling::scalar::<Gaussian, _>(&mut rng, 3));
            let x = JordanElement::from_matrix_model(DivisionAlgebra::C, &m).unwrap();
            assert_eq!(x.matrix_model().unwrap(), m);
            let y = JordanElement::<Gaussian>::random(DivisionAlgebra::C, &mut rng, 3);
            // The model map is a Jordan-algebra isomorphism.
            let (mx, my) = (x.matrix_model().unwrap(), y.matrix_model().unwrap());
            let half = Gaussian::new(Rational::ONE / Rational::from(2), Rational::ZERO);
            let prod = mx.mul(&my).add(&my.mul(&mx)).scale(&half);
            assert_eq!(x.circ(&y).matrix_model().unwrap(), prod);
        }
    }
}
