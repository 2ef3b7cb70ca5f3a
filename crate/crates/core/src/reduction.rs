//! Momentum maps of the classical dual pairs acting on `W(s) = Hom_K(K^s, V)`,
//! zero-level sampling, reduced points and the oscillator picture.
//!
//! Conventions (all with `n = 6`, split rank `r = 3`):
//!
//! | case          | K | V    | B(u, v)          | J_V       | G         | H      |
//! |---------------|---|------|------------------|-----------|-----------|--------|
//! | real          | R | R⁶   | uᵀ Ω v           | −Ω        | Sp(3, R)  | O(s)   |
//! | complex       | C | C⁶   | u* e₁ diag(I,−I) v | −e₁ diag(I,−I) | U(3,3) | U(s) |
//! | quaternionic  | H | H⁶   | u* e₂ v          | −e₂       | O*(12)    | Sp(s)  |
//!
//! In each case `B(u, v) = u* M v` with `M* = −M`, `M² = −I`, and
//! `B(u, J_V v) = u* v` is positive. Then `α† = −α* M`,
//! `μ_H(α) = −α†α = α* M α` and `μ_G(α) = αα† = −α α* M`, the symplectic form
//! is `ω(α, β) = Re tr(α* M β)` and both Lie algebras are paired with
//! themselves by `½ Re tr(AB)`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cayley_dickson::CDNumber;
use crate::error::{Error, Result};
use crate::jordan::{DivisionAlgebra, JordanElement};
use crate::kmatrix::KMatrix;
use crate::linalg::Matrix;
use crate::sampling;
use crate::scalar::{ratio, Gaussian, Rational, Scalar};
use crate::strata::StratumLabel;

type K = CDNumber<Rational>;

/// Dimension of `V` over `K` in all three cases.
pub const V_DIM: usize = 6;
/// Split rank of `G`.
pub const SPLIT_RANK: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DualPairCase {
    Real,
    Complex,
    Quaternionic,
}

impl DualPairCase {
    pub const ALL: [DualPairCase; 3] = [Self::Real, Self::Complex, Self::Quaternionic];

    pub fn level(self) -> usize {
        match self {
            Self::Real => 0,
            Self::Complex => 1,
            Self::Quaternionic => 2,
        }
    }

    /// Real dimension of `K`.
    pub fn k_dim(self) -> usize {
        1 << self.level()
    }

    pub fn jordan_algebra(self) -> DivisionAlgebra {
        DivisionAlgebra::from_level(self.level()).expect("level ≤ 2")
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Real => "real",
            Self::Complex => "complex",
            Self::Quaternionic => "quaternionic",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "dual-pair case", name: s.into() })
    }

    /// The matrix `M` with `B(u, v) = u* M v`.
    pub fn form_matrix(self) -> KMatrix {
        let l = self.level();
        match self {
            Self::Real => KMatrix::from_fn(6, 6, l, |i, j| {
                if j == i + 3 {
                    K::one(l)
                } else if i == j + 3 {
                    -K::one(l)
                } else {
                    K::zero(l)
                }
            }),
            Self::Complex => KMatrix::from_fn(6, 6, l, |i, j| match (i == j, i < 3) {
                (true, true) => K::unit(l, 1),
                (true, false) => -K::unit(l, 1),
                _ => K::zero(l),
            }),
            Self::Quaternionic => KMatrix::scalar(6, K::unit(l, 2)),
        }
    }

    /// The complex structure `J_V = −M`; `½ J_V` is the H-element of `g`.
    pub fn complex_structure(self) -> KMatrix {
        self.form_matrix().neg()
    }

    /// Basis of `h = u(s)` over `K`: skew-hermitian `s×s` matrices.
    pub fn h_basis(self, s: usize) -> Vec<KMatrix> {
        let l = self.level();
        let d = self.k_dim();
        let mut out = Vec::new();
        for a in 0..s {
            for t in 1..d {
                let mut m = KMatrix::zeros(s, s, l);
                m[(a, a)] = K::unit(l, t);
                out.push(m);
            }
            for b in a + 1..s {
                for t in 0..d {
                    let q = K::unit(l, t);
                    let mut m = KMatrix::zeros(s, s, l);
                    m[(a, b)] = q.clone();
                    m[(b, a)] = -q.conj();
                    out.push(m);
                }
            }
        }
        out
    }

    /// Basis of `g = u(V, B)`: `−M·S` for `S` running over a basis of
    /// hermitian `6×6` matrices.
    pub fn g_basis(self) -> Vec<KMatrix> {
        let l = self.level();
        let d = self.k_dim();
        let minus_m = self.form_matrix().neg();
        let mut out = Vec::new();
        for a in 0..V_DIM {
            let mut h = KMatrix::zeros(V_DIM, V_DIM, l);
            h[(a, a)] = K::one(l);
            out.push(minus_m.mul(&h));
            for b in a + 1..V_DIM {
                for t in 0..d {
                    let q = K::unit(l, t);
                    let mut h = KMatrix::zeros(V_DIM, V_DIM, l);
                    h[(a, b)] = q.clone();
                    h[(b, a)] = q.conj();
                    out.push(minus_m.mul(&h));
                }
            }
        }
        out
    }

    /// Whether `ξ` lies in `h`, i.e. `ξ* = −ξ`.
    pub fn in_h(self, xi: &KMatrix) -> bool {
        xi.level() == self.level() && xi.adjoint() == xi.neg()
    }

    /// Whether `η` lies in `g`, i.e. `η* M + M η = 0`.
    pub fn in_g(self, eta: &KMatrix) -> bool {
        let m = self.form_matrix();
        eta.level() == self.level() && eta.nrows() == V_DIM && eta.adjoint().mul(&m).add(&m.mul(eta)).is_zero()
    }

    /// Random element of `h` with small integer coordinates.
    pub fn random_h<R: Rng + ?Sized>(self, s: usize, rng: &mut R, bound: i64) -> KMatrix {
        combine(&self.h_basis(s), rng, bound, KMatrix::zeros(s, s, self.level()))
    }

    /// Random element of `g` with small integer coordinates.
    pub fn random_g<R: Rng + ?Sized>(self, rng: &mut R, bound: i64) -> KMatrix {
        combine(&self.g_basis(), rng, bound, KMatrix::zeros(V_DIM, V_DIM, self.level()))
    }
}

impl fmt::Display for DualPairCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn combine<R: Rng + ?Sized>(basis: &[KMatrix], rng: &mut R, bound: i64, zero: KMatrix) -> KMatrix {
    basis.iter().fold(zero, |acc, b| {
        let c = Rational::from(sampling::small_int(rng, bound));
        if c.is_zero() {
            acc
        } else {
            acc.add(&b.scale_real(&c))
        }
    })
}

/// Cayley transform `(I + X)(I − X)⁻¹`, mapping `h` and `g` into `H` and `G`.
pub fn cayley(x: &KMatrix) -> Option<KMatrix> {
    let id = KMatrix::identity(x.nrows(), x.level());
    Some(id.add(x).mul(&id.sub(x).inverse()?))
}

/// Random group element as the Cayley transform of a random Lie algebra element.
fn random_group<R: Rng + ?Sized>(rng: &mut R, mut gen: impl FnMut(&mut R) -> KMatrix) -> (KMatrix, KMatrix) {
    loop {
        let x = gen(rng);
        // The inverse of cay(X) is cay(−X).
        if let (Some(y), Some(inv)) = (cayley(&x), cayley(&x.neg())) {
            return (y, inv);
        }
    }
}

/// Random `x ∈ H(s)` together with its inverse.
pub fn random_h_group<R: Rng + ?Sized>(case: DualPairCase, s: usize, rng: &mut R) -> (KMatrix, KMatrix) {
    random_group(rng, |r| case.random_h(s, r, 1))
}

/// Random `y ∈ G` together with its inverse.
pub fn random_g_group<R: Rng + ?Sized>(case: DualPairCase, rng: &mut R) -> (KMatrix, KMatrix) {
    // Sparse generators keep the entries of y small.
    random_group(rng, |r| {
        let basis = case.g_basis();
        let mut acc = KMatrix::zeros(V_DIM, V_DIM, case.level());
        for _ in 0..3 {
            let b = &basis[r.gen_range(0..basis.len())];
            acc = acc.add(&b.scale_real(&Rational::from(sampling::small_int(r, 1))));
        }
        acc
    })
}

/// A point `α ∈ W(s)`, stored as a `6×s` matrix over `K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WMap {
    case: DualPairCase,
    matrix: KMatrix,
}

impl WMap {
    pub fn new(case: DualPairCase, matrix: KMatrix) -> Result<Self> {
        if matrix.level() != case.level() {
            return Err(Error::CaseMismatch(case.name().into(), format!("entries of level {}", matrix.level())));
        }
        if matrix.nrows() != V_DIM || matrix.ncols() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "expected a {V_DIM}×s matrix with s ≥ 1, got {}×{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        Ok(WMap { case, matrix })
    }

    pub fn zero(case: DualPairCase, s: usize) -> Self {
        Self::new(case, KMatrix::zeros(V_DIM, s, case.level())).expect("shape")
    }

    pub fn random<R: Rng + ?Sized>(case: DualPairCase, s: usize, rng: &mut R, bound: i64) -> Self {
        Self::new(case, KMatrix::random(V_DIM, s, case.level(), rng, bound)).expect("shape")
    }

    pub fn case(&self) -> DualPairCase {
        self.case
    }

    pub fn s(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn matrix(&self) -> &KMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> KMatrix {
        self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Real dimension of `W(s)`.
    pub fn real_dim(&self) -> usize {
        V_DIM * self.s() * self.case.k_dim()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.case != other.case {
            return Err(Error::CaseMismatch(self.case.name().into(), other.case.name().into()));
        }
        if self.s() != other.s() {
            return Err(Error::DimensionMismatch(format!("s = {} vs {}", self.s(), other.s())));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(WMap { case: self.case, matrix: self.matrix.add(&other.matrix) })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(WMap { case: self.case, matrix: self.matrix.sub(&other.matrix) })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        WMap { case: self.case, matrix: self.matrix.scale_real(c) }
    }

    /// Left action of `G`: `α ↦ yα`.
    pub fn act_g(&self, y: &KMatrix) -> Self {
        WMap { case: self.case, matrix: y.mul(&self.matrix) }
    }

    /// Right action of `H`: `α ↦ α x⁻¹` (pass `x⁻¹`).
    pub fn act_h_inv(&self, x_inv: &KMatrix) -> Self {
        WMap { case: self.case, matrix: self.matrix.mul(x_inv) }
    }

    /// Infinitesimal `h`-action `ξ·α = −αξ`.
    pub fn h_vector(&self, xi: &KMatrix) -> Self {
        WMap { case: self.case, matrix: self.matrix.mul(xi).neg() }
    }

    /// Infinitesimal `g`-action `η·α = ηα`.
    pub fn g_vector(&self, eta: &KMatrix) -> Self {
        WMap { case: self.case, matrix: eta.mul(&self.matrix) }
    }

    /// Injection `W(s) → W(s')`, `s' ≥ s`, by zero columns.
    pub fn pad(&self, s: usize) -> Self {
        WMap { case: self.case, matrix: self.matrix.pad_cols(s) }
    }

    /// Real basis of `W(s)`.
    pub fn basis(case: DualPairCase, s: usize) -> Vec<WMap> {
        let l = case.level();
        let mut out = Vec::new();
        for i in 0..V_DIM {
            for a in 0..s {
                for t in 0..case.k_dim() {
                    let mut m = KMatrix::zeros(V_DIM, s, l);
                    m[(i, a)] = K::unit(l, t);
                    out.push(WMap { case, matrix: m });
                }
            }
        }
        out
    }
}

/// `B(u, v) = u* M v` for column vectors `u, v ∈ V`.
pub fn form_b(case: DualPairCase, u: &KMatrix, v: &KMatrix) -> K {
    u.adjoint().mul(&case.form_matrix()).mul(v)[(0, 0)].clone()
}

/// `α† = −α* M`, the adjoint with `(α† u, v) = B(u, α v)`.
pub fn dagger(alpha: &WMap) -> KMatrix {
    alpha.matrix.adjoint().mul(&alpha.case.form_matrix()).neg()
}

/// `μ_H(α) = −α†α`.
pub fn mu_h(alpha: &WMap) -> KMatrix {
    dagger(alpha).mul(&alpha.matrix).neg()
}

/// `μ_G(α) = αα†`.
pub fn mu_g(alpha: &WMap) -> KMatrix {
    alpha.matrix.mul(&dagger(alpha))
}

/// `ω_W(α, β) = Σ_a Re B(α e_a, β e_a)`.
pub fn symplectic_form(alpha: &WMap, beta: &WMap) -> Result<Rational> {
    alpha.check(beta)?;
    Ok(alpha.matrix.adjoint().mul(&alpha.case.form_matrix()).re_trace_product(&beta.matrix))
}

/// Half-trace pairing `⟨A, B⟩ = ½ Re tr(AB)`.
pub fn pairing(a: &KMatrix, b: &KMatrix) -> Rational {
    a.re_trace_product(b) / Rational::from(2)
}

/// Number of real basis pairs `(u, v)` where `(α† u, v) ≠ B(u, α v)`.
pub fn dagger_identity_failures(alpha: &WMap) -> usize {
    let case = alpha.case;
    let l = case.level();
    let dag = dagger(alpha);
    let s = alpha.s();
    let mut failures = 0;
    for i in 0..V_DIM {
        for t in 0..case.k_dim() {
            let mut u = KMatrix::zeros(V_DIM, 1, l);
            u[(i, 0)] = K::unit(l, t);
            let du = dag.mul(&u);
            for a in 0..s {
                for t2 in 0..case.k_dim() {
                    let mut v = KMatrix::zeros(s, 1, l);
                    v[(a, 0)] = K::unit(l, t2);
                    let lhs = du.adjoint().mul(&v)[(0, 0)].clone();
                    let rhs = form_b(case, &u, &alpha.matrix.mul(&v));
                    if lhs != rhs {
                        failures += 1;
                    }
                }
            }
        }
    }
    failures
}

/// Residual `d⟨μ_H, ξ⟩(α)(δ) − ω(ξ·α, δ)`; the differential of the quadratic
/// is taken exactly by polarization.
pub fn moment_residual_h(alpha: &WMap, xi: &KMatrix, delta: &WMap) -> Result<Rational> {
    let f = |w: &WMap| pairing(&mu_h(w), xi);
    let df = (f(&alpha.try_add(delta)?) - f(&alpha.try_sub(delta)?)) / Rational::from(2);
    Ok(df - symplectic_form(&alpha.h_vector(xi), delta)?)
}

/// Residual `d⟨μ_G, η⟩(α)(δ) − ω(η·α, δ)`.
pub fn moment_residual_g(alpha: &WMap, eta: &KMatrix, delta: &WMap) -> Result<Rational> {
    let f = |w: &WMap| pairing(&mu_g(w), eta);
    let df = (f(&alpha.try_add(delta)?) - f(&alpha.try_sub(delta)?)) / Rational::from(2);
    Ok(df - symplectic_form(&alpha.g_vector(eta), delta)?)
}

/// Gram matrix of `ω_W` on the real basis of `W(s)`.
pub fn symplectic_gram(case: DualPairCase, s: usize) -> Matrix<Rational> {
    let basis = WMap::basis(case, s);
    Matrix::from_fn(basis.len(), basis.len(), |i, j| symplectic_form(&basis[i], &basis[j]).expect("same shape"))
}

/// Complex dimension of `P[W(s)]`, from the rank of `ω_W`.
pub fn projective_dim(case: DualPairCase, s: usize) -> usize {
    symplectic_gram(case, s).rank() / 2 - 1
}

/// The `p`-component `(X − J_V X J_V⁻¹)/2` of `X ∈ g`.
pub fn project_p(case: DualPairCase, x: &KMatrix) -> KMatrix {
    let j = case.complex_structure();
    // J_V⁻¹ = M = −J_V
    let conj = j.mul(x).mul(&j).neg();
    x.sub(&conj).scale_real(&ratio(1, 2))
}

fn k_to_gaussian(x: &K) -> Gaussian {
    Gaussian::new(x.coeff(0).clone(), x.coeffs().get(1).cloned().unwrap_or(Rational::ZERO))
}

/// Identifies `X ∈ p` with the complexified Jordan algebra so that
/// `ad(½ J_V)` becomes multiplication by `𝔦`:
///
/// * real: `X = [[S₁, S₂], [S₂, −S₁]] ↦ −2S₂ + 2𝔦S₁` (symmetric 3×3),
/// * complex: lower-left block `L ↦ 𝔦L` (3×3) through `a + b e₁ ↦ a + 𝔦b`,
/// * quaternionic: entries `a e₁ + b e₃ ↦ a + 𝔦b` (skew 6×6).
pub fn p_to_jordan(case: DualPairCase, x: &KMatrix) -> Result<JordanElement<Gaussian>> {
    let two = Gaussian::from_ints(2, 0);
    match case {
        DualPairCase::Real => {
            let m = Matrix::from_fn(3, 3, |i, j| {
                let s1 = k_to_gaussian(&x[(i, j)]);
                let s2 = k_to_gaussian(&x[(i, j + 3)]);
                (s1.mul_i() - s2) * &two
            });
            JordanElement::from_matrix_model(DivisionAlgebra::R, &m)
        }
        DualPairCase::Complex => {
            let m = Matrix::from_fn(3, 3, |i, j| k_to_gaussian(&x[(i + 3, j)]).mul_i());
            JordanElement::from_matrix_model(DivisionAlgebra::C, &m)
        }
        DualPairCase::Quaternionic => {
            let m = Matrix::from_fn(6, 6, |i, j| {
                let e = &x[(i, j)];
                Gaussian::new(e.coeff(1).clone(), e.coeff(3).clone())
            });
            JordanElement::from_skew6(&m)
        }
    }
}

/// Inverse of [`p_to_jordan`].
pub fn jordan_to_p(case: DualPairCase, x: &JordanElement<Gaussian>) -> Result<KMatrix> {
    if x.algebra() != case.jordan_algebra() {
        return Err(Error::AlgebraMismatch(x.algebra().name().into(), case.jordan_algebra().name().into()));
    }
    let m = x.matrix_model()?;
    let l = case.level();
    let half = ratio(1, 2);
    let re = |g: &Gaussian| g.re.clone();
    let im = |g: &Gaussian| g.im.clone();
    Ok(match case {
        DualPairCase::Real => {
            // ψ = −2S₂ + 2𝔦S₁ ⇒ S₁ = Im ψ / 2, S₂ = −Re ψ / 2
            KMatrix::from_fn(6, 6, l, |i, j| {
                let g = &m[(i % 3, j % 3)];
                let s1 = im(g) * &half;
                let s2 = -(re(g) * &half);
                let v = match (i < 3, j < 3) {
                    (true, true) => s1,
                    (false, false) => -s1,
                    _ => s2,
                };
                K::from_scalar(l, v)
            })
        }
        DualPairCase::Complex => {
            // L = −𝔦ψ (lower left), upper right = L*
            let lower = |i: usize, j: usize| {
                let g = -m[(i, j)].mul_i();
                K::new(vec![re(&g), im(&g)]).expect("level 1")
            };
            KMatrix::from_fn(6, 6, l, |i, j| match (i < 3, j < 3) {
                (false, true) => lower(i - 3, j),
                (true, false) => lower(j - 3, i).conj(),
                _ => K::zero(l),
            })
        }
        DualPairCase::Quaternionic => KMatrix::from_fn(6, 6, l, |i, j| {
            let g = &m[(i, j)];
            K::new(vec![Rational::ZERO, re(g), Rational::ZERO, im(g)]).expect("level 2")
        }),
    })
}

/// Whether `μ_H(α) = 0`.
pub fn is_zero_level(alpha: &WMap) -> bool {
    mu_h(alpha).is_zero()
}

/// The point of the reduced space represented by a zero-level `α`: the
/// `p`-component of `μ_G(α)` in the complexified Jordan algebra.
pub fn reduced_point(alpha: &WMap) -> Result<JordanElement<Gaussian>> {
    if !is_zero_level(alpha) {
        return Err(Error::NotZeroLevel);
    }
    p_to_jordan(alpha.case, &project_p(alpha.case, &mu_g(alpha)))
}

/// Stratum of a zero-level point: the Jordan rank of its reduced point.
pub fn stratum(alpha: &WMap) -> Result<StratumLabel> {
    Ok(reduced_point(alpha)?.jordan_rank())
}

/// Rank of `α` as a `K`-linear map.
pub fn k_rank(alpha: &WMap) -> usize {
    alpha.matrix.k_rank()
}

fn gauss_to_k1(g: &Gaussian) -> K {
    K::new(vec![g.re.clone(), g.im.clone()]).expect("level 1")
}

/// Quaternion with holomorphic coordinates `(f₁, f₂)` for `J_V`, where
/// `f₁ = (c₀ − c₃) + 𝔦(c₁ − c₂)` and `f₂ = (c₀ + c₃) − 𝔦(c₁ + c₂)`.
fn quaternion_from_holomorphic(f1: &Gaussian, f2: &Gaussian) -> K {
    let h = ratio(1, 2);
    K::new(vec![
        (f1.re.clone() + &f2.re) * &h,
        (f1.im.clone() - &f2.im) * &h,
        -((f1.im.clone() + &f2.im) * &h),
        (f2.re.clone() - &f1.re) * &h,
    ])
    .expect("level 2")
}

/// Zero-level point with `K`-rank (and hence stratum) `target`.
///
/// A base point is built from a constructive parametrization of part of the
/// zero fiber and then moved by random elements of `G` and `H`:
///
/// * real: `[Q; P]` with `P = 0` or `P = Q(QᵀQ)⁻¹S`, `S` symmetric, so that
///   `QᵀP` is symmetric,
/// * complex: `[A; RA]` with `R` unitary, so that `A*A = (RA)*(RA)`,
/// * quaternionic: `[β; e₁β]`, whose two blocks cancel in `α* e₂ α`.
pub fn zero_level_sample<R: Rng + ?Sized>(case: DualPairCase, s: usize, target: usize, rng: &mut R) -> Result<WMap> {
    let max = s.min(SPLIT_RANK);
    if target > max || s == 0 {
        return Err(Error::InfeasibleRank { target, max });
    }
    if target == 0 {
        return Ok(WMap::zero(case, s));
    }
    let l = case.level();
    let top = loop {
        let q = KMatrix::random(3, target, l, rng, 2);
        if q.k_rank() == target {
            break q;
        }
    };
    let bottom = match case {
        DualPairCase::Real => {
            if rng.gen_bool(0.25) {
                KMatrix::zeros(3, target, l)
            } else {
                let gram = top.adjoint().mul(&top);
                let sym = KMatrix::random(target, target, l, rng, 2);
                let sym = sym.add(&sym.adjoint());
                top.mul(&gram.inverse().expect("full column rank")).mul(&sym)
            }
        }
        DualPairCase::Complex => {
            let (u, _) = random_group(rng, |r| DualPairCase::Complex.random_h(3, r, 1));
            u.mul(&top)
        }
        DualPairCase::Quaternionic => top.mul_left(&K::unit(l, 1)),
    };
    let base = WMap::new(case, KMatrix::vstack(&top, &bottom).pad_cols(s))?;
    let (y, _) = random_g_group(case, rng);
    let (_, x_inv) = random_h_group(case, s, rng);
    Ok(base.act_g(&y).act_h_inv(&x_inv))
}

fn herm(u: &[Gaussian], v: &[Gaussian]) -> Gaussian {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

fn norm_sq(u: &[Gaussian]) -> Rational {
    herm(u, u).re
}

/// `u` minus its orthogonal projection onto the span of the (mutually
/// orthogonal) `found` vectors.
fn orthogonalize(u: &[Gaussian], found: &[Vec<Gaussian>]) -> Vec<Gaussian> {
    let mut out = u.to_vec();
    for f in found {
        let c = herm(f, &out) * Gaussian::from(Rational::ONE / norm_sq(f));
        for (o, x) in out.iter_mut().zip(f) {
            *o -= c.clone() * x;
        }
    }
    out
}

fn conj_vec(u: &[Gaussian]) -> Vec<Gaussian> {
    u.iter().map(Scalar::conj).collect()
}

fn scale_vec(c: &Gaussian, u: &[Gaussian]) -> Vec<Gaussian> {
    u.iter().map(|x| c.clone() * x).collect()
}

fn no_lift(why: &str) -> Error {
    Error::NoExactLift(why.into())
}

/// Distinct positive eigenvalues of a hermitian positive semidefinite
/// matrix, each with a basis of its eigenspace.
fn eigenspaces(h: &Matrix<Gaussian>) -> Result<Vec<(Rational, Vec<Vec<Gaussian>>)>> {
    let poly = h.char_poly();
    if poly.iter().any(|c| !c.im.is_zero()) {
        return Err(no_lift("characteristic polynomial is not real"));
    }
    let coeffs: Vec<Rational> = poly.into_iter().map(|c| c.re).collect();
    let mut roots = crate::roots::rational_roots(&coeffs).ok_or_else(|| no_lift("irrational spectrum"))?;
    roots.dedup();
    let n = h.nrows();
    Ok(roots
        .into_iter()
        .filter(|r| *r > Rational::ZERO)
        .rev()
        .map(|lambda| {
            let shifted = h.sub(&Matrix::identity(n).scale(&Gaussian::from(lambda.clone())));
            (lambda, shifted.kernel())
        })
        .collect())
}

/// Candidate vectors in a subspace: the basis followed by small
/// combinations, so that a normalization with an exact square root can be
/// searched for.
fn candidates(basis: &[Vec<Gaussian>]) -> Vec<Vec<Gaussian>> {
    let mut out = basis.to_vec();
    let coeffs =
        [Gaussian::from_ints(1, 0), Gaussian::from_ints(0, 1), Gaussian::from_ints(2, 0), Gaussian::from_ints(1, 1)];
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            for c in &coeffs {
                out.push(a.iter().zip(b).map(|(x, y)| x.clone() + c.clone() * y).collect());
            }
        }
    }
    out
}

fn sqrt_of(lambda: &Rational) -> Result<Rational> {
    crate::scalar::rational_sqrt(lambda).ok_or_else(|| no_lift("singular value is irrational"))
}

/// Columns `z` with `Σ z zᵀ = X` and `Z*Z` real diagonal (Takagi).
fn lift_real(x: &Matrix<Gaussian>) -> Result<Vec<Vec<Gaussian>>> {
    let xbar = x.map(Scalar::conj);
    let mut cols = Vec::new();
    let mut found: Vec<Vec<Gaussian>> = Vec::new();
    for (lambda, space) in eigenspaces(&x.mul(&xbar))? {
        let sigma = sqrt_of(&lambda)?;
        let sg = Gaussian::from(Rational::ONE / &sigma);
        let mut remaining = space.len();
        for cand in candidates(&space) {
            if remaining == 0 {
                break;
            }
            let u = orthogonalize(&cand, &found);
            if u.iter().all(Scalar::is_zero) {
                continue;
            }
            // v is fixed by the antilinear map u ↦ X ū / σ.
            let au = scale_vec(&sg, &x.mul_vec(&conj_vec(&u)));
            let mut v: Vec<Gaussian> = u.iter().zip(&au).map(|(a, b)| a.clone() + b).collect();
            if v.iter().all(Scalar::is_zero) {
                v = u.iter().map(Gaussian::mul_i).collect();
            }
            let Some(c) = crate::scalar::rational_sqrt(&(sigma.clone() / norm_sq(&v))) else {
                continue;
            };
            cols.push(scale_vec(&Gaussian::from(c), &v));
            found.push(v);
            remaining -= 1;
        }
        if remaining > 0 {
            return Err(no_lift("no rational Takagi normalization found"));
        }
    }
    Ok(cols)
}

/// Column pairs `(a, b)` with `Σ b a* = Y` and `A*A = B*B` (singular value
/// decomposition).
fn lift_complex(y: &Matrix<Gaussian>) -> Result<Vec<(Vec<Gaussian>, Vec<Gaussian>)>> {
    let ys = y.adjoint();
    let mut cols = Vec::new();
    let mut found: Vec<Vec<Gaussian>> = Vec::new();
    for (lambda, space) in eigenspaces(&y.mul(&ys))? {
        let sigma = sqrt_of(&lambda)?;
        let mut remaining = space.len();
        for cand in candidates(&space) {
            if remaining == 0 {
                break;
            }
            let u = orthogonalize(&cand, &found);
            let nu = norm_sq(&u);
            if nu.is_zero() {
                continue;
            }
            // b = c u, a = c' Y* u with c c̄' = 1/|u|² and |c| = σ |c'|.
            let Some(cp) = crate::roots::gaussian_with_norm(&(Rational::ONE / (sigma.clone() * &nu))) else {
                continue;
            };
            let c = (cp.conj() * Gaussian::from(nu.clone())).inv().expect("nonzero");
            cols.push((scale_vec(&cp, &ys.mul_vec(&u)), scale_vec(&c, &u)));
            found.push(u);
            remaining -= 1;
        }
        if remaining > 0 {
            return Err(no_lift("no exact singular vector normalization found"));
        }
    }
    Ok(cols)
}

/// Holomorphic column pairs `(f₁, f₂)` with `½ Σ (f₂ f₁ᵀ − f₁ f₂ᵀ) = S`,
/// all vectors mutually orthogonal and `|f₁| = |f₂|` (Youla decomposition).
///
/// On an eigenspace of `SS*` for `σ²` the map `Â: u ↦ S ū / σ` is
/// antiunitary with `Â² = −1`, so for `u₀` there and `w₀ = Âu₀` every
/// `u = a u₀ + b w₀` has `|u|² = |u₀|² (|a|² + |b|²)`; four squares give
/// `|u|² = 2σ` exactly.
fn lift_quaternionic(sk: &Matrix<Gaussian>) -> Result<Vec<(Vec<Gaussian>, Vec<Gaussian>)>> {
    let mut cols = Vec::new();
    let mut found: Vec<Vec<Gaussian>> = Vec::new();
    for (lambda, space) in eigenspaces(&sk.mul(&sk.adjoint()))? {
        let sigma = sqrt_of(&lambda)?;
        let sg = Gaussian::from(Rational::ONE / &sigma);
        let hat = |u: &[Gaussian]| scale_vec(&sg, &sk.mul_vec(&conj_vec(u)));
        let mut remaining = space.len();
        for cand in &space {
            if remaining == 0 {
                break;
            }
            let u0 = orthogonalize(cand, &found);
            let n0 = norm_sq(&u0);
            if n0.is_zero() {
                continue;
            }
            let w0 = hat(&u0);
            let [a1, a2, b1, b2] = crate::roots::four_squares(&(Rational::from(2) * &sigma / &n0))
                .ok_or_else(|| no_lift("four-square search bound exceeded"))?;
            let (a, b) = (Gaussian::new(a1, a2), Gaussian::new(b1, b2));
            let u: Vec<Gaussian> = u0.iter().zip(&w0).map(|(x, y)| a.clone() * x + b.clone() * y).collect();
            // S = Σ σ/|u|² (w uᵀ − u wᵀ) with w = Âu and |u|² = 2σ.
            let w = hat(&u);
            cols.push((u, w));
            found.push(u0);
            found.push(w0);
            remaining -= 2;
        }
        if remaining > 0 {
            return Err(no_lift("eigenspace of odd dimension"));
        }
    }
    Ok(cols)
}

/// A zero-level `α ∈ W(s)` with `reduced_point(α) = X`, where the reduced
/// point is normalized as `ZZᵀ` (real, `Z = Q + 𝔦P`), `BA*` (complex,
/// `α = [A; B]`) and `½(Z₂Z₁ᵀ − Z₁Z₂ᵀ)` (quaternionic, holomorphic
/// coordinates of the columns).
///
/// The decomposition is carried out exactly; when it would need an
/// irrational square root the call fails with [`Error::NoExactLift`].
pub fn hilbert_lift(x: &JordanElement<Gaussian>, s: usize) -> Result<WMap> {
    let algebra = x.algebra();
    let case = DualPairCase::ALL
        .into_iter()
        .find(|c| c.jordan_algebra() == algebra)
        .ok_or_else(|| Error::AlgebraMismatch(algebra.name().into(), "R|C|H".into()))?;
    let rank = x.jordan_rank().get();
    if usize::from(rank) > s {
        return Err(Error::RankTooLarge { rank, s });
    }
    let model = x.matrix_model()?;
    let l = case.level();
    let mut m = KMatrix::zeros(V_DIM, s, l);
    match case {
        DualPairCase::Real => {
            for (a, z) in lift_real(&model)?.iter().enumerate() {
                for i in 0..3 {
                    m[(i, a)] = K::from_scalar(l, z[i].re.clone());
                    m[(i + 3, a)] = K::from_scalar(l, z[i].im.clone());
                }
            }
        }
        DualPairCase::Complex => {
            for (c, (a, b)) in lift_complex(&model)?.iter().enumerate() {
                for i in 0..3 {
                    m[(i, c)] = gauss_to_k1(&a[i]);
                    m[(i + 3, c)] = gauss_to_k1(&b[i]);
                }
            }
        }
        DualPairCase::Quaternionic => {
            for (c, (f1, f2)) in lift_quaternionic(&model)?.iter().enumerate() {
                for i in 0..V_DIM {
                    m[(i, c)] = quaternion_from_holomorphic(&f1[i], &f2[i]);
                }
            }
        }
    }
    WMap::new(case, m)
}

/// `ℓ` particles in `R^s`: rows `q_a` (positions) and `p_a` (momenta).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OscillatorConfig {
    pub q: Vec<Vec<Rational>>,
    pub p: Vec<Vec<Rational>>,
}

impl OscillatorConfig {
    pub fn new(q: Vec<Vec<Rational>>, p: Vec<Vec<Rational>>) -> Result<Self> {
        let c = OscillatorConfig { q, p };
        c.validate()?;
        Ok(c)
    }

    /// Checks that there are as many momenta as positions and that all
    /// vectors share one dimension `s ≥ 1`.
    pub fn validate(&self) -> Result<()> {
        if self.q.len() != self.p.len() {
            return Err(Error::DimensionMismatch(format!("{} positions but {} momenta", self.q.len(), self.p.len())));
        }
        let s = self.dim();
        if s == 0 || self.q.iter().chain(&self.p).any(|v| v.len() != s) {
            return Err(Error::DimensionMismatch("all vectors need the same length s ≥ 1".into()));
        }
        Ok(())
    }

    pub fn particles(&self) -> usize {
        self.q.len()
    }

    /// Dimension `s` of the ambient space.
    pub fn dim(&self) -> usize {
        self.q.first().or(self.p.first()).map_or(0, Vec::len)
    }

    /// Inverse of [`OscillatorConfig::encode`].
    pub fn decode(alpha: &WMap) -> Result<Self> {
        if alpha.case != DualPairCase::Real {
            return Err(Error::CaseMismatch(alpha.case.name().into(), "real".into()));
        }
        let m = alpha.matrix();
        let row = |i: usize| (0..alpha.s()).map(|a| m[(i, a)].real()).collect::<Vec<_>>();
        Self::new((0..3).map(row).collect(), (3..6).map(row).collect())
    }

    /// The real-case point `α = [Q; P]` whose first three rows are the
    /// positions and last three rows the momenta; needs `ℓ = 3`.
    pub fn encode(&self) -> Result<WMap> {
        self.validate()?;
        if self.particles() != SPLIT_RANK {
            return Err(Error::DimensionMismatch(format!(
                "encoding needs {SPLIT_RANK} particles, got {}",
                self.particles()
            )));
        }
        let s = self.dim();
        let m = KMatrix::from_fn(V_DIM, s, 0, |i, j| {
            let v = if i < 3 { &self.q[i][j] } else { &self.p[i - 3][j] };
            K::from_scalar(0, v.clone())
        });
        WMap::new(DualPairCase::Real, m)
    }
}

/// `J_ij = Σ_a (q_a^i p_a^j − q_a^j p_a^i)`.
pub fn angular_momentum(c: &OscillatorConfig) -> Matrix<Rational> {
    let s = c.dim();
    Matrix::from_fn(s, s, |i, j| {
        let mut acc = Rational::ZERO;
        for (q, p) in c.q.iter().zip(&c.p) {
            acc += q[i].clone() * &p[j];
            acc -= q[j].clone() * &p[i];
        }
        acc
    })
}

/// Dimension of the span of all positions and momenta, capped at the split
/// rank: the smallest `d` such that the motion takes place in `T*R^d`.
pub fn classify_config(c: &OscillatorConfig) -> StratumLabel {
    let rows: Vec<Vec<Rational>> = c.q.iter().chain(&c.p).cloned().collect();
    let rank = if rows.is_empty() { 0 } else { Matrix::from_rows(rows).rank() };
    StratumLabel::new(rank.min(SPLIT_RANK) as u8).expect("≤ 3")
}

/// Whether the infinitesimal actions of `ξ ∈ h` and `η ∈ g` commute at `α`.
pub fn actions_commute(alpha: &WMap, xi: &KMatrix, eta: &KMatrix) -> bool {
    alpha.h_vector(xi).g_vector(eta) == alpha.g_vector(eta).h_vector(xi)
}

/// Complex dimensions of `P[W(1)] ⊆ P[W(2)] ⊆ P[W(3)]`.
pub fn dimension_chain(case: DualPairCase) -> [usize; 3] {
    [1, 2, 3].map(|s| projective_dim(case, s))
}

/// Unitary matrix over `Q(𝔦)`: the Cayley transform of a random
/// skew-hermitian matrix.
pub fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Matrix<Gaussian> {
    let mut k = Matrix::<Gaussian>::zeros(n, n);
    for i in 0..n {
        k[(i, i)] = Gaussian::from_ints(0, sampling::small_int(rng, 2));
        for j in i + 1..n {
            let z = Gaussian::from_ints(sampling::small_int(rng, 2), sampling::small_int(rng, 2));
            k[(j, i)] = -z.conj();
            k[(i, j)] = z;
        }
    }
    let id = Matrix::identity(n);
    id.add(&k).mul(&id.sub(&k).inverse().expect("skew-hermitian has no eigenvalue 1"))
}

/// Reduced point of rank `rank` built from rational unitary matrices and
/// distinct square singular values, so that [`hilbert_lift`] is exact on it.
pub fn liftable_sample<R: Rng + ?Sized>(
    case: DualPairCase,
    rank: usize,
    rng: &mut R,
) -> Result<JordanElement<Gaussian>> {
    if rank > SPLIT_RANK {
        return Err(Error::InfeasibleRank { target: rank, max: SPLIT_RANK });
    }
    // Distinct singular values: repeated ones need a rational solution of a
    // quadratic form equation that need not exist.
    let mut roots: Vec<i64> = (1..=5).collect();
    roots.shuffle(rng);
    let sigma: Vec<Gaussian> = roots[..rank].iter().map(|t| Gaussian::from_ints(t * t, 0)).collect();
    match case {
        DualPairCase::Real | DualPairCase::Complex => {
            let mut d = Matrix::<Gaussian>::zeros(3, 3);
            for (a, sg) in sigma.iter().enumerate() {
                d[(a, a)] = sg.clone();
            }
            let u = random_unitary(3, rng);
            if case == DualPairCase::Real {
                JordanElement::from_matrix_model(DivisionAlgebra::R, &u.mul(&d).mul(&u.transpose()))
            } else {
                let v = random_unitary(3, rng);
                JordanElement::from_matrix_model(DivisionAlgebra::C, &u.mul(&d).mul(&v.adjoint()))
            }
        }
        DualPairCase::Quaternionic => {
            let mut b = Matrix::<Gaussian>::zeros(6, 6);
            for (a, sg) in sigma.iter().enumerate() {
                b[(2 * a, 2 * a + 1)] = sg.clone();
                b[(2 * a + 1, 2 * a)] = -sg.clone();
            }
            let u = random_unitary(6, rng);
            JordanElement::from_skew6(&u.mul(&b).mul(&u.transpose()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::rng_for;

    #[test]
    fn dagger_identity_and_twist() {
        let mut rng = rng_for(40, "dagger");
        for case in DualPairCase::ALL {
            assert!(dagger(&WMap::zero(case, 2)).is_zero());
            for s in 1..=3 {
                let a = WMap::random(case, s, &mut rng, 3);
                assert_eq!(dagger_identity_failures(&a), 0, "{case} s={s}");
                // (α λ)† = λ̄ α† for a scalar λ acting on K^s
                let lam = sampling::cd::<Rational, _>(&mut rng, case.level(), 3);
                let al = WMap::new(case, a.matrix().mul_right(&lam)).unwrap();
                assert_eq!(dagger(&al), dagger(&a).mul_left(&lam.conj()));
            }
        }
    }

    #[test]
    fn moment_maps_land_in_lie_algebras() {
        let mut rng = rng_for(41, "membership");
        for case in DualPairCase::ALL {
            assert_eq!(case.g_basis().len(), [21, 36, 66][case.level()]);
            for b in case.g_basis() {
                assert!(case.in_g(&b));
            }
            for s in 1..=3 {
                let a = WMap::random(case, s, &mut rng, 3);
                assert!(case.in_h(&mu_h(&a)));
                assert!(case.in_g(&mu_g(&a)));
                assert!(case.in_g(&case.complex_structure()));
            }
        }
    }

    #[test]
    fn moment_identity_is_exact() {
        let mut rng = rng_for(42, "moment");
        for case in DualPairCase::ALL {
            let s = 2;
            let a = WMap::random(case, s, &mut rng, 3);
            let d = WMap::random(case, s, &mut rng, 3);
            assert_eq!(symplectic_form(&a, &a).unwrap(), Rational::ZERO);
            for xi in case.h_basis(s) {
                assert_eq!(moment_residual_h(&a, &xi, &d).unwrap(), Rational::ZERO);
            }
            for eta in case.g_basis() {
                assert_eq!(moment_residual_g(&a, &eta, &d).unwrap(), Rational::ZERO);
                assert!(actions_commute(&a, &case.random_h(s, &mut rng, 2), &eta));
            }
        }
    }

    #[test]
    fn equivariance_under_group_elements() {
        let mut rng = rng_for(43, "equivariance");
        for case in DualPairCase::ALL {
            let s = 2;
            let (x, x_inv) = random_h_group(case, s, &mut rng);
            let (y, y_inv) = random_g_group(case, &mut rng);
            assert_eq!(x.mul(&x_inv), KMatrix::identity(s, case.level()));
            let a = WMap::random(case, s, &mut rng, 2);
            let moved = a.act_g(&y).act_h_inv(&x_inv);
            assert_eq!(mu_g(&moved), y.mul(&mu_g(&a)).mul(&y_inv));
            assert_eq!(mu_h(&moved), x.mul(&mu_h(&a)).mul(&x_inv));
        }
    }

    #[test]
    fn symplectic_form_and_dimension_chains() {
        for case in DualPairCase::ALL {
            let g = symplectic_gram(case, 1);
            assert!(g.is_skew());
            assert_eq!(g.rank(), g.nrows());
        }
        assert_eq!(dimension_chain(DualPairCase::Real), [2, 5, 8]);
        assert_eq!(dimension_chain(DualPairCase::Complex), [5, 11, 17]);
        assert_eq!(dimension_chain(DualPairCase::Quaternionic), [11, 23, 35]);
    }

    #[test]
    fn p_identification_is_complex_linear() {
        let mut rng = rng_for(44, "p-ident");
        for case in DualPairCase::ALL {
            let j = case.complex_structure();
            for _ in 0..5 {
                let xp = project_p(case, &case.random_g(&mut rng, 2));
                assert!(case.in_g(&xp));
                // ad(½ J_V) acts on p as J_V·
                let ad = j.mul(&xp).sub(&xp.mul(&j)).scale_real(&ratio(1, 2));
                assert_eq!(ad, j.mul(&xp));
                let psi = p_to_jordan(case, &xp).unwrap();
                assert_eq!(p_to_jordan(case, &ad).unwrap(), psi.scale(&Gaussian::i()));
                assert_eq!(jordan_to_p(case, &psi).unwrap(), xp);
            }
        }
    }

    #[test]
    fn zero_level_samples_reduce_to_target_stratum() {
        let mut rng = rng_for(45, "zero-level");
        for case in DualPairCase::ALL {
            assert_eq!(stratum(&WMap::zero(case, 2)).unwrap().get(), 0);
            for s in 1..=3 {
                for k in 1..=s {
                    for _ in 0..3 {
                        let a = zero_level_sample(case, s, k, &mut rng).unwrap();
                        assert!(is_zero_level(&a));
                        assert_eq!(k_rank(&a), k);
                        assert_eq!(usize::from(stratum(&a).unwrap().get()), k, "{case} s={s} k={k}");
                        let (_, x_inv) = random_h_group(case, s, &mut rng);
                        assert_eq!(reduced_point(&a.act_h_inv(&x_inv)).unwrap(), reduced_point(&a).unwrap());
                    }
                }
            }
            assert!(matches!(zero_level_sample(case, 2, 3, &mut rng), Err(Error::InfeasibleRank { .. })));
        }
    }

    #[test]
    fn saturation_beyond_split_rank() {
        let mut rng = rng_for(46, "saturation");
        for case in DualPairCase::ALL {
            for s in 4..=5 {
                let a = zero_level_sample(case, s - 1, 3, &mut rng).unwrap();
                assert_eq!(reduced_point(&a.pad(s)).unwrap(), reduced_point(&a).unwrap());
                let b = WMap::random(case, s, &mut rng, 2);
                assert!(reduced_point(&b).is_err());
            }
        }
    }

    #[test]
    fn hilbert_lift_round_trip() {
        let mut rng = rng_for(47, "lift");
        let e11 = JordanElement::<Gaussian>::idempotent(DivisionAlgebra::R, 0);
        let a = hilbert_lift(&e11, 1).unwrap();
        assert_eq!(reduced_point(&a).unwrap(), e11);
        for case in DualPairCase::ALL {
            let zero = JordanElement::zero(case.jordan_algebra());
            assert!(hilbert_lift(&zero, 2).unwrap().is_zero());
            for k in 0..=3 {
                for _ in 0..4 {
                    let x = liftable_sample(case, k, &mut rng).unwrap();
                    assert_eq!(usize::from(x.jordan_rank().get()), k);
                    let s = k.max(1);
                    let a = hilbert_lift(&x, s).unwrap();
                    assert!(is_zero_level(&a), "{case} k={k}");
                    assert_eq!(reduced_point(&a).unwrap(), x, "{case} k={k}");
                    if k > 0 {
                        assert!(matches!(hilbert_lift(&x, k - 1), Err(Error::RankTooLarge { .. })));
                    }
                }
            }
        }
    }

    #[test]
    fn oscillators() {
        let mut rng = rng_for(48, "oscillator");
        let r = |v: i64| Rational::from(v);
        // Momenta parallel to positions carry no angular momentum.
        let q = vec![vec![r(1), r(2)], vec![r(0), r(1)], vec![r(3), r(0)]];
        let p: Vec<_> = q.iter().map(|v| v.iter().map(|x| x.clone() * r(2)).collect()).collect();
        let c = OscillatorConfig::new(q, p).unwrap();
        assert!(angular_momentum(&c).is_zero());
        assert_eq!(classify_config(&c).get(), 2);
        assert_eq!(stratum(&c.encode().unwrap()).unwrap().get(), 2);
        for s in 1..=3 {
            for k in 1..=s {
                let a = zero_level_sample(DualPairCase::Real, s, k, &mut rng).unwrap();
                let c = OscillatorConfig::decode(&a).unwrap();
                assert_eq!(c.encode().unwrap(), a);
                assert!(angular_momentum(&c).is_zero());
                assert_eq!(classify_config(&c), stratum(&a).unwrap());
            }
        }
        let a = WMap::random(DualPairCase::Real, 3, &mut rng, 3);
        let c = OscillatorConfig::decode(&a).unwrap();
        let mu = mu_h(&a);
        assert_eq!(angular_momentum(&c), Matrix::from_fn(3, 3, |i, j| mu[(i, j)].real()));
        assert!(OscillatorConfig::new(vec![vec![r(1)]], vec![]).is_err());
    }
}
