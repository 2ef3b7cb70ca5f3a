//! Jordan-rank stratification of the complexified algebras, the Severi
//! embeddings (Veronese, Segre, Plücker, octonionic), chords, the gradient of
//! the cubic norm and the closure/dimension audit.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jordan::{to_gaussian, DivisionAlgebra, JordanElement};
use crate::linalg::Matrix;
use crate::scalar::{Gaussian, Rational, Scalar};
use crate::tkk;

/// Jordan-rank stratum label `s ∈ {0, 1, 2, 3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct StratumLabel(u8);

impl StratumLabel {
    pub fn new(s: u8) -> Option<Self> {
        (s <= 3).then_some(StratumLabel(s))
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

impl TryFrom<u8> for StratumLabel {
    type Error = String;
    fn try_from(s: u8) -> Result<Self, String> {
        StratumLabel::new(s).ok_or_else(|| format!("stratum label {s} out of range 0..=3"))
    }
}

impl From<StratumLabel> for u8 {
    fn from(s: StratumLabel) -> u8 {
        s.0
    }
}

impl fmt::Display for StratumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Point of the projectivization: a nonzero representative, compared up to
/// nonzero scalar multiples.
#[derive(Clone, Debug)]
pub struct ProjPoint<F> {
    rep: JordanElement<F>,
}

impl<F: Scalar> ProjPoint<F> {
    pub fn new(rep: JordanElement<F>) -> Result<Self> {
        if rep.is_zero() {
            return Err(Error::Degenerate("projective point needs a nonzero representative".into()));
        }
        Ok(ProjPoint { rep })
    }

    pub fn representative(&self) -> &JordanElement<F> {
        &self.rep
    }

    pub fn into_representative(self) -> JordanElement<F> {
        self.rep
    }

    /// Stratum label in `{1, 2, 3}`.
    pub fn stratum(&self) -> StratumLabel {
        self.rep.jordan_rank()
    }
}

/// True if `b = λ a` for some nonzero scalar `λ` (both nonzero).
pub fn proportional<F: Scalar>(a: &JordanElement<F>, b: &JordanElement<F>) -> bool {
    if a.algebra() != b.algebra() || a.is_zero() || b.is_zero() {
        return false;
    }
    let (ca, cb) = (a.to_coords(), b.to_coords());
    let k = ca.iter().position(|x| !x.is_zero()).expect("nonzero");
    let Some(lambda) = cb[k].div(&ca[k]) else {
        return false;
    };
    !lambda.is_zero() && ca.iter().zip(&cb).all(|(x, y)| x.clone() * &lambda == *y)
}

impl<F: Scalar> PartialEq for ProjPoint<F> {
    fn eq(&self, other: &Self) -> bool {
        proportional(&self.rep, &other.rep)
    }
}

impl<F: Scalar> Eq for ProjPoint<F> {}

/// Stratum of a point of `p`: its Jordan rank.
pub fn stratify<F: Scalar>(x: &JordanElement<F>) -> StratumLabel {
    x.jordan_rank()
}

fn nonzero<F: Scalar>(v: &[F], what: &str) -> Result<()> {
    if v.iter().all(F::is_zero) {
        Err(Error::Degenerate(format!("{what} must be nonzero")))
    } else {
        Ok(())
    }
}

/// Veronese map `v ↦ v vᵀ` into the symmetric model (`K = R`).
pub fn veronese<F: Scalar>(v: &[F; 3]) -> Result<JordanElement<F>> {
    nonzero(v, "veronese input")?;
    let diag = std::array::from_fn(|i| v[i].clone() * &v[i]);
    let off = [(1, 2), (0, 2), (0, 1)].map(|(i, j)| crate::CDNumber::from_scalar(0, v[i].clone() * &v[j]));
    JordanElement::new(DivisionAlgebra::R, diag, off)
}

/// Segre map `(u, w) ↦ u wᵀ`, returned in the complexified `K = C` model.
pub fn segre<F: Scalar>(u: &[F; 3], w: &[F; 3]) -> Result<JordanElement<Gaussian>> {
    nonzero(u, "segre input u")?;
    nonzero(w, "segre input w")?;
    let m = Matrix::from_fn(3, 3, |i, j| to_gaussian(&u[i]) * to_gaussian(&w[j]));
    JordanElement::from_matrix_model(DivisionAlgebra::C, &m)
}

/// Plücker map `(u, w) ↦ u ∧ w = u wᵀ − w uᵀ`, in the complexified `K = H`
/// (skew 6×6) model.
pub fn plucker<F: Scalar>(u: &[F; 6], w: &[F; 6]) -> Result<JordanElement<Gaussian>> {
    let m =
        Matrix::from_fn(6, 6, |i, j| to_gaussian(&u[i]) * to_gaussian(&w[j]) - to_gaussian(&w[i]) * to_gaussian(&u[j]));
    if m.is_zero() {
        return Err(Error::Degenerate("plucker inputs are linearly dependent".into()));
    }
    JordanElement::from_skew6(&m)
}

/// Random rank-one element `U_A(E₁₁)` with `det A ≠ 0`; also returns `A`.
pub fn rank1_sample<F: Scalar, R: Rng + ?Sized>(
    algebra: DivisionAlgebra,
    rng: &mut R,
) -> (JordanElement<F>, JordanElement<F>) {
    loop {
        let a = JordanElement::<F>::random(algebra, rng, 2);
        if a.det().is_zero() {
            continue;
        }
        let x = a.quadratic_rep(&JordanElement::idempotent(algebra, 0)).expect("same algebra");
        return (x, a);
    }
}

/// Random element of rank exactly `k ≤ 3`: `U_A(±E₁₁ ± … ± E_kk)` for a random
/// invertible `A`.
pub fn rank_k_sample<F: Scalar, R: Rng + ?Sized>(algebra: DivisionAlgebra, k: u8, rng: &mut R) -> JordanElement<F> {
    assert!(k <= 3, "rank is at most 3");
    let mut d = JordanElement::<F>::zero(algebra);
    for i in 0..k as usize {
        let e = JordanElement::idempotent(algebra, i);
        d = if rng.gen_bool(0.5) { d.add(&e) } else { d.sub(&e) };
    }
    loop {
        let a = JordanElement::<F>::random(algebra, rng, 2);
        if !a.det().is_zero() {
            return a.quadratic_rep(&d).expect("same algebra");
        }
    }
}

/// The point `λP + μQ` on the chord through two rank-one points.
pub fn chord<F: Scalar>(p: &ProjPoint<F>, q: &ProjPoint<F>, lambda: &F, mu: &F) -> Result<ProjPoint<F>> {
    for pt in [p, q] {
        let r = pt.stratum().get();
        if r != 1 {
            return Err(Error::RankViolation { expected: "1".into(), found: r });
        }
    }
    if lambda.is_zero() && mu.is_zero() {
        return Err(Error::Degenerate("(λ, μ) = (0, 0)".into()));
    }
    ProjPoint::new(p.rep.scale(lambda).try_add(&q.rep.scale(mu))?)
}

/// Coefficient of `t` in `det(X + tH)`, by exact interpolation of the cubic at
/// `t = 0, 1, 2, 3`.
pub fn directional_derivative<F: Scalar>(x: &JordanElement<F>, h: &JordanElement<F>) -> F {
    let f = |t: i64| x.add(&h.scale(&F::from_i64(t))).det();
    let sixth = F::from_rational(Rational::ONE / Rational::from(6));
    (F::from_i64(-11) * f(0) + F::from_i64(18) * f(1) - F::from_i64(9) * f(2) + F::from_i64(2) * f(3)) * sixth
}

/// Trace-form gradient of `det` at `X`, assembled from exact directional
/// derivatives along the canonical basis. Agrees with `X#` identically.
pub fn cubic_gradient<F: Scalar>(x: &JordanElement<F>) -> JordanElement<F> {
    let alg = x.algebra();
    let coords: Vec<F> = (0..alg.jordan_dim())
        .map(|k| {
            let e = JordanElement::<F>::basis(alg, k);
            let g = e.trace_form_unchecked(&e);
            directional_derivative(x, &e).div(&g).expect("trace form is positive on basis vectors")
        })
        .collect();
    JordanElement::from_coords(alg, &coords).expect("dimension")
}

/// Rank factorization `M = C·R` of a matrix-model image, from elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFactorization {
    pub columns: Matrix<Gaussian>,
    pub rows: Matrix<Gaussian>,
}

/// Factorization witness of the matrix model of a classical element:
/// `C` = pivot columns, `R` = nonzero rows of the reduced echelon form.
pub fn rank_factorization<F: Scalar>(x: &JordanElement<F>) -> Result<RankFactorization> {
    let m = x.matrix_model()?;
    let (r, pivots) = m.rref();
    let columns = Matrix::from_fn(m.nrows(), pivots.len(), |i, j| m[(i, pivots[j])].clone());
    let rows = Matrix::from_fn(pivots.len(), m.ncols(), |i, j| r[(i, j)].clone());
    debug_assert_eq!(columns.mul(&rows), m);
    Ok(RankFactorization { columns, rows })
}

/// Preimage of a rank-one classical element under its Severi embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum EmbeddingPreimage {
    Veronese([Gaussian; 3]),
    Segre([Gaussian; 3], [Gaussian; 3]),
    Plucker([Gaussian; 6], [Gaussian; 6]),
}

/// Recovers embedding vectors of a rank-one classical element by elimination.
/// The embedding of the result is proportional to the input.
pub fn embedding_preimage<F: Scalar>(x: &JordanElement<F>) -> Result<EmbeddingPreimage> {
    let rank = x.jordan_rank().get();
    if rank != 1 {
        return Err(Error::RankViolation { expected: "1".into(), found: rank });
    }
    let m = x.matrix_model()?;
    let arr3 = |v: Vec<Gaussian>| -> [Gaussian; 3] { v.try_into().expect("length 3") };
    let arr6 = |v: Vec<Gaussian>| -> [Gaussian; 6] { v.try_into().expect("length 6") };
    match x.algebra() {
        DivisionAlgebra::R => {
            let j = (0..3).find(|&j| !m[(j, j)].is_zero()).expect("nonzero diagonal");
            Ok(EmbeddingPreimage::Veronese(arr3(m.column(j))))
        }
        DivisionAlgebra::C => {
            let f = rank_factorization(x)?;
            Ok(EmbeddingPreimage::Segre(arr3(f.columns.column(0)), arr3(f.rows.row(0).to_vec())))
        }
        DivisionAlgebra::H => {
            // For decomposable S: S_ij · S = (S e_i) ∧ (S e_j).
            let (i, j) = (0..6)
                .flat_map(|i| (0..6).map(move |j| (i, j)))
                .find(|&(i, j)| !m[(i, j)].is_zero())
                .expect("nonzero matrix");
            Ok(EmbeddingPreimage::Plucker(arr6(m.column(i)), arr6(m.column(j))))
        }
        DivisionAlgebra::O => Err(Error::AlgebraMismatch("O".into(), "R|C|H".into())),
    }
}

impl EmbeddingPreimage {
    /// Applies the embedding.
    pub fn embed(&self) -> Result<JordanElement<Gaussian>> {
        match self {
            EmbeddingPreimage::Veronese(v) => veronese(v),
            EmbeddingPreimage::Segre(u, w) => segre(u, w),
            EmbeddingPreimage::Plucker(u, w) => plucker(u, w),
        }
    }
}

/// Outcome of [`closure_chain_audit`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureAudit {
    pub algebra: DivisionAlgebra,
    /// Number of curve points whose rank was evaluated.
    pub curve_points: usize,
    /// Curve points whose rank exceeded the rank of the family.
    pub rank_violations: usize,
    /// Families whose limit rank dropped strictly below the generic rank.
    pub observed_drops: usize,
    /// `m = dim P(p)`.
    pub m: usize,
    /// `n = dim Q₁` from the tangent space of the rank-one cone (kernel route).
    pub n: usize,
    /// `n` recomputed as the Jacobian rank of `A ↦ U_A(E₁₁)` at `A = I`, minus one.
    pub n_jacobian: usize,
    /// `dim Q₂ = m − 1`, from the tangent hyperplane at a rank-two point.
    pub q2_dim: usize,
    /// `2m == 3n + 4`.
    pub critical: bool,
}

/// Freudenthal cross product `X × Y = ½((X+Y)# − X# − Y#)`.
pub fn cross<F: Scalar>(x: &JordanElement<F>, y: &JordanElement<F>) -> JordanElement<F> {
    let half = F::from_rational(Rational::ONE / Rational::from(2));
    x.add(y).sharp().sub(&x.sharp()).sub(&y.sharp()).scale(&half)
}

fn linear_map_rank(alg: DivisionAlgebra, f: impl Fn(&JordanElement<Rational>) -> JordanElement<Rational>) -> usize {
    let d = alg.jordan_dim();
    let cols: Vec<Vec<Rational>> = (0..d).map(|k| f(&JordanElement::basis(alg, k)).to_coords()).collect();
    Matrix::from_fn(d, d, |i, j| cols[j][i].clone()).rank()
}

/// Desk-scale audit of the closure chain `{0} ⊆ Ō₁ ⊆ Ō₂ ⊆ Ō₃` and of the
/// dimension bookkeeping `m = 3n/2 + 2`.
///
/// Rank-`s` families evaluated at exact parameter values:
/// `t·X` (limit `0`), `U_{(1−t)A + tE₁₁}(D_s)` (limit `E₁₁`) and sums of `s`
/// rank-one curves that collide at `t = 0`.
pub fn closure_chain_audit<R: Rng + ?Sized>(algebra: DivisionAlgebra, rng: &mut R, samples: usize) -> ClosureAudit {
    let ts: Vec<Rational> = [(1, 1), (1, 2), (1, 3), (2, 7), (1, 10), (-1, 5)]
        .iter()
        .map(|&(a, b)| Rational::from(a) / Rational::from(b))
        .collect();
    let mut curve_points = 0;
    let mut rank_violations = 0;
    let mut observed_drops = 0;
    let g = |r: &Rational| Gaussian::from(r.clone());
    for _ in 0..samples {
        for s in 1..=3u8 {
            let mut d = JordanElement::<Gaussian>::zero(algebra);
            for i in 0..s as usize {
                d = d.add(&JordanElement::idempotent(algebra, i));
            }
            let a = loop {
                let a = JordanElement::<Gaussian>::random(algebra, rng, 2);
                if !a.det().is_zero() {
                    break a;
                }
            };
            let x = a.quadratic_rep(&d).expect("same algebra");
            let e11 = JordanElement::<Gaussian>::idempotent(algebra, 0);
            let mut track = |curve: &dyn Fn(&Rational) -> JordanElement<Gaussian>| {
                for t in &ts {
                    curve_points += 1;
                    if curve(t).jordan_rank().get() > s {
                        rank_violations += 1;
                    }
                }
                let limit = curve(&Rational::ZERO).jordan_rank().get();
                curve_points += 1;
                if limit > s {
                    rank_violations += 1;
                } else if limit < s {
                    observed_drops += 1;
                }
            };
            track(&|t| x.scale(&g(t)));
            // A_t = (1 − t)·E₁₁ + t·A: singular at t = 0.
            track(&|t| {
                let at = e11.scale(&g(&(Rational::ONE - t))).add(&a.scale(&g(t)));
                at.quadratic_rep(&d).expect("same algebra")
            });
            let bs: Vec<JordanElement<Gaussian>> = (0..s).map(|_| JordanElement::random(algebra, rng, 2)).collect();
            track(&|t| {
                let mut sum = JordanElement::zero(algebra);
                for b in &bs {
                    let at = a.add(&b.scale(&g(t)));
                    sum = sum.add(&at.quadratic_rep(&e11).expect("same algebra"));
                }
                sum
            });
        }
    }
    let (_, p) = tkk::algebra(tkk::TkkCase::from_algebra(algebra)).cartan_split();
    let m = p.len() / 2 - 1;
    let e11 = JordanElement::<Rational>::idempotent(algebra, 0);
    let kernel_dim = algebra.jordan_dim() - linear_map_rank(algebra, |h| cross(&e11, h));
    let n = kernel_dim - 1;
    let two = Rational::from(2);
    let n_jacobian = linear_map_rank(algebra, |b| e11.circ(b).scale(&two)) - 1;
    let d2 = JordanElement::<Rational>::idempotent(algebra, 0).add(&JordanElement::idempotent(algebra, 1));
    let grad = d2.sharp();
    let tangent_codim = usize::from(!grad.is_zero());
    let q2_dim = algebra.jordan_dim() - tangent_codim - 1;
    ClosureAudit {
        algebra,
        curve_points,
        rank_violations,
        observed_drops,
        m,
        n,
        n_jacobian,
        q2_dim,
        critical: 2 * m == 3 * n + 4,
    }
}
