//! Tits-Kantor-Koecher construction `g = J⁺ ⊕ str(J) ⊕ J⁻` for the four
//! rank-3 Jordan algebras, giving `sp(3,R)`, `su(3,3)`, `so*(12)` and
//! `e₇₍₋₂₅₎`.
//!
//! Conventions:
//! - `str(J)` is realized as the operator span `{L_x} ⊕ Der(J)` on the real
//!   coordinate space of `J`, with `Der(J)` spanned by commutators `[L_x, L_y]`.
//! - `[x⁺, y⁻] = 2·(x□y)` with `x□y = L_{x∘y} + [L_x, L_y]`. The factor 2 makes
//!   the H-element `z = ½(I, 0, −I)` rational.
//! - `[T, x⁺] = (Tx)⁺`, `[T, y⁻] = −(T†y)⁻` with `†` the trace-form adjoint.
//! - Cartan involution `θ(x, T, y) = (−y, −T†, −x)`.

use std::fmt;
use std::sync::OnceLock;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jordan::{DivisionAlgebra, JordanElement};
use crate::linalg::{axpy, dot, Matrix, SubspaceBasis};
use crate::sampling::{self, rng_for};
use crate::scalar::{rational_sqrt, Gaussian, Rational};

/// Scale of the mixed bracket: `[x⁺, y⁻] = BOX_SCALE · x□y`.
pub const BOX_SCALE: i64 = 2;

/// The four hermitian Lie algebras obtained from rank-3 Jordan algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TkkCase {
    Sp3,
    U33,
    So12,
    E7,
}

impl TkkCase {
    pub const ALL: [TkkCase; 4] = [Self::Sp3, Self::U33, Self::So12, Self::E7];

    pub fn jordan_algebra(self) -> DivisionAlgebra {
        match self {
            Self::Sp3 => DivisionAlgebra::R,
            Self::U33 => DivisionAlgebra::C,
            Self::So12 => DivisionAlgebra::H,
            Self::E7 => DivisionAlgebra::O,
        }
    }

    pub fn from_algebra(alg: DivisionAlgebra) -> Self {
        match alg {
            DivisionAlgebra::R => Self::Sp3,
            DivisionAlgebra::C => Self::U33,
            DivisionAlgebra::H => Self::So12,
            DivisionAlgebra::O => Self::E7,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Sp3 => "sp3",
            Self::U33 => "u33",
            Self::So12 => "so12",
            Self::E7 => "e7",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "TKK case", name: s.to_string() })
    }
}

impl fmt::Display for TkkCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Linear operator on the real coordinate space of `J`, in the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrOperator(pub Matrix<Rational>);

impl StrOperator {
    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.0
    }

    pub fn apply(&self, x: &JordanElement<Rational>) -> JordanElement<Rational> {
        let v = self.0.mul_vec(&x.to_coords());
        JordanElement::from_coords(x.algebra(), &v).expect("operator dimension")
    }

    pub fn add(&self, other: &Self) -> Self {
        StrOperator(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        StrOperator(self.0.sub(&other.0))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        StrOperator(self.0.scale(s))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        StrOperator(self.0.commutator(&other.0))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

/// Element `(x, T, y)` of the TKK algebra, `x ∈ J⁺`, `T ∈ str(J)`, `y ∈ J⁻`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TKKElement {
    pub case: TkkCase,
    pub plus: JordanElement<Rational>,
    pub mid: StrOperator,
    pub minus: JordanElement<Rational>,
}

impl TKKElement {
    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.mid.is_zero() && self.minus.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        TKKElement {
            case: self.case,
            plus: self.plus.add(&other.plus),
            mid: self.mid.add(&other.mid),
            minus: self.minus.add(&other.minus),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        TKKElement {
            case: self.case,
            plus: self.plus.sub(&other.plus),
            mid: self.mid.sub(&other.mid),
            minus: self.minus.sub(&other.minus),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        TKKElement { case: self.case, plus: self.plus.scale(s), mid: self.mid.scale(s), minus: self.minus.scale(s) }
    }
}

/// Structure data of one TKK algebra: left multiplications, a derivation
/// basis and cached invariant-form data.
pub struct TkkAlgebra {
    case: TkkCase,
    algebra: DivisionAlgebra,
    jdim: usize,
    gram: Vec<Rational>,
    left: Vec<Matrix<Rational>>,
    der: SubspaceBasis<Rational>,
    der_gens: Vec<(usize, usize)>,
    form_gram: OnceLock<Matrix<Rational>>,
    z: OnceLock<TKKElement>,
}

/// Shared, lazily built algebra for a case.
pub fn algebra(case: TkkCase) -> &'static TkkAlgebra {
    static CACHE: [OnceLock<TkkAlgebra>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let idx = TkkCase::ALL.iter().position(|&c| c == case).expect("known case");
    CACHE[idx].get_or_init(|| TkkAlgebra::build(case))
}

fn flatten(m: &Matrix<Rational>) -> Vec<Rational> {
    m.data().to_vec()
}

impl TkkAlgebra {
    fn build(case: TkkCase) -> Self {
        let algebra = case.jordan_algebra();
        let jdim = algebra.jordan_dim();
        let basis: Vec<JordanElement<Rational>> = (0..jdim).map(|k| JordanElement::basis(algebra, k)).collect();
        let gram: Vec<Rational> = (0..jdim)
            .map(|k| {
                for l in 0..jdim {
                    if l != k {
                        debug_assert!(basis[k].trace_form_unchecked(&basis[l]).is_zero());
                    }
                }
                basis[k].trace_form_unchecked(&basis[k])
            })
            .collect();
        // Column l of L_{e_k} holds the coordinates of e_k ∘ e_l.
        let left: Vec<Matrix<Rational>> = basis
            .iter()
            .map(|ek| {
                let cols: Vec<Vec<Rational>> = basis.iter().map(|el| ek.circ(el).to_coords()).collect();
                Matrix::from_fn(jdim, jdim, |i, j| cols[j][i].clone())
            })
            .collect();
        let mut der = SubspaceBasis::new(jdim * jdim);
        let mut der_gens = Vec::new();
        for i in 0..jdim {
            for j in i + 1..jdim {
                let c = left[i].commutator(&left[j]);
                if !c.is_zero() && der.insert(flatten(&c)) {
                    der_gens.push((i, j));
                }
            }
        }
        TkkAlgebra { case, algebra, jdim, gram, left, der, der_gens, form_gram: OnceLock::new(), z: OnceLock::new() }
    }

    pub fn case(&self) -> TkkCase {
        self.case
    }

    pub fn jordan_algebra(&self) -> DivisionAlgebra {
        self.algebra
    }

    /// Real dimension of `J`.
    pub fn jordan_dim(&self) -> usize {
        self.jdim
    }

    /// Dimension of the derivation algebra (inner derivations).
    pub fn der_dim(&self) -> usize {
        self.der.len()
    }

    /// Dimension of `str(J) = L_J ⊕ Der(J)`.
    pub fn str_dim(&self) -> usize {
        self.jdim + self.der.len()
    }

    pub fn dim(&self) -> usize {
        2 * self.jdim + self.str_dim()
    }

    /// Exact rank of the spanning set `{L_x} ∪ {[L_x, L_y]}` of `str(J)`,
    /// computed independently of the chosen basis.
    pub fn str_span_rank(&self) -> usize {
        let mut span = SubspaceBasis::new(self.jdim * self.jdim);
        for l in &self.left {
            span.insert(flatten(l));
        }
        for i in 0..self.jdim {
            for j in i + 1..self.jdim {
                span.insert(flatten(&self.left[i].commutator(&self.left[j])));
            }
        }
        span.len()
    }

    /// Generator index pairs `(i, j)` of the derivation basis `[L_{e_i}, L_{e_j}]`.
    pub fn der_generators(&self) -> &[(usize, usize)] {
        &self.der_gens
    }

    fn check_case(&self, a: &TKKElement) -> Result<()> {
        if a.case == self.case {
            Ok(())
        } else {
            Err(Error::CaseMismatch(a.case.to_string(), self.case.to_string()))
        }
    }

    /// Left multiplication operator `L_x`.
    pub fn left_mul(&self, x: &JordanElement<Rational>) -> Result<StrOperator> {
        if x.algebra() != self.algebra {
            return Err(Error::AlgebraMismatch(x.algebra().to_string(), self.algebra.to_string()));
        }
        Ok(StrOperator(self.left_from_coords(&x.to_coords())))
    }

    fn left_from_coords(&self, c: &[Rational]) -> Matrix<Rational> {
        let mut data = vec![Rational::ZERO; self.jdim * self.jdim];
        for (k, ck) in c.iter().enumerate() {
            axpy(&mut data, ck, self.left[k].data());
        }
        Matrix::from_vec(self.jdim, self.jdim, data)
    }

    /// `x□y = L_{x∘y} + [L_x, L_y]`.
    pub fn box_op(&self, x: &JordanElement<Rational>, y: &JordanElement<Rational>) -> Result<StrOperator> {
        let lx = self.left_mul(x)?;
        let ly = self.left_mul(y)?;
        let lxy = self.left_mul(&x.circ(y))?;
        Ok(lxy.add(&lx.commutator(&ly)))
    }

    /// Trace-form adjoint `T† = G⁻¹ Tᵀ G`.
    pub fn adjoint(&self, t: &StrOperator) -> StrOperator {
        let m = &t.0;
        StrOperator(Matrix::from_fn(self.jdim, self.jdim, |i, j| {
            if m[(j, i)].is_zero() {
                Rational::ZERO
            } else {
                &m[(j, i)] * &self.gram[j] / &self.gram[i]
            }
        }))
    }

    pub fn zero(&self) -> TKKElement {
        TKKElement {
            case: self.case,
            plus: JordanElement::zero(self.algebra),
            mid: StrOperator(Matrix::zeros(self.jdim, self.jdim)),
            minus: JordanElement::zero(self.algebra),
        }
    }

    /// Builds an element, checking that `mid` lies in `str(J)`.
    pub fn element(
        &self,
        plus: JordanElement<Rational>,
        mid: StrOperator,
        minus: JordanElement<Rational>,
    ) -> Result<TKKElement> {
        if plus.algebra() != self.algebra || minus.algebra() != self.algebra {
            return Err(Error::AlgebraMismatch(plus.algebra().to_string(), self.algebra.to_string()));
        }
        if mid.0.nrows() != self.jdim || mid.0.ncols() != self.jdim {
            return Err(Error::DimensionMismatch(format!("str operator must be {0}x{0}", self.jdim)));
        }
        self.str_coords(&mid)
            .ok_or_else(|| Error::Degenerate("middle operator is not in the structure algebra".into()))?;
        Ok(TKKElement { case: self.case, plus, mid, minus })
    }

    /// Grading element `δ = (0, Id, 0)`.
    pub fn grading_element(&self) -> TKKElement {
        TKKElement { mid: StrOperator(Matrix::identity(self.jdim)), ..self.zero() }
    }

    /// Graded Lie bracket.
    pub fn bracket(&self, a: &TKKElement, b: &TKKElement) -> Result<TKKElement> {
        self.check_case(a)?;
        self.check_case(b)?;
        Ok(self.bracket_unchecked(a, b))
    }

    fn bracket_unchecked(&self, a: &TKKElement, b: &TKKElement) -> TKKElement {
        let c = Rational::from(BOX_SCALE);
        let apply = |t: &StrOperator, x: &JordanElement<Rational>| t.apply(x);
        let plus = apply(&a.mid, &b.plus).sub(&apply(&b.mid, &a.plus));
        let minus = apply(&self.adjoint(&b.mid), &a.minus).sub(&apply(&self.adjoint(&a.mid), &b.minus));
        let mut mid = a.mid.commutator(&b.mid);
        if !a.plus.is_zero() && !b.minus.is_zero() {
            let bx = self.box_op(&a.plus, &b.minus).expect("same algebra");
            mid = mid.add(&bx.scale(&c));
        }
        if !b.plus.is_zero() && !a.minus.is_zero() {
            let bx = self.box_op(&b.plus, &a.minus).expect("same algebra");
            mid = mid.sub(&bx.scale(&c));
        }
        TKKElement { case: self.case, plus, mid, minus }
    }

    /// Cartan involution `θ(x, T, y) = (−y, −T†, −x)`.
    pub fn theta(&self, a: &TKKElement) -> TKKElement {
        TKKElement {
            case: self.case,
            plus: a.minus.neg(),
            mid: self.adjoint(&a.mid).scale(&-Rational::ONE),
            minus: a.plus.neg(),
        }
    }

    /// Coordinates of a structure-algebra operator: `[L-part (jdim) | Der part]`.
    /// The L-part is `T(I)`; `None` if `T ∉ str(J)`.
    pub fn str_coords(&self, t: &StrOperator) -> Option<Vec<Rational>> {
        let id = JordanElement::<Rational>::identity(self.algebra).to_coords();
        let a = t.0.mul_vec(&id);
        let d = t.0.sub(&self.left_from_coords(&a));
        let dc = self.der.coords(&flatten(&d))?;
        let mut out = a;
        out.extend(dc);
        Some(out)
    }

    fn str_from_coords(&self, c: &[Rational]) -> StrOperator {
        let mut data = self.left_from_coords(&c[..self.jdim]).into_data();
        for (m, cm) in c[self.jdim..].iter().enumerate() {
            axpy(&mut data, cm, &self.der.vectors()[m]);
        }
        StrOperator(Matrix::from_vec(self.jdim, self.jdim, data))
    }

    /// Coordinates `[plus | str | minus]` in the basis of [`TkkAlgebra::basis`].
    pub fn coords(&self, a: &TKKElement) -> Vec<Rational> {
        let mut v = a.plus.to_coords();
        v.extend(self.str_coords(&a.mid).expect("middle component lies in the structure algebra"));
        v.extend(a.minus.to_coords());
        v
    }

    pub fn from_coords(&self, c: &[Rational]) -> TKKElement {
        assert_eq!(c.len(), self.dim());
        let d = self.jdim;
        let s = self.str_dim();
        TKKElement {
            case: self.case,
            plus: JordanElement::from_coords(self.algebra, &c[..d]).expect("dimension"),
            mid: self.str_from_coords(&c[d..d + s]),
            minus: JordanElement::from_coords(self.algebra, &c[d + s..]).expect("dimension"),
        }
    }

    pub fn basis(&self, i: usize) -> TKKElement {
        let mut c = vec![Rational::ZERO; self.dim()];
        c[i] = Rational::ONE;
        self.from_coords(&c)
    }

    /// Random element with small integer coordinates.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> TKKElement {
        let c: Vec<Rational> = sampling::vector(rng, self.dim(), bound);
        self.from_coords(&c)
    }

    /// `(x, 0, 0)`.
    pub fn plus_element(&self, x: &JordanElement<Rational>) -> TKKElement {
        TKKElement { plus: x.clone(), ..self.zero() }
    }

    /// Bases of `k = {(x, D, −x)}` and `p = {(x, L_a, x)}`.
    pub fn cartan_split(&self) -> (Vec<TKKElement>, Vec<TKKElement>) {
        let mut k = Vec::new();
        let mut p = Vec::new();
        for i in 0..self.jdim {
            let e = JordanElement::basis(self.algebra, i);
            k.push(TKKElement { plus: e.clone(), minus: e.neg(), ..self.zero() });
            p.push(TKKElement { plus: e.clone(), minus: e, ..self.zero() });
        }
        for der in self.der.vectors() {
            k.push(TKKElement { mid: StrOperator(Matrix::from_vec(self.jdim, self.jdim, der.clone())), ..self.zero() });
        }
        for l in &self.left {
            p.push(TKKElement { mid: StrOperator(l.clone()), ..self.zero() });
        }
        (k, p)
    }

    /// The H-element: the central element of `k`, normalized so that
    /// `ad(z)² = −Id` on `p` and with positive trace of its `J⁺` part.
    pub fn h_element(&self) -> &TKKElement {
        self.z.get_or_init(|| self.find_h_element())
    }

    fn find_h_element(&self) -> TKKElement {
        let (k, p) = self.cartan_split();
        let kc: Vec<Vec<Rational>> = k.iter().map(|e| self.coords(e)).collect();
        // Center of k: kernel of v ↦ [v, r] for a few random r ∈ k, then
        // verified against the whole basis.
        let mut rng = rng_for(0x2a, self.case.name());
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for _ in 0..3 {
            let coeffs: Vec<Rational> = sampling::vector(&mut rng, k.len(), 3);
            let mut r = self.zero();
            for (ki, ci) in k.iter().zip(&coeffs) {
                r = r.add(&ki.scale(ci));
            }
            let cols: Vec<Vec<Rational>> = k.iter().map(|ki| self.coords(&self.bracket_unchecked(ki, &r))).collect();
            for row in 0..self.dim() {
                rows.push(cols.iter().map(|c| c[row].clone()).collect());
            }
        }
        let system = Matrix::from_rows(rows);
        let kernel = system.kernel();
        assert_eq!(kernel.len(), 1, "center of k must be one-dimensional");
        let mut v = vec![Rational::ZERO; self.dim()];
        for (ci, coords) in kernel[0].iter().zip(&kc) {
            axpy(&mut v, ci, coords);
        }
        let v = self.from_coords(&v);
        for ki in &k {
            assert!(self.bracket_unchecked(&v, ki).is_zero(), "not central in k");
        }
        // ad(v)² = −μ·Id on p; rescale by 1/√μ.
        let p0 = &p[0];
        let w = self.bracket_unchecked(&v, &self.bracket_unchecked(&v, p0));
        let (wc, pc) = (self.coords(&w), self.coords(p0));
        let idx = pc.iter().position(|x| !x.is_zero()).expect("nonzero basis vector");
        let mu = -(&wc[idx] / &pc[idx]);
        let s = rational_sqrt(&mu).expect("normalization of the H-element is rational");
        let mut z = v.scale(&(Rational::ONE / s));
        if z.plus.trace() < Rational::ZERO {
            z = z.scale(&-Rational::ONE);
        }
        z
    }

    /// Matrix of `ad(a)` in the coordinate basis (column `i` = coords of `[a, e_i]`).
    pub fn ad_matrix(&self, a: &TKKElement) -> Matrix<Rational> {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> =
            (0..n).map(|i| self.coords(&self.bracket_unchecked(a, &self.basis(i)))).collect();
        Matrix::from_fn(n, n, |r, c| cols[c][r].clone())
    }

    /// Invariant symmetric form
    /// `form((x,T,y),(x',T',y')) = β(T,T') + ⟨x,y'⟩ + ⟨y,x'⟩`, with
    /// `β(L_a, T) = ½⟨T a, I⟩` and `β([L_u,L_v], T) = ¼(⟨T u, v⟩ − ⟨T v, u⟩)`.
    pub fn invariant_form(&self, a: &TKKElement, b: &TKKElement) -> Result<Rational> {
        self.check_case(a)?;
        self.check_case(b)?;
        Ok(self.form_unchecked(a, b))
    }

    fn form_unchecked(&self, a: &TKKElement, b: &TKKElement) -> Rational {
        let outer = a.plus.trace_form_unchecked(&b.minus) + a.minus.trace_form_unchecked(&b.plus);
        let sc = self.str_coords(&a.mid).expect("structure algebra");
        outer + self.beta(&sc, &b.mid)
    }

    fn beta(&self, a_coords: &[Rational], t: &StrOperator) -> Rational {
        let half = Rational::ONE / Rational::from(2);
        let quarter = Rational::ONE / Rational::from(4);
        // ⟨u, v⟩ in coordinates is Σ g_k u_k v_k.
        let pair = |u: &[Rational], v: &[Rational]| -> Rational {
            let mut acc = Rational::ZERO;
            for k in 0..self.jdim {
                if !u[k].is_zero() && !v[k].is_zero() {
                    acc += &u[k] * &v[k] * &self.gram[k];
                }
            }
            acc
        };
        let id = JordanElement::<Rational>::identity(self.algebra).to_coords();
        let mut acc = Rational::ZERO;
        let a = &a_coords[..self.jdim];
        if a.iter().any(|x| !x.is_zero()) {
            acc += half * pair(&t.0.mul_vec(a), &id);
        }
        for (m, cm) in a_coords[self.jdim..].iter().enumerate() {
            if cm.is_zero() {
                continue;
            }
            let (i, j) = self.der_gens[m];
            // ⟨T e_i, e_j⟩ = g_j T_ji
            let term = &t.0[(j, i)] * &self.gram[j] - &t.0[(i, j)] * &self.gram[i];
            acc += &quarter * cm * term;
        }
        acc
    }

    /// Gram matrix of [`TkkAlgebra::invariant_form`] in the coordinate basis.
    pub fn form_gram(&self) -> &Matrix<Rational> {
        self.form_gram.get_or_init(|| {
            let n = self.dim();
            let basis: Vec<TKKElement> = (0..n).map(|i| self.basis(i)).collect();
            let mut g = Matrix::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    let v = self.form_unchecked(&basis[i], &basis[j]);
                    g[(j, i)] = v.clone();
                    g[(i, j)] = v;
                }
            }
            g
        })
    }

    /// `Φ: p → J_C`, `(x, L_a, x) ↦ x + (𝔦/2)·a`; intertwines `ad(z)` with `𝔦`.
    /// Fails if the element is not in `p`.
    pub fn p_to_jordan(&self, a: &TKKElement) -> Result<JordanElement<Gaussian>> {
        self.check_case(a)?;
        let sc = self.str_coords(&a.mid).expect("structure algebra");
        if a.plus != a.minus || sc[self.jdim..].iter().any(|x| !x.is_zero()) {
            return Err(Error::Degenerate("element is not in p".into()));
        }
        let half = Rational::ONE / Rational::from(2);
        let coords: Vec<Gaussian> =
            a.plus.to_coords().into_iter().zip(&sc[..self.jdim]).map(|(x, ai)| Gaussian::new(x, ai * &half)).collect();
        JordanElement::from_coords(self.algebra, &coords)
    }

    /// Inverse of [`TkkAlgebra::p_to_jordan`]: `u + 𝔦v ↦ (u, L_{2v}, u)`.
    pub fn jordan_to_p(&self, x: &JordanElement<Gaussian>) -> Result<TKKElement> {
        if x.algebra() != self.algebra {
            return Err(Error::AlgebraMismatch(x.algebra().to_string(), self.algebra.to_string()));
        }
        let c = x.to_coords();
        let u: Vec<Rational> = c.iter().map(|g| g.re.clone()).collect();
        let v: Vec<Rational> = c.iter().map(|g| &g.im * Rational::from(2)).collect();
        let u = JordanElement::from_coords(self.algebra, &u)?;
        Ok(TKKElement { case: self.case, plus: u.clone(), mid: StrOperator(self.left_from_coords(&v)), minus: u })
    }

    /// True if `a ∈ k` (θ-fixed).
    pub fn in_k(&self, a: &TKKElement) -> bool {
        self.theta(a) == *a
    }

    /// True if `a ∈ p` (θ-anti-fixed).
    pub fn in_p(&self, a: &TKKElement) -> bool {
        self.theta(a) == a.scale(&-Rational::ONE)
    }
}

/// Exact definiteness of the invariant form restricted to a list of vectors.
pub fn restricted_gram(alg: &TkkAlgebra, vs: &[TKKElement]) -> Matrix<Rational> {
    let cs: Vec<Vec<Rational>> = vs.iter().map(|v| alg.coords(v)).collect();
    let g = alg.form_gram();
    let gc: Vec<Vec<Rational>> = cs.iter().map(|c| g.mul_vec(c)).collect();
    Matrix::from_fn(vs.len(), vs.len(), |i, j| dot(&cs[i], &gc[j]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jacobi(alg: &TkkAlgebra, a: &TKKElement, b: &TKKElement, c: &TKKElement) -> TKKElement {
        let br = |x: &TKKElement, y: &TKKElement| alg.bracket(x, y).unwrap();
        br(&br(a, b), c).add(&br(&br(b, c), a)).add(&br(&br(c, a), b))
    }

    #[test]
    fn dimensions() {
        let expect = [(9, 21), (17, 35), (36, 66), (79, 133)];
        for (case, (s, g)) in TkkCase::ALL.into_iter().zip(expect) {
            if case == TkkCase::E7 {
                continue;
            }
            let alg = algebra(case);
            assert_eq!(alg.str_dim(), s);
            assert_eq!(alg.str_span_rank(), s);
            assert_eq!(alg.dim(), g);
        }
    }

    #[test]
    fn box_examples() {
        let alg = algebra(TkkCase::So12);
        let i = JordanElement::identity(DivisionAlgebra::H);
        assert_eq!(alg.left_mul(&i).unwrap().0, Matrix::identity(15));
        assert_eq!(alg.box_op(&i, &i).unwrap().0, Matrix::identity(15));
    }

    #[test]
    fn jacobi_and_antisymmetry_small_cases() {
        let mut rng = rng_for(11, "tkk");
        for case in [TkkCase::Sp3, TkkCase::U33, TkkCase::So12] {
            let alg = algebra(case);
            for _ in 0..5 {
                let (a, b, c) = (alg.random(&mut rng, 2), alg.random(&mut rng, 2), alg.random(&mut rng, 2));
                assert!(jacobi(alg, &a, &b, &c).is_zero());
                assert!(alg.bracket(&a, &a).unwrap().is_zero());
                let ab = alg.bracket(&a, &b).unwrap();
                let ba = alg.bracket(&b, &a).unwrap();
                assert!(ab.add(&ba).is_zero());
            }
        }
    }

    #[test]
    fn theta_is_an_involutive_automorphism() {
        let mut rng = rng_for(12, "theta");
        let alg = algebra(TkkCase::U33);
        for _ in 0..5 {
            let (a, b) = (alg.random(&mut rng, 2), alg.random(&mut rng, 2));
            assert_eq!(alg.theta(&alg.theta(&a)), a);
            assert_eq!(alg.theta(&alg.bracket(&a, &b).unwrap()), alg.bracket(&alg.theta(&a), &alg.theta(&b)).unwrap());
        }
    }

    #[test]
    fn h_element_axioms() {
        for case in [TkkCase::Sp3, TkkCase::U33, TkkCase::So12] {
            let alg = algebra(case);
            let z = alg.h_element();
            let half = Rational::ONE / Rational::from(2);
            assert_eq!(z.plus, JordanElement::identity(alg.jordan_algebra()).scale(&half));
            let (k, p) = alg.cartan_split();
            for kv in &k {
                assert!(alg.bracket(z, kv).unwrap().is_zero());
            }
            for pv in &p {
                let once = alg.bracket(z, pv).unwrap();
                assert!(alg.in_p(&once));
                let twice = alg.bracket(z, &once).unwrap();
                assert_eq!(twice, pv.scale(&-Rational::ONE));
                // Φ ∘ ad(z) = 𝔦 · Φ
                let lhs = alg.p_to_jordan(&once).unwrap();
                let phi = alg.p_to_jordan(pv).unwrap();
                assert_eq!(lhs, phi.map_scalars(|g| g.mul_i()));
                assert_eq!(alg.jordan_to_p(&phi).unwrap(), *pv);
            }
        }
    }

    #[test]
    fn invariant_form_properties() {
        let mut rng = rng_for(13, "form");
        for case in [TkkCase::Sp3, TkkCase::U33, TkkCase::So12] {
            let alg = algebra(case);
            let g = alg.form_gram();
            assert!(g.is_symmetric());
            assert_eq!(g.rank(), alg.dim());
            let (k, p) = alg.cartan_split();
            assert!(restricted_gram(alg, &k).is_negative_definite());
            assert!(restricted_gram(alg, &p).is_positive_definite());
            for _ in 0..5 {
                let (a, b, c) = (alg.random(&mut rng, 2), alg.random(&mut rng, 2), alg.random(&mut rng, 2));
                let lhs = alg.invariant_form(&alg.bracket(&c, &a).unwrap(), &b).unwrap()
                    + alg.invariant_form(&a, &alg.bracket(&c, &b).unwrap()).unwrap();
                assert!(lhs.is_zero());
                assert_eq!(alg.invariant_form(&a, &b).unwrap(), alg.invariant_form(&b, &a).unwrap());
            }
        }
    }
}
