//! Exact recovery of rational roots and of Gaussian rationals with a given
//! norm. Floating point only proposes candidates; every answer is verified
//! exactly before it is returned.

use dashu_base::UnsignedAbs;
use dashu_int::{IBig, UBig};

use crate::scalar::{rational_sqrt, to_f64, Gaussian, Rational};

#[derive(Clone, Copy, Debug)]
struct C64(f64, f64);

impl C64 {
    fn add(self, o: C64) -> C64 {
        C64(self.0 + o.0, self.1 + o.1)
    }
    fn sub(self, o: C64) -> C64 {
        C64(self.0 - o.0, self.1 - o.1)
    }
    fn mul(self, o: C64) -> C64 {
        C64(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn div(self, o: C64) -> C64 {
        let d = o.0 * o.0 + o.1 * o.1;
        C64((self.0 * o.0 + self.1 * o.1) / d, (self.1 * o.0 - self.0 * o.1) / d)
    }
    fn abs(self) -> f64 {
        self.0.hypot(self.1)
    }
}

/// Durand-Kerner approximations of all roots of a monic polynomial given by
/// `[c_0, …, c_{n-1}]` (leading coefficient 1 omitted).
fn approximate_roots(monic: &[f64]) -> Vec<C64> {
    let n = monic.len();
    let eval = |z: C64| {
        let mut acc = C64(1.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc.mul(z).add(C64(*c, 0.0));
        }
        acc
    };
    let radius = 1.0 + monic.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<C64> = (0..n)
        .map(|k| {
            let t = 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            C64(radius * t.cos(), radius * t.sin())
        })
        .collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = C64(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den = den.mul(z[i].sub(z[j]));
                }
            }
            let step = eval(z[i]).div(den);
            if step.0.is_finite() && step.1.is_finite() {
                z[i] = z[i].sub(step);
                delta = delta.max(step.abs());
            }
        }
        if delta < 1e-15 * radius {
            break;
        }
    }
    z
}

fn eval(poly: &[Rational], x: &Rational) -> Rational {
    poly.iter().rev().fold(Rational::ZERO, |acc, c| acc * x + c)
}

/// Exact division by `(t − r)`; `poly` must vanish at `r`.
fn deflate(poly: &[Rational], r: &Rational) -> Vec<Rational> {
    let n = poly.len() - 1;
    let mut out = vec![Rational::ZERO; n];
    let mut carry = Rational::ZERO;
    for k in (0..n).rev() {
        carry = carry * r + &poly[k + 1];
        out[k] = carry.clone();
    }
    out
}

/// All roots (with multiplicity, ascending) of `Σ c_k t^k` when they are all
/// rational; `None` otherwise or when the floating point candidates cannot be
/// confirmed.
pub fn rational_roots(coeffs: &[Rational]) -> Option<Vec<Rational>> {
    let mut poly: Vec<Rational> = coeffs.to_vec();
    while poly.len() > 1 && poly.last().is_some_and(|c| *c == Rational::ZERO) {
        poly.pop();
    }
    let mut roots = Vec::new();
    while poly.len() > 1 && poly[0] == Rational::ZERO {
        poly.remove(0);
        roots.push(Rational::ZERO);
    }
    while poly.len() > 1 {
        let lead = poly.last().expect("nonempty").clone();
        let monic: Vec<f64> = poly[..poly.len() - 1].iter().map(|c| to_f64(&(c.clone() / &lead))).collect();
        let approx = approximate_roots(&monic);
        let found = approx.iter().find_map(|z| confirm(&poly, z.0));
        let r = found?;
        poly = deflate(&poly, &r);
        roots.push(r);
    }
    roots.sort();
    Some(roots)
}

fn confirm(poly: &[Rational], x: f64) -> Option<Rational> {
    for tol in [1e-3, 1e-5, 1e-7, 1e-9, 1e-11] {
        let w = tol * x.abs().max(1.0);
        let lo = Rational::try_from(x - w).ok()?;
        let hi = Rational::try_from(x + w).ok()?;
        let r = Rational::simplest_in(lo, hi);
        if eval(poly, &r) == Rational::ZERO {
            return Some(r);
        }
    }
    None
}

/// Largest integer handed to the linear two-square scan.
const TWO_SQUARES_LIMIT: u64 = 1 << 44;
/// Largest integer handed to the greedy four-square search.
const FOUR_SQUARES_LIMIT: u64 = 1 << 62;

/// Some `z ∈ Q(𝔦)` with `|z|² = q`, if one is found.
pub fn gaussian_with_norm(q: &Rational) -> Option<Gaussian> {
    if *q < Rational::ZERO {
        return None;
    }
    if let Some(r) = rational_sqrt(q) {
        return Some(Gaussian::new(r, Rational::ZERO));
    }
    // q = a/b = (ab)/b², so it suffices to write ab as a sum of two squares.
    let (num, den) = (q.numerator().clone(), q.denominator().clone());
    let prod: UBig = num.unsigned_abs() * &den;
    let n = u64::try_from(prod).ok().filter(|n| *n <= TWO_SQUARES_LIMIT)?;
    let mut x = 0u64;
    while x * x <= n {
        let rest = n - x * x;
        let y = rest.isqrt();
        if y * y == rest {
            let d = Rational::from(IBig::from(den.clone()));
            return Some(Gaussian::new(Rational::from(x) / &d, Rational::from(y) / &d));
        }
        x += 1;
    }
    None
}

fn isqrt_exact(n: u64) -> Option<u64> {
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// Rationals `(x₁, x₂, x₃, x₄)` with `Σ x_k² = q` for `q ≥ 0` (Lagrange);
/// `None` only when the search bound is exceeded.
pub fn four_squares(q: &Rational) -> Option<[Rational; 4]> {
    if *q < Rational::ZERO {
        return None;
    }
    // q = (ab)/b²
    let (num, den) = (q.numerator().clone(), q.denominator().clone());
    let prod: UBig = num.unsigned_abs() * &den;
    let n = u64::try_from(prod).ok().filter(|n| *n <= FOUR_SQUARES_LIMIT)?;
    let d = Rational::from(IBig::from(den));
    let mut a = n.isqrt();
    loop {
        let r1 = n - a * a;
        let mut b = r1.isqrt();
        loop {
            let r2 = r1 - b * b;
            let mut c = r2.isqrt();
            // Only a few c need to be tried before a hit or moving on.
            for _ in 0..64 {
                if let Some(e) = isqrt_exact(r2 - c * c) {
                    return Some([a, b, c, e].map(|x| Rational::from(x) / &d));
                }
                if c == 0 {
                    break;
                }
                c -= 1;
            }
            if b == 0 {
                break;
            }
            b -= 1;
        }
        if a == 0 {
            return None;
        }
        a -= 1;
    }
}
