//! Exact scalar rings: the rationals and the Gaussian rationals `Q(i)`.
//!
//! Every algebraic object in the crate is generic over [`Scalar`]. Working over
//! [`Gaussian`] is how complexifications (`O ⊗ C` and friends) are obtained:
//! the Cayley-Dickson imaginary units and the Gaussian unit `𝔦` commute and
//! never mix.

use std::fmt;
use std::hash::Hash;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use dashu_base::{SquareRootRem, UnsignedAbs};
use dashu_int::{IBig, UBig};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision rational number.
pub type Rational = dashu_ratio::RBig;

/// Tag naming the base ring a value lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseRing {
    Rational,
    Gaussian,
}

/// An exact commutative field with an involution, used as the coefficient ring
/// of every Cayley-Dickson level and matrix in the crate.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    const RING: BaseRing;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: Rational) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Complex conjugation of the base ring (identity over `Q`).
    fn conj(&self) -> Self;
    fn re(&self) -> Rational;
    fn im(&self) -> Rational;
    /// Builds `re + 𝔦·im`; `None` over `Q` when `im ≠ 0`.
    fn from_parts(re: Rational, im: Rational) -> Option<Self>;
    /// Exact square root when one exists in the ring.
    fn sqrt(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self.clone() * inv)
    }

    /// `self · conj(self)`, a non-negative rational.
    fn abs_sq(&self) -> Rational {
        let re = self.re();
        let im = self.im();
        &re * &re + &im * &im
    }

    /// Floating view, for diagnostics and numeric root isolation only.
    fn to_c64(&self) -> (f64, f64) {
        (to_f64(&self.re()), to_f64(&self.im()))
    }
}

impl Scalar for Rational {
    const RING: BaseRing = BaseRing::Rational;

    fn zero() -> Self {
        Rational::ZERO
    }
    fn one() -> Self {
        Rational::ONE
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn inv(&self) -> Option<Self> {
        if Rational::is_zero(self) {
            None
        } else {
            Some(Rational::ONE / self)
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn re(&self) -> Rational {
        self.clone()
    }
    fn im(&self) -> Rational {
        Rational::ZERO
    }
    fn from_parts(re: Rational, im: Rational) -> Option<Self> {
        Rational::is_zero(&im).then_some(re)
    }
    fn sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }
}

/// Exact square root of a non-negative rational, if it is a perfect square.
/// `n / d` as an exact rational.
///
/// # Panics
/// If `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::from(n) / Rational::from(d)
}

pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if *r < Rational::ZERO {
        return None;
    }
    let num = r.numerator().clone().unsigned_abs();
    let sn = perfect_sqrt(&num)?;
    let sd = perfect_sqrt(r.denominator())?;
    Some(Rational::from_parts(IBig::from(sn), sd))
}

fn perfect_sqrt(n: &UBig) -> Option<UBig> {
    let (s, rem) = n.sqrt_rem();
    rem.is_zero().then_some(s)
}

/// Lossy conversion used only for floating diagnostics.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().value()
}

/// Gaussian rational `re + 𝔦·im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    /// The imaginary unit `𝔦` of the base ring.
    pub fn i() -> Self {
        Gaussian::new(Rational::ZERO, Rational::ONE)
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Gaussian::new(Rational::from(re), Rational::from(im))
    }

    /// Multiplication by `𝔦`.
    pub fn mul_i(&self) -> Self {
        Gaussian::new(-&self.im, self.re.clone())
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "({})i", self.im)
        } else {
            write!(f, "{}+({})i", self.re, self.im)
        }
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Add<&Gaussian> for Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(self.re + &rhs.re, self.im + &rhs.im)
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Sub<&Gaussian> for Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: &Gaussian) -> Gaussian {
        Gaussian::new(self.re - &rhs.re, self.im - &rhs.im)
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: Gaussian) -> Gaussian {
        self * &rhs
    }
}

impl Mul<&Gaussian> for Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: &Gaussian) -> Gaussian {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Gaussian::new(self.re * &rhs.re, Rational::ZERO);
        }
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        Gaussian::new(re, im)
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl AddAssign for Gaussian {
    fn add_assign(&mut self, rhs: Gaussian) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl AddAssign<&Gaussian> for Gaussian {
    fn add_assign(&mut self, rhs: &Gaussian) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign for Gaussian {
    fn sub_assign(&mut self, rhs: Gaussian) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl SubAssign<&Gaussian> for Gaussian {
    fn sub_assign(&mut self, rhs: &Gaussian) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Sum for Gaussian {
    fn sum<I: Iterator<Item = Gaussian>>(iter: I) -> Gaussian {
        iter.fold(Gaussian::default(), |acc, x| acc + x)
    }
}

impl From<Rational> for Gaussian {
    fn from(re: Rational) -> Self {
        Gaussian::new(re, Rational::ZERO)
    }
}

impl Scalar for Gaussian {
    const RING: BaseRing = BaseRing::Gaussian;

    fn zero() -> Self {
        Gaussian::default()
    }
    fn one() -> Self {
        Gaussian::new(Rational::ONE, Rational::ZERO)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_rational(r: Rational) -> Self {
        Gaussian::from(r)
    }
    fn inv(&self) -> Option<Self> {
        let n = self.abs_sq();
        if n.is_zero() {
            return None;
        }
        Some(Gaussian::new(&self.re / &n, -(&self.im / &n)))
    }
    fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -&self.im)
    }
    fn re(&self) -> Rational {
        self.re.clone()
    }
    fn im(&self) -> Rational {
        self.im.clone()
    }
    fn from_parts(re: Rational, im: Rational) -> Option<Self> {
        Some(Gaussian::new(re, im))
    }
    fn sqrt(&self) -> Option<Self> {
        if self.im.is_zero() {
            return if self.re >= Rational::ZERO {
                rational_sqrt(&self.re).map(Gaussian::from)
            } else {
                rational_sqrt(&-&self.re).map(|s| Gaussian::new(Rational::ZERO, s))
            };
        }
        // (x + 𝔦y)² = a + 𝔦b with x² = (|z| + a)/2, y = b/(2x).
        let modulus = rational_sqrt(&self.abs_sq())?;
        let x = rational_sqrt(&((modulus + &self.re) / Rational::from(2)))?;
        let y = &self.im / (Rational::from(2) * &x);
        Some(Gaussian::new(x, y))
    }
}
