//! Seeded random generation of exact test data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cayley_dickson::CDNumber;
use crate::scalar::{Rational, Scalar};

pub type SampleRng = ChaCha8Rng;

/// Deterministic generator for a seed and a textual stream label, so that
/// independent sampling tasks do not depend on execution order.
pub fn rng_for(seed: u64, stream: &str) -> SampleRng {
    // FNV-1a keeps the derivation stable across platforms and releases.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in stream.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h.rotate_left(17))
}

/// Small random integer in `[-bound, bound]`.
pub fn small_int<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

/// Random scalar with small integer parts (both parts over `Q(i)`).
pub fn scalar<F: Scalar, R: Rng + ?Sized>(rng: &mut R, bound: i64) -> F {
    let re = Rational::from(small_int(rng, bound));
    let im = Rational::from(small_int(rng, bound));
    F::from_parts(re.clone(), im).unwrap_or_else(|| F::from_rational(re))
}

/// Random nonzero scalar.
pub fn nonzero_scalar<F: Scalar, R: Rng + ?Sized>(rng: &mut R, bound: i64) -> F {
    loop {
        let s: F = scalar(rng, bound);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Random Cayley-Dickson element of a given level.
pub fn cd<F: Scalar, R: Rng + ?Sized>(rng: &mut R, level: usize, bound: i64) -> CDNumber<F> {
    let coeffs = (0..1 << level).map(|_| scalar(rng, bound)).collect();
    CDNumber::new(coeffs).expect("valid level")
}

/// Random vector of scalars.
pub fn vector<F: Scalar, R: Rng + ?Sized>(rng: &mut R, len: usize, bound: i64) -> Vec<F> {
    (0..len).map(|_| scalar(rng, bound)).collect()
}
