//! Seeded generators for the randomized smoke layer.
//!
//! Coefficients are small fractions (numerators in `[-9, 9]`, denominators in
//! `[1, 9]`) so products stay cheap. All generators draw from ChaCha8, whose
//! stream is stable for a given seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::Rational;
use crate::octonion::Octonion;

pub type SmokeRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SmokeRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream derived from `seed` and a stream label, so suites do
/// not share draws.
pub fn stream_rng(seed: u64, label: &str) -> SmokeRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let stream = label.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    });
    rng.set_stream(stream);
    rng
}

pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

pub fn random_octonion<R: Rng + ?Sized>(rng: &mut R) -> Octonion {
    Octonion::new(std::array::from_fn(|_| random_rational(rng)))
}

pub fn random_nonzero_octonion<R: Rng + ?Sized>(rng: &mut R) -> Octonion {
    loop {
        let x = random_octonion(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Exact unit vector supported on the given basis coordinates.
///
/// Inverse stereographic projection of a random rational point: for
/// `w ∈ Q^{d-1}` with `N = |w|²`, the point `(2w, N - 1) / (N + 1)` lies on
/// the unit sphere in `Q^d`.
pub fn random_unit_on<R: Rng + ?Sized>(rng: &mut R, coords: &[usize]) -> Octonion {
    assert!(!coords.is_empty(), "need at least one coordinate");
    let w: Vec<Rational> = (1..coords.len()).map(|_| random_rational(rng)).collect();
    let norm: Rational = w.iter().map(Rational::square).sum();
    let denom = &norm + Rational::one();
    let mut values: Vec<Rational> = w.iter().map(|x| x * Rational::from(2)).collect();
    values.push(&norm - Rational::one());
    let mut coeffs: [Rational; 8] = Default::default();
    for (&n, v) in coords.iter().zip(values) {
        coeffs[n] = v.checked_div(&denom).expect("N + 1 > 0");
    }
    Octonion::new(coeffs)
}

/// Random exact unit imaginary octonion.
pub fn random_unit_imaginary<R: Rng + ?Sized>(rng: &mut R) -> Octonion {
    random_unit_on(rng, &[1, 2, 3, 4, 5, 6, 7])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let a: Vec<Octonion> = {
            let mut rng = seeded_rng(7);
            (0..16).map(|_| random_octonion(&mut rng)).collect()
        };
        let b: Vec<Octonion> = {
            let mut rng = seeded_rng(7);
            (0..16).map(|_| random_octonion(&mut rng)).collect()
        };
        assert_eq!(a, b);
        let mut other = seeded_rng(8);
        assert_ne!(a[0], random_octonion(&mut other));
    }

    #[test]
    fn labelled_streams_differ() {
        let mut a = stream_rng(0, "moufang");
        let mut b = stream_rng(0, "norm");
        assert_ne!(random_octonion(&mut a), random_octonion(&mut b));
    }

    #[test]
    fn coefficient_bounds() {
        let mut rng = seeded_rng(1);
        for _ in 0..500 {
            let q = random_rational(&mut rng);
            assert!(q.denom() <= &9.into());
            let n = q.numer().clone() * q.denom();
            assert!(n <= 81.into() && n >= (-81).into());
        }
    }

    #[test]
    fn unit_vectors_are_exact() {
        let mut rng = seeded_rng(3);
        for _ in 0..50 {
            let u = random_unit_imaginary(&mut rng);
            assert!(u.is_imaginary());
            assert_eq!(u.norm_sq(), Rational::one());
            let v = random_unit_on(&mut rng, &[1, 2, 3, 4, 5, 6]);
            assert!(v.coeff(0).is_zero() && v.coeff(7).is_zero());
            assert_eq!(v.norm_sq(), Rational::one());
        }
    }
}
