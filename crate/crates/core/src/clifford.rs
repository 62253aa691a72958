//! Clifford algebras `Cl(p, q)` over exact rationals.
//!
//! Generators are numbered from 1. The first `p` square to `+1`, the
//! remaining `q` to `-1`. A blade is a bitmask (bit `k - 1` for `e_k`) read
//! in ascending generator order.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::check::{CheckResult, Status, Witness};
use crate::exact::{Matrix, Rational};
use crate::octonion::{left_mult_matrix, Octonion};

pub const MAX_GENERATORS: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("signature ({p},{q}) exceeds {MAX_GENERATORS} generators")]
    SignatureTooLarge { p: usize, q: usize },
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },
    #[error("generator e{index} out of range for {dim} generators")]
    GeneratorOutOfRange { index: usize, dim: usize },
    #[error("generator e{0} repeated in blade")]
    RepeatedGenerator(usize),
    #[error("representation {name} expects {expected} square matrices of size {size}, got {got}")]
    BadGenerators {
        name: RepName,
        expected: usize,
        size: usize,
        got: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self, CliffordError> {
        if p + q > MAX_GENERATORS {
            return Err(CliffordError::SignatureTooLarge { p, q });
        }
        Ok(Signature { p, q })
    }

    pub fn p(self) -> usize {
        self.p
    }

    pub fn q(self) -> usize {
        self.q
    }

    pub fn dim(self) -> usize {
        self.p + self.q
    }

    /// `e_k²` as ±1.
    pub fn square_sign(self, k: usize) -> i8 {
        debug_assert!(k >= 1 && k <= self.dim());
        if k <= self.p {
            1
        } else {
            -1
        }
    }

    /// All `2^n` basis blades.
    pub fn blades(self) -> impl Iterator<Item = Blade> {
        (0..(1u32 << self.dim())).map(|b| Blade(b as u16))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

/// Product of distinct generators in ascending order; the empty set is the
/// scalar blade.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Blade(u16);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_bits(bits: u16) -> Self {
        Blade(bits)
    }

    pub fn generator(k: usize) -> Self {
        assert!((1..=MAX_GENERATORS).contains(&k));
        Blade(1 << (k - 1))
    }

    /// Blade for a set of generator indices given in any order; repeated
    /// indices are rejected rather than cancelled.
    pub fn from_indices(indices: &[usize]) -> Result<Self, CliffordError> {
        let mut bits = 0u16;
        for &k in indices {
            if !(1..=MAX_GENERATORS).contains(&k) {
                return Err(CliffordError::GeneratorOutOfRange {
                    index: k,
                    dim: MAX_GENERATORS,
                });
            }
            let b = 1 << (k - 1);
            if bits & b != 0 {
                return Err(CliffordError::RepeatedGenerator(k));
            }
            bits |= b;
        }
        Ok(Blade(bits))
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_even(self) -> bool {
        self.grade().is_multiple_of(2)
    }

    pub fn indices(self) -> Vec<usize> {
        (0..16)
            .filter(|b| self.0 & (1 << b) != 0)
            .map(|b| b + 1)
            .collect()
    }

    fn max_index(self) -> usize {
        16 - self.0.leading_zeros() as usize
    }

    /// `self · other = sign · blade`, with the sign from reordering into
    /// ascending order plus the squares of shared generators.
    pub fn product(self, other: Blade, sig: Signature) -> (i8, Blade) {
        let mut swaps = 0u32;
        let mut rest = other.0;
        while rest != 0 {
            let j = rest.trailing_zeros();
            swaps += (self.0 >> (j + 1)).count_ones();
            rest &= rest - 1;
        }
        let mut sign: i8 = if swaps.is_multiple_of(2) { 1 } else { -1 };
        let mut common = self.0 & other.0;
        while common != 0 {
            let j = common.trailing_zeros() as usize;
            sign *= sig.square_sign(j + 1);
            common &= common - 1;
        }
        (sign, Blade(self.0 ^ other.0))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for k in self.indices() {
            write!(f, "e{k}")?;
        }
        Ok(())
    }
}

/// Element of `Cl(p, q)`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector {
    sig: Signature,
    terms: BTreeMap<Blade, Rational>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: Signature, value: Rational) -> Self {
        Multivector::zero(sig).with_term(Blade::SCALAR, value)
    }

    pub fn generator(sig: Signature, k: usize) -> Result<Self, CliffordError> {
        Multivector::blade(sig, &[k], Rational::one())
    }

    /// `coeff · e_{a}e_{b}…` for the given generators *in the given order*;
    /// the sign of reordering is absorbed into the coefficient.
    pub fn blade(
        sig: Signature,
        indices: &[usize],
        coeff: Rational,
    ) -> Result<Self, CliffordError> {
        let mut out = Multivector::scalar(sig, coeff);
        for &k in indices {
            if k == 0 || k > sig.dim() {
                return Err(CliffordError::GeneratorOutOfRange {
                    index: k,
                    dim: sig.dim(),
                });
            }
            if out.terms.keys().any(|b| b.0 & (1 << (k - 1)) != 0) {
                return Err(CliffordError::RepeatedGenerator(k));
            }
            out = out
                .geo_mul(&Multivector::zero(sig).with_term(Blade::generator(k), Rational::one()))?;
        }
        Ok(out)
    }

    pub fn from_terms(
        sig: Signature,
        terms: impl IntoIterator<Item = (Blade, Rational)>,
    ) -> Result<Self, CliffordError> {
        let mut out = Multivector::zero(sig);
        for (b, c) in terms {
            if b.max_index() > sig.dim() {
                return Err(CliffordError::GeneratorOutOfRange {
                    index: b.max_index(),
                    dim: sig.dim(),
                });
            }
            out.accumulate(b, c);
        }
        Ok(out)
    }

    fn with_term(mut self, b: Blade, c: Rational) -> Self {
        self.accumulate(b, c);
        self
    }

    fn accumulate(&mut self, b: Blade, c: Rational) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&b) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(b, sum);
        }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> &BTreeMap<Blade, Rational> {
        &self.terms
    }

    pub fn coeff(&self, b: Blade) -> Rational {
        self.terms.get(&b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Scalar value if the multivector has no other terms.
    pub fn as_scalar(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Blade::SCALAR).cloned(),
            _ => None,
        }
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|b| b.is_even())
    }

    pub fn scale(&self, s: &Rational) -> Multivector {
        let mut out = Multivector::zero(self.sig);
        for (b, c) in &self.terms {
            out.accumulate(*b, c * s);
        }
        out
    }

    fn check_sig(&self, other: &Multivector) -> Result<(), CliffordError> {
        if self.sig != other.sig {
            return Err(CliffordError::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector, CliffordError> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.accumulate(*b, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Multivector) -> Result<Multivector, CliffordError> {
        self.add(&other.scale(&Rational::from(-1)))
    }

    pub fn geo_mul(&self, other: &Multivector) -> Result<Multivector, CliffordError> {
        self.check_sig(other)?;
        let mut out = Multivector::zero(self.sig);
        for (ba, ca) in &self.terms {
            for (bb, cb) in &other.terms {
                let (sign, blade) = ba.product(*bb, self.sig);
                let c = ca * cb;
                out.accumulate(blade, if sign > 0 { c } else { -c });
            }
        }
        Ok(out)
    }

    /// `ab + ba`.
    pub fn anticommutator(&self, other: &Multivector) -> Result<Multivector, CliffordError> {
        self.geo_mul(other)?.add(&other.geo_mul(self)?)
    }

    pub fn even_part(&self) -> Multivector {
        Multivector {
            sig: self.sig,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.is_even())
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| {
                if *b == Blade::SCALAR {
                    c.to_string()
                } else {
                    format!("{c} {b}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

pub fn geo_mul(a: &Multivector, b: &Multivector) -> Result<Multivector, CliffordError> {
    a.geo_mul(b)
}

pub fn even_part(a: &Multivector) -> Multivector {
    a.even_part()
}

/// Which even-subalgebra isomorphism to realize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EmbedVariant {
    /// `Cl(p,q) → Cl⁰(p,q+1)`, `e_k ↦ e_k e_{n+1}`.
    RaiseQ,
    /// `Cl(p,q) → Cl⁰(q+1,p)`, `e_k ↦ e_1 e_{k+1}`.
    RaiseP,
}

impl EmbedVariant {
    pub fn name(self) -> &'static str {
        match self {
            EmbedVariant::RaiseQ => "raise_q",
            EmbedVariant::RaiseP => "raise_p",
        }
    }

    pub fn target(self, sig: Signature) -> Result<Signature, CliffordError> {
        match self {
            EmbedVariant::RaiseQ => Signature::new(sig.p, sig.q + 1),
            EmbedVariant::RaiseP => Signature::new(sig.q + 1, sig.p),
        }
    }

    /// Image of the source generator `e_k` as a product of two target
    /// generators.
    ///
    /// For `RaiseP` the distinguished `e_1` squares to `+1`, so `e_1 e_t`
    /// squares to `-e_t²`: positive source generators must land on negative
    /// target slots and vice versa. With one of `p, q` zero this is exactly
    /// `e_k ↦ e_1 e_{k+1}`.
    pub fn generator_image(self, sig: Signature, k: usize) -> (usize, usize) {
        let n = sig.dim();
        match self {
            EmbedVariant::RaiseQ => (k, n + 1),
            EmbedVariant::RaiseP => {
                if k <= sig.p {
                    (1, sig.q + 1 + k)
                } else {
                    (1, 1 + (k - sig.p))
                }
            }
        }
    }
}

/// Extends the generator map multiplicatively along each blade's ascending
/// factorization. The result lies entirely in the even subalgebra.
pub fn embed_even(a: &Multivector, variant: EmbedVariant) -> Result<Multivector, CliffordError> {
    let sig = a.signature();
    let target = variant.target(sig)?;
    let images: Vec<Multivector> = (1..=sig.dim())
        .map(|k| {
            let (x, y) = variant.generator_image(sig, k);
            Multivector::blade(target, &[x, y], Rational::one())
        })
        .collect::<Result<_, _>>()?;
    let mut out = Multivector::zero(target);
    for (blade, coeff) in a.terms() {
        let mut term = Multivector::scalar(target, coeff.clone());
        for k in blade.indices() {
            term = term.geo_mul(&images[k - 1])?;
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Verifies that the images of the generators of `Cl(p,q)` under
/// [`embed_even`] are even and satisfy the defining relations of `Cl(p,q)`.
pub fn check_embedding_hom(
    p: usize,
    q: usize,
    variant: EmbedVariant,
) -> Result<CheckResult, CliffordError> {
    let sig = Signature::new(p, q)?;
    variant.target(sig)?;
    let name = format!("clifford.embedding.{}.cl({p},{q})", variant.name());
    let reference = match variant {
        EmbedVariant::RaiseQ => "Cl(p,q) ≃ Cl^0(p,q+1) via e_k -> e_k e_{n+1}",
        EmbedVariant::RaiseP => "Cl(p,q) ≃ Cl^0(q+1,p) via e_k -> e_1 e_{k+1}",
    };
    let gens: Vec<Multivector> = (1..=sig.dim())
        .map(|k| embed_even(&Multivector::generator(sig, k)?, variant))
        .collect::<Result<_, _>>()?;
    let mut witness = None;
    'outer: for k in 1..=sig.dim() {
        let img = &gens[k - 1];
        if !img.is_even() {
            witness = Some(Witness::new(
                format!("image of e{k}"),
                img,
                "even multivector",
            ));
            break;
        }
        for l in k..=sig.dim() {
            let anti = img.anticommutator(&gens[l - 1])?;
            let expected = if k == l {
                Rational::from(2 * sig.square_sign(k) as i64)
            } else {
                Rational::zero()
            };
            if anti.as_scalar() != Some(expected.clone()) {
                witness = Some(Witness::new(
                    format!("φ(e{k})φ(e{l}) + φ(e{l})φ(e{k})"),
                    anti,
                    expected,
                ));
                break 'outer;
            }
        }
    }
    Ok(CheckResult::decide(name, reference, witness, Status::Fail))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepName {
    Gamma8,
    Gamma7,
    Gamma6,
}

impl fmt::Display for RepName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepName::Gamma8 => "gamma8",
            RepName::Gamma7 => "gamma7",
            RepName::Gamma6 => "gamma6",
        })
    }
}

/// Matrices assigned to the generators `e_1..e_n` of a Clifford algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepGenerators {
    name: RepName,
    matrices: Vec<Matrix>,
    signature: Signature,
}

impl RepGenerators {
    pub fn new(
        name: RepName,
        matrices: Vec<Matrix>,
        signature: Signature,
    ) -> Result<Self, CliffordError> {
        let size = matrices.first().map_or(0, Matrix::rows);
        let ok =
            matrices.len() == signature.dim() && matrices.iter().all(|m| m.shape() == (size, size));
        if !ok {
            return Err(CliffordError::BadGenerators {
                name,
                expected: signature.dim(),
                size,
                got: matrices.len(),
            });
        }
        Ok(RepGenerators {
            name,
            matrices,
            signature,
        })
    }

    pub fn name(&self) -> RepName {
        self.name
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn size(&self) -> usize {
        self.matrices[0].rows()
    }
}

/// 16×16 matrix `[[0, L(a)], [L(a*), 0]]` acting on columns of two octonions.
pub fn octonionic_block(a: &Octonion) -> Matrix {
    let upper = left_mult_matrix(a);
    let lower = left_mult_matrix(&a.conjugate());
    Matrix::from_fn(16, 16, |r, c| match (r < 8, c < 8) {
        (true, false) => upper.get(r, c - 8).clone(),
        (false, true) => lower.get(r - 8, c).clone(),
        _ => Rational::zero(),
    })
}

/// 16×16 matrix `diag(upper, lower)` of two 8×8 blocks.
pub fn left_mult_block_diag(upper: &Matrix, lower: &Matrix) -> Matrix {
    Matrix::from_fn(16, 16, |r, c| match (r < 8, c < 8) {
        (true, true) => upper.get(r, c).clone(),
        (false, false) => lower.get(r - 8, c - 8).clone(),
        _ => Rational::zero(),
    })
}

pub fn build_rep(name: RepName) -> RepGenerators {
    let (matrices, sig) = match name {
        RepName::Gamma8 => (
            (0..8)
                .map(|k| octonionic_block(&Octonion::basis(k)))
                .collect(),
            Signature::new(8, 0),
        ),
        RepName::Gamma7 => (
            (1..=7)
                .map(|k| left_mult_matrix(&Octonion::basis(k)))
                .collect(),
            Signature::new(0, 7),
        ),
        RepName::Gamma6 => (
            (1..=6)
                .map(|k| left_mult_matrix(&(&Octonion::basis(k) * &Octonion::basis(7))))
                .collect(),
            Signature::new(0, 6),
        ),
    };
    RepGenerators::new(name, matrices, sig.expect("fixed signature"))
        .expect("well-formed generators")
}

/// `M_k M_l + M_l M_k = 2 s_k δ_kl I` for every generator pair.
pub fn check_clifford_relations(rep: &RepGenerators) -> CheckResult {
    let name = format!("representations.{}.clifford-relations", rep.name);
    let reference = match rep.name {
        RepName::Gamma8 => "Γ_k = γ_8(e_k) = [[0, i_k], [i_k*, 0]], Cl(8,0) -> M_2(O)",
        RepName::Gamma7 => "γ_7(e_k) = i_k acting by successive left multiplication, Cl(0,7)",
        RepName::Gamma6 => "γ_6(e_k) = i_k i_7, Cl(0,6)",
    };
    let n = rep.size();
    let identity = Matrix::identity(n);
    let mut witness = None;
    'outer: for k in 0..rep.matrices.len() {
        for l in k..rep.matrices.len() {
            let (a, b) = (&rep.matrices[k], &rep.matrices[l]);
            let anti = a
                .mat_mul(b)
                .and_then(|ab| b.mat_mul(a).and_then(|ba| ab.add(&ba)))
                .expect("square generators of equal size");
            let expected = if k == l {
                identity.scale(&Rational::from(2 * rep.signature.square_sign(k + 1) as i64))
            } else {
                Matrix::zeros(n, n)
            };
            if let Some((r, c)) = anti.first_difference(&expected) {
                witness = Some(Witness::new(
                    format!("generators ({}, {}) entry ({r},{c})", k + 1, l + 1),
                    anti.get(r, c),
                    expected.get(r, c),
                ));
                break 'outer;
            }
        }
    }
    CheckResult::decide(name, reference, witness, Status::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn e(s: Signature, ks: &[usize]) -> Multivector {
        Multivector::blade(s, ks, Rational::one()).unwrap()
    }

    fn scalar(s: Signature, n: i64) -> Multivector {
        Multivector::scalar(s, Rational::from(n))
    }

    #[test]
    fn generator_squares_follow_signature() {
        let neg = sig(0, 7);
        assert_eq!(
            e(neg, &[1]).geo_mul(&e(neg, &[1])).unwrap(),
            scalar(neg, -1)
        );
        let pos = sig(8, 0);
        assert_eq!(e(pos, &[1]).geo_mul(&e(pos, &[1])).unwrap(), scalar(pos, 1));
        let mixed = sig(1, 1);
        assert_eq!(
            e(mixed, &[2]).geo_mul(&e(mixed, &[2])).unwrap(),
            scalar(mixed, -1)
        );
    }

    #[test]
    fn anticommutation() {
        for s in [sig(3, 0), sig(0, 3), sig(1, 2)] {
            let e21 = e(s, &[2]).geo_mul(&e(s, &[1])).unwrap();
            let e12 = e(s, &[1, 2]);
            assert_eq!(e21, e12.scale(&Rational::from(-1)));
        }
    }

    #[test]
    fn blade_from_unordered_indices() {
        let s = sig(0, 3);
        // e3 e1 = -e1 e3
        let m = Multivector::blade(s, &[3, 1], Rational::one()).unwrap();
        assert_eq!(
            m.coeff(Blade::from_indices(&[1, 3]).unwrap()),
            Rational::from(-1)
        );
        assert_eq!(
            Multivector::blade(s, &[2, 2], Rational::one()),
            Err(CliffordError::RepeatedGenerator(2))
        );
        assert!(Multivector::blade(s, &[4], Rational::one()).is_err());
    }

    #[test]
    fn even_part_examples() {
        let s = sig(0, 3);
        let m = e(s, &[1, 2]).add(&e(s, &[3])).unwrap();
        assert_eq!(m.even_part(), e(s, &[1, 2]));
        assert_eq!(scalar(s, 5).even_part(), scalar(s, 5));
        assert!(e(s, &[1, 2, 3]).even_part().is_zero());
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let a = e(sig(0, 3), &[1]);
        let b = e(sig(3, 0), &[1]);
        assert!(matches!(
            a.geo_mul(&b),
            Err(CliffordError::SignatureMismatch { .. })
        ));
    }

    #[test]
    fn signature_bound() {
        assert!(Signature::new(0, 9).is_ok());
        assert_eq!(
            Signature::new(5, 5),
            Err(CliffordError::SignatureTooLarge { p: 5, q: 5 })
        );
    }

    #[test]
    fn embed_generator_and_scalar() {
        let s = sig(0, 7);
        let img = embed_even(&e(s, &[1]), EmbedVariant::RaiseQ).unwrap();
        let t = sig(0, 8);
        assert_eq!(img, e(t, &[1, 8]));
        assert_eq!(img.geo_mul(&img).unwrap(), scalar(t, -1));
        assert_eq!(
            embed_even(&scalar(s, 3), EmbedVariant::RaiseQ).unwrap(),
            scalar(t, 3)
        );
        let i1 = embed_even(&e(s, &[1]), EmbedVariant::RaiseQ).unwrap();
        let i2 = embed_even(&e(s, &[2]), EmbedVariant::RaiseQ).unwrap();
        assert!(i1.anticommutator(&i2).unwrap().is_zero());
    }

    #[test]
    fn raise_p_matches_literal_formula_for_definite_signatures() {
        for s in [sig(0, 6), sig(8, 0), sig(0, 7), sig(3, 0)] {
            for k in 1..=s.dim() {
                assert_eq!(EmbedVariant::RaiseP.generator_image(s, k), (1, k + 1));
            }
        }
    }

    #[test]
    fn embedding_overflow() {
        let s = sig(0, 9);
        assert!(embed_even(&e(s, &[1]), EmbedVariant::RaiseQ).is_err());
        assert!(check_embedding_hom(4, 5, EmbedVariant::RaiseP).is_err());
    }

    #[test]
    fn embedding_is_homomorphic_on_products() {
        // φ(ab) = φ(a)φ(b) on all blade pairs of a small mixed signature.
        for variant in [EmbedVariant::RaiseQ, EmbedVariant::RaiseP] {
            let s = sig(2, 2);
            for a in 0..16u16 {
                for b in 0..16u16 {
                    let ma = Multivector::from_terms(s, [(Blade::from_bits(a), Rational::one())])
                        .unwrap();
                    let mb = Multivector::from_terms(s, [(Blade::from_bits(b), Rational::one())])
                        .unwrap();
                    let lhs = embed_even(&ma.geo_mul(&mb).unwrap(), variant).unwrap();
                    let rhs = embed_even(&ma, variant)
                        .unwrap()
                        .geo_mul(&embed_even(&mb, variant).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs, "{variant:?} {a:b} {b:b}");
                }
            }
        }
    }

    #[test]
    fn representation_shapes() {
        let g7 = build_rep(RepName::Gamma7);
        assert_eq!(g7.matrices().len(), 7);
        for m in g7.matrices() {
            assert_eq!(m.mat_mul(m).unwrap(), -&Matrix::identity(8));
        }
        let g8 = build_rep(RepName::Gamma8);
        assert_eq!(g8.matrices().len(), 8);
        assert_eq!(g8.size(), 16);
        let g6 = build_rep(RepName::Gamma6);
        assert_eq!(g6.matrices().len(), 6);
        assert_eq!(g6.matrices()[0], left_mult_matrix(&-&Octonion::basis(6)));
    }

    #[test]
    fn gamma8_first_generator_swaps_blocks() {
        let rep = build_rep(RepName::Gamma8);
        let g0 = &rep.matrices()[0];
        for r in 0..16 {
            for c in 0..16 {
                let expected = if c == (r + 8) % 16 { 1 } else { 0 };
                assert_eq!(g0.get(r, c), &Rational::from(expected));
            }
        }
    }

    #[test]
    fn corrupted_generators_fail_with_pair() {
        let good = build_rep(RepName::Gamma7);
        let mut mats = good.matrices().to_vec();
        mats[3] = mats[2].clone();
        let bad = RepGenerators::new(RepName::Gamma7, mats, good.signature()).unwrap();
        let res = check_clifford_relations(&bad);
        assert_eq!(res.status, Status::Fail);
        assert!(res.witness.unwrap().input.starts_with("generators (3, 4)"));
    }

    #[test]
    fn generator_count_must_match_signature() {
        let mats = build_rep(RepName::Gamma7).matrices()[..6].to_vec();
        assert!(RepGenerators::new(RepName::Gamma7, mats, sig(0, 7)).is_err());
    }
}
