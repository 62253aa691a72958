//! The octonion algebra over exact rationals.
//!
//! The multiplication table is generated from the seven oriented triples
//! below plus cyclic closure, then compared entry by entry against a
//! hand-written literal table before first use.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use thiserror::Error;

use crate::exact::{Matrix, Rational, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OctonionError {
    #[error("basis index {0} out of range 0..=7")]
    IndexOutOfRange(usize),
    #[error("inverse of zero octonion")]
    ZeroInverse,
    #[error("flexibility violated: (xy)x = {left} but x(yx) = {right}")]
    FlexibilityViolation { left: String, right: String },
}

/// Oriented triples `(k, l, m)` with `i_k i_l = i_m`, closed under cyclic
/// permutation.
pub const TRIPLES: [(usize, usize, usize); 7] = [
    (1, 2, 3),
    (1, 4, 5),
    (1, 6, 7),
    (2, 6, 4),
    (2, 5, 7),
    (3, 4, 7),
    (3, 5, 6),
];

/// `LITERAL_TABLE[k][l] = ±(m + 1)` where `i_k i_l = ±i_m`.
const LITERAL_TABLE: [[i8; 8]; 8] = [
    [1, 2, 3, 4, 5, 6, 7, 8],
    [2, -1, 4, -3, 6, -5, 8, -7],
    [3, -4, -1, 2, -7, 8, 5, -6],
    [4, 3, -2, -1, 8, 7, -6, -5],
    [5, -6, 7, -8, -1, 2, -3, 4],
    [6, 5, -8, -7, -2, -1, 4, 3],
    [7, -8, -5, 6, 3, -4, -1, 2],
    [8, 7, 6, 5, -4, -3, -2, -1],
];

/// Index of a basis unit `i_0 .. i_7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OctBasisIndex(u8);

impl OctBasisIndex {
    pub fn new(index: usize) -> Result<Self, OctonionError> {
        if index > 7 {
            return Err(OctonionError::IndexOutOfRange(index));
        }
        Ok(OctBasisIndex(index as u8))
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> impl Iterator<Item = OctBasisIndex> {
        (0..8u8).map(OctBasisIndex)
    }
}

impl fmt::Display for OctBasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i{}", self.0)
    }
}

/// One product of basis units: `i_k i_l = sign · i_target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableEntry {
    pub sign: i8,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultTable {
    entries: [[TableEntry; 8]; 8],
}

impl MultTable {
    /// Builds the table from oriented triples: `i_0` is the unit, `i_k² = -1`,
    /// and each triple contributes its three cyclic rotations and their
    /// negated reversals.
    pub fn from_triples(triples: &[(usize, usize, usize)]) -> Self {
        let blank = TableEntry { sign: 0, target: 0 };
        let mut entries = [[blank; 8]; 8];
        for k in 0..8 {
            entries[0][k] = TableEntry { sign: 1, target: k };
            entries[k][0] = TableEntry { sign: 1, target: k };
        }
        for (k, row) in entries.iter_mut().enumerate().skip(1) {
            row[k] = TableEntry {
                sign: -1,
                target: 0,
            };
        }
        for &(a, b, c) in triples {
            for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                entries[x][y] = TableEntry { sign: 1, target: z };
                entries[y][x] = TableEntry {
                    sign: -1,
                    target: z,
                };
            }
        }
        MultTable { entries }
    }

    fn from_literal(lit: &[[i8; 8]; 8]) -> Self {
        let mut entries = [[TableEntry { sign: 0, target: 0 }; 8]; 8];
        for (k, row) in lit.iter().enumerate() {
            for (l, &v) in row.iter().enumerate() {
                entries[k][l] = TableEntry {
                    sign: v.signum(),
                    target: (v.unsigned_abs() - 1) as usize,
                };
            }
        }
        MultTable { entries }
    }

    pub fn entry(&self, k: usize, l: usize) -> TableEntry {
        self.entries[k][l]
    }

    /// Every ordered pair has a ±1 sign, i.e. the triples covered all 42
    /// imaginary off-diagonal products.
    pub fn is_complete(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.sign != 0)
    }

    /// Pairs `(k, l)` where the two tables disagree.
    pub fn disagreements(&self, other: &MultTable) -> Vec<(usize, usize)> {
        (0..8)
            .flat_map(|k| (0..8).map(move |l| (k, l)))
            .filter(|&(k, l)| self.entries[k][l] != other.entries[k][l])
            .collect()
    }
}

/// The shared table, built from [`TRIPLES`] on first use. Panics if it
/// differs from the literal table.
pub fn mult_table() -> &'static MultTable {
    static TABLE: OnceLock<MultTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let built = MultTable::from_triples(&TRIPLES);
        let literal = MultTable::from_literal(&LITERAL_TABLE);
        let bad = built.disagreements(&literal);
        assert!(
            bad.is_empty() && built.is_complete(),
            "octonion table construction disagrees with literal table at {bad:?}"
        );
        built
    })
}

/// Element `Σ t_n i_n` of the octonions with exact coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Octonion {
    coeffs: [Rational; 8],
}

impl Octonion {
    pub fn new(coeffs: [Rational; 8]) -> Self {
        Octonion { coeffs }
    }

    pub fn from_integers(c: [i64; 8]) -> Self {
        Octonion {
            coeffs: c.map(Rational::from),
        }
    }

    pub fn zero() -> Self {
        Octonion::default()
    }

    pub fn one() -> Self {
        Octonion::basis(0)
    }

    /// `i_n`. Panics if `n > 7`.
    pub fn basis(n: usize) -> Self {
        assert!(n < 8, "octonion basis index {n} out of range");
        let mut o = Octonion::zero();
        o.coeffs[n] = Rational::one();
        o
    }

    pub fn unit(index: OctBasisIndex) -> Self {
        Octonion::basis(index.get())
    }

    pub fn scalar(r: Rational) -> Self {
        let mut o = Octonion::zero();
        o.coeffs[0] = r;
        o
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational; 8] {
        &self.coeffs
    }

    pub fn real(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_imaginary(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Octonion {
        Octonion {
            coeffs: std::array::from_fn(|n| &self.coeffs[n] * s),
        }
    }

    /// Copy with the listed coordinates negated.
    pub fn negate_coords(&self, coords: &[usize]) -> Octonion {
        let mut out = self.clone();
        for &n in coords {
            out.coeffs[n] = -&out.coeffs[n];
        }
        out
    }

    pub fn conjugate(&self) -> Octonion {
        Octonion {
            coeffs: std::array::from_fn(|n| {
                if n == 0 {
                    self.coeffs[0].clone()
                } else {
                    -&self.coeffs[n]
                }
            }),
        }
    }

    pub fn norm_sq(&self) -> Rational {
        self.coeffs.iter().map(Rational::square).sum()
    }

    /// Euclidean inner product of the coefficient vectors.
    pub fn dot(&self, other: &Octonion) -> Rational {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn inverse(&self) -> Result<Octonion, OctonionError> {
        let n = self.norm_sq();
        let inv = n.recip().map_err(|_| OctonionError::ZeroInverse)?;
        Ok(self.conjugate().scale(&inv))
    }

    pub fn mul(&self, rhs: &Octonion) -> Octonion {
        let table = mult_table();
        let mut out: [Rational; 8] = Default::default();
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (l, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let e = table.entry(k, l);
                let prod = a * b;
                let slot = &mut out[e.target];
                *slot = if e.sign > 0 {
                    &*slot + prod
                } else {
                    &*slot - prod
                };
            }
        }
        Octonion { coeffs: out }
    }

    pub fn to_vector(&self) -> Vector {
        Vector::new(self.coeffs.to_vec()).expect("octonion has 8 coordinates")
    }

    pub fn from_slice(xs: &[Rational]) -> Option<Octonion> {
        let arr: [Rational; 8] = xs.to_vec().try_into().ok()?;
        Some(Octonion::new(arr))
    }
}

impl fmt::Display for Octonion {
    /// `a0 + a1 i1 + … + a7 i7`, every coefficient written out.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeffs[0])?;
        for n in 1..8 {
            write!(f, " + {} i{}", self.coeffs[n], n)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, c)| format!("{c}·i{n}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, rhs: &Octonion) -> Octonion {
        Octonion {
            coeffs: std::array::from_fn(|n| &self.coeffs[n] + &rhs.coeffs[n]),
        }
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, rhs: &Octonion) -> Octonion {
        Octonion {
            coeffs: std::array::from_fn(|n| &self.coeffs[n] - &rhs.coeffs[n]),
        }
    }
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, rhs: &Octonion) -> Octonion {
        Octonion::mul(self, rhs)
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion {
            coeffs: std::array::from_fn(|n| -&self.coeffs[n]),
        }
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        &self + &rhs
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        &self - &rhs
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        Octonion::mul(&self, &rhs)
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        -&self
    }
}

pub fn oct_mul(x: &Octonion, y: &Octonion) -> Octonion {
    x.mul(y)
}

/// `(xy)z - x(yz)`.
pub fn associator(x: &Octonion, y: &Octonion, z: &Octonion) -> Octonion {
    &(&(x * y) * z) - &(x * &(y * z))
}

/// `xy - yx`.
pub fn commutator(x: &Octonion, y: &Octonion) -> Octonion {
    &(x * y) - &(y * x)
}

/// `xyx`, evaluated in both bracketings; errors if they disagree.
pub fn flexible_product(x: &Octonion, y: &Octonion) -> Result<Octonion, OctonionError> {
    let left = &(x * y) * x;
    let right = x * &(y * x);
    if left != right {
        return Err(OctonionError::FlexibilityViolation {
            left: left.to_string(),
            right: right.to_string(),
        });
    }
    Ok(left)
}

/// LHS − RHS of the three Moufang identities
/// `(xyx)z = x(y(xz))`, `z(xyx) = ((zx)y)x`, `x(yz)x = (xy)(zx)`.
pub fn moufang_residuals(
    x: &Octonion,
    y: &Octonion,
    z: &Octonion,
) -> Result<[Octonion; 3], OctonionError> {
    let xyx = flexible_product(x, y)?;
    let first = &(&xyx * z) - &(x * &(y * &(x * z)));
    let second = &(z * &xyx) - &(&(&(z * x) * y) * x);
    let x_yz_x = flexible_product(x, &(y * z))?;
    let third = &x_yz_x - &(&(x * y) * &(z * x));
    Ok([first, second, third])
}

/// 8×8 matrix of `x ↦ a x` in the basis `i_0..i_7` (column `n` is `a i_n`).
pub fn left_mult_matrix(a: &Octonion) -> Matrix {
    let cols: Vec<Octonion> = (0..8).map(|n| a * &Octonion::basis(n)).collect();
    Matrix::from_fn(8, 8, |r, c| cols[c].coeff(r).clone())
}

/// 8×8 matrix of `x ↦ x a`.
pub fn right_mult_matrix(a: &Octonion) -> Matrix {
    let cols: Vec<Octonion> = (0..8).map(|n| &Octonion::basis(n) * a).collect();
    Matrix::from_fn(8, 8, |r, c| cols[c].coeff(r).clone())
}

/// Apply an 8×8 matrix to an octonion's coordinate vector.
pub fn apply_matrix(m: &Matrix, x: &Octonion) -> Octonion {
    let v = m
        .mul_vec(x.coeffs())
        .expect("8x8 matrix applied to octonion");
    Octonion::from_slice(&v).expect("8 coordinates")
}
