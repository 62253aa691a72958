//! Exact rational scalars and small dense linear algebra.
//!
//! Everything downstream (octonion products, Clifford blades, representation
//! matrices) is built on [`Rational`], so no computation in this crate ever
//! rounds. Matrices are dense and row-major; nothing here is larger than
//! 16×16.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{0} requires a non-empty input")]
    Empty(&'static str),
    #[error("invalid shape: {rows}x{cols} with {len} entries")]
    Shape {
        rows: usize,
        cols: usize,
        len: usize,
    },
}

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// `num/den` reduced. Panics if `den == 0`; use [`Rational::checked_div`]
    /// for fallible division of runtime values.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "Rational::new with zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational, ExactError> {
        Rational::one().checked_div(self)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat_arith(a: &Rational, b: &Rational, op: ArithOp) -> Result<Rational, ExactError> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    entries: Vec<Rational>,
}

impl Vector {
    pub fn new(entries: Vec<Rational>) -> Result<Self, ExactError> {
        if entries.is_empty() {
            return Err(ExactError::Empty("Vector"));
        }
        Ok(Vector { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn dot(&self, other: &Vector) -> Result<Rational, ExactError> {
        if self.dim() != other.dim() {
            return Err(ExactError::DimensionMismatch {
                op: "dot",
                left: (self.dim(), 1),
                right: (other.dim(), 1),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum())
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, ExactError> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(ExactError::Shape {
                rows,
                cols,
                len: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Convenience constructor for small integer literals in tests and examples.
    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, ExactError> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let data: Vec<Rational> = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().map(|&x| Rational::from(x)))
            .collect();
        Matrix::new(n_rows, n_cols, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| Rational::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| {
            if r == c {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// `n×n` diagonal matrix.
    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        Matrix::from_fn(n, n, |r, c| {
            if r == c {
                diag[r].clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn mat_mul(&self, rhs: &Matrix) -> Result<Matrix, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::DimensionMismatch {
                op: "mat_mul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut data = vec![Rational::zero(); self.rows * rhs.cols];
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let slot = &mut data[r * rhs.cols + c];
                        *slot = &*slot + a * b;
                    }
                }
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::DimensionMismatch {
                op: "mul_vec",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        Ok((0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
            .collect())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, ExactError> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, ExactError> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    fn zip_with(
        &self,
        rhs: &Matrix,
        op: &'static str,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Matrix, ExactError> {
        if self.shape() != rhs.shape() {
            return Err(ExactError::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    /// First `(row, col)` where the two matrices differ, scanning row-major.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .find(|&(r, c)| self.get(r, c) != other.get(r, c))
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Result<Rational, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::DimensionMismatch {
                op: "determinant",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut sign = Rational::one();
        let mut prev = Rational::one();
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num.checked_div(&prev)?;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

/// Symmetric matrix of pairwise dot products.
pub fn gram(vectors: &[Vector]) -> Result<Matrix, ExactError> {
    let first = vectors.first().ok_or(ExactError::Empty("gram"))?;
    if let Some(bad) = vectors.iter().find(|v| v.dim() != first.dim()) {
        return Err(ExactError::DimensionMismatch {
            op: "gram",
            left: (first.dim(), 1),
            right: (bad.dim(), 1),
        });
    }
    let n = vectors.len();
    let mut data = vec![Rational::zero(); n * n];
    for i in 0..n {
        for j in i..n {
            let d = vectors[i].dot(&vectors[j])?;
            data[j * n + i] = d.clone();
            data[i * n + j] = d;
        }
    }
    Matrix::new(n, n, data)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn vec_of(xs: &[Rational]) -> Vector {
        Vector::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn fraction_arithmetic() {
        assert_eq!(
            rat_arith(&r(1, 2), &r(1, 3), ArithOp::Add).unwrap(),
            r(5, 6)
        );
        assert_eq!(
            rat_arith(&r(3, 5), &r(3, 5), ArithOp::Mul).unwrap(),
            r(9, 25)
        );
        assert_eq!(
            rat_arith(&r(1, 2), &r(1, 3), ArithOp::Sub).unwrap(),
            r(1, 6)
        );
        assert_eq!(
            rat_arith(&r(1, 2), &r(1, 4), ArithOp::Div).unwrap(),
            r(2, 1)
        );
        assert_eq!(
            rat_arith(&r(1, 1), &Rational::zero(), ArithOp::Div),
            Err(ExactError::DivisionByZero)
        );
    }

    #[test]
    fn lowest_terms_and_sign() {
        let x = r(6, -8);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(4));
        assert_eq!(x.to_string(), "-3/4");
        assert_eq!(r(10, 5).to_string(), "2");
    }

    #[test]
    fn no_overflow_on_large_products() {
        let mut x = r(7, 3);
        for _ in 0..8 {
            x = &x * &x;
        }
        // (7/3)^256 has a numerator far beyond 128 bits.
        assert!(x.numer().bits() > 700);
        let back = (0..8).fold(x, |acc, _| acc.checked_div(&r(1, 1)).unwrap());
        assert!(!back.is_zero());
    }

    #[test]
    fn mat_mul_identity_and_zero() {
        let m = Matrix::from_fn(8, 8, |r_, c| r((r_ * 8 + c) as i64 - 20, 3));
        assert_eq!(Matrix::identity(8).mat_mul(&m).unwrap(), m);
        assert!(m.mat_mul(&Matrix::zeros(8, 8)).unwrap().is_zero());
    }

    #[test]
    fn swap_matrix_is_an_involution() {
        let s = Matrix::from_integers(&[[0, 1], [1, 0]]).unwrap();
        assert!(s.mat_mul(&s).unwrap().is_identity());
    }

    #[test]
    fn mat_mul_dimension_mismatch() {
        let a = Matrix::zeros(2, 3);
        let b = Matrix::zeros(2, 3);
        assert!(matches!(
            a.mat_mul(&b),
            Err(ExactError::DimensionMismatch { op: "mat_mul", .. })
        ));
    }

    #[test]
    fn gram_examples() {
        let basis: Vec<Vector> = (0..3)
            .map(|i| {
                vec_of(
                    &(0..3)
                        .map(|j| {
                            if i == j {
                                Rational::one()
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        assert!(gram(&basis).unwrap().is_identity());

        let dup = [vec_of(&[r(1, 1), r(0, 1)]), vec_of(&[r(1, 1), r(0, 1)])];
        assert_eq!(
            gram(&dup).unwrap(),
            Matrix::from_integers(&[[1, 1], [1, 1]]).unwrap()
        );

        let rot = [vec_of(&[r(3, 5), r(4, 5)]), vec_of(&[r(-4, 5), r(3, 5)])];
        assert!(gram(&rot).unwrap().is_identity());
    }

    #[test]
    fn gram_errors() {
        assert_eq!(gram(&[]), Err(ExactError::Empty("gram")));
        let mixed = [vec_of(&[r(1, 1)]), vec_of(&[r(1, 1), r(2, 1)])];
        assert!(gram(&mixed).is_err());
    }

    #[test]
    fn bareiss_determinant() {
        let m = Matrix::from_integers(&[[2, 0, 1], [1, 3, 2], [1, 1, 1]]).unwrap();
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(m.determinant().unwrap(), Rational::zero());
        let m = Matrix::from_integers(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(m.determinant().unwrap(), r(-1, 1));
        let d = Matrix::diagonal(&[r(1, 2), r(2, 3), r(3, 4)]);
        assert_eq!(d.determinant().unwrap(), r(1, 4));
    }

    #[test]
    fn empty_vector_rejected() {
        assert_eq!(Vector::new(vec![]), Err(ExactError::Empty("Vector")));
    }
}
