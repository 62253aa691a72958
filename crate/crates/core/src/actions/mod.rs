//! Orthogonal actions on the octonions built from sandwich products.
//!
//! Each [`SandwichMap`] is evaluated by literal octonion products with a
//! fixed bracketing, and its 8×8 matrix is computed once at construction.
//! Composite group elements are [`GroupWord`]s: compositions of letters,
//! never a single sandwich by a product octonion.

mod orbits;
mod proof;

use std::fmt;

use thiserror::Error;

use crate::check::{CheckResult, Status, Witness};
use crate::exact::{gram, Matrix, Rational, Vector};
use crate::octonion::{apply_matrix, flexible_product, OctBasisIndex, Octonion, OctonionError};

pub use orbits::{check_orbit_geometry, ORBIT_RANDOM_WORDS};
pub use proof::{check_a_vs_b, verify_proof_steps, Lemma};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("reflection parameter must be a unit imaginary octonion, got {0}")]
    NotUnitImaginary(String),
    #[error("action index {index} out of range {range}")]
    IndexOutOfRange { index: usize, range: &'static str },
    #[error("parallelizability frame needs p != 0")]
    ZeroPoint,
    #[error("invalid slice point: {0}")]
    InvalidSlice(String),
    #[error(transparent)]
    Octonion(#[from] OctonionError),
}

/// The sandwich forms that appear as group actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SandwichForm {
    /// `x ↦ -u x u` for a unit imaginary `u`.
    ReflectA(Octonion),
    /// `x ↦ i_k((i_7 x i_7) i_k)`, `1 ≤ k ≤ 6`.
    ActionA(usize),
    /// `x ↦ ((i_k i_7) x)(i_7 i_k)`, `1 ≤ k ≤ 6`.
    ActionB(usize),
    /// `x ↦ i_j((i_k x i_k) i_j)`, `1 ≤ j, k ≤ 7`.
    ActionC(usize, usize),
}

fn i(n: usize) -> Octonion {
    Octonion::basis(n)
}

impl SandwichForm {
    fn eval(&self, x: &Octonion) -> Result<Octonion, ActionError> {
        Ok(match self {
            SandwichForm::ReflectA(u) => -&flexible_product(u, x)?,
            SandwichForm::ActionA(k) => {
                let inner = &(&i(7) * x) * &i(7);
                &i(*k) * &(&inner * &i(*k))
            }
            SandwichForm::ActionB(k) => {
                let u = &i(*k) * &i(7);
                let u_inv = &i(7) * &i(*k);
                &(&u * x) * &u_inv
            }
            SandwichForm::ActionC(j, k) => {
                let inner = &(&i(*k) * x) * &i(*k);
                &i(*j) * &(&inner * &i(*j))
            }
        })
    }
}

impl fmt::Display for SandwichForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SandwichForm::ReflectA(u) => {
                let support: Vec<usize> = (1..8).filter(|&n| !u.coeff(n).is_zero()).collect();
                if support.len() == 1 && u.coeff(support[0]).is_one() {
                    write!(f, "reflectA(i{})", support[0])
                } else {
                    write!(f, "reflectA({u:?})")
                }
            }
            SandwichForm::ActionA(k) => write!(f, "actionA({k})"),
            SandwichForm::ActionB(k) => write!(f, "actionB({k})"),
            SandwichForm::ActionC(j, k) => write!(f, "actionC({j},{k})"),
        }
    }
}

/// A linear map of the octonions given by evaluation and by its matrix.
pub trait OctonionMap {
    fn apply(&self, x: &Octonion) -> Result<Octonion, ActionError>;
    /// Matrix whose column `n` is the image of `i_n`.
    fn basis_table(&self) -> &Matrix;
    fn label(&self) -> String;
}

pub fn apply<M: OctonionMap + ?Sized>(m: &M, x: &Octonion) -> Result<Octonion, ActionError> {
    m.apply(x)
}

pub fn basis_table<M: OctonionMap + ?Sized>(m: &M) -> &Matrix {
    m.basis_table()
}

fn table_of(f: impl Fn(&Octonion) -> Result<Octonion, ActionError>) -> Result<Matrix, ActionError> {
    let cols: Vec<Octonion> = (0..8).map(|n| f(&i(n))).collect::<Result<_, _>>()?;
    Ok(Matrix::from_fn(8, 8, |r, c| cols[c].coeff(r).clone()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichMap {
    form: SandwichForm,
    matrix: Matrix,
}

impl SandwichMap {
    fn build(form: SandwichForm) -> Result<Self, ActionError> {
        let matrix = table_of(|x| form.eval(x))?;
        Ok(SandwichMap { form, matrix })
    }

    pub fn reflect(u: Octonion) -> Result<Self, ActionError> {
        if !u.is_imaginary() || !u.norm_sq().is_one() {
            return Err(ActionError::NotUnitImaginary(u.to_string()));
        }
        SandwichMap::build(SandwichForm::ReflectA(u))
    }

    /// Reflection in the basis unit `i_k`, `1 ≤ k ≤ 7`.
    pub fn reflect_basis(k: usize) -> Result<Self, ActionError> {
        if !(1..=7).contains(&k) {
            return Err(ActionError::IndexOutOfRange {
                index: k,
                range: "1..=7",
            });
        }
        SandwichMap::reflect(i(k))
    }

    pub fn action_a(k: usize) -> Result<Self, ActionError> {
        if !(1..=6).contains(&k) {
            return Err(ActionError::IndexOutOfRange {
                index: k,
                range: "1..=6",
            });
        }
        SandwichMap::build(SandwichForm::ActionA(k))
    }

    pub fn action_b(k: usize) -> Result<Self, ActionError> {
        if !(1..=6).contains(&k) {
            return Err(ActionError::IndexOutOfRange {
                index: k,
                range: "1..=6",
            });
        }
        SandwichMap::build(SandwichForm::ActionB(k))
    }

    pub fn action_c(j: usize, k: usize) -> Result<Self, ActionError> {
        for idx in [j, k] {
            if !(1..=7).contains(&idx) {
                return Err(ActionError::IndexOutOfRange {
                    index: idx,
                    range: "1..=7",
                });
            }
        }
        SandwichMap::build(SandwichForm::ActionC(j, k))
    }

    pub fn form(&self) -> &SandwichForm {
        &self.form
    }
}

impl OctonionMap for SandwichMap {
    fn apply(&self, x: &Octonion) -> Result<Octonion, ActionError> {
        self.form.eval(x)
    }

    fn basis_table(&self) -> &Matrix {
        &self.matrix
    }

    fn label(&self) -> String {
        self.form.to_string()
    }
}

/// Composition `l_1 ∘ l_2 ∘ … ∘ l_n`; the last letter acts first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupWord {
    letters: Vec<SandwichMap>,
    matrix: Matrix,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord {
            letters: Vec::new(),
            matrix: Matrix::identity(8),
        }
    }

    pub fn new(letters: Vec<SandwichMap>) -> Self {
        let matrix = letters.iter().fold(Matrix::identity(8), |acc, l| {
            acc.mat_mul(l.basis_table()).expect("8x8 letters")
        });
        GroupWord { letters, matrix }
    }

    pub fn pair(first: SandwichMap, second: SandwichMap) -> Self {
        GroupWord::new(vec![first, second])
    }

    pub fn letters(&self) -> &[SandwichMap] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.letters.len().is_multiple_of(2)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        GroupWord {
            letters,
            matrix: self.matrix.mat_mul(&other.matrix).expect("8x8 words"),
        }
    }
}

impl From<SandwichMap> for GroupWord {
    fn from(m: SandwichMap) -> Self {
        GroupWord::new(vec![m])
    }
}

impl OctonionMap for GroupWord {
    fn apply(&self, x: &Octonion) -> Result<Octonion, ActionError> {
        self.letters
            .iter()
            .rev()
            .try_fold(x.clone(), |acc, l| l.apply(&acc))
    }

    fn basis_table(&self) -> &Matrix {
        &self.matrix
    }

    fn label(&self) -> String {
        if self.letters.is_empty() {
            return "id".to_string();
        }
        self.letters
            .iter()
            .map(|l| l.label())
            .collect::<Vec<_>>()
            .join("∘")
    }
}

/// A map known only through its matrix, e.g. a negative control.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixMap {
    label: String,
    matrix: Matrix,
}

impl MatrixMap {
    pub fn new(label: impl Into<String>, matrix: Matrix) -> Self {
        assert_eq!(matrix.shape(), (8, 8), "octonion maps are 8x8");
        MatrixMap {
            label: label.into(),
            matrix,
        }
    }
}

impl OctonionMap for MatrixMap {
    fn apply(&self, x: &Octonion) -> Result<Octonion, ActionError> {
        Ok(apply_matrix(&self.matrix, x))
    }

    fn basis_table(&self) -> &Matrix {
        &self.matrix
    }

    fn label(&self) -> String {
        self.label.clone()
    }
}

/// Which generator realization to use for `Spin(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinRealization {
    /// `actionA(a) ∘ actionA(b)`.
    ActionPairs,
    /// `actionB(a) ∘ actionB(b)`.
    ActionBPairs,
    /// `reflectA(i_a) ∘ reflectA(i_b)`.
    ReflectionPairs,
}

impl SpinRealization {
    pub fn name(self) -> &'static str {
        match self {
            SpinRealization::ActionPairs => "actionA-pairs",
            SpinRealization::ActionBPairs => "actionB-pairs",
            SpinRealization::ReflectionPairs => "reflectA-pairs",
        }
    }
}

/// All composites with indices `a < b ≤ k`.
pub fn spin_generators(
    k: usize,
    realization: SpinRealization,
) -> Result<Vec<GroupWord>, ActionError> {
    let mut out = Vec::new();
    for a in 1..=k {
        for b in a + 1..=k {
            let (x, y) = match realization {
                SpinRealization::ActionPairs => {
                    (SandwichMap::action_a(a)?, SandwichMap::action_a(b)?)
                }
                SpinRealization::ActionBPairs => {
                    (SandwichMap::action_b(a)?, SandwichMap::action_b(b)?)
                }
                SpinRealization::ReflectionPairs => (
                    SandwichMap::reflect_basis(a)?,
                    SandwichMap::reflect_basis(b)?,
                ),
            };
            out.push(GroupWord::pair(x, y));
        }
    }
    Ok(out)
}

/// Pass iff the map's matrix is orthogonal.
pub fn check_orthogonality<M: OctonionMap + ?Sized>(m: &M) -> CheckResult {
    let t = m.basis_table();
    let product = t.transpose().mat_mul(t).expect("8x8");
    let identity = Matrix::identity(8);
    let witness = product.first_difference(&identity).map(|(r, c)| {
        Witness::new(
            format!("(MᵀM)[{r}][{c}] for {}", m.label()),
            product.get(r, c),
            identity.get(r, c),
        )
    });
    CheckResult::decide(
        format!("orthogonality.{}", m.label()),
        "orthogonal transformations are generated by unit vectors u in Im O",
        witness,
        Status::Fail,
    )
}

/// Decides `φ_g(p i_m) = φ_g(p) i_m` for every generator `g` and basis `p`.
/// The first counterexample, in generator order then basis order, becomes the
/// witness of a finding.
pub fn check_field_equivariance(
    label: &str,
    group_gens: &[GroupWord],
    m: OctBasisIndex,
) -> Result<CheckResult, ActionError> {
    let right = Octonion::unit(m);
    let mut witness = None;
    'outer: for g in group_gens {
        for n in OctBasisIndex::all() {
            let p = Octonion::unit(n);
            let lhs = g.apply(&(&p * &right))?;
            let rhs = &g.apply(&p)? * &right;
            if lhs != rhs {
                witness = Some(Witness::new(
                    format!("g = {}, p = {n}, field p -> p {m}", g.label()),
                    &lhs,
                    &rhs,
                ));
                break 'outer;
            }
        }
    }
    Ok(CheckResult::decide(
        format!("field.equivariance.{label}.{m}"),
        "Spin(k)-equivariant tangent vector fields p -> p i_m on RP^7: φ(p i_m) = φ(p) i_m",
        witness,
        Status::Finding,
    ))
}

/// Decides `actionB(k)(p i_7) = -(actionA(k)(p)) i_7` on every basis `p`.
pub fn check_mixed_identity(k: usize) -> Result<CheckResult, ActionError> {
    let a = SandwichMap::action_a(k)?;
    let b = SandwichMap::action_b(k)?;
    let mut witness = None;
    for n in 0..8 {
        let p = i(n);
        let lhs = b.apply(&(&p * &i(7)))?;
        let rhs = -&(&a.apply(&p)? * &i(7));
        if lhs != rhs {
            witness = Some(Witness::new(format!("k = {k}, p = i{n}"), &lhs, &rhs));
            break;
        }
    }
    Ok(CheckResult::decide(
        format!("field.mixed-identity.k{k}"),
        "(i_k i_7)(p i_7)(i_7 i_k) = (-Σ_{n≠k,7} t_n i_n + t_k i_k + t_7 i_7) i_7",
        witness,
        Status::Finding,
    ))
}

/// Gram matrix of the frame `{p i_0, …, p i_7}`; must equal `|p|² I`, with
/// each `p i_k` (k ≥ 1) orthogonal to `p`.
pub fn check_parallelizability(p: &Octonion) -> Result<CheckResult, ActionError> {
    if p.is_zero() {
        return Err(ActionError::ZeroPoint);
    }
    let frame: Vec<Octonion> = (0..8).map(|n| p * &i(n)).collect();
    let vectors: Vec<Vector> = frame.iter().map(Octonion::to_vector).collect();
    let g = gram(&vectors).expect("eight vectors of dimension 8");
    let expected = Matrix::identity(8).scale(&p.norm_sq());
    let mut witness = g.first_difference(&expected).map(|(r, c)| {
        Witness::new(
            format!("Gram[{r}][{c}] of frame at p = {p}"),
            g.get(r, c),
            expected.get(r, c),
        )
    });
    if witness.is_none() {
        witness = (1..8).find_map(|k| {
            let d = p.dot(&frame[k]);
            (!d.is_zero())
                .then(|| Witness::new(format!("<p, p i{k}> at p = {p}"), d, Rational::zero()))
        });
    }
    Ok(CheckResult::decide(
        "parallelizability",
        "RP^7 admits 7 linearly independent tangent vector fields p -> p i_k",
        witness,
        Status::Fail,
    ))
}

/// Point `c·pole + s·x` on the slice through a pole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicePoint {
    c: Rational,
    s: Rational,
    x: Octonion,
    pole: OctBasisIndex,
}

impl SlicePoint {
    /// Requires `c² + s² = 1`, `|x| = 1`, and `x` with zero real part and
    /// zero pole coefficient.
    pub fn new(
        c: Rational,
        s: Rational,
        x: Octonion,
        pole: OctBasisIndex,
    ) -> Result<Self, ActionError> {
        if !(c.square() + s.square()).is_one() {
            return Err(ActionError::InvalidSlice(format!(
                "c² + s² ≠ 1 for ({c}, {s})"
            )));
        }
        if !x.norm_sq().is_one() {
            return Err(ActionError::InvalidSlice(format!(
                "|x|² = {} ≠ 1",
                x.norm_sq()
            )));
        }
        if !x.is_imaginary() || !x.coeff(pole.get()).is_zero() {
            return Err(ActionError::InvalidSlice(format!(
                "x = {x:?} must vanish at i0 and {pole}"
            )));
        }
        Ok(SlicePoint { c, s, x, pole })
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn x(&self) -> &Octonion {
        &self.x
    }

    pub fn pole(&self) -> OctBasisIndex {
        self.pole
    }

    pub fn to_octonion(&self) -> Octonion {
        &Octonion::unit(self.pole).scale(&self.c) + &self.x.scale(&self.s)
    }

    /// Recovers `x'` from `v = c·pole + s·x'`, if `v` has that form with the
    /// same `(c, s)` and a valid `x'`.
    pub fn decompose(&self, v: &Octonion) -> Option<Octonion> {
        let rest = v - &Octonion::unit(self.pole).scale(&self.c);
        let x = rest.scale(&self.s.recip().ok()?);
        SlicePoint::new(self.c.clone(), self.s.clone(), x.clone(), self.pole)
            .ok()
            .map(|_| x)
    }
}
