//! Exact verification of octonion and Clifford-algebra identities.
//!
//! The crate is organized bottom-up:
//!
//! - [`exact`]: arbitrary-precision rationals and small dense matrices.
//! - [`octonion`]: the octonion algebra, its multiplication table, and the
//!   Moufang identities.
//! - [`clifford`]: `Cl(p, q)` blade arithmetic, even-subalgebra embeddings,
//!   and the octonionic representations `gamma8`, `gamma7`, `gamma6`.
//! - [`actions`]: sandwich maps on the octonions, equivariance and orbit
//!   checks, and line-by-line proof-step verification.
//! - [`suite`]: named suites, deterministic reports, and the exit-code
//!   contract used by the `octoverify` binary.
//!
//! Every identity that is linear or multilinear in its free octonion
//! variables is decided by exhaustive evaluation on basis inputs. Seeded
//! random rational inputs are a secondary smoke layer.

pub mod actions;
pub mod check;
pub mod clifford;
pub mod exact;
pub mod octonion;
pub mod sampling;
pub mod suite;

pub use check::{CheckResult, Status, Witness};
pub use exact::{Matrix, Rational, Vector};
pub use octonion::{OctBasisIndex, Octonion};
