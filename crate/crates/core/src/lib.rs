//! Exact-arithmetic workbench for the invariants of the adjoint action of
//! `GL(n)` on `n x n` matrices under its Borel, unitriangular, and diagonal
//! subgroups.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactnum`]: canonical rationals and first-order dual numbers over them.
//! * [`exactmat`]: dense matrices, determinants, adjugates, conjugation, rank.
//! * [`invariants`]: the determinantal semi-invariants `J_{i,j}`, the
//!   derived generators `y_i` and `Y_{i,j}`, and the elementary-transformation
//!   chain connecting them.
//! * [`characters`]: torus weights as exponent vectors and the integer kernel
//!   lattice of invariant monomials.
//! * [`verify`]: seeded sampling of group elements, verification suites
//!   (registered by name), and exact Jacobian rank checks.

pub mod characters;
pub mod error;
pub mod exactmat;
pub mod exactnum;
pub mod invariants;
pub mod verify;

pub use error::{Error, Result};
pub use exactmat::Matrix;
pub use exactnum::{DualRational, Rational, Scalar};
