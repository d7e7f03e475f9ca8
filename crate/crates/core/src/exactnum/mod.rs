//! Exact scalars: canonical arbitrary-precision rationals and first-order
//! dual numbers over them.

mod dual;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Result;
use crate::exactmat::Matrix;

pub use dual::DualRational;
pub use rational::Rational;

/// Field-like scalar that every matrix and generator evaluator is generic over.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;

    fn one() -> Self;

    fn from_rational(value: Rational) -> Self;

    /// The rational part of the scalar (the value component for duals).
    fn value(&self) -> &Rational;

    fn is_zero(&self) -> bool;

    /// Division, failing with `DivisionByZero` when `rhs` has zero value part.
    fn checked_div(&self, rhs: &Self) -> Result<Self>;

    /// Determinant of a square matrix over this scalar. Callers guarantee squareness.
    fn square_determinant(m: &Matrix<Self>) -> Self;
}
