//! Dense row-major matrices over an exact [`Scalar`], with the determinant,
//! adjugate, inverse, conjugation and rank routines every generator is built on.

mod det;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};

pub(crate) use det::{bareiss_determinant, cofactor_adjugate};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Zero-based entry access. Panics when out of bounds.
    pub fn get(&self, r: usize, c: usize) -> &T {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix<T>
    where
        T: Clone,
    {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn diagonal(values: &[T]) -> Self {
        let n = values.len();
        Matrix::from_fn(n, n, |r, c| if r == c { values[r].clone() } else { T::zero() })
    }

    pub fn lift(m: &Matrix<Rational>) -> Self {
        m.map(|v| T::from_rational(v.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let a = self.get(r, k);
                if !a.is_zero() {
                    acc = acc + a.clone() * rhs.get(k, c).clone();
                }
            }
            acc
        }))
    }

    pub fn add(&self, rhs: &Matrix<T>) -> Result<Matrix<T>> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch("matrix sum of different shapes".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).clone() + rhs.get(r, c).clone()
        }))
    }

    pub fn scale(&self, factor: &T) -> Matrix<T> {
        self.map(|v| factor.clone() * v.clone())
    }

    /// The matrix with row `skip_row` and column `skip_col` removed.
    pub fn minor_matrix(&self, skip_row: usize, skip_col: usize) -> Matrix<T> {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|&r| r != skip_row) {
            for c in (0..self.cols).filter(|&c| c != skip_col) {
                entries.push(self.get(r, c).clone());
            }
        }
        Matrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    pub fn trace(&self) -> Result<T> {
        self.require_square()?;
        Ok((0..self.rows).fold(T::zero(), |acc, i| acc + self.get(i, i).clone()))
    }

    pub fn det(&self) -> Result<T> {
        self.require_square()?;
        Ok(T::square_determinant(self))
    }

    /// Classical adjugate (transposed cofactor matrix), defined for singular input.
    pub fn adjugate(&self) -> Result<Matrix<T>> {
        self.require_square()?;
        Ok(cofactor_adjugate(self))
    }

    /// Inverse as `adjugate / det`.
    pub fn inverse(&self) -> Result<Matrix<T>> {
        let det = self.det()?;
        if det.value().is_zero() {
            return Err(Error::DivisionByZero);
        }
        let adj = cofactor_adjugate(self);
        let entries = adj
            .entries
            .iter()
            .map(|v| v.checked_div(&det))
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(self.rows, self.cols, entries)
    }
}

/// `Ad_g X = g·X·g⁻¹`.
pub fn conjugate<T: Scalar>(g: &Matrix<T>, x: &Matrix<T>) -> Result<Matrix<T>> {
    g.require_square()?;
    x.require_square()?;
    if g.rows != x.rows {
        return Err(Error::DimensionMismatch(format!(
            "conjugator is {}x{}, matrix is {}x{}",
            g.rows, g.cols, x.rows, x.cols
        )));
    }
    let g_inv = g.inverse().map_err(|e| match e {
        Error::DivisionByZero => Error::SingularConjugator,
        other => other,
    })?;
    g.mul(x)?.mul(&g_inv)
}

impl Matrix<Rational> {
    /// Rank over the rationals by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = rows[rank][col].recip().expect("pivot is nonzero");
            let pivot_row: Vec<Rational> = rows[rank].iter().map(|v| v * &inv).collect();
            for row in rows.iter_mut().skip(rank + 1) {
                let factor = row[col].clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let delta = &factor * &pivot_row[c];
                    row[c] = &row[c] - &delta;
                }
            }
            rows[rank] = pivot_row;
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[r * self.cols + c])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serializes as a JSON array of rows, each entry a rational string.
impl Serialize for Matrix<Rational> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix<Rational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(deserializer)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
