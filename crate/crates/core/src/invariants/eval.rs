use super::ids::{InvariantId, InvariantKind};
use super::minor::{check_indices, minor_spec};
use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::exactnum::Scalar;

/// Position of `(i, j)` in the flattened triangle, column `i` by column.
pub fn slot_index(i: usize, j: usize) -> usize {
    i * (i - 1) / 2 + j
}

/// Number of table slots, `n(n+1)/2`.
pub fn slot_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// All `(i, j)` slots, column-major: `(1,0), (2,0), (2,1), (3,0), ...`.
pub fn slots(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(|i| (0..i).map(move |j| (i, j)))
}

pub(crate) fn quotient<T: Scalar>(numer: T, denom: &T, what: impl FnOnce() -> String) -> Result<T> {
    numer.checked_div(denom).map_err(|e| match e {
        Error::DivisionByZero => Error::DegeneratePoint(what()),
        other => other,
    })
}

/// Every `J_{i,j}` at one point `X`, computed once; every other generator
/// is a Laurent monomial in these values.
#[derive(Debug, Clone)]
pub struct GeneratorContext<T> {
    n: usize,
    minors: Vec<T>,
}

impl<T: Scalar> GeneratorContext<T> {
    pub fn new(x: &Matrix<T>) -> Result<Self> {
        if !x.is_square() {
            return Err(Error::NonSquare {
                rows: x.rows(),
                cols: x.cols(),
            });
        }
        let n = x.rows();
        if n == 0 {
            return Err(Error::IndexOutOfRange("dimension must be at least 1".into()));
        }
        let adjugate = if n > 1 { Some(x.adjugate()?) } else { None };
        let mut minors = Vec::with_capacity(slot_count(n));
        for (i, j) in slots(n) {
            let block = minor_spec(n, i, j)?.assemble(x, adjugate.as_ref())?;
            minors.push(block.det()?);
        }
        Ok(GeneratorContext { n, minors })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `J_{i,j}`; indices must already be valid.
    pub fn minor(&self, i: usize, j: usize) -> &T {
        &self.minors[slot_index(i, j)]
    }

    pub fn minors(&self) -> &[T] {
        &self.minors
    }

    /// `y_1 = J_{1,0}`, `y_i = J_{i,i-1} / J_{i-1,0}`.
    pub fn lower_y(&self, i: usize) -> Result<T> {
        InvariantId::lower_y(i).validate(self.n)?;
        if i == 1 {
            return Ok(self.minor(1, 0).clone());
        }
        quotient(self.minor(i, i - 1).clone(), self.minor(i - 1, 0), || {
            format!("J:{},0", i - 1)
        })
    }

    /// `Y_{i,j} = J_{i,j}·y_{n-i+j+1} / (J_{i-1,j}·y_i)`.
    pub fn upper_y(&self, i: usize, j: usize) -> Result<T> {
        InvariantId::upper_y(i, j).validate(self.n)?;
        let numer = self.minor(i, j).clone() * self.lower_y(self.n - i + j + 1)?;
        let denom = self.minor(i - 1, j).clone() * self.lower_y(i)?;
        quotient(numer, &denom, || format!("J:{},{j}·y:{i}", i - 1))
    }

    /// `J'_{i,j} = J_{i,j} / J_{i-1,j}` for `3 <= i`, `1 <= j <= i-2`; otherwise `J_{i,j}`.
    pub fn j_prime(&self, i: usize, j: usize) -> Result<T> {
        InvariantId::j_prime(i, j).validate(self.n)?;
        if i >= 3 && j >= 1 && j + 2 <= i {
            quotient(self.minor(i, j).clone(), self.minor(i - 1, j), || {
                format!("J:{},{j}", i - 1)
            })
        } else {
            Ok(self.minor(i, j).clone())
        }
    }

    /// `J''_{i,0} = J'_{i,0} / J'_{i-1,0}` for `2 <= i <= n`; otherwise `J'_{i,j}`.
    pub fn j_double_prime(&self, i: usize, j: usize) -> Result<T> {
        InvariantId::j_double_prime(i, j).validate(self.n)?;
        if j == 0 {
            quotient(self.j_prime(i, 0)?, &self.j_prime(i - 1, 0)?, || {
                format!("J':{},0", i - 1)
            })
        } else {
            self.j_prime(i, j)
        }
    }

    pub fn evaluate(&self, id: &InvariantId) -> Result<T> {
        id.validate(self.n)?;
        let (i, j) = (id.i, id.second());
        match id.kind {
            InvariantKind::J => Ok(self.minor(i, j).clone()),
            InvariantKind::JPrime => self.j_prime(i, j),
            InvariantKind::JDoublePrime => self.j_double_prime(i, j),
            InvariantKind::LowerY => self.lower_y(i),
            InvariantKind::UpperY => self.upper_y(i, j),
        }
    }

    pub fn evaluate_all(&self, ids: &[InvariantId]) -> Result<Vec<T>> {
        ids.iter().map(|id| self.evaluate(id)).collect()
    }
}

fn check_square(n: usize, x: &Matrix<impl Scalar>) -> Result<()> {
    if x.rows() != n || x.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "expected a {n}x{n} matrix, got {}x{}",
            x.rows(),
            x.cols()
        )));
    }
    Ok(())
}

/// `J_{i,j}(X)`, computing only the adjugate rows it needs.
pub fn eval_j<T: Scalar>(n: usize, i: usize, j: usize, x: &Matrix<T>) -> Result<T> {
    check_indices(n, i, j)?;
    check_square(n, x)?;
    let adjugate = if j > 0 { Some(x.adjugate()?) } else { None };
    minor_spec(n, i, j)?.assemble(x, adjugate.as_ref())?.det()
}

pub fn eval_y<T: Scalar>(n: usize, i: usize, x: &Matrix<T>) -> Result<T> {
    InvariantId::lower_y(i).validate(n)?;
    check_square(n, x)?;
    GeneratorContext::new(x)?.lower_y(i)
}

pub fn eval_upper_y<T: Scalar>(n: usize, i: usize, j: usize, x: &Matrix<T>) -> Result<T> {
    InvariantId::upper_y(i, j).validate(n)?;
    check_square(n, x)?;
    GeneratorContext::new(x)?.upper_y(i, j)
}

/// Evaluates any generator at `X`.
pub fn eval_id<T: Scalar>(n: usize, id: &InvariantId, x: &Matrix<T>) -> Result<T> {
    id.validate(n)?;
    check_square(n, x)?;
    GeneratorContext::new(x)?.evaluate(id)
}
