use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::exactnum::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RowSource {
    /// A row of `X`.
    #[serde(rename = "X")]
    Matrix,
    /// A row of the adjugate `X*`.
    #[serde(rename = "ADJ")]
    Adjugate,
}

/// One row of a minor: its source matrix and 1-based row index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PlannedRow {
    pub source: RowSource,
    pub row: usize,
}

impl fmt::Display for PlannedRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.source {
            RowSource::Matrix => write!(f, "X{}", self.row),
            RowSource::Adjugate => write!(f, "ADJ{}", self.row),
        }
    }
}

/// Row plan of `J_{i,j}`: the `i - j` bottom rows of `X` followed by the
/// `j` bottom rows of `X*`, all restricted to columns `1..=i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinorSpec {
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub row_plan: Vec<PlannedRow>,
    /// Number of leading columns kept (columns `1..=i`).
    pub columns: usize,
}

pub fn minor_spec(n: usize, i: usize, j: usize) -> Result<MinorSpec> {
    check_indices(n, i, j)?;
    let x_rows = (n - i + j + 1..=n).map(|row| PlannedRow {
        source: RowSource::Matrix,
        row,
    });
    let adj_rows = (n - j + 1..=n).map(|row| PlannedRow {
        source: RowSource::Adjugate,
        row,
    });
    Ok(MinorSpec {
        n,
        i,
        j,
        row_plan: x_rows.chain(adj_rows).collect(),
        columns: i,
    })
}

pub(crate) fn check_indices(n: usize, i: usize, j: usize) -> Result<()> {
    if !(1..=n).contains(&i) || j >= i {
        return Err(Error::IndexOutOfRange(format!("J:{i},{j} for n = {n}")));
    }
    Ok(())
}

impl MinorSpec {
    /// The `i x i` matrix whose determinant is `J_{i,j}`.
    pub fn assemble<T: Scalar>(&self, x: &Matrix<T>, adjugate: Option<&Matrix<T>>) -> Result<Matrix<T>> {
        if x.rows() != self.n || x.cols() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "expected a {0}x{0} matrix, got {1}x{2}",
                self.n,
                x.rows(),
                x.cols()
            )));
        }
        let mut rows = Vec::with_capacity(self.i);
        for planned in &self.row_plan {
            let source = match planned.source {
                RowSource::Matrix => x,
                RowSource::Adjugate => adjugate
                    .ok_or_else(|| Error::DimensionMismatch(format!("J:{},{} needs the adjugate", self.i, self.j)))?,
            };
            rows.push(source.row(planned.row - 1)[..self.columns].to_vec());
        }
        Matrix::from_rows(rows)
    }
}

/// Total degree of `J_{i,j}` as a polynomial in the entries of `X`:
/// `i - j` rows of degree 1 and `j` adjugate rows of degree `n - 1`.
pub fn homogeneity_degree(n: usize, i: usize, j: usize) -> Result<usize> {
    check_indices(n, i, j)?;
    Ok((i - j) + j * (n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan(n: usize, i: usize, j: usize) -> Vec<String> {
        minor_spec(n, i, j)
            .unwrap()
            .row_plan
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    #[test]
    fn displayed_minors() {
        assert_eq!(plan(3, 3, 1), ["X2", "X3", "ADJ3"]);
        assert_eq!(plan(2, 2, 1), ["X2", "ADJ2"]);
        assert_eq!(plan(3, 2, 0), ["X2", "X3"]);
        assert_eq!(plan(3, 3, 2), ["X3", "ADJ2", "ADJ3"]);
        assert_eq!(plan(3, 2, 1), ["X3", "ADJ3"]);
        assert_eq!(plan(3, 1, 0), ["X3"]);
        assert_eq!(minor_spec(3, 3, 1).unwrap().columns, 3);
    }

    #[test]
    fn base_minor_uses_bottom_rows() {
        for n in 1..=6 {
            for i in 1..=n {
                let spec = minor_spec(n, i, 0).unwrap();
                let rows: Vec<usize> = spec.row_plan.iter().map(|r| r.row).collect();
                assert_eq!(rows, (n - i + 1..=n).collect::<Vec<_>>());
                assert!(spec.row_plan.iter().all(|r| r.source == RowSource::Matrix));
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(minor_spec(3, 0, 0), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(minor_spec(3, 4, 0), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(minor_spec(3, 2, 2), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn degrees() {
        assert_eq!(homogeneity_degree(3, 3, 2).unwrap(), 5);
        assert_eq!(homogeneity_degree(2, 2, 1).unwrap(), 2);
        for n in 1..=6 {
            for i in 1..=n {
                assert_eq!(homogeneity_degree(n, i, 0).unwrap(), i);
            }
        }
    }
}
