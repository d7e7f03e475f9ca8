#![allow(dead_code)]

use adjinv::{Matrix, Rational};
use proptest::prelude::*;

/// Laplace expansion along the first row. Exponential; used only as an oracle for n <= 5.
pub fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Rational::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let sub: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * &cofactor_det(&sub);
        acc = if c % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Adjugate from Laplace-expanded cofactors.
pub fn cofactor_adjugate(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![Rational::one()]];
    }
    let cofactor = |r: usize, c: usize| {
        let sub: Vec<Vec<Rational>> = m
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != r)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let minor = cofactor_det(&sub);
        if (r + c).is_multiple_of(2) {
            minor
        } else {
            -minor
        }
    };
    // adj is the transposed cofactor matrix.
    (0..n).map(|c| (0..n).map(|r| cofactor(r, c)).collect()).collect()
}

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn rows(m: &Matrix<Rational>) -> Vec<Vec<Rational>> {
    m.to_rows()
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=9).prop_map(|(p, d)| Rational::new(p, d).unwrap())
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

pub fn square(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec(rational(), n * n).prop_map(move |v| Matrix::new(n, n, v).unwrap())
}

pub fn sized_square(max: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max).prop_flat_map(square)
}
