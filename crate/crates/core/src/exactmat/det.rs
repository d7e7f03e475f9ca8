use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Matrix;
use crate::exactnum::{Rational, Scalar};

/// Fraction-free Bareiss elimination after scaling each row to integers.
pub(crate) fn bareiss_determinant(m: &Matrix<Rational>) -> Rational {
    let n = m.rows();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|r| {
            let row = m.row(r);
            let l = Rational::lcm_of_denominators(row);
            let ints = row.iter().map(|v| v.numer() * (&l / v.denom())).collect();
            scale *= l;
            ints
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // exact division: Sylvester's identity
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    let det = if negate { -det } else { det };
    Rational::new(det, scale).expect("row scales are positive")
}

/// Adjugate assembled entrywise from `(n-1)x(n-1)` cofactors.
pub(crate) fn cofactor_adjugate<T: Scalar>(m: &Matrix<T>) -> Matrix<T> {
    let n = m.rows();
    if n == 1 {
        return Matrix::identity(1);
    }
    let mut adj = Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            let minor = T::square_determinant(&m.minor_matrix(r, c));
            let cofactor = if (r + c) % 2 == 0 { minor } else { -minor };
            adj.set(c, r, cofactor);
        }
    }
    adj
}
