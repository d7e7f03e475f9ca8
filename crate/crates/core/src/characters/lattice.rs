use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Basis of `{m ∈ Z^k : W·m = 0}` in reduced echelon (Hermite) form.
///
/// Vectors have strictly increasing pivot (first nonzero) positions, positive
/// pivots, and every entry above a pivot lies in `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeBasis {
    pub vectors: Vec<Vec<i64>>,
    /// Unimodular `k x k` matrix `U` with `W·U` in column echelon form; its
    /// trailing `vectors.len()` columns span the kernel.
    #[serde(skip)]
    pub transform: Vec<Vec<BigInt>>,
    /// Rank of the weight matrix.
    pub rank: usize,
}

impl LatticeBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    /// Integer coordinates of `m` in the basis, or `None` when `m` is not in the lattice.
    pub fn coordinates(&self, m: &[i64]) -> Option<Vec<i64>> {
        let mut residual: Vec<i128> = m.iter().map(|&v| i128::from(v)).collect();
        let mut coords = Vec::with_capacity(self.vectors.len());
        for b in &self.vectors {
            let p = b.iter().position(|&v| v != 0)?;
            let pivot = i128::from(b[p]);
            if residual[p] % pivot != 0 {
                return None;
            }
            let c = residual[p] / pivot;
            for (r, &v) in residual.iter_mut().zip(b) {
                *r -= c * i128::from(v);
            }
            coords.push(i64::try_from(c).ok()?);
        }
        residual.iter().all(|&r| r == 0).then_some(coords)
    }
}

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::Overflow(format!("lattice entry {v} exceeds 64 bits")))
}

/// Applies `(col_a, col_b) <- (x·col_a + y·col_b, u·col_a + v·col_b)` to the columns of `m`.
fn mix_columns(m: &mut [Vec<BigInt>], a: usize, b: usize, coeffs: [&BigInt; 4]) {
    let [x, y, u, v] = coeffs;
    for row in m.iter_mut() {
        let (ra, rb) = (row[a].clone(), row[b].clone());
        row[a] = x * &ra + y * &rb;
        row[b] = u * &ra + v * &rb;
    }
}

/// Integer kernel of the `n x k` matrix `w` (given as rows), canonicalized.
pub fn kernel_lattice(w: &[Vec<i64>]) -> Result<LatticeBasis> {
    let k = w.first().map_or(0, Vec::len);
    if w.iter().any(|r| r.len() != k) {
        return Err(Error::DimensionMismatch("ragged weight matrix".into()));
    }
    let mut a: Vec<Vec<BigInt>> = w.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut u: Vec<Vec<BigInt>> = (0..k)
        .map(|r| {
            (0..k)
                .map(|c| if r == c { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();

    // Column echelon form of `a` by unimodular column operations, mirrored on `u`.
    let mut pivot_col = 0;
    for r in 0..a.len() {
        if pivot_col == k {
            break;
        }
        for c in pivot_col + 1..k {
            if a[r][c].is_zero() {
                continue;
            }
            let (p, q) = (a[r][pivot_col].clone(), a[r][c].clone());
            let ext = p.extended_gcd(&q);
            let (g, x, y) = (ext.gcd, ext.x, ext.y);
            let (pg, qg) = (&p / &g, &q / &g);
            let neg_qg = -qg;
            mix_columns(&mut a, pivot_col, c, [&x, &y, &neg_qg, &pg]);
            mix_columns(&mut u, pivot_col, c, [&x, &y, &neg_qg, &pg]);
        }
        if !a[r][pivot_col].is_zero() {
            pivot_col += 1;
        }
    }
    let rank = pivot_col;
    let kernel: Vec<Vec<BigInt>> = (rank..k)
        .map(|c| u.iter().map(|row| row[c].clone()).collect())
        .collect();
    let vectors = hermite_rows(kernel, k)
        .iter()
        .map(|v| v.iter().map(to_i64).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(LatticeBasis {
        vectors,
        transform: u,
        rank,
    })
}

/// Reduced row Hermite normal form of a full-row-rank integer matrix.
fn hermite_rows(mut rows: Vec<Vec<BigInt>>, k: usize) -> Vec<Vec<BigInt>> {
    let mut cur = 0;
    for c in 0..k {
        if cur == rows.len() {
            break;
        }
        for r in cur + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let (p, q) = (rows[cur][c].clone(), rows[r][c].clone());
            let ext = p.extended_gcd(&q);
            let (pg, qg) = (&p / &ext.gcd, &q / &ext.gcd);
            let top: Vec<BigInt> = rows[cur]
                .iter()
                .zip(&rows[r])
                .map(|(s, t)| &ext.x * s + &ext.y * t)
                .collect();
            let bottom: Vec<BigInt> = rows[cur]
                .iter()
                .zip(&rows[r])
                .map(|(s, t)| -&qg * s + &pg * t)
                .collect();
            rows[cur] = top;
            rows[r] = bottom;
        }
        if rows[cur][c].is_zero() {
            continue;
        }
        if rows[cur][c].is_negative() {
            rows[cur] = rows[cur].iter().map(|v| -v).collect();
        }
        let pivot = rows[cur][c].clone();
        for r in 0..cur {
            let f = rows[r][c].div_floor(&pivot);
            if !f.is_zero() {
                let reduced: Vec<BigInt> = rows[r].iter().zip(&rows[cur]).map(|(s, t)| s - &f * t).collect();
                rows[r] = reduced;
            }
        }
        cur += 1;
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn apply(w: &[Vec<i64>], m: &[i64]) -> Vec<i64> {
        w.iter()
            .map(|row| row.iter().zip(m).map(|(a, b)| a * b).sum())
            .collect()
    }

    #[test]
    fn zero_matrix_gives_unit_vectors() {
        let w = vec![vec![0; 3]; 2];
        let basis = kernel_lattice(&w).unwrap();
        assert_eq!(basis.vectors, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(basis.rank, 0);
    }

    #[test]
    fn single_nontrivial_column_has_empty_kernel() {
        let basis = kernel_lattice(&[vec![1], vec![-1]]).unwrap();
        assert!(basis.vectors.is_empty());
        assert_eq!(basis.rank, 1);
    }

    #[test]
    fn non_primitive_kernel() {
        // 2x + 4y - 6z = 0
        let w = vec![vec![2, 4, -6]];
        let basis = kernel_lattice(&w).unwrap();
        assert_eq!(basis.dimension(), 2);
        for v in &basis.vectors {
            assert_eq!(apply(&w, v), vec![0]);
        }
        assert_eq!(basis.vectors, vec![vec![1, 1, 1], vec![0, 3, 2]]);
        assert_eq!(basis.coordinates(&[-2, 1, 0]), Some(vec![-2, 1]));
        assert_eq!(basis.coordinates(&[1, 0, 0]), None);
    }

    #[test]
    fn transform_is_unimodular_in_effect() {
        let w = vec![vec![3, 5, 7, 0], vec![1, -1, 2, 4]];
        let basis = kernel_lattice(&w).unwrap();
        assert_eq!(basis.rank, 2);
        assert_eq!(basis.dimension(), 2);
        for v in &basis.vectors {
            assert_eq!(apply(&w, v), vec![0, 0]);
        }
    }
}
