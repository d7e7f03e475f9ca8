use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::exactnum::Rational;

/// Rejection budget for nonzero draws and degenerate evaluation points.
pub const MAX_RETRIES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Subgroup {
    /// Invertible diagonal matrices.
    H,
    /// Upper unitriangular matrices.
    U,
    /// Invertible upper triangular matrices.
    B,
    GL,
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Subgroup::H => "H",
            Subgroup::U => "U",
            Subgroup::B => "B",
            Subgroup::GL => "GL",
        };
        f.write_str(name)
    }
}

impl FromStr for Subgroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" => Ok(Subgroup::H),
            "U" => Ok(Subgroup::U),
            "B" => Ok(Subgroup::B),
            "GL" => Ok(Subgroup::GL),
            _ => Err(Error::Unknown {
                kind: "subgroup",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupElement {
    pub subgroup: Subgroup,
    pub matrix: Matrix<Rational>,
}

impl GroupElement {
    /// Whether the matrix satisfies the shape constraints of `subgroup`.
    pub fn belongs_to(matrix: &Matrix<Rational>, subgroup: Subgroup) -> bool {
        let n = matrix.rows();
        if !matrix.is_square() {
            return false;
        }
        let upper = (0..n).all(|r| (0..r).all(|c| matrix.get(r, c).is_zero()));
        let diag_nonzero = (0..n).all(|k| !matrix.get(k, k).is_zero());
        match subgroup {
            Subgroup::H => diag_nonzero && (0..n).all(|r| (0..n).all(|c| r == c || matrix.get(r, c).is_zero())),
            Subgroup::U => upper && (0..n).all(|k| *matrix.get(k, k) == Rational::one()),
            Subgroup::B => upper && diag_nonzero,
            Subgroup::GL => !matrix.det().expect("square").is_zero(),
        }
    }
}

/// Deterministic randomness for one trial: a ChaCha stream selected by
/// `(seed, trial_index)`, independent of every other trial.
#[derive(Debug, Clone)]
pub struct TrialRng(ChaCha8Rng);

impl TrialRng {
    pub fn new(seed: u64, trial_index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial_index);
        TrialRng(rng)
    }

    /// Numerator uniform in `[-bound, bound]`, denominator uniform in `[1, bound]`.
    pub fn rational(&mut self, bound: u64) -> Rational {
        let b = bound as i64;
        let numer: i64 = self.0.gen_range(-b..=b);
        let denom: i64 = self.0.gen_range(1..=b);
        Rational::new(BigInt::from(numer), BigInt::from(denom)).expect("denominator is positive")
    }

    pub fn coin(&mut self) -> bool {
        self.0.gen_bool(0.5)
    }

    pub fn nonzero_rational(&mut self, bound: u64) -> Result<Rational> {
        for _ in 0..MAX_RETRIES {
            let v = self.rational(bound);
            if !v.is_zero() {
                return Ok(v);
            }
        }
        Err(Error::SamplingExhausted {
            attempts: MAX_RETRIES,
            context: "nonzero rational".into(),
        })
    }

    pub fn matrix(&mut self, n: usize, bound: u64) -> Matrix<Rational> {
        Matrix::from_fn(n, n, |_, _| self.rational(bound))
    }

    pub fn group_element(&mut self, subgroup: Subgroup, n: usize, bound: u64) -> Result<GroupElement> {
        if bound == 0 {
            return Err(Error::InvalidArgument("bound must be at least 1".into()));
        }
        let matrix = match subgroup {
            Subgroup::H => {
                let diag = (0..n)
                    .map(|_| self.nonzero_rational(bound))
                    .collect::<Result<Vec<_>>>()?;
                Matrix::diagonal(&diag)
            }
            Subgroup::U | Subgroup::B => {
                let mut m = Matrix::zeros(n, n);
                for r in 0..n {
                    let d = if subgroup == Subgroup::U {
                        Rational::one()
                    } else {
                        self.nonzero_rational(bound)?
                    };
                    m.set(r, r, d);
                    for c in r + 1..n {
                        m.set(r, c, self.rational(bound));
                    }
                }
                m
            }
            Subgroup::GL => self.invertible_matrix(n, bound)?,
        };
        Ok(GroupElement { subgroup, matrix })
    }

    fn invertible_matrix(&mut self, n: usize, bound: u64) -> Result<Matrix<Rational>> {
        for _ in 0..MAX_RETRIES {
            let m = self.matrix(n, bound);
            if !m.det()?.is_zero() {
                return Ok(m);
            }
        }
        Err(Error::SamplingExhausted {
            attempts: MAX_RETRIES,
            context: format!("invertible {n}x{n} matrix"),
        })
    }

    /// A matrix whose last row is a random combination of the others, hence singular.
    pub fn singular_matrix(&mut self, n: usize, bound: u64) -> Matrix<Rational> {
        let mut m = self.matrix(n, bound);
        let coeffs: Vec<Rational> = (0..n.saturating_sub(1)).map(|_| self.rational(bound)).collect();
        for c in 0..n {
            let v = coeffs
                .iter()
                .enumerate()
                .fold(Rational::zero(), |acc, (r, k)| acc + k * m.get(r, c));
            m.set(n - 1, c, v);
        }
        m
    }
}

/// One group element from the stream `(seed, trial_index)`.
pub fn sample(subgroup: Subgroup, n: usize, seed: u64, trial_index: u64, bound: u64) -> Result<GroupElement> {
    TrialRng::new(seed, trial_index).group_element(subgroup, n, bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        for t in 0..20 {
            let u = sample(Subgroup::U, 3, 5, t, 10).unwrap();
            assert!(GroupElement::belongs_to(&u.matrix, Subgroup::U));
            assert!(GroupElement::belongs_to(&u.matrix, Subgroup::B));
            assert!(GroupElement::belongs_to(&u.matrix, Subgroup::GL));
            let b = sample(Subgroup::B, 4, 5, t, 10).unwrap();
            assert!(GroupElement::belongs_to(&b.matrix, Subgroup::B));
            let h = sample(Subgroup::H, 4, 5, t, 10).unwrap();
            assert!(GroupElement::belongs_to(&h.matrix, Subgroup::H));
            assert!(GroupElement::belongs_to(&h.matrix, Subgroup::B));
            let g = sample(Subgroup::GL, 3, 5, t, 2).unwrap();
            assert!(GroupElement::belongs_to(&g.matrix, Subgroup::GL));
        }
    }

    #[test]
    fn bound_one_diagonal_is_sign_matrix() {
        let h = sample(Subgroup::H, 5, 1, 0, 1).unwrap();
        for k in 0..5 {
            assert_eq!(h.matrix.get(k, k).abs(), Rational::one());
        }
    }

    #[test]
    fn determinism() {
        assert_eq!(sample(Subgroup::B, 4, 9, 3, 10), sample(Subgroup::B, 4, 9, 3, 10));
        assert_ne!(sample(Subgroup::B, 4, 9, 3, 10), sample(Subgroup::B, 4, 9, 4, 10));
        assert_ne!(sample(Subgroup::B, 4, 9, 3, 10), sample(Subgroup::B, 4, 10, 3, 10));
    }

    #[test]
    fn entry_bounds() {
        let mut rng = TrialRng::new(0, 0);
        for _ in 0..500 {
            let q = rng.rational(3);
            assert!(q.numer().magnitude() <= &3u32.into());
            assert!(q.denom() <= &BigInt::from(3));
        }
    }

    #[test]
    fn singular_is_singular() {
        let mut rng = TrialRng::new(2, 2);
        for n in 1..=5 {
            assert!(rng.singular_matrix(n, 10).det().unwrap().is_zero());
        }
    }

    #[test]
    fn zero_bound_rejected() {
        assert!(matches!(
            sample(Subgroup::U, 2, 0, 0, 0),
            Err(Error::InvalidArgument(_))
        ));
    }
}
