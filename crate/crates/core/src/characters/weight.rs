use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::invariants::{generator_table, stage_generators, InvariantId, InvariantKind, Stage};

/// Exponent vector `(e_1, …, e_n)` of the character `diag(a_1, …, a_n) ↦ ∏ a_k^{e_k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    /// `e_k` for 1-based `k`.
    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = vec![0; n];
        v[k - 1] = 1;
        WeightVector(v)
    }

    /// `e_a - e_b`, 1-based.
    pub fn ratio(n: usize, a: usize, b: usize) -> Self {
        WeightVector::unit(n, a) - WeightVector::unit(n, b)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn scale(&self, factor: i64) -> Self {
        WeightVector(self.0.iter().map(|e| e * factor).collect())
    }

    /// Value of the character at the torus element with diagonal `diag`.
    pub fn character(&self, diag: &[Rational]) -> Result<Rational> {
        if diag.len() != self.len() {
            return Err(Error::DimensionMismatch(format!(
                "weight of length {} applied to a torus element of size {}",
                self.len(),
                diag.len()
            )));
        }
        let mut acc = Rational::one();
        for (a, &e) in diag.iter().zip(&self.0) {
            if e != 0 {
                acc = acc * a.pow(e)?;
            }
        }
        Ok(acc)
    }
}

impl Add for WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        self.scale(-1)
    }
}

/// Renders as a Laurent monomial, e.g. `a1*a2/a3^2`, or `1` for the trivial character.
impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factor = |k: usize, e: i64| if e == 1 { format!("a{k}") } else { format!("a{k}^{e}") };
        let numer: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| factor(k + 1, e))
            .collect();
        let denom: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e < 0)
            .map(|(k, &e)| factor(k + 1, -e))
            .collect();
        let top = if numer.is_empty() {
            "1".to_string()
        } else {
            numer.join("*")
        };
        match denom.len() {
            0 => f.write_str(&top),
            1 => write!(f, "{top}/{}", denom[0]),
            _ => write!(f, "{top}/({})", denom.join("*")),
        }
    }
}

/// `χ(J_{i,j}) = a_1⋯a_i / ((a_n⋯a_{n-j+1})·(a_n⋯a_{n-i+j+1}))`.
pub fn weight_j(n: usize, i: usize, j: usize) -> Result<WeightVector> {
    InvariantId::j(i, j).validate(n)?;
    let mut e = vec![0i64; n];
    for k in 1..=i {
        e[k - 1] += 1;
    }
    for k in n - j + 1..=n {
        e[k - 1] -= 1;
    }
    for k in n - i + j + 1..=n {
        e[k - 1] -= 1;
    }
    Ok(WeightVector(e))
}

/// Closed-form weight of any generator.
pub fn weight_of(n: usize, id: &InvariantId) -> Result<WeightVector> {
    id.validate(n)?;
    let (i, j) = (id.i, id.second());
    match id.kind {
        InvariantKind::J => weight_j(n, i, j),
        InvariantKind::JPrime if i >= 3 && j >= 1 && j + 2 <= i => Ok(WeightVector::ratio(n, i, n - i + j + 1)),
        InvariantKind::JPrime => weight_j(n, i, j),
        InvariantKind::JDoublePrime if j == 0 => Ok(WeightVector::ratio(n, i, n - i + 1)),
        InvariantKind::JDoublePrime => weight_of(n, &InvariantId::j_prime(i, j)),
        InvariantKind::LowerY => Ok(WeightVector::ratio(n, i, n)),
        InvariantKind::UpperY => Ok(WeightVector::zero(n)),
    }
}

/// Weight of `id` as a member of the `stage` generator system.
pub fn weight_stage(n: usize, stage: Stage, id: &InvariantId) -> Result<WeightVector> {
    id.validate(n)?;
    if !stage_generators(n, stage).contains(id) {
        return Err(Error::InvalidForStage {
            id: id.to_string(),
            stage: stage.to_string(),
        });
    }
    weight_of(n, id)
}

/// Weight triangle mirroring the generator table.
pub fn weight_table(n: usize, stage: Stage) -> Result<Vec<Vec<WeightVector>>> {
    generator_table(n, stage)
        .iter()
        .map(|col| col.iter().map(|id| weight_of(n, id)).collect())
        .collect()
}

/// `n x k` integer matrix whose columns are the weights of `ids`.
pub fn weight_matrix(n: usize, ids: &[InvariantId]) -> Result<Vec<Vec<i64>>> {
    let weights = ids.iter().map(|id| weight_of(n, id)).collect::<Result<Vec<_>>>()?;
    Ok((0..n).map(|r| weights.iter().map(|w| w.0[r]).collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{chain_monomials, slot_index, slots};

    #[test]
    fn listed_weights() {
        for n in 1..=6 {
            assert_eq!(weight_j(n, 1, 0).unwrap(), WeightVector::ratio(n, 1, n));
            assert!(weight_j(n, n, 0).unwrap().is_zero());
        }
        assert_eq!(weight_j(2, 2, 1).unwrap(), WeightVector(vec![1, -1]));
        // a1 a2 / (a_n a_n) with n = 3
        assert_eq!(weight_j(3, 2, 1).unwrap(), WeightVector(vec![1, 1, -2]));
    }

    #[test]
    fn base_column_matches_listed_form() {
        for n in 1..=7 {
            for i in 1..=n {
                let mut expected = vec![0i64; n];
                for k in 1..=i {
                    expected[k - 1] += 1;
                }
                for k in n - i + 1..=n {
                    expected[k - 1] -= 1;
                }
                assert_eq!(weight_j(n, i, 0).unwrap().0, expected);
            }
        }
    }

    /// Weights of the replayed monomials (a sum of `J` weights) equal the closed forms.
    #[test]
    fn multiplicativity_across_stages() {
        for n in 1..=7 {
            let base: Vec<WeightVector> = slots(n).map(|(i, j)| weight_j(n, i, j).unwrap()).collect();
            for stage in Stage::ALL {
                let monomials = chain_monomials(n, stage);
                for (i, j) in slots(n) {
                    let mono = &monomials[slot_index(i, j)];
                    let combined = mono
                        .iter()
                        .zip(&base)
                        .fold(WeightVector::zero(n), |acc, (&e, w)| acc + w.scale(e));
                    let id = stage.id_at(i, j);
                    assert_eq!(combined, weight_stage(n, stage, &id).unwrap(), "n={n} {id}");
                }
            }
        }
    }

    #[test]
    fn stage_weights() {
        let n = 5;
        for i in 3..=n {
            for j in 1..=i - 2 {
                assert_eq!(
                    weight_stage(n, Stage::Prime, &InvariantId::j_prime(i, j)).unwrap(),
                    WeightVector::ratio(n, i, n - i + j + 1)
                );
            }
        }
        assert!(weight_stage(n, Stage::Y, &InvariantId::lower_y(n)).unwrap().is_zero());
        for (i, j) in slots(n).filter(|(i, j)| j + 2 <= *i) {
            assert!(weight_stage(n, Stage::Final, &InvariantId::upper_y(i, j))
                .unwrap()
                .is_zero());
        }
        assert_eq!(
            weight_stage(n, Stage::Final, &InvariantId::lower_y(2)).unwrap(),
            WeightVector::ratio(n, 2, n)
        );
        assert!(matches!(
            weight_stage(n, Stage::Base, &InvariantId::lower_y(2)),
            Err(Error::InvalidForStage { .. })
        ));
        assert!(matches!(weight_j(3, 3, 3), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn characters_and_rendering() {
        let w = WeightVector(vec![1, 0, -2]);
        assert_eq!(w.to_string(), "a1/a3^2");
        assert_eq!(WeightVector(vec![1, 1, -1, -1]).to_string(), "a1*a2/(a3*a4)");
        assert_eq!(WeightVector::zero(3).to_string(), "1");
        assert_eq!(WeightVector(vec![0, -1]).to_string(), "1/a2");
        let diag: Vec<Rational> = ["2", "5", "1/3"].iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(w.character(&diag).unwrap(), Rational::from(18));
    }
}
