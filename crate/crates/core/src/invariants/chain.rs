//! The chain of elementary transformations `z_t -> z_t · z_s^{±1}` that
//! turns the `J` system into `{y_i, Y_{i,j}}`.
//!
//! The chain is a flat list of steps over table slots `(i, j)`. Replaying it
//! on numeric values gives [`chain_eval`]; replaying it on exponent vectors
//! gives every generator as a Laurent monomial in the `J_{i,j}`.

use std::collections::BTreeMap;

use super::eval::{quotient, slot_count, slot_index, slots, GeneratorContext};
use super::ids::{InvariantId, Stage};
use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::exactnum::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slot {
    pub i: usize,
    pub j: usize,
}

impl Slot {
    pub fn new(i: usize, j: usize) -> Self {
        Slot { i, j }
    }

    pub fn index(self) -> usize {
        slot_index(self.i, self.j)
    }
}

/// `target -> target · factor^exponent`, `exponent ∈ {+1, -1}`, `target != factor`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementaryStep {
    pub target: Slot,
    pub factor: Slot,
    pub exponent: i8,
}

impl ElementaryStep {
    fn divide(target: Slot, factor: Slot) -> Self {
        ElementaryStep {
            target,
            factor,
            exponent: -1,
        }
    }

    fn multiply(target: Slot, factor: Slot) -> Self {
        ElementaryStep {
            target,
            factor,
            exponent: 1,
        }
    }
}

/// Steps leading from the previous stage to `stage`, in application order.
///
/// Divisions within a step run from the largest `i` down so that every factor
/// still holds its previous-stage value when it is read.
pub fn stage_steps(n: usize, stage: Stage) -> Vec<ElementaryStep> {
    let mut steps = Vec::new();
    match stage {
        Stage::Base => {}
        Stage::Prime => {
            for i in (3..=n).rev() {
                for j in 1..=i - 2 {
                    steps.push(ElementaryStep::divide(Slot::new(i, j), Slot::new(i - 1, j)));
                }
            }
        }
        Stage::Y => {
            for i in 2..=n {
                steps.push(ElementaryStep::divide(Slot::new(i, i - 1), Slot::new(i - 1, 0)));
            }
        }
        Stage::DoublePrime => {
            for i in (2..=n).rev() {
                steps.push(ElementaryStep::divide(Slot::new(i, 0), Slot::new(i - 1, 0)));
            }
        }
        Stage::Final => {
            for i in 2..=n {
                for j in 0..=i - 2 {
                    let k = n - i + j + 1;
                    steps.push(ElementaryStep::multiply(Slot::new(i, j), Slot::new(k, k - 1)));
                    steps.push(ElementaryStep::divide(Slot::new(i, j), Slot::new(i, i - 1)));
                }
            }
        }
    }
    steps
}

/// Every step from the base system through `stage`, tagged with the stage it builds.
pub fn chain_program(n: usize, stage: Stage) -> Vec<(Stage, ElementaryStep)> {
    Stage::ALL
        .iter()
        .take_while(|s| **s <= stage)
        .flat_map(|&s| stage_steps(n, s).into_iter().map(move |step| (s, step)))
        .collect()
}

/// Applies the program to a slot table, combining with `combine(target, factor, exponent)`.
pub fn replay<V: Clone>(
    n: usize,
    stage: Stage,
    mut table: Vec<V>,
    mut combine: impl FnMut(&V, &V, i8, Stage, ElementaryStep) -> Result<V>,
) -> Result<Vec<V>> {
    assert_eq!(table.len(), slot_count(n));
    for (s, step) in chain_program(n, stage) {
        let updated = combine(
            &table[step.target.index()],
            &table[step.factor.index()],
            step.exponent,
            s,
            step,
        )?;
        table[step.target.index()] = updated;
    }
    Ok(table)
}

/// Laurent monomial in the `J_{i,j}`, as an exponent per slot.
pub type Monomial = Vec<i64>;

pub fn unit_monomial(n: usize, i: usize, j: usize) -> Monomial {
    let mut m = vec![0; slot_count(n)];
    m[slot_index(i, j)] = 1;
    m
}

/// Every generator of `stage` as a monomial in the `J_{i,j}`, obtained by replaying the chain.
pub fn chain_monomials(n: usize, stage: Stage) -> Vec<Monomial> {
    let base = slots(n).map(|(i, j)| unit_monomial(n, i, j)).collect();
    replay(n, stage, base, |t, f, e, _, _| {
        Ok(t.iter().zip(f).map(|(a, b)| a + i64::from(e) * b).collect())
    })
    .expect("monomial replay is infallible")
}

fn combine_monomials(parts: &[(&Monomial, i64)]) -> Monomial {
    let len = parts[0].0.len();
    (0..len).map(|k| parts.iter().map(|(m, e)| e * m[k]).sum()).collect()
}

/// The closed-form definition of `id` as a monomial in the `J_{i,j}`.
pub fn direct_monomial(n: usize, id: &InvariantId) -> Result<Monomial> {
    use super::ids::InvariantKind::*;
    id.validate(n)?;
    let (i, j) = (id.i, id.second());
    let unit = |a, b| unit_monomial(n, a, b);
    Ok(match id.kind {
        J => unit(i, j),
        JPrime if i >= 3 && j >= 1 && j + 2 <= i => combine_monomials(&[(&unit(i, j), 1), (&unit(i - 1, j), -1)]),
        JPrime => unit(i, j),
        JDoublePrime if j == 0 => combine_monomials(&[
            (&direct_monomial(n, &InvariantId::j_prime(i, 0))?, 1),
            (&direct_monomial(n, &InvariantId::j_prime(i - 1, 0))?, -1),
        ]),
        JDoublePrime => direct_monomial(n, &InvariantId::j_prime(i, j))?,
        LowerY if i == 1 => unit(1, 0),
        LowerY => combine_monomials(&[(&unit(i, i - 1), 1), (&unit(i - 1, 0), -1)]),
        UpperY => combine_monomials(&[
            (&unit(i, j), 1),
            (&direct_monomial(n, &InvariantId::lower_y(n - i + j + 1))?, 1),
            (&unit(i - 1, j), -1),
            (&direct_monomial(n, &InvariantId::lower_y(i))?, -1),
        ]),
    })
}

/// Values of every generator of `stage` at `X`, obtained by replaying the
/// elementary steps on the `J_{i,j}` values.
pub fn chain_eval<T: Scalar>(n: usize, stage: Stage, x: &Matrix<T>) -> Result<BTreeMap<InvariantId, T>> {
    if x.rows() != n || x.cols() != n {
        return Err(Error::DimensionMismatch(format!("expected a {n}x{n} matrix")));
    }
    let ctx = GeneratorContext::new(x)?;
    chain_eval_from(&ctx, stage)
}

pub fn chain_eval_from<T: Scalar>(ctx: &GeneratorContext<T>, stage: Stage) -> Result<BTreeMap<InvariantId, T>> {
    let n = ctx.n();
    let table = replay(n, stage, ctx.minors().to_vec(), |t, f, e, s, step| {
        if e > 0 {
            Ok(t.clone() * f.clone())
        } else {
            let prev = Stage::ALL[Stage::ALL.iter().position(|x| *x == s).unwrap() - 1];
            quotient(t.clone(), f, || prev.id_at(step.factor.i, step.factor.j).to_string())
        }
    })?;
    Ok(slots(n)
        .map(|(i, j)| (stage.id_at(i, j), table[slot_index(i, j)].clone()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    #[test]
    fn every_step_touches_one_slot() {
        for n in 1..=6 {
            let base: Vec<Monomial> = slots(n).map(|(i, j)| unit_monomial(n, i, j)).collect();
            let mut table = base;
            for (_, step) in chain_program(n, Stage::Final) {
                assert_ne!(step.target, step.factor);
                assert!(step.exponent == 1 || step.exponent == -1);
                let before = table.clone();
                let t = step.target.index();
                let f = step.factor.index();
                table[t] = table[t]
                    .iter()
                    .zip(&table[f])
                    .map(|(a, b)| a + i64::from(step.exponent) * b)
                    .collect();
                let changed = (0..table.len()).filter(|&k| table[k] != before[k]).count();
                assert_eq!(changed, 1);
            }
        }
    }

    #[test]
    fn chain_matches_direct_definitions_symbolically() {
        for n in 1..=7 {
            for stage in Stage::ALL {
                let replayed = chain_monomials(n, stage);
                for (i, j) in slots(n) {
                    let id = stage.id_at(i, j);
                    assert_eq!(
                        replayed[slot_index(i, j)],
                        direct_monomial(n, &id).unwrap(),
                        "n={n} {id}"
                    );
                }
            }
        }
    }

    #[test]
    fn prime_stage_only_changes_interior_slots() {
        let steps = stage_steps(3, Stage::Prime);
        assert_eq!(steps, vec![ElementaryStep::divide(Slot::new(3, 1), Slot::new(2, 1))]);
        assert!(stage_steps(2, Stage::Prime).is_empty());
    }

    #[test]
    fn n2_y_stage_values() {
        let x = Matrix::from_rows(vec![
            vec![Rational::from(3), Rational::from(1)],
            vec![Rational::from(2), Rational::from(5)],
        ])
        .unwrap();
        let table = chain_eval(2, Stage::Y, &x).unwrap();
        assert_eq!(table[&InvariantId::lower_y(1)], Rational::from(2));
        assert_eq!(table[&InvariantId::lower_y(2)], Rational::from(8));
        assert_eq!(table[&InvariantId::j_prime(2, 0)], Rational::from(13));
    }

    #[test]
    fn degenerate_chain_point() {
        let x = Matrix::<Rational>::identity(3);
        assert!(matches!(
            chain_eval(3, Stage::Final, &x),
            Err(Error::DegeneratePoint(_))
        ));
        assert!(chain_eval(3, Stage::Base, &x).is_ok());
    }
}
