//! Verification suites. Each suite is a [`Suite`] registered by name in a
//! [`SuiteRegistry`]; the CLI selects one at runtime.

use std::collections::{BTreeMap, BTreeSet};

use super::report::{run_trials, validate_run, Comparisons, VerificationReport};
use super::sampling::{Subgroup, TrialRng};
use crate::characters::weight_of;
use crate::error::{Error, Result};
use crate::exactmat::{conjugate, Matrix};
use crate::exactnum::Rational;
use crate::invariants::{b_system, chain_eval_from, stage_generators, u_system, GeneratorContext, InvariantId, Stage};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub bound: u64,
}

impl SuiteConfig {
    pub fn new(n: usize, trials: u64, seed: u64, bound: u64) -> Self {
        SuiteConfig { n, trials, seed, bound }
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;

    fn description(&self) -> &'static str;

    fn run(&self, config: &SuiteConfig) -> Result<VerificationReport>;
}

/// Name-keyed collection of suites.
#[derive(Default)]
pub struct SuiteRegistry {
    suites: BTreeMap<&'static str, Box<dyn Suite>>,
}

impl SuiteRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registry holding every built-in suite.
    pub fn builtin() -> Self {
        let mut registry = SuiteRegistry::new();
        registry.register(Box::new(UInvariance));
        registry.register(Box::new(BInvariance));
        registry.register(Box::new(SemiInvariance));
        registry.register(Box::new(ChainIdentity));
        registry.register(Box::new(AdjugateContract));
        registry.register(Box::new(N2ClosedForms));
        registry
    }

    /// Adds a suite, replacing any suite registered under the same name.
    pub fn register(&mut self, suite: Box<dyn Suite>) {
        self.suites.insert(suite.name(), suite);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Suite> {
        self.suites.get(name).map(|s| s.as_ref()).ok_or_else(|| Error::Unknown {
            kind: "suite",
            name: name.to_string(),
        })
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.suites.keys().copied()
    }

    pub fn run(&self, name: &str, config: &SuiteConfig) -> Result<VerificationReport> {
        self.get(name)?.run(config)
    }
}

fn require_dimension(n: usize, min: usize, check: &str) -> Result<()> {
    if n < min {
        return Err(Error::InvalidArgument(format!("{check} requires n >= {min}, got {n}")));
    }
    Ok(())
}

/// `g⁻¹·X·g`, the action on arguments under `Ad_g f(X) = f(Ad_g⁻¹ X)`.
fn act(g: &Matrix<Rational>, x: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    conjugate(&g.inverse()?, x)
}

fn compare_ids(
    cmp: &mut Comparisons,
    ids: &[InvariantId],
    lhs: &GeneratorContext<Rational>,
    rhs: &GeneratorContext<Rational>,
    label: &str,
) -> Result<()> {
    for id in ids {
        let (a, b) = (lhs.evaluate(id)?, rhs.evaluate(id)?);
        cmp.expect_eq(format!("{id}{label}"), a, b);
    }
    Ok(())
}

/// `J_{i,j}(u⁻¹Xu) = J_{i,j}(X)` for every `(i, j)`.
pub fn check_u_invariance(n: usize, trials: u64, seed: u64, bound: u64) -> Result<VerificationReport> {
    require_dimension(n, 1, "u-invariance")?;
    validate_run(trials, bound)?;
    let ids = u_system(n);
    run_trials("u-invariance", n, trials, seed, |rng, cmp| {
        let u = rng.group_element(Subgroup::U, n, bound)?.matrix;
        let x = rng.matrix(n, bound);
        cmp.witness("u", &u).witness("X", &x);
        let moved = GeneratorContext::new(&act(&u, &x)?)?;
        let fixed = GeneratorContext::new(&x)?;
        compare_ids(cmp, &ids, &moved, &fixed, "")
    })
}

/// `y_n` and every `Y_{i,j}` unchanged by `X -> b⁻¹Xb`. Each trial also splits
/// `b = h·u` and checks the torus step `X -> h⁻¹Xh` and the unitriangular step
/// separately on the same witnesses, with `J_{i,j}` invariance for the latter.
pub fn check_b_invariance(n: usize, trials: u64, seed: u64, bound: u64) -> Result<VerificationReport> {
    require_dimension(n, 2, "b-invariance")?;
    validate_run(trials, bound)?;
    let ids = b_system(n);
    let j_ids = u_system(n);
    run_trials("b-invariance", n, trials, seed, |rng, cmp| {
        let b = rng.group_element(Subgroup::B, n, bound)?.matrix;
        let x = rng.matrix(n, bound);
        cmp.witness("b", &b).witness("X", &x);
        let diag: Vec<Rational> = (0..n).map(|k| b.get(k, k).clone()).collect();
        let h = Matrix::diagonal(&diag);
        let u = h.inverse()?.mul(&b)?;
        let x_h = act(&h, &x)?;
        let x_b = act(&u, &x_h)?;
        let at_x = GeneratorContext::new(&x)?;
        let at_h = GeneratorContext::new(&x_h)?;
        let at_b = GeneratorContext::new(&x_b)?;
        cmp.expect_matrix_eq("b⁻¹Xb", &x_b, &act(&b, &x)?);
        compare_ids(cmp, &ids, &at_b, &at_x, "")?;
        compare_ids(cmp, &ids, &at_h, &at_x, " (torus part)")?;
        compare_ids(cmp, &j_ids, &at_b, &at_h, " (unitriangular part)")
    })
}

/// Every generator of every chain stage scales by its predicted character under the torus.
pub fn check_semi_invariance(n: usize, trials: u64, seed: u64, bound: u64) -> Result<VerificationReport> {
    require_dimension(n, 1, "semi-invariance")?;
    validate_run(trials, bound)?;
    let ids: BTreeSet<InvariantId> = Stage::ALL.iter().flat_map(|&s| stage_generators(n, s)).collect();
    let weighted = ids
        .into_iter()
        .map(|id| Ok((id, weight_of(n, &id)?)))
        .collect::<Result<Vec<_>>>()?;
    run_trials("semi-invariance", n, trials, seed, |rng, cmp| {
        let h = rng.group_element(Subgroup::H, n, bound)?.matrix;
        let x = rng.matrix(n, bound);
        cmp.witness("h", &h).witness("X", &x);
        let diag: Vec<Rational> = (0..n).map(|k| h.get(k, k).clone()).collect();
        let moved = GeneratorContext::new(&act(&h, &x)?)?;
        let fixed = GeneratorContext::new(&x)?;
        for (id, w) in &weighted {
            let lhs = moved.evaluate(id)?;
            let rhs = w.character(&diag)? * fixed.evaluate(id)?;
            cmp.expect_eq(id.to_string(), lhs, rhs);
        }
        Ok(())
    })
}

/// Replayed chain values agree with the closed-form definitions at every stage.
pub fn check_chain_identity(n: usize, trials: u64, seed: u64, bound: u64) -> Result<VerificationReport> {
    require_dimension(n, 1, "chain-identity")?;
    validate_run(trials, bound)?;
    run_trials("chain-identity", n, trials, seed, |rng, cmp| {
        let x = rng.matrix(n, bound);
        cmp.witness("X", &x);
        let ctx = GeneratorContext::new(&x)?;
        for stage in Stage::ALL {
            for (id, chained) in chain_eval_from(&ctx, stage)? {
                cmp.expect_eq(format!("{id} ({stage})"), chained, ctx.evaluate(&id)?);
            }
        }
        Ok(())
    })
}

/// `X·X* = X*·X = det(X)·E` (every other trial on a singular `X`) and
/// `(gXg⁻¹)* = g·X*·g⁻¹` for random `g ∈ GL`.
pub fn check_adjugate(n: usize, trials: u64, seed: u64, bound: u64) -> Result<VerificationReport> {
    require_dimension(n, 1, "adjugate")?;
    validate_run(trials, bound)?;
    run_trials("adjugate", n, trials, seed, |rng: &mut TrialRng, cmp| {
        let x = if rng.coin() {
            rng.singular_matrix(n, bound)
        } else {
            rng.matrix(n, bound)
        };
        let g = rng.group_element(Subgroup::GL, n, bound)?.matrix;
        cmp.witness("X", &x).witness("g", &g);
        let adj = x.adjugate()?;
        let scalar = Matrix::identity(n).scale(&x.det()?);
        cmp.expect_matrix_eq("X·X*", &x.mul(&adj)?, &scalar);
        cmp.expect_matrix_eq("X*·X", &adj.mul(&x)?, &scalar);
        let lhs = conjugate(&g, &x)?.adjugate()?;
        let rhs = conjugate(&g, &adj)?;
        cmp.expect_matrix_eq("(gXg⁻¹)*", &lhs, &rhs);
        Ok(())
    })
}

/// Closed forms at `n = 2`: `y_1 = x_21`, `J_{2,1} = x_21(x_11 + x_22)`,
/// `y_2 = tr X`, `Y_{2,0} = det X / tr X`, at points with `x_21 ≠ 0`, `tr X ≠ 0`.
pub fn check_n2_closed_forms(n: usize, trials: u64, seed: u64, bound: u64) -> Result<VerificationReport> {
    if n != 2 {
        return Err(Error::InvalidArgument(format!(
            "n2-closed-forms requires n = 2, got {n}"
        )));
    }
    validate_run(trials, bound)?;
    run_trials("n2-closed-forms", 2, trials, seed, |rng, cmp| {
        let x = rng.matrix(2, bound);
        let trace = x.trace()?;
        let x21 = x.get(1, 0).clone();
        if x21.is_zero() || trace.is_zero() {
            return Err(Error::DegeneratePoint("x_21·tr X".into()));
        }
        cmp.witness("X", &x);
        let ctx = GeneratorContext::new(&x)?;
        let det = x.det()?;
        cmp.expect_eq("y:1", ctx.lower_y(1)?, x21.clone());
        cmp.expect_eq("J:2,1", ctx.minor(2, 1).clone(), &x21 * &(x.get(0, 0) + x.get(1, 1)));
        cmp.expect_eq("y:2", ctx.lower_y(2)?, trace.clone());
        cmp.expect_eq("Y:2,0", ctx.upper_y(2, 0)?, det.checked_div(&trace)?);
        Ok(())
    })
}

macro_rules! suite {
    ($ty:ident, $name:literal, $desc:literal, $check:ident) => {
        pub struct $ty;

        impl Suite for $ty {
            fn name(&self) -> &'static str {
                $name
            }

            fn description(&self) -> &'static str {
                $desc
            }

            fn run(&self, c: &SuiteConfig) -> Result<VerificationReport> {
                $check(c.n, c.trials, c.seed, c.bound)
            }
        }
    };
}

suite!(
    UInvariance,
    "u-invariance",
    "J_{i,j} invariant under unitriangular conjugation",
    check_u_invariance
);
suite!(
    BInvariance,
    "b-invariance",
    "y_n and Y_{i,j} invariant under Borel conjugation",
    check_b_invariance
);
suite!(
    SemiInvariance,
    "semi-invariance",
    "torus weights of every chain-stage generator",
    check_semi_invariance
);
suite!(
    ChainIdentity,
    "chain-identity",
    "elementary-transformation chain equals closed forms",
    check_chain_identity
);
suite!(
    AdjugateContract,
    "adjugate",
    "adjugate identity and conjugation equivariance",
    check_adjugate
);
suite!(
    N2ClosedForms,
    "n2-closed-forms",
    "n = 2 closed forms: trace and det/trace",
    check_n2_closed_forms
);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lookup() {
        let registry = SuiteRegistry::builtin();
        let names: Vec<_> = registry.names().collect();
        assert_eq!(
            names,
            [
                "adjugate",
                "b-invariance",
                "chain-identity",
                "n2-closed-forms",
                "semi-invariance",
                "u-invariance"
            ]
        );
        assert!(matches!(registry.get("nope"), Err(Error::Unknown { .. })));
        let report = registry.run("u-invariance", &SuiteConfig::new(2, 5, 0, 10)).unwrap();
        assert_eq!(report.check, "u-invariance");
        assert!(report.passed());
    }

    #[test]
    fn custom_suite_registration() {
        struct Always;
        impl Suite for Always {
            fn name(&self) -> &'static str {
                "always"
            }
            fn description(&self) -> &'static str {
                "trivially passes"
            }
            fn run(&self, c: &SuiteConfig) -> Result<VerificationReport> {
                run_trials("always", c.n, c.trials, c.seed, |_, _| Ok(()))
            }
        }
        let mut registry = SuiteRegistry::builtin();
        registry.register(Box::new(Always));
        assert!(registry.run("always", &SuiteConfig::new(1, 3, 0, 1)).unwrap().passed());
    }

    #[test]
    fn small_runs_pass() {
        for n in 1..=3 {
            assert!(check_u_invariance(n, 5, 1, 10).unwrap().passed());
            assert!(check_semi_invariance(n, 5, 1, 10).unwrap().passed());
            assert!(check_chain_identity(n, 5, 1, 10).unwrap().passed());
            assert!(check_adjugate(n, 6, 1, 10).unwrap().passed());
        }
        assert!(check_b_invariance(2, 5, 1, 10).unwrap().passed());
        assert!(check_b_invariance(3, 5, 1, 10).unwrap().passed());
        assert!(check_n2_closed_forms(2, 20, 1, 10).unwrap().passed());
    }

    #[test]
    fn argument_errors() {
        assert!(matches!(
            check_b_invariance(1, 5, 0, 10),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            check_n2_closed_forms(3, 5, 0, 10),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            check_u_invariance(2, 0, 0, 10),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(check_u_invariance(2, 1, 0, 0), Err(Error::InvalidArgument(_))));
    }
}
