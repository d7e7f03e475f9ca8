use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sampling::{TrialRng, MAX_RETRIES};
use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::exactnum::Rational;

/// A counterexample: the witness matrices and both sides of the failed identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub trial: u64,
    /// Which identity failed, e.g. `Y:3,1` or `X*adj(X)`.
    pub target: String,
    pub witnesses: BTreeMap<String, Matrix<Rational>>,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub passes: u64,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.passes == self.trials
    }
}

/// Collects `(target, lhs, rhs)` comparisons for one trial; the first
/// mismatch becomes the trial's failure.
#[derive(Debug, Default)]
pub struct Comparisons {
    witnesses: BTreeMap<String, Matrix<Rational>>,
    mismatch: Option<(String, Rational, Rational)>,
}

impl Comparisons {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn witness(&mut self, name: &str, m: &Matrix<Rational>) -> &mut Self {
        self.witnesses.insert(name.to_string(), m.clone());
        self
    }

    pub fn expect_eq(&mut self, target: impl Into<String>, lhs: Rational, rhs: Rational) {
        if self.mismatch.is_none() && lhs != rhs {
            self.mismatch = Some((target.into(), lhs, rhs));
        }
    }

    pub fn expect_matrix_eq(&mut self, target: &str, lhs: &Matrix<Rational>, rhs: &Matrix<Rational>) {
        if self.mismatch.is_some() {
            return;
        }
        for (k, (a, b)) in lhs.entries().iter().zip(rhs.entries()).enumerate() {
            if a != b {
                let (r, c) = (k / lhs.cols() + 1, k % lhs.cols() + 1);
                self.mismatch = Some((format!("{target}[{r},{c}]"), a.clone(), b.clone()));
                return;
            }
        }
    }

    fn into_failure(self, trial: u64) -> Option<Failure> {
        let witnesses = self.witnesses;
        self.mismatch.map(|(target, lhs, rhs)| Failure {
            trial,
            target,
            witnesses,
            lhs,
            rhs,
        })
    }
}

pub(crate) fn validate_run(trials: u64, bound: u64) -> Result<()> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    Ok(())
}

/// Runs `trials` independent trials, each drawing from its own `(seed, t)`
/// stream. A trial whose attempt reports `DegeneratePoint` is redrawn from the
/// same stream, at most [`MAX_RETRIES`] times. Results are merged by trial
/// index, so parallel and serial runs produce identical reports.
pub fn run_trials<F>(check: &str, n: usize, trials: u64, seed: u64, attempt: F) -> Result<VerificationReport>
where
    F: Fn(&mut TrialRng, &mut Comparisons) -> Result<()> + Sync,
{
    let outcomes: Vec<Result<Option<Failure>>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = TrialRng::new(seed, t);
            for _ in 0..MAX_RETRIES {
                let mut cmp = Comparisons::new();
                match attempt(&mut rng, &mut cmp) {
                    Ok(()) => return Ok(cmp.into_failure(t)),
                    Err(Error::DegeneratePoint(_)) => continue,
                    Err(e) => return Err(e),
                }
            }
            Err(Error::SamplingExhausted {
                attempts: MAX_RETRIES,
                context: format!("{check}: trial {t} kept hitting degenerate points"),
            })
        })
        .collect();
    let mut failures = Vec::new();
    for outcome in outcomes {
        failures.extend(outcome?);
    }
    Ok(VerificationReport {
        check: check.to_string(),
        n,
        trials,
        seed,
        passes: trials - failures.len() as u64,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_add_up() {
        let report = run_trials("parity", 1, 10, 0, |_, cmp| {
            cmp.expect_eq("x", Rational::zero(), Rational::zero());
            Ok(())
        })
        .unwrap();
        assert!(report.passed());
        assert_eq!(report.passes, 10);

        let report = run_trials("odd", 2, 6, 3, |rng, cmp| {
            let x = rng.matrix(2, 5);
            cmp.witness("X", &x);
            cmp.expect_eq("always", Rational::one(), Rational::zero());
            Ok(())
        })
        .unwrap();
        assert_eq!(report.passes, 0);
        assert_eq!(report.failures.len(), 6);
        assert_eq!(
            report.failures.iter().map(|f| f.trial).collect::<Vec<_>>(),
            [0, 1, 2, 3, 4, 5]
        );
    }

    #[test]
    fn degenerate_attempts_are_redrawn_then_exhausted() {
        let err = run_trials("never", 1, 1, 0, |_, _| Err(Error::DegeneratePoint("J:1,0".into()))).unwrap_err();
        assert!(matches!(err, Error::SamplingExhausted { .. }));
    }

    #[test]
    fn json_shape() {
        let report = run_trials("odd", 1, 1, 7, |rng, cmp| {
            let x = rng.matrix(1, 3);
            cmp.witness("X", &x);
            cmp.expect_eq("J:1,0", Rational::one(), Rational::new(1, 2).unwrap());
            Ok(())
        })
        .unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["check"], "odd");
        assert_eq!(json["seed"], 7);
        assert_eq!(json["failures"][0]["lhs"], "1");
        assert_eq!(json["failures"][0]["rhs"], "1/2");
        assert!(json["failures"][0]["witnesses"]["X"].is_array());
        let back: VerificationReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, report);
    }
}
