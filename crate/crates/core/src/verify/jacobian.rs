use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::sampling::TrialRng;
use crate::error::{Error, Result};
use crate::exactmat::Matrix;
use crate::exactnum::{DualRational, Rational};
use crate::invariants::{b_system, u_system, GeneratorContext, InvariantId};

/// Resamples allowed after the first point when certifying a generic rank.
pub const RANK_RETRIES: usize = 16;

/// Exact Jacobian of `f: Mat(n) -> K^m` at `x0`, one dual-number pass per
/// coordinate `(k, l)`. Column `(k-1)·n + (l-1)` holds `∂/∂x_{k,l}`.
pub fn jacobian_of<F>(n: usize, x0: &Matrix<Rational>, f: F) -> Result<Matrix<Rational>>
where
    F: Fn(&Matrix<DualRational>) -> Result<Vec<DualRational>> + Sync,
{
    if x0.rows() != n || x0.cols() != n {
        return Err(Error::DimensionMismatch(format!("expected a {n}x{n} point")));
    }
    let columns: Vec<Vec<Rational>> = (0..n * n)
        .into_par_iter()
        .map(|dir| {
            let seeded = Matrix::from_fn(n, n, |r, c| {
                let v = x0.get(r, c).clone();
                if r * n + c == dir {
                    DualRational::variable(v)
                } else {
                    DualRational::constant(v)
                }
            });
            Ok(f(&seeded)?.into_iter().map(|d| d.deriv).collect())
        })
        .collect::<Result<_>>()?;
    let m = columns.first().map_or(0, Vec::len);
    Ok(Matrix::from_fn(m, n * n, |s, dir| columns[dir][s].clone()))
}

/// Jacobian of the listed generators at `x0`.
pub fn jacobian(system: &[InvariantId], n: usize, x0: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    for id in system {
        id.validate(n)?;
    }
    jacobian_of(n, x0, |x| GeneratorContext::new(x)?.evaluate_all(system))
}

/// Generator systems whose algebraic independence is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GeneratorSystem {
    /// `{J_{i,j}}`.
    J,
    /// `{y_n} ∪ {Y_{i,j}}`.
    B,
}

impl GeneratorSystem {
    pub fn ids(self, n: usize) -> Vec<InvariantId> {
        match self {
            GeneratorSystem::J => u_system(n),
            GeneratorSystem::B => b_system(n),
        }
    }
}

impl fmt::Display for GeneratorSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorSystem::J => "J",
            GeneratorSystem::B => "B",
        })
    }
}

impl FromStr for GeneratorSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "J" => Ok(GeneratorSystem::J),
            "B" => Ok(GeneratorSystem::B),
            _ => Err(Error::Unknown {
                kind: "system",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub n: usize,
    pub seed: u64,
    pub system: Vec<InvariantId>,
    /// Largest Jacobian rank observed.
    pub rank: usize,
    /// Full row rank, the value certifying independence.
    pub expected: usize,
    /// Points drawn, including degenerate ones.
    pub attempts: usize,
    /// The point where `rank` was attained.
    pub point: Option<Matrix<Rational>>,
}

impl RankReport {
    pub fn certified(&self) -> bool {
        self.rank == self.expected
    }
}

/// Jacobian rank of `system` at random rational points. Stops at the first
/// point of full row rank; otherwise draws up to [`RANK_RETRIES`] more points
/// (stream `(seed, attempt)`) and reports the maximum seen.
pub fn independence_rank(system: &[InvariantId], n: usize, seed: u64, bound: u64) -> Result<RankReport> {
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    let expected = system.len();
    let mut best: Option<(usize, Matrix<Rational>)> = None;
    let mut attempts = 0;
    for attempt in 0..=RANK_RETRIES {
        attempts += 1;
        let x0 = TrialRng::new(seed, attempt as u64).matrix(n, bound);
        let jac = match jacobian(system, n, &x0) {
            Ok(j) => j,
            Err(Error::DegeneratePoint(_)) => continue,
            Err(e) => return Err(e),
        };
        let rank = jac.rank();
        if best.as_ref().is_none_or(|(r, _)| rank > *r) {
            best = Some((rank, x0));
        }
        if rank == expected {
            break;
        }
    }
    let (rank, point) = best.ok_or_else(|| Error::SamplingExhausted {
        attempts,
        context: "no non-degenerate point for the Jacobian".into(),
    })?;
    Ok(RankReport {
        n,
        seed,
        system: system.to_vec(),
        rank,
        expected,
        attempts,
        point: Some(point),
    })
}
