use super::WeightVector;
use crate::error::Result;
use crate::exactmat::{conjugate, Matrix};
use crate::exactnum::Rational;
use crate::verify::{run_trials, Subgroup, VerificationReport};

/// Checks `f(h⁻¹Xh) = χ_h·f(X)` for random torus elements `h` and points `X`,
/// where `χ_h = ∏ a_k^{e_k}` is the character with exponent vector `weight`.
///
/// `f` may return `DegeneratePoint`; such draws are resampled.
pub fn weight_verify<F>(
    check: &str,
    n: usize,
    f: F,
    weight: &WeightVector,
    trials: u64,
    seed: u64,
    bound: u64,
) -> Result<VerificationReport>
where
    F: Fn(&Matrix<Rational>) -> Result<Rational> + Sync,
{
    crate::verify::validate_run(trials, bound)?;
    run_trials(check, n, trials, seed, |rng, cmp| {
        let h = rng.group_element(Subgroup::H, n, bound)?.matrix;
        let x = rng.matrix(n, bound);
        let moved = conjugate(&h.inverse()?, &x)?;
        let diag: Vec<Rational> = (0..n).map(|k| h.get(k, k).clone()).collect();
        let lhs = f(&moved)?;
        let rhs = weight.character(&diag)? * f(&x)?;
        cmp.witness("h", &h).witness("X", &x);
        cmp.expect_eq(check, lhs, rhs);
        Ok(())
    })
}
