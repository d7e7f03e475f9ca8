//! Seeded sampling of subgroup elements, the invariance and semi-invariance
//! suites, and exact Jacobian-rank independence checks.

mod jacobian;
mod report;
mod sampling;
mod suites;

pub use jacobian::{independence_rank, jacobian, jacobian_of, GeneratorSystem, RankReport, RANK_RETRIES};
pub(crate) use report::validate_run;
pub use report::{run_trials, Comparisons, Failure, VerificationReport};
pub use sampling::{sample, GroupElement, Subgroup, TrialRng, MAX_RETRIES};
pub use suites::{
    check_adjugate, check_b_invariance, check_chain_identity, check_n2_closed_forms, check_semi_invariance,
    check_u_invariance, AdjugateContract, BInvariance, ChainIdentity, N2ClosedForms, SemiInvariance, Suite,
    SuiteConfig, SuiteRegistry, UInvariance,
};
