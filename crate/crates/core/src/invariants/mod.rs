//! Determinantal semi-invariants `J_{i,j}`, the derived generators `y_i`,
//! `Y_{i,j}`, and the transformation chain between them.

mod chain;
mod eval;
mod ids;
mod minor;
mod table;

pub use chain::{
    chain_eval, chain_eval_from, chain_monomials, chain_program, direct_monomial, replay, stage_steps, unit_monomial,
    ElementaryStep, Monomial, Slot,
};
pub use eval::{eval_id, eval_j, eval_upper_y, eval_y, slot_count, slot_index, slots, GeneratorContext};
pub use ids::{InvariantId, InvariantKind, Stage};
pub use minor::{homogeneity_degree, minor_spec, MinorSpec, PlannedRow, RowSource};
pub use table::{b_system, generator_table, stage_generators, u_system};
