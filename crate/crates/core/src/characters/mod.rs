//! Characters of the diagonal torus as integer exponent vectors, the weight
//! of every generator at every chain stage, and the integer lattice of
//! invariant monomials.

mod lattice;
mod semi;
mod weight;

pub use lattice::{kernel_lattice, LatticeBasis};
pub use semi::weight_verify;
pub use weight::{weight_j, weight_matrix, weight_of, weight_stage, weight_table, WeightVector};
