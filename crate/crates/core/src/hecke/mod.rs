//! Hecke and diamond operators, the Hecke algebra up to the Sturm bound and
//! q-expansion bases.

mod algebra;
mod operators;

pub use algebra::{hecke_algebra, qexp_basis, HeckeAlgebra};
pub use operators::{coset_reps, sigma_matrix, sturm_bound, HeckeContext, SubspaceTag};
