//! Modular symbols for `Gamma_0(N)` with character over exact fields.

pub mod arith;
pub mod decompose;
pub mod error;
pub mod hecke;
pub mod level;
pub mod linalg;
pub mod manin;

pub use error::{Error, Result};
