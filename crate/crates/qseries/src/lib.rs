//! Independent q-series oracle.
//!
//! Truncated integer power series, Dedekind eta quotients and the classical
//! index and dimension formulas for `Gamma_0(N)` with trivial character. This
//! crate deliberately shares no code with the modular symbols engine so that
//! it can be used to check it.

mod dims;
mod series;

pub use dims::{dim_cuspforms, dim_modforms, index_mu, nu2, nu3, nu_infinity};
pub use series::{eta_quotient, IntSeries};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("eta quotient weight sum {0} is not divisible by 24")]
    NonIntegralShift(i64),
    #[error("level must be positive")]
    ZeroLevel,
    #[error("no dimension formula for weight {0} (need even k >= 2)")]
    UnsupportedWeight(u32),
}

pub type Result<T> = std::result::Result<T, OracleError>;
