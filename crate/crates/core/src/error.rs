use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("modulus is reducible over the base field; nontrivial factor {factor}")]
    Reducible { factor: String },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("subspace is not invariant; image of basis vector {witness:?} leaves it")]
    InvarianceViolation { witness: Vec<String> },
    #[error("({u}:{v}) does not generate Z/{n}Z")]
    NotProjective { u: i64, v: i64, n: u64 },
    #[error("character parity mismatch: chi(-1) = {chi_minus_one} but (-1)^k = {expected} for k = {weight}")]
    Parity {
        chi_minus_one: String,
        expected: i32,
        weight: u32,
    },
    #[error("characteristic {0} is not supported (need 0 or a prime p > 3)")]
    UnsupportedCharacteristic(u64),
    #[error("matrix has determinant {0}, expected 1")]
    Determinant(i128),
    #[error("operators {0} and {1} do not commute")]
    Commutativity(usize, usize),
    #[error("factor is not local: generator {0} has a minimal polynomial with several prime factors")]
    NotLocal(usize),
    #[error("primitive element search failed after {trials} trials on a factor of dimension {dim}")]
    SearchFailure { trials: usize, dim: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by the mathematical input (parity, characteristic,
    /// unsupported fields) rather than by malformed requests.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
