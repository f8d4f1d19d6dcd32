//! Exact arithmetic: integers, fields, polynomials and factorization.

mod factor;
pub mod mat2;
pub mod field;
pub mod int;
pub mod poly;
mod zfactor;

pub use factor::{is_irreducible, poly_factor, poly_factor_seeded, DEFAULT_SEED};
pub use field::{ExtensionField, Field, FieldElement};
pub use poly::Poly;

use crate::error::{Error, Result};

/// Builds `base[x]/(modulus)`. The modulus is normalized to be monic and must
/// be irreducible over `base`.
pub fn make_extension(base: &Field, modulus: &Poly) -> Result<Field> {
    if modulus.field() != base {
        return Err(Error::FieldMismatch(
            modulus.field().to_string(),
            base.to_string(),
        ));
    }
    match modulus.degree() {
        None | Some(0) => {
            return Err(Error::Domain(
                "extension modulus must have positive degree".into(),
            ))
        }
        _ => {}
    }
    let modulus = modulus.monic();
    if let Some(factor) = factor::reducibility_witness(&modulus)? {
        return Err(Error::Reducible {
            factor: factor.to_string(),
        });
    }
    Ok(Field::extension_unchecked(base.clone(), &modulus))
}

/// Monic gcd of two polynomials over the same field.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    a.gcd(b)
}
