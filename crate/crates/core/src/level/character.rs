//! Dirichlet characters with values in `Q` or a prime field.

use std::fmt;

use serde_json::{json, Value};

use crate::arith::int::{factor_int, gcd, inverse_mod, primitive_root};
use crate::arith::{Field, FieldElement};
use crate::error::{Error, Result};

/// A Dirichlet character modulo `N`, extended by zero to non-units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    field: Field,
    /// Generators of the cyclic factors of `(Z/N)^*`, lifted by CRT.
    gens: Vec<u64>,
    orders: Vec<u64>,
    images: Vec<FieldElement>,
    /// Value at every residue in `[0, N)`.
    values: Vec<FieldElement>,
}

/// Generators and their orders for the CRT decomposition of `(Z/N)^*`.
pub fn unit_group_generators(n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for (p, e) in factor_int(n) {
        let q = p.pow(e);
        let local: Vec<(u64, u64)> = if p == 2 {
            match e {
                1 => vec![],
                2 => vec![(3, 2)],
                _ => vec![(q - 1, 2), (5, q / 4)],
            }
        } else {
            vec![(primitive_root(q), q / p * (p - 1))]
        };
        for (g, ord) in local {
            // g mod q, 1 mod n/q
            let rest = n / q;
            let lift = if rest == 1 {
                g
            } else {
                let inv = inverse_mod(rest as i128, q as i128).unwrap() as u128;
                let t = ((g as u128 + q as u128 - 1) % q as u128) * inv % q as u128;
                ((1 + t * rest as u128) % n as u128) as u64
            };
            out.push((lift, ord));
        }
    }
    out
}

/// Roots of unity of order dividing `m` in `field`, in enumeration order.
fn admissible_images(field: &Field, m: u64) -> Result<Vec<FieldElement>> {
    match field {
        Field::Rationals => Ok(if m % 2 == 0 {
            vec![field.one(), field.from_i64(-1)]
        } else {
            vec![field.one()]
        }),
        Field::Prime(p) => {
            let g = gcd(m as i128, (*p - 1) as i128) as u64;
            let zeta = field.from_i64(primitive_root(*p) as i64).pow((p - 1) / g);
            Ok((0..g).map(|j| zeta.pow(j)).collect())
        }
        Field::Extension(_) => Err(Error::UnsupportedField(format!(
            "characters with values in {field}"
        ))),
    }
}

impl DirichletCharacter {
    /// The character with the given generator images.
    pub fn from_images(n: u64, field: &Field, images: Vec<FieldElement>) -> Result<Self> {
        let gens = unit_group_generators(n);
        if images.len() != gens.len() {
            return Err(Error::Shape(format!(
                "{} images for {} generators",
                images.len(),
                gens.len()
            )));
        }
        for (img, &(g, ord)) in images.iter().zip(&gens) {
            if !img.pow(ord).is_one() {
                return Err(Error::Domain(format!(
                    "image {img} of generator {g} has order not dividing {ord}"
                )));
            }
        }
        let mut values = vec![field.zero(); n as usize];
        // walk all exponent vectors
        let mut exps = vec![0u64; gens.len()];
        loop {
            let mut residue = 1 % n;
            let mut value = field.one();
            for (k, &(g, _)) in gens.iter().enumerate() {
                for _ in 0..exps[k] {
                    residue = (residue as u128 * g as u128 % n as u128) as u64;
                }
                value = &value * &images[k].pow(exps[k]);
            }
            values[residue as usize] = value;
            let mut k = 0;
            loop {
                if k == gens.len() {
                    return Ok(DirichletCharacter {
                        modulus: n,
                        field: field.clone(),
                        gens: gens.iter().map(|g| g.0).collect(),
                        orders: gens.iter().map(|g| g.1).collect(),
                        images,
                        values,
                    });
                }
                exps[k] += 1;
                if exps[k] < gens[k].1 {
                    break;
                }
                exps[k] = 0;
                k += 1;
            }
        }
    }

    pub fn trivial(n: u64, field: &Field) -> Result<Self> {
        let k = unit_group_generators(n).len();
        Self::from_images(n, field, vec![field.one(); k])
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn generator_orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn images(&self) -> &[FieldElement] {
        &self.images
    }

    /// `chi(a)`, zero when `gcd(a, N) > 1`.
    pub fn value(&self, a: i64) -> FieldElement {
        let n = self.modulus as i64;
        self.values[a.rem_euclid(n) as usize].clone()
    }

    pub fn value_i128(&self, a: i128) -> FieldElement {
        let n = self.modulus as i128;
        self.values[a.rem_euclid(n) as usize].clone()
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(FieldElement::is_one)
    }

    /// Multiplicative order of the character.
    pub fn order(&self) -> u64 {
        (1..)
            .find(|&e| self.images.iter().all(|x| x.pow(e).is_one()))
            .unwrap()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "modulus": self.modulus,
            "generators": self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "images": self.images.iter().map(FieldElement::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .gens
            .iter()
            .zip(&self.images)
            .map(|(g, x)| format!("{g} -> {x}"))
            .collect();
        write!(f, "chi mod {} [{}]", self.modulus, parts.join(", "))
    }
}

/// All characters mod `N` with values in `field`, the first generator's image
/// being the most significant digit; index 0 is the trivial character.
pub fn char_group(n: u64, field: &Field) -> Result<Vec<DirichletCharacter>> {
    if n == 0 {
        return Err(Error::Domain("modulus must be positive".into()));
    }
    let gens = unit_group_generators(n);
    let choices: Vec<Vec<FieldElement>> = gens
        .iter()
        .map(|&(_, ord)| admissible_images(field, ord))
        .collect::<Result<_>>()?;
    if gens.is_empty() {
        admissible_images(field, 1)?;
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; gens.len()];
    loop {
        let images = idx
            .iter()
            .zip(&choices)
            .map(|(&i, c)| c[i].clone())
            .collect();
        out.push(DirichletCharacter::from_images(n, field, images)?);
        let mut k = gens.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}
