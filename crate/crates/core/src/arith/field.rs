//! Exact coefficient fields: the rationals, prime fields and simple extensions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde_json::{json, Value};

use super::int::is_prime;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Descriptor of an exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// `Z/pZ` for a prime `p`.
    Prime(u64),
    /// `base[x]/(modulus)` with `modulus` monic irreducible.
    Extension(Arc<ExtensionField>),
}

/// Data of a simple extension. The modulus is stored monic, ascending.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct ExtensionField {
    base: Field,
    modulus: Vec<FieldElement>,
}

impl ExtensionField {
    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> Poly {
        Poly::new(self.base.clone(), self.modulus.clone())
    }
}

/// An element of a [`Field`], always in canonical reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    /// Residue in `[0, p)`.
    Modular { value: u64, p: u64 },
    /// Coefficients of `1, x, ..., x^{d-1}` over the base field.
    Extension {
        field: Arc<ExtensionField>,
        coeffs: Vec<FieldElement>,
    },
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    /// Builds `base[x]/(modulus)` without checking irreducibility. Use
    /// [`super::make_extension`] for checked construction.
    pub(crate) fn extension_unchecked(base: Field, modulus: &Poly) -> Field {
        let monic = modulus.monic();
        Field::Extension(Arc::new(ExtensionField {
            base,
            modulus: monic.coeffs().to_vec(),
        }))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
            Field::Extension(e) => e.base.characteristic(),
        }
    }

    /// Degree over the prime field (1 for `Q` and `F_p`).
    pub fn absolute_degree(&self) -> usize {
        match self {
            Field::Extension(e) => e.degree() * e.base.absolute_degree(),
            _ => 1,
        }
    }

    /// Number of elements for finite fields.
    pub fn cardinality(&self) -> Option<BigUint> {
        match self.characteristic() {
            0 => None,
            p => Some(BigUint::from(p).pow(self.absolute_degree() as u32)),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic() != 0
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::zero()),
            Field::Prime(p) => FieldElement::Modular { value: 0, p: *p },
            Field::Extension(e) => FieldElement::Extension {
                field: e.clone(),
                coeffs: vec![e.base.zero(); e.degree()],
            },
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(n.into())),
            Field::Prime(p) => FieldElement::Modular {
                value: (n as i128).rem_euclid(*p as i128) as u64,
                p: *p,
            },
            Field::Extension(e) => {
                let mut coeffs = vec![e.base.zero(); e.degree()];
                coeffs[0] = e.base.from_i64(n);
                FieldElement::Extension {
                    field: e.clone(),
                    coeffs,
                }
            }
        }
    }

    pub fn from_i128(&self, n: i128) -> FieldElement {
        match i64::try_from(n) {
            Ok(small) => self.from_i64(small),
            Err(_) => self.from_bigint(&BigInt::from(n)),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(*p));
                FieldElement::Modular {
                    value: r.to_u64().unwrap(),
                    p: *p,
                }
            }
            Field::Extension(e) => {
                let mut coeffs = vec![e.base.zero(); e.degree()];
                coeffs[0] = e.base.from_bigint(n);
                FieldElement::Extension {
                    field: e.clone(),
                    coeffs,
                }
            }
        }
    }

    /// The element `num/den`; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        let d = self.from_bigint(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::Domain(format!("denominator {den} vanishes in {self}")))?;
        Ok(&self.from_bigint(num) * &inv)
    }

    /// Class of `x` in an extension field.
    pub fn generator(&self) -> Option<FieldElement> {
        match self {
            Field::Extension(e) => {
                let mut coeffs = vec![e.base.zero(); e.degree()];
                if e.degree() == 1 {
                    // x = -c_0 when the modulus is x + c_0
                    coeffs[0] = -&e.modulus[0];
                } else {
                    coeffs[1] = e.base.one();
                }
                Some(FieldElement::Extension {
                    field: e.clone(),
                    coeffs,
                })
            }
            _ => None,
        }
    }

    /// Builds an extension element from base coordinates (reduced modulo the
    /// modulus if there are too many).
    pub fn from_coords(&self, coords: Vec<FieldElement>) -> Result<FieldElement> {
        let Field::Extension(e) = self else {
            return Err(Error::UnsupportedField(format!("{self} is not an extension")));
        };
        for c in &coords {
            if c.field() != e.base {
                return Err(Error::FieldMismatch(c.field().to_string(), e.base.to_string()));
            }
        }
        Ok(FieldElement::Extension {
            field: e.clone(),
            coeffs: reduce_mod(&e.base, coords, &e.modulus),
        })
    }

    /// A uniformly random element of a finite field, or a small random
    /// rational (numerator in [-9, 9], denominator in [1, 4]).
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        match self {
            Field::Rationals => {
                let n: i64 = rng.gen_range(-9..=9);
                let d: i64 = rng.gen_range(1..=4);
                FieldElement::Rational(BigRational::new(n.into(), d.into()))
            }
            Field::Prime(p) => FieldElement::Modular {
                value: rng.gen_range(0..*p),
                p: *p,
            },
            Field::Extension(e) => FieldElement::Extension {
                field: e.clone(),
                coeffs: (0..e.degree()).map(|_| e.base.random(rng)).collect(),
            },
        }
    }

    /// Parses `"3/4"`, `"-2"` (rationals, prime fields) or a JSON coordinate
    /// list for extension fields.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        match self {
            Field::Extension(_) => {
                let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
                self.element_from_json(&v)
            }
            _ => {
                let s = s.trim();
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let num: BigInt = num
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
                let den: BigInt = den
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                self.from_ratio(&num, &den)
            }
        }
    }

    pub fn element_from_json(&self, v: &Value) -> Result<FieldElement> {
        match (self, v) {
            (Field::Extension(e), Value::Array(items)) => {
                let coords = items
                    .iter()
                    .map(|c| e.base.element_from_json(c))
                    .collect::<Result<Vec<_>>>()?;
                self.from_coords(coords)
            }
            (Field::Extension(_), _) => Err(Error::Parse(format!("expected coordinate list, got {v}"))),
            (_, Value::String(s)) => self.parse_element(s),
            (_, Value::Number(n)) => self.parse_element(&n.to_string()),
            _ => Err(Error::Parse(format!("cannot read field element from {v}"))),
        }
    }

    /// `{"kind":"Q"} | {"kind":"Fp","p":5} | {"kind":"ext","base":...,"modulus":[...]}`.
    pub fn to_json(&self) -> Value {
        match self {
            Field::Rationals => json!({"kind": "Q"}),
            Field::Prime(p) => json!({"kind": "Fp", "p": p}),
            Field::Extension(e) => json!({
                "kind": "ext",
                "base": e.base.to_json(),
                "modulus": e.modulus.iter().map(FieldElement::to_json).collect::<Vec<_>>(),
            }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Field> {
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("field descriptor needs a \"kind\"".into()))?;
        match kind {
            "Q" => Ok(Field::Rationals),
            "Fp" => {
                let p = v
                    .get("p")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::Parse("Fp descriptor needs integer \"p\"".into()))?;
                Field::prime(p)
            }
            "ext" => {
                let base = Field::from_json(
                    v.get("base")
                        .ok_or_else(|| Error::Parse("ext descriptor needs \"base\"".into()))?,
                )?;
                let coeffs = v
                    .get("modulus")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Parse("ext descriptor needs \"modulus\" list".into()))?
                    .iter()
                    .map(|c| base.element_from_json(c))
                    .collect::<Result<Vec<_>>>()?;
                super::make_extension(&base, &Poly::new(base.clone(), coeffs))
            }
            other => Err(Error::Parse(format!("unknown field kind {other:?}"))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Extension(e) => write!(f, "{}[x]/({})", e.base, e.modulus()),
        }
    }
}

/// Reduces a coefficient vector modulo a monic modulus, returning exactly
/// `deg(modulus)` coefficients.
fn reduce_mod(base: &Field, mut c: Vec<FieldElement>, modulus: &[FieldElement]) -> Vec<FieldElement> {
    let d = modulus.len() - 1;
    while c.len() > d {
        let top = c.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = c.len() - d;
        for (i, m) in modulus[..d].iter().enumerate() {
            c[shift + i] = &c[shift + i] - &(&top * m);
        }
    }
    c.resize(d, base.zero());
    c
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rationals,
            FieldElement::Modular { p, .. } => Field::Prime(*p),
            FieldElement::Extension { field, .. } => Field::Extension(field.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Modular { value, .. } => *value == 0,
            FieldElement::Extension { coeffs, .. } => coeffs.iter().all(FieldElement::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Modular { value, p } => *value == 1 % p,
            FieldElement::Extension { coeffs, .. } => {
                coeffs[0].is_one() && coeffs[1..].iter().all(FieldElement::is_zero)
            }
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Coordinates over the base field (extension elements only).
    pub fn coords(&self) -> Option<&[FieldElement]> {
        match self {
            FieldElement::Extension { coeffs, .. } => Some(coeffs),
            _ => None,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElement::Rational(r) => FieldElement::Rational(r.recip()),
            FieldElement::Modular { value, p } => FieldElement::Modular {
                value: super::int::inverse_mod(*value as i128, *p as i128)? as u64,
                p: *p,
            },
            FieldElement::Extension { field, coeffs } => {
                let a = Poly::new(field.base.clone(), coeffs.clone());
                let inv = a.inverse_mod(&field.modulus())?;
                let mut c = inv.coeffs().to_vec();
                c.resize(field.degree(), field.base.zero());
                FieldElement::Extension {
                    field: field.clone(),
                    coeffs: c,
                }
            }
        })
    }

    pub fn div(&self, other: &FieldElement) -> Option<FieldElement> {
        other.inv().map(|i| self * &i)
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, e: &BigUint) -> FieldElement {
        let mut acc = self.field().one();
        for i in (0..e.bits()).rev() {
            acc = &acc * &acc;
            if e.bit(i) {
                acc = &acc * self;
            }
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        match self {
            FieldElement::Extension { coeffs, .. } => {
                Value::Array(coeffs.iter().map(FieldElement::to_json).collect())
            }
            other => Value::String(other.to_string()),
        }
    }

    /// Numerator and denominator of a rational element.
    pub fn to_ratio(&self) -> Option<(BigInt, BigInt)> {
        self.as_rational()
            .map(|r| (r.numer().clone(), r.denom().clone()))
    }

    /// Representative in `(-p/2, p/2]` for prime-field elements, used for
    /// compact display.
    pub fn signed_residue(&self) -> Option<i64> {
        match self {
            FieldElement::Modular { value, p } => {
                let v = *value as i64;
                let p = *p as i64;
                Some(if 2 * v > p { v - p } else { v })
            }
            FieldElement::Rational(r) if r.is_integer() => r.numer().to_i64(),
            _ => None,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElement::Modular { value, .. } => write!(f, "{value}"),
            FieldElement::Extension { coeffs, .. } => {
                write!(f, "[")?;
                for (i, c) in coeffs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    }
}

fn mismatch(a: &FieldElement, b: &FieldElement) -> ! {
    panic!("field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::Modular { value: a, p }, FieldElement::Modular { value: b, p: q }) if p == q => {
                let s = a + b;
                FieldElement::Modular {
                    value: if s >= *p { s - p } else { s },
                    p: *p,
                }
            }
            (
                FieldElement::Extension { field, coeffs: a },
                FieldElement::Extension { field: g, coeffs: b },
            ) if field == g => FieldElement::Extension {
                field: field.clone(),
                coeffs: a.iter().zip(b).map(|(x, y)| x + y).collect(),
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a - b),
            (FieldElement::Modular { value: a, p }, FieldElement::Modular { value: b, p: q }) if p == q => {
                FieldElement::Modular {
                    value: if a >= b { a - b } else { a + p - b },
                    p: *p,
                }
            }
            (
                FieldElement::Extension { field, coeffs: a },
                FieldElement::Extension { field: g, coeffs: b },
            ) if field == g => FieldElement::Extension {
                field: field.clone(),
                coeffs: a.iter().zip(b).map(|(x, y)| x - y).collect(),
            },
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Modular { value: a, p }, FieldElement::Modular { value: b, p: q }) if p == q => {
                FieldElement::Modular {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    p: *p,
                }
            }
            (
                FieldElement::Extension { field, coeffs: a },
                FieldElement::Extension { field: g, coeffs: b },
            ) if field == g => {
                let base = &field.base;
                let mut prod = vec![base.zero(); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        prod[i + j] = &prod[i + j] + &(x * y);
                    }
                }
                FieldElement::Extension {
                    field: field.clone(),
                    coeffs: reduce_mod(base, prod, &field.modulus),
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Modular { value, p } => FieldElement::Modular {
                value: if *value == 0 { 0 } else { p - value },
                p: *p,
            },
            FieldElement::Extension { field, coeffs } => FieldElement::Extension {
                field: field.clone(),
                coeffs: coeffs.iter().map(|c| -c).collect(),
            },
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// Sign helper for rationals, used by display code.
pub(crate) fn rational_is_negative(e: &FieldElement) -> bool {
    matches!(e, FieldElement::Rational(r) if r.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> FieldElement {
        FieldElement::Rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn rationals_are_reduced() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(q(1, 2).to_string(), "1/2");
        assert_eq!(q(-4, 2).to_string(), "-2");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        let two = f.from_i64(2);
        assert_eq!((&two * &f.from_i64(3)), f.one());
        assert_eq!(two.inv().unwrap(), f.from_i64(3));
        assert_eq!(f.from_i64(-1), f.from_i64(4));
        assert!(f.zero().inv().is_none());
        assert!(Field::prime(6).is_err());
    }

    #[test]
    fn parse_and_json() {
        let f = Field::Rationals;
        assert_eq!(f.parse_element("3/4").unwrap(), q(3, 4));
        assert_eq!(f.parse_element("-6/8").unwrap(), q(-3, 4));
        assert!(f.parse_element("1/0").is_err());
        let g = Field::prime(7).unwrap();
        assert_eq!(g.parse_element("1/2").unwrap(), g.from_i64(4));
        for fld in [Field::Rationals, g] {
            assert_eq!(Field::from_json(&fld.to_json()).unwrap(), fld);
        }
        assert_eq!(Field::Rationals.to_json(), json!({"kind": "Q"}));
        assert_eq!(Field::Prime(5).to_json(), json!({"kind": "Fp", "p": 5}));
    }

    fn check_axioms(f: &Field, samples: usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..samples {
            let a = f.random(&mut rng);
            let b = f.random(&mut rng);
            let c = f.random(&mut rng);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            assert_eq!(&a * &b, &b * &a);
            assert!((&a - &a).is_zero());
            if let Some(i) = a.inv() {
                assert!((&a * &i).is_one());
            } else {
                assert!(a.is_zero());
            }
        }
    }

    #[test]
    fn field_axioms_rationals() {
        check_axioms(&Field::Rationals, 1000);
    }

    #[test]
    fn field_axioms_prime_fields() {
        for p in [5, 7, 101] {
            check_axioms(&Field::prime(p).unwrap(), 1000);
        }
    }

    #[test]
    fn field_axioms_extensions() {
        let f5 = Field::prime(5).unwrap();
        let x2p2 = Poly::new(f5.clone(), vec![f5.from_i64(2), f5.zero(), f5.one()]);
        check_axioms(&crate::arith::make_extension(&f5, &x2p2).unwrap(), 1000);
        let qq = Field::Rationals;
        let m = Poly::from_i64s(&qq, &[-1, 1, 1]);
        check_axioms(&crate::arith::make_extension(&qq, &m).unwrap(), 1000);
    }
}
