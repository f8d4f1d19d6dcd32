//! Dense univariate polynomials over an exact [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use serde_json::Value;

use super::field::{rational_is_negative, Field, FieldElement};
use crate::error::{Error, Result};

/// Polynomial with ascending coefficients and no trailing zeros; the zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        Poly { field, coeffs }
    }

    pub fn from_i64s(field: &Field, coeffs: &[i64]) -> Poly {
        Poly::new(field.clone(), coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field.clone(), Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field.one())
    }

    pub fn x(field: &Field) -> Poly {
        Poly::new(field.clone(), vec![field.zero(), field.one()])
    }

    pub fn constant(c: FieldElement) -> Poly {
        Poly::new(c.field(), vec![c])
    }

    /// `c x^deg`.
    pub fn monomial(c: FieldElement, deg: usize) -> Poly {
        let f = c.field();
        let mut coeffs = vec![f.zero(); deg];
        coeffs.push(c);
        Poly::new(f, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElement> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(FieldElement::is_one)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        Poly::new(self.field.clone(), self.coeffs.iter().map(|a| a * c).collect())
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    /// Euclidean division; errors on a zero divisor or mixed fields.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(d)?;
        let dd = d
            .degree()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let lead_inv = d.leading().unwrap().inv().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Poly::zero(&self.field), self.clone()));
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                r[i + j] = &r[i + j] - &(&c * dj);
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(self.field.clone(), q), Poly::new(self.field.clone(), r)))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact division; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Domain(format!("{d} does not divide {self}")));
        }
        Ok(q)
    }

    /// Image of a rational polynomial in `target` (coefficientwise).
    pub fn reduce(&self, target: &Field) -> Result<Poly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| match c.as_rational() {
                Some(r) => target.from_ratio(r.numer(), r.denom()),
                None => Err(Error::UnsupportedField(format!("reduction from {}", self.field))),
            })
            .collect::<Result<_>>()?;
        Ok(Poly::new(target.clone(), coeffs))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.div_rem(self).is_ok_and(|(_, r)| r.is_zero())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Returns `(g, s, t)` with `s self + t other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.check_field(other)?;
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        match r0.leading() {
            None => Ok((r0, s0, t0)),
            Some(l) => {
                let inv = l.inv().unwrap();
                Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
            }
        }
    }

    /// Inverse of `self` modulo `m`, if they are coprime.
    pub fn inverse_mod(&self, m: &Poly) -> Option<Poly> {
        let (g, s, _) = self.ext_gcd(m).ok()?;
        if !g.is_one() {
            return None;
        }
        s.rem(m).ok()
    }

    pub fn lcm(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let g = self.gcd(other)?;
        Ok((self * &other.div_exact(&g)?).monic())
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| &self.field.from_i64(i as i64) * c)
            .collect();
        Poly::new(self.field.clone(), coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &Poly) -> Result<Poly> {
        let base = self.rem(m)?;
        let mut acc = Poly::one(&self.field).rem(m)?;
        for i in (0..e.bits()).rev() {
            acc = (&acc * &acc).rem(m)?;
            if e.bit(i) {
                acc = (&acc * &base).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Coefficient list as JSON (strings, or coordinate lists over extensions).
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(FieldElement::to_json).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = rational_is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

fn assert_same(a: &Poly, b: &Poly) {
    if a.field != b.field {
        panic!("field mismatch: {} vs {}", a.field, b.field);
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_same(self, rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(self.field.clone(), coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.field.clone(), self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_same(self, rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field.clone(), out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_examples() {
        let q = Field::Rationals;
        let a = Poly::from_i64s(&q, &[-1, 0, 1]);
        let b = Poly::from_i64s(&q, &[-1, 1]);
        assert_eq!(a.gcd(&b).unwrap(), b);
        assert!(Poly::x(&q).gcd(&Poly::one(&q)).unwrap().is_one());
        let f5 = Field::Prime(5);
        let a = Poly::from_i64s(&f5, &[1, 0, 1]);
        let b = Poly::from_i64s(&f5, &[0, 1, 1]);
        // x^2+1 = (x+2)(x+3) and x^2+x = x(x+1) share no root mod 5
        assert!(a.gcd(&b).unwrap().is_one());
        assert!(Poly::zero(&q).gcd(&Poly::zero(&q)).unwrap().is_zero());
    }

    #[test]
    fn gcd_over_f5_by_brute_force() {
        // every monic linear divisor of both x^2+1 and x^2+x over F_5
        let f5 = Field::Prime(5);
        let a = Poly::from_i64s(&f5, &[1, 0, 1]);
        let b = Poly::from_i64s(&f5, &[0, 1, 1]);
        let common: Vec<i64> = (0..5)
            .filter(|&r| {
                let lin = Poly::from_i64s(&f5, &[r, 1]);
                lin.divides(&a) && lin.divides(&b)
            })
            .collect();
        assert!(common.is_empty());
        assert_eq!(a.gcd(&b).unwrap().degree(), Some(0));
    }

    #[test]
    fn gcd_mixed_fields_fails() {
        let a = Poly::x(&Field::Rationals);
        let b = Poly::x(&Field::Prime(5));
        assert!(matches!(a.gcd(&b), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn division_identity() {
        let q = Field::Rationals;
        let a = Poly::from_i64s(&q, &[3, -2, 0, 5, 7]);
        let b = Poly::from_i64s(&q, &[1, 2, 3]);
        let (quo, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&quo * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
        assert!(a.div_rem(&Poly::zero(&q)).is_err());
    }

    #[test]
    fn ext_gcd_bezout() {
        let f7 = Field::Prime(7);
        let a = Poly::from_i64s(&f7, &[1, 2, 3, 1]);
        let b = Poly::from_i64s(&f7, &[5, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b).unwrap();
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn display() {
        let q = Field::Rationals;
        assert_eq!(Poly::from_i64s(&q, &[-1, 1, 1]).to_string(), "x^2 + x - 1");
        assert_eq!(Poly::from_i64s(&q, &[0, -3]).to_string(), "-3*x");
        assert_eq!(Poly::from_i64s(&Field::Prime(5), &[4, 4, 1]).to_string(), "x^2 + 4*x + 4");
    }
}
