use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{OracleError, Result};

/// A power series `c_0 + c_1 q + ... + c_{P-1} q^{P-1} + O(q^P)` with exact
/// integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    /// Builds a series of precision `prec`, padding or truncating `coeffs`.
    pub fn new(mut coeffs: Vec<BigInt>, prec: usize) -> Self {
        coeffs.resize(prec, BigInt::zero());
        IntSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64], prec: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), prec)
    }

    pub fn one(prec: usize) -> Self {
        Self::from_i64s(&[1], prec)
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^n`; `None` beyond the precision.
    pub fn coeff(&self, n: usize) -> Option<&BigInt> {
        self.coeffs.get(n)
    }

    /// Truncated Cauchy product; the precision is the minimum of both inputs.
    pub fn mul(&self, other: &IntSeries) -> IntSeries {
        let prec = self.precision().min(other.precision());
        let mut out = vec![BigInt::zero(); prec];
        for (i, a) in self.coeffs.iter().take(prec).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(prec - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntSeries { coeffs: out }
    }

    /// Multiplies by `q^shift`, keeping the precision.
    pub fn shift(&self, shift: usize) -> IntSeries {
        let prec = self.precision();
        let mut out = vec![BigInt::zero(); prec];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + shift < prec {
                out[i + shift] = c.clone();
            }
        }
        IntSeries { coeffs: out }
    }

    /// Multiplies in place by `(1 - q^step)^exp` for `exp >= 0`, or divides
    /// by `(1 - q^step)^{-exp}` for negative `exp`.
    fn mul_binomial(&mut self, step: usize, exp: i64) {
        let prec = self.precision();
        if step >= prec {
            return;
        }
        if exp >= 0 {
            for _ in 0..exp {
                for n in (step..prec).rev() {
                    let t = self.coeffs[n - step].clone();
                    self.coeffs[n] -= t;
                }
            }
        } else {
            // 1/(1 - q^step) = 1 + q^step + q^{2 step} + ...
            for _ in 0..(-exp) {
                for n in step..prec {
                    let t = self.coeffs[n - step].clone();
                    self.coeffs[n] += t;
                }
            }
        }
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.precision())
    }
}

/// Expansion of `q^{s/24} prod_d prod_{n>=1} (1 - q^{dn})^{r_d}` with
/// `s = sum_d d r_d`, to precision `prec`.
pub fn eta_quotient(exponents: &BTreeMap<u64, i64>, prec: usize) -> Result<IntSeries> {
    let weight_sum: i64 = exponents.iter().map(|(&d, &r)| d as i64 * r).sum();
    if weight_sum.rem_euclid(24) != 0 {
        return Err(OracleError::NonIntegralShift(weight_sum));
    }
    let shift = weight_sum / 24;
    if shift < 0 {
        return Err(OracleError::NonIntegralShift(weight_sum));
    }
    let shift = shift as usize;
    let mut series = IntSeries::new(Vec::new(), prec);
    if shift >= prec {
        return Ok(series);
    }
    let inner_prec = prec - shift;
    let mut inner = IntSeries::new(vec![BigInt::one()], inner_prec);
    for (&d, &r) in exponents {
        if d == 0 {
            continue;
        }
        let mut step = d as usize;
        while step < inner_prec {
            inner.mul_binomial(step, r);
            step += d as usize;
        }
    }
    for (i, c) in inner.coeffs.into_iter().enumerate() {
        series.coeffs[i + shift] = c;
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exps(pairs: &[(u64, i64)]) -> BTreeMap<u64, i64> {
        pairs.iter().copied().collect()
    }

    fn ints(s: &IntSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn cauchy_product_examples() {
        let a = IntSeries::from_i64s(&[1, 1], 3);
        let b = IntSeries::from_i64s(&[1, -1], 3);
        assert_eq!(ints(&a.mul(&b)), vec![1, 0, -1]);
        assert_eq!(ints(&b.mul(&b)), vec![1, -2, 1]);
        let c = IntSeries::from_i64s(&[3, 0, 7, -2], 4);
        assert_eq!(c.mul(&IntSeries::one(4)), c);
    }

    #[test]
    fn product_precision_is_minimum() {
        let a = IntSeries::from_i64s(&[1, 1], 5);
        let b = IntSeries::from_i64s(&[1, 1], 3);
        assert_eq!(a.mul(&b).precision(), 3);
    }

    #[test]
    fn delta_leading_terms() {
        let d = eta_quotient(&exps(&[(1, 24)]), 4).unwrap();
        assert_eq!(ints(&d), vec![0, 1, -24, 252]);
    }

    #[test]
    fn level_eleven_leading_terms() {
        let f = eta_quotient(&exps(&[(1, 2), (11, 2)]), 5).unwrap();
        assert_eq!(ints(&f), vec![0, 1, -2, -1, 2]);
    }

    #[test]
    fn level_two_weight_eight() {
        let f = eta_quotient(&exps(&[(1, 8), (2, 8)]), 3).unwrap();
        assert_eq!(ints(&f), vec![0, 1, -8]);
    }

    #[test]
    fn rejects_fractional_shift() {
        assert_eq!(
            eta_quotient(&exps(&[(1, 1)]), 5),
            Err(OracleError::NonIntegralShift(1))
        );
    }

    #[test]
    fn negative_exponents_invert() {
        // eta(z)^{-1} eta(z)^{25} = eta(z)^{24}
        let a = eta_quotient(&exps(&[(1, 24)]), 12).unwrap();
        let mut b = IntSeries::new(vec![BigInt::one()], 12).shift(1);
        for n in 1..12 {
            b.mul_binomial(n, 25);
            b.mul_binomial(n, -1);
        }
        assert_eq!(a, b);
    }

    #[test]
    fn ramanujan_tau_is_multiplicative() {
        let d = eta_quotient(&exps(&[(1, 24)]), 51).unwrap();
        let tau = |n: usize| d.coeff(n).unwrap().clone();
        for m in 1..=50usize {
            for n in 1..=50usize {
                if m * n <= 50 && num_gcd(m, n) == 1 {
                    assert_eq!(tau(m * n), tau(m) * tau(n), "tau({m}*{n})");
                }
            }
        }
    }

    fn num_gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            num_gcd(b, a % b)
        }
    }
}
