//! Classical index, elliptic point, cusp and dimension counts for `Gamma_0(N)`.

use crate::{OracleError, Result};

fn prime_divisors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn phi(n: u64) -> u64 {
    prime_divisors(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Index of `Gamma_0(N)/{+-1}` in `PSL_2(Z)`: `N prod_{p | N} (1 + 1/p)`.
pub fn index_mu(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(OracleError::ZeroLevel);
    }
    Ok(prime_divisors(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p + 1)))
}

/// Number of elliptic points of order 2.
pub fn nu2(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(OracleError::ZeroLevel);
    }
    if n % 4 == 0 {
        return Ok(0);
    }
    Ok(prime_divisors(n)
        .iter()
        .map(|&(p, _)| match p {
            2 => 1,
            _ if p % 4 == 1 => 2,
            _ => 0,
        })
        .product())
}

/// Number of elliptic points of order 3.
pub fn nu3(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(OracleError::ZeroLevel);
    }
    if n % 9 == 0 {
        return Ok(0);
    }
    Ok(prime_divisors(n)
        .iter()
        .map(|&(p, _)| match p {
            3 => 1,
            _ if p % 3 == 1 => 2,
            _ => 0,
        })
        .product())
}

/// Number of cusps: `sum_{d | N} phi(gcd(d, N/d))`.
pub fn nu_infinity(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(OracleError::ZeroLevel);
    }
    Ok((1..=n)
        .filter(|d| n % d == 0)
        .map(|d| phi(gcd(d, n / d)))
        .sum())
}

fn genus_times_12(n: u64) -> Result<i64> {
    let mu = index_mu(n)? as i64;
    let g12 = 12 + mu - 3 * nu2(n)? as i64 - 4 * nu3(n)? as i64 - 6 * nu_infinity(n)? as i64;
    debug_assert!(g12 % 12 == 0);
    Ok(g12)
}

/// `dim S_k(Gamma_0(N))` for even `k >= 2`.
pub fn dim_cuspforms(n: u64, k: u32) -> Result<u64> {
    if k < 2 || k % 2 == 1 {
        return Err(OracleError::UnsupportedWeight(k));
    }
    let g = genus_times_12(n)? / 12;
    if k == 2 {
        return Ok(g as u64);
    }
    let k = k as i64;
    let d = (k - 1) * (g - 1)
        + (k / 2 - 1) * nu_infinity(n)? as i64
        + nu2(n)? as i64 * (k / 4)
        + nu3(n)? as i64 * (k / 3);
    Ok(d as u64)
}

/// `dim M_k(Gamma_0(N))` for even `k >= 2`.
pub fn dim_modforms(n: u64, k: u32) -> Result<u64> {
    let s = dim_cuspforms(n, k)?;
    let cusps = nu_infinity(n)?;
    Ok(if k == 2 { s + cusps - 1 } else { s + cusps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_examples() {
        assert_eq!(index_mu(1).unwrap(), 1);
        assert_eq!(index_mu(11).unwrap(), 12);
        assert_eq!(index_mu(6).unwrap(), 12);
        assert_eq!(index_mu(0), Err(OracleError::ZeroLevel));
    }

    #[test]
    fn cusp_counts() {
        assert_eq!(nu_infinity(1).unwrap(), 1);
        assert_eq!(nu_infinity(11).unwrap(), 2);
        assert_eq!(nu_infinity(4).unwrap(), 3);
        assert_eq!(nu_infinity(36).unwrap(), 12);
    }

    #[test]
    fn cusp_form_dimensions() {
        assert_eq!(dim_cuspforms(11, 2).unwrap(), 1);
        assert_eq!(dim_cuspforms(1, 12).unwrap(), 1);
        assert_eq!(dim_cuspforms(23, 2).unwrap(), 2);
        assert_eq!(dim_cuspforms(2, 8).unwrap(), 1);
        assert_eq!(dim_cuspforms(1, 24).unwrap(), 2);
        assert_eq!(dim_cuspforms(37, 2).unwrap(), 2);
        assert_eq!(dim_cuspforms(1, 2).unwrap(), 0);
        assert!(dim_cuspforms(5, 3).is_err());
    }

    #[test]
    fn no_weight_two_forms_below_eleven() {
        for n in 1..=10 {
            assert_eq!(dim_cuspforms(n, 2).unwrap(), 0, "N = {n}");
        }
    }

    #[test]
    fn level_one_matches_classical_table() {
        // dim S_k(SL_2(Z)) = floor(k/12) - [k = 2 mod 12]
        for k in (2..=60).step_by(2) {
            let expected = if k == 2 { 0 } else { k / 12 - u32::from(k % 12 == 2) };
            assert_eq!(dim_cuspforms(1, k).unwrap(), expected as u64, "k = {k}");
        }
    }

    #[test]
    fn modular_form_dimensions() {
        assert_eq!(dim_modforms(11, 2).unwrap(), 2);
        assert_eq!(dim_modforms(1, 12).unwrap(), 2);
        assert_eq!(dim_modforms(1, 4).unwrap(), 1);
    }
}
