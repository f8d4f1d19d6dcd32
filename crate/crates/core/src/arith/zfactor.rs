//! Factorization over `Q`: squarefree decomposition, reduction modulo a
//! good prime, multifactor Hensel lifting and exhaustive recombination.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::factor::{distinct_degree, equal_degree, squarefree_char_zero};
use super::field::{Field, FieldElement};
use super::int::is_prime;
use super::poly::Poly;
use crate::error::Result;

/// Integer polynomial, ascending, no trailing zeros.
type ZPoly = Vec<BigInt>;

fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
    )
}

fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
fn primitive_part(a: &[BigInt]) -> ZPoly {
    let mut c = content(a);
    if a.last().is_some_and(Signed::is_negative) {
        c = -c;
    }
    a.iter().map(|x| x / &c).collect()
}

/// Exact quotient over `Z`, if `b` divides `a`.
fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let mut r: ZPoly = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    if r.len() < b.len() {
        return r.is_empty().then(Vec::new);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let (qi, rem) = r[i + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &qi * bj;
        }
        q[i] = qi;
    }
    r.iter().all(Zero::is_zero).then(|| trim(q))
}

fn to_fp(a: &[BigInt], p: u64) -> Poly {
    let f = Field::Prime(p);
    Poly::new(f.clone(), a.iter().map(|c| f.from_bigint(c)).collect())
}

fn from_fp(a: &Poly) -> ZPoly {
    a.coeffs()
        .iter()
        .map(|c| match c {
            FieldElement::Modular { value, .. } => BigInt::from(*value),
            _ => unreachable!("prime field coefficient"),
        })
        .collect()
}

fn norm2_ceil(a: &[BigInt]) -> BigInt {
    let s: BigInt = a.iter().map(|c| c * c).sum();
    s.sqrt() + 1
}

/// Lifts `f = lc * g * h mod p` (with `g`, `h` monic over `F_p`) to
/// `f = G * H mod p^a` with `G` monic.
fn hensel_pair(f: &[BigInt], g: &Poly, h: &Poly, p: u64, a: u32) -> (ZPoly, ZPoly) {
    let fp = Field::Prime(p);
    let pb = BigInt::from(p);
    let modulus = pb.pow(a);
    let lc = f.last().unwrap().clone();
    let lc_p = fp.from_bigint(&lc);
    let (_, s, t) = g.ext_gcd(h).expect("same field");
    // s g + t (lc h) = 1 with t rescaled
    let t = t.scale(&lc_p.inv().expect("lc is a unit mod p"));
    let mut big_g = from_fp(g);
    let mut big_h = from_fp(&h.scale(&lc_p));
    let mut q = pb.clone();
    for _ in 1..a {
        let e = zsub(f, &zmul(&big_g, &big_h));
        let e = zmod(&e, &modulus);
        let c: ZPoly = e.iter().map(|x| x / &q).collect();
        let c = to_fp(&c, p);
        let gbar = to_fp(&big_g, p);
        let hbar = to_fp(&big_h, p);
        let (k, dg) = (&c * &t).div_rem(&gbar).expect("monic divisor");
        let dh = &(&c * &s) + &(&k * &hbar);
        let lift = |x: &ZPoly, d: &Poly| -> ZPoly {
            let d: ZPoly = from_fp(d).iter().map(|v| v * &q).collect();
            let n = x.len().max(d.len());
            let z = BigInt::zero();
            zmod(
                &(0..n)
                    .map(|i| x.get(i).unwrap_or(&z) + d.get(i).unwrap_or(&z))
                    .collect::<Vec<_>>(),
                &modulus,
            )
        };
        big_g = lift(&big_g, &dg);
        big_h = lift(&big_h, &dh);
        q *= &pb;
    }
    (big_g, big_h)
}

/// Lifts the modular factorization of `f` to monic factors modulo `p^a`.
fn hensel_multi(f: &[BigInt], factors: &[Poly], p: u64, a: u32) -> Vec<ZPoly> {
    let modulus = BigInt::from(p).pow(a);
    if factors.len() == 1 {
        let lc = f.last().unwrap();
        let inv = lc
            .extended_gcd(&modulus)
            .x
            .mod_floor(&modulus);
        let scaled: ZPoly = f.iter().map(|c| c * &inv).collect();
        return vec![zmod(&scaled, &modulus)];
    }
    let mid = factors.len() / 2;
    let fld = Field::Prime(p);
    let prod = |fs: &[Poly]| fs.iter().fold(Poly::one(&fld), |acc, g| &acc * g);
    let (g, h) = hensel_pair(f, &prod(&factors[..mid]), &prod(&factors[mid..]), p, a);
    let mut out = hensel_multi(&g, &factors[..mid], p, a);
    out.extend(hensel_multi(&h, &factors[mid..], p, a));
    out
}

/// Irreducible factors of a primitive squarefree integer polynomial with
/// positive leading coefficient.
fn factor_primitive_squarefree(f: &ZPoly, seed: u64) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    let lc = f.last().unwrap().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(u64, Vec<Poly>)> = None;
    let mut tried = 0;
    let mut p = 2u64;
    while tried < 5 {
        p += 1;
        if !is_prime(p) || (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fbar = to_fp(f, p);
        if !fbar.gcd(&fbar.derivative()).expect("same field").is_one() {
            continue;
        }
        tried += 1;
        let mut facs = Vec::new();
        for (g, d) in distinct_degree(&fbar.monic()).expect("finite field") {
            facs.extend(equal_degree(&g, d, &mut rng).expect("finite field"));
        }
        if facs.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().map_or(true, |(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
    }
    let (p, facs) = best.expect("a good prime exists");
    let bound = &lc.abs() * BigInt::from(2).pow(n as u32) * norm2_ceil(f) * 2;
    let pb = BigInt::from(p);
    let mut a = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        a += 1;
    }
    let lifted = hensel_multi(f, &facs, p, a);

    let mut out = Vec::new();
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut cur = f.clone();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let lc_cur = cur.last().unwrap().clone();
        let hit = remaining.iter().copied().combinations(s).find_map(|subset| {
            let mut g: ZPoly = vec![lc_cur.clone()];
            for &i in &subset {
                g = zmod(&zmul(&g, &lifted[i]), &modulus);
            }
            let g = primitive_part(&symmetric(&g, &modulus));
            zdiv_exact(&cur, &g).map(|q| (subset, g, q))
        });
        match hit {
            Some((subset, g, q)) => {
                out.push(g);
                cur = q;
                remaining.retain(|i| !subset.contains(i));
            }
            None => s += 1,
        }
    }
    if cur.len() > 1 {
        out.push(primitive_part(&cur));
    }
    out
}

/// Factors a nonzero rational polynomial into monic irreducibles.
pub(crate) fn factor_rational(f: &Poly, seed: u64) -> Result<Vec<(Poly, usize)>> {
    let q = Field::Rationals;
    let mut out = Vec::new();
    for (g, m) in squarefree_char_zero(f)? {
        let den = g
            .coeffs()
            .iter()
            .map(|c| c.as_rational().expect("rational").denom().clone())
            .fold(BigInt::one(), |l, d| l.lcm(&d));
        let z: ZPoly = g
            .coeffs()
            .iter()
            .map(|c| (c.as_rational().unwrap() * &den).to_integer())
            .collect();
        for h in factor_primitive_squarefree(&primitive_part(&z), seed) {
            let p = Poly::new(q.clone(), h.iter().map(|c| q.from_bigint(c)).collect());
            out.push((p.monic(), m));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qp(c: &[i64]) -> Poly {
        Poly::from_i64s(&Field::Rationals, c)
    }

    fn product(fac: &[(Poly, usize)]) -> Poly {
        fac.iter()
            .fold(Poly::one(&Field::Rationals), |acc, (g, m)| &acc * &g.pow(*m as u64))
    }

    #[test]
    fn cyclotomic_pieces() {
        // x^12 - 1 has six cyclotomic factors
        let mut c = vec![0; 13];
        c[0] = -1;
        c[12] = 1;
        let fac = factor_rational(&qp(&c), 0).unwrap();
        assert_eq!(fac.len(), 6);
        assert_eq!(product(&fac), qp(&c));
    }

    #[test]
    fn swinnerton_dyer_like() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits mod every prime
        let fac = factor_rational(&qp(&[1, 0, -10, 0, 1]), 0).unwrap();
        assert_eq!(fac, vec![(qp(&[1, 0, -10, 0, 1]), 1)]);
    }

    #[test]
    fn non_monic_and_repeated() {
        let f = &(&qp(&[1, 2]).pow(3) * &qp(&[-3, 0, 5])) * &qp(&[7]);
        let fac = factor_rational(&f, 0).unwrap();
        assert_eq!(product(&fac).scale(f.leading().unwrap()), f);
        assert_eq!(fac.len(), 2);
    }

    #[test]
    fn hecke_like_polynomial() {
        // (x^2 - 2x - 1)(x^2 + x - 1)(x - 3)
        let f = &(&qp(&[-1, -2, 1]) * &qp(&[-1, 1, 1])) * &qp(&[-3, 1]);
        let fac = factor_rational(&f, 0).unwrap();
        assert_eq!(fac.len(), 3);
        assert_eq!(product(&fac), f);
    }

    /// Rational root test by enumerating `p/q` with `p | a_0`, `q | a_n`.
    fn has_rational_root(g: &Poly) -> bool {
        if g.degree() == Some(1) {
            return false;
        }
        let den = g
            .coeffs()
            .iter()
            .map(|c| c.as_rational().unwrap().denom().clone())
            .fold(BigInt::one(), |l, d| l.lcm(&d));
        let z: Vec<BigInt> = g
            .coeffs()
            .iter()
            .map(|c| (c.as_rational().unwrap() * &den).to_integer())
            .collect();
        if z[0].is_zero() {
            return true;
        }
        let divs = |n: &BigInt| -> Vec<i64> {
            let n: i64 = n.abs().try_into().unwrap();
            (1..=n).filter(|d| n % d == 0).collect()
        };
        for p in divs(&z[0]) {
            for q in divs(z.last().unwrap()) {
                for s in [p, -p] {
                    let x = Field::Rationals
                        .from_ratio(&BigInt::from(s), &BigInt::from(q))
                        .unwrap();
                    if g.eval(&x).is_zero() {
                        return true;
                    }
                }
            }
        }
        false
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]
        #[test]
        fn products_of_small_factors(
            parts in prop::collection::vec(prop::collection::vec(-6i64..=6, 2..=4), 1..=4)
        ) {
            let mut f = qp(&[1]);
            let mut pieces = 0;
            for mut p in parts {
                if *p.last().unwrap() == 0 {
                    *p.last_mut().unwrap() = 1;
                }
                pieces += 1;
                f = &f * &qp(&p);
            }
            let fac = factor_rational(&f, 0).unwrap();
            prop_assert_eq!(product(&fac).scale(f.leading().unwrap()), f.clone());
            let count: usize = fac.iter().map(|(_, m)| m).sum();
            prop_assert!(count >= pieces);
            for (g, _) in &fac {
                prop_assert!(g.is_monic());
                if g.degree().unwrap() <= 3 {
                    prop_assert!(!has_rational_root(g), "{} has a rational root", g);
                }
            }
        }
    }
}
