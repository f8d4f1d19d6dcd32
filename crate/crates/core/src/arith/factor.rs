//! Squarefree decomposition and factorization over prime fields
//! (distinct-degree plus Cantor-Zassenhaus equal-degree splitting), the
//! dispatching entry point [`poly_factor`], and irreducibility tests.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{Field, FieldElement};
use super::poly::Poly;
use super::zfactor::factor_rational;
use crate::error::{Error, Result};

/// Default seed for the randomized splitting steps.
pub const DEFAULT_SEED: u64 = 0;

/// Factors `f` into monic irreducibles with multiplicities, using the default
/// seed.
pub fn poly_factor(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    poly_factor_seeded(f, DEFAULT_SEED)
}

/// Factors `f` over `Q` or `F_p`. The product of the factors (with
/// multiplicity) times the leading coefficient of `f` equals `f`. Output is
/// sorted by degree, then coefficients.
pub fn poly_factor_seeded(f: &Poly, seed: u64) -> Result<Vec<(Poly, usize)>> {
    if f.is_zero() {
        return Err(Error::Domain("cannot factor the zero polynomial".into()));
    }
    let mut out = match f.field() {
        Field::Rationals => factor_rational(f, seed)?,
        Field::Prime(_) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut out = Vec::new();
            for (g, m) in squarefree_prime_field(&f.monic())? {
                for h in factor_squarefree_finite(&g, &mut rng)? {
                    out.push((h, m));
                }
            }
            out
        }
        Field::Extension(_) => {
            return Err(Error::UnsupportedField(format!(
                "factorization over extension field {}",
                f.field()
            )))
        }
    };
    out.sort_by(|a, b| cmp_poly(&a.0, &b.0));
    Ok(out)
}

pub(crate) fn cmp_element(a: &FieldElement, b: &FieldElement) -> Ordering {
    match (a, b) {
        (FieldElement::Rational(x), FieldElement::Rational(y)) => x.cmp(y),
        (FieldElement::Modular { value: x, .. }, FieldElement::Modular { value: y, .. }) => x.cmp(y),
        (FieldElement::Extension { coeffs: x, .. }, FieldElement::Extension { coeffs: y, .. }) => x
            .iter()
            .zip(y)
            .map(|(u, v)| cmp_element(u, v))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal),
        _ => Ordering::Equal,
    }
}

pub(crate) fn cmp_poly(a: &Poly, b: &Poly) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        a.coeffs()
            .iter()
            .zip(b.coeffs())
            .map(|(x, y)| cmp_element(x, y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

/// Yun's squarefree decomposition in characteristic zero. Input need not be
/// monic; output factors are monic, pairwise coprime and squarefree.
pub(crate) fn squarefree_char_zero(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let f = f.monic();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let df = f.derivative();
    let b = f.gcd(&df)?;
    let mut c = f.div_exact(&b)?;
    let mut d = &df.div_exact(&b)? - &c.derivative();
    let mut i = 1;
    while !c.is_one() {
        let a = c.gcd(&d)?;
        c = c.div_exact(&a)?;
        d = &d.div_exact(&a)? - &c.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

fn pth_root(f: &Poly, p: u64) -> Poly {
    let p = p as usize;
    let coeffs = f.coeffs().iter().step_by(p).cloned().collect();
    Poly::new(f.field().clone(), coeffs)
}

/// Squarefree decomposition over a prime field.
pub(crate) fn squarefree_prime_field(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let p = f.field().characteristic();
    let f = f.monic();
    let mut out: Vec<(Poly, usize)> = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree_prime_field(&pth_root(&f, p))? {
            out.push((g, m * p as usize));
        }
        return Ok(out);
    }
    let mut c = f.gcd(&df)?;
    let mut w = f.div_exact(&c)?;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let z = w.div_exact(&y)?;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w)?;
    }
    if !c.is_one() {
        for (g, m) in squarefree_prime_field(&pth_root(&c, p))? {
            out.push((g, m * p as usize));
        }
    }
    Ok(out)
}

fn field_order(f: &Field) -> Result<BigUint> {
    f.cardinality()
        .ok_or_else(|| Error::UnsupportedField(format!("{f} is not finite")))
}

/// Distinct-degree factorization of a monic squarefree polynomial over a
/// finite field: pairs `(g, d)` where `g` is the product of all irreducible
/// factors of degree `d`.
pub(crate) fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let q = field_order(f.field())?;
    let fld = f.field().clone();
    let x = Poly::x(&fld);
    let mut out = Vec::new();
    let mut rest = f.monic();
    let mut h = x.rem(&rest)?;
    let mut d = 0;
    while let Some(n) = rest.degree() {
        d += 1;
        if 2 * d > n {
            if n > 0 {
                out.push((rest.clone(), n));
            }
            break;
        }
        h = h.pow_mod(&q, &rest)?;
        let g = (&h - &x).gcd(&rest)?;
        if !g.is_one() {
            rest = rest.div_exact(&g)?;
            h = h.rem(&rest)?;
            out.push((g, d));
        }
    }
    Ok(out)
}

/// Splits a monic squarefree polynomial whose irreducible factors all have
/// degree `d`.
pub(crate) fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let n = f.degree().unwrap_or(0);
    if n <= d {
        return Ok(vec![f.clone()]);
    }
    let fld = f.field().clone();
    let q = field_order(&fld)?;
    let p = fld.characteristic();
    loop {
        let a = Poly::new(fld.clone(), (0..n).map(|_| fld.random(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // absolute trace map from F_{q^d} to F_2
            let steps = d * fld.absolute_degree();
            let mut t = a.rem(f)?;
            let mut acc = t.clone();
            let two = BigUint::from(2u32);
            for _ in 1..steps {
                t = t.pow_mod(&two, f)?;
                acc = &acc + &t;
            }
            acc
        } else {
            let e = (q.pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            &a.pow_mod(&e, f)? - &Poly::one(&fld)
        };
        let g = b.gcd(f)?;
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let mut out = equal_degree(&g, d, rng)?;
            out.extend(equal_degree(&f.div_exact(&g)?, d, rng)?);
            return Ok(out);
        }
    }
}

fn factor_squarefree_finite(f: &Poly, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f)? {
        out.extend(equal_degree(&g, d, rng)?);
    }
    Ok(out)
}

/// Rabin's irreducibility test over a finite field. Returns a nontrivial
/// factor when `f` is reducible.
pub(crate) fn finite_field_witness(f: &Poly) -> Result<Option<Poly>> {
    let n = f.degree().unwrap_or(0);
    if n <= 1 {
        return Ok(None);
    }
    let f = f.monic();
    let g = f.gcd(&f.derivative())?;
    if !g.is_one() {
        return Ok(Some(if g.degree() == f.degree() { f.clone() } else { g }));
    }
    let parts = distinct_degree(&f)?;
    if parts.len() == 1 && parts[0].1 == n {
        return Ok(None);
    }
    let (first, d) = &parts[0];
    if parts.len() > 1 {
        return Ok(Some(first.clone()));
    }
    // all irreducible factors share degree d < n
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    Ok(Some(equal_degree(first, *d, &mut rng)?.swap_remove(0)))
}

/// Irreducibility over `Q` or a finite field.
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    Ok(reducibility_witness(f)?.is_none())
}

/// A nontrivial factor of `f`, or `None` if `f` is irreducible.
pub(crate) fn reducibility_witness(f: &Poly) -> Result<Option<Poly>> {
    match f.degree() {
        None => return Err(Error::Domain("zero polynomial".into())),
        Some(0) => return Err(Error::Domain("constant polynomial".into())),
        Some(1) => return Ok(None),
        _ => {}
    }
    match f.field() {
        Field::Rationals => {
            let fac = factor_rational(f, DEFAULT_SEED)?;
            if fac.len() == 1 && fac[0].1 == 1 {
                Ok(None)
            } else {
                Ok(Some(fac[0].0.clone()))
            }
        }
        fld if fld.is_finite() => finite_field_witness(f),
        fld => Err(Error::UnsupportedField(format!(
            "irreducibility test over {fld}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(p: u64, c: &[i64]) -> Poly {
        Poly::from_i64s(&Field::Prime(p), c)
    }

    fn product(fac: &[(Poly, usize)], field: &Field) -> Poly {
        fac.iter()
            .fold(Poly::one(field), |acc, (g, m)| &acc * &g.pow(*m as u64))
    }

    #[test]
    fn examples() {
        let q = Field::Rationals;
        let f = Poly::from_i64s(&q, &[-1, 0, 1]);
        assert_eq!(
            poly_factor(&f).unwrap(),
            vec![
                (Poly::from_i64s(&q, &[-1, 1]), 1),
                (Poly::from_i64s(&q, &[1, 1]), 1)
            ]
        );
        assert_eq!(
            poly_factor(&fp(5, &[1, 0, 1])).unwrap(),
            vec![(fp(5, &[2, 1]), 1), (fp(5, &[3, 1]), 1)]
        );
        assert_eq!(poly_factor(&fp(2, &[1, 1, 1])).unwrap(), vec![(fp(2, &[1, 1, 1]), 1)]);
    }

    #[test]
    fn zero_is_an_error() {
        assert!(matches!(
            poly_factor(&Poly::zero(&Field::Rationals)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn extension_fields_unsupported() {
        let f5 = Field::Prime(5);
        let ext = crate::arith::make_extension(&f5, &fp(5, &[2, 0, 1])).unwrap();
        assert!(matches!(poly_factor(&Poly::x(&ext)), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn multiplicities_in_characteristic_p() {
        // (x+1)^5 (x^2+2)^2 over F_5: derivative of the first factor vanishes
        let f = &fp(5, &[1, 1]).pow(5) * &fp(5, &[2, 0, 1]).pow(2);
        let fac = poly_factor(&f).unwrap();
        assert_eq!(fac, vec![(fp(5, &[1, 1]), 5), (fp(5, &[2, 0, 1]), 2)]);
    }

    #[test]
    fn over_f2_and_f3() {
        let f = &fp(2, &[1, 1]).pow(3) * &fp(2, &[1, 1, 0, 1]);
        let fac = poly_factor(&f).unwrap();
        assert_eq!(product(&fac, &Field::Prime(2)), f);
        let g = &fp(3, &[1, 0, 1]).pow(4) * &fp(3, &[2, 1]);
        assert_eq!(product(&poly_factor(&g).unwrap(), &Field::Prime(3)), g);
    }

    #[test]
    fn deterministic_given_seed() {
        let f = &(&fp(101, &[3, 1]) * &fp(101, &[7, 1])) * &fp(101, &[11, 0, 1]);
        let a = poly_factor_seeded(&f, 42).unwrap();
        let b = poly_factor_seeded(&f, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, poly_factor_seeded(&f, 1).unwrap());
    }

    /// Brute-force irreducibility: no monic divisor of degree <= deg/2.
    fn brute_irreducible(f: &Poly) -> bool {
        let p = f.field().characteristic() as i64;
        let n = f.degree().unwrap();
        for d in 1..=n / 2 {
            let total = (p as u64).pow(d as u32);
            for idx in 0..total {
                let mut coeffs = Vec::with_capacity(d + 1);
                let mut t = idx;
                for _ in 0..d {
                    coeffs.push((t % p as u64) as i64);
                    t /= p as u64;
                }
                coeffs.push(1);
                if Poly::from_i64s(f.field(), &coeffs).divides(f) {
                    return false;
                }
            }
        }
        true
    }

    /// Independent check: an irreducible of degree d divides x^(q^d) - x and
    /// shares no factor with x^(q^e) - x for e < d.
    fn gcd_irreducible(f: &Poly) -> bool {
        let q = f.field().cardinality().unwrap();
        let n = f.degree().unwrap();
        let x = Poly::x(f.field());
        let mut h = x.clone();
        for e in 1..=n {
            h = h.pow_mod(&q, f).unwrap();
            let g = (&h - &x).gcd(f).unwrap();
            if e < n && !g.is_one() {
                return false;
            }
            if e == n {
                return g == f.monic();
            }
        }
        false
    }

    fn arb_poly() -> impl Strategy<Value = (u64, Vec<i64>)> {
        (prop::sample::select(vec![5u64, 7, 101]), 1usize..=12).prop_flat_map(|(p, deg)| {
            (
                Just(p),
                prop::collection::vec(0..p as i64, deg + 1).prop_map(move |mut v| {
                    if *v.last().unwrap() == 0 {
                        *v.last_mut().unwrap() = 1;
                    }
                    v
                }),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn factors_reconstruct_and_are_irreducible((p, coeffs) in arb_poly()) {
            let f = fp(p, &coeffs);
            let fac = poly_factor(&f).unwrap();
            let lead = f.leading().unwrap().clone();
            prop_assert_eq!(product(&fac, f.field()).scale(&lead), f);
            for (g, _) in &fac {
                prop_assert!(g.is_monic());
                if g.degree().unwrap() <= 4 {
                    prop_assert!(brute_irreducible(g), "{} reducible", g);
                } else {
                    prop_assert!(gcd_irreducible(g), "{} reducible", g);
                }
            }
        }
    }
}
