//! Rational weight 2 eigenforms against point counts of elliptic curves
//! of the same conductor, plus the Ramanujan bound at other levels.

use modsym::arith::Field;
use modsym::decompose::eigenform_classes;
use modsym::hecke::{hecke_algebra, HeckeContext, SubspaceTag};
use modsym::level::DirichletCharacter;
use modsym::manin::build_space;

const PREC: usize = 60;

fn rational_classes(n: u64) -> Vec<Vec<i64>> {
    let q = Field::Rationals;
    let space = build_space(n, 2, &DirichletCharacter::trivial(n, &q).unwrap(), &q).unwrap();
    let ctx = HeckeContext::new(&space);
    let alg = hecke_algebra(&ctx, SubspaceTag::Plus).unwrap();
    eigenform_classes(&ctx, &alg, PREC)
        .unwrap()
        .into_iter()
        .filter(|c| c.degree() == 1)
        .map(|c| (1..=PREC).map(|m| c.coordinates(m)[0].to_string().parse().unwrap()).collect())
        .collect()
}

/// `p + 1 - #E(F_p)` for `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
fn trace_of_frobenius(a: [i64; 5], p: i64) -> i64 {
    let [a1, a2, a3, a4, a6] = a;
    let mut affine = 0;
    for x in 0..p {
        for y in 0..p {
            let lhs = y * y + a1 * x * y + a3 * y;
            let rhs = x * x * x + a2 * x * x + a4 * x + a6;
            if (lhs - rhs).rem_euclid(p) == 0 {
                affine += 1;
            }
        }
    }
    p - affine
}

fn primes_below(n: usize) -> impl Iterator<Item = usize> {
    (2..n).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
}

#[test]
fn traces_match_point_counts() {
    let curves: [(u64, [i64; 5]); 4] = [
        (11, [0, -1, 1, -10, -20]),
        (17, [1, -1, 1, -1, -14]),
        (19, [0, 1, 1, -9, -15]),
        (37, [0, 0, 1, -1, 0]),
    ];
    for (n, curve) in curves {
        let classes = rational_classes(n);
        let found = classes.iter().any(|a| {
            primes_below(PREC)
                .filter(|&p| n as usize % p != 0)
                .all(|p| a[p - 1] == trace_of_frobenius(curve, p as i64))
        });
        assert!(found, "level {n}: no class matches the curve, got {classes:?}");
    }
}

#[test]
fn rational_coefficients_are_multiplicative_and_bounded() {
    for n in [11u64, 14, 15, 17, 19, 20, 21, 24, 26, 27, 37, 43] {
        let classes = rational_classes(n);
        assert!(!classes.is_empty(), "level {n}");
        for a in &classes {
            assert_eq!(a[0], 1);
            for m in 1..=PREC {
                for k in 1..=PREC / m {
                    if num_integer::gcd(m, k) == 1 {
                        assert_eq!(a[m * k - 1], a[m - 1] * a[k - 1], "level {n}, a_{m} a_{k}");
                    }
                }
            }
            for p in primes_below(PREC) {
                let ap = a[p - 1];
                if n as usize % p != 0 {
                    assert!(ap * ap <= 4 * p as i64, "level {n}: a_{p} = {ap}");
                    if p * p <= PREC {
                        assert_eq!(a[p * p - 1], ap * ap - p as i64, "level {n}, p = {p}");
                    }
                } else {
                    assert!(ap.abs() <= 1, "level {n}: a_{p} = {ap}");
                }
            }
        }
    }
}
