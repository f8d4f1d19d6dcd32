//! The weight module `V_{k-2}` of homogeneous polynomials of degree `k - 2`.
//!
//! A polynomial is stored as its coefficient vector on `X^i Y^{k-2-i}`,
//! `i = 0..=k-2`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::mat2::Mat2;
use crate::arith::{Field, FieldElement};

/// Coefficients of `(aX + bY)^i` on `X^s Y^{i-s}`.
fn binomial_power(a: i128, b: i128, i: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for _ in 0..i {
        let mut next = vec![BigInt::zero(); out.len() + 1];
        for (s, c) in out.iter().enumerate() {
            next[s + 1] += c * a;
            next[s] += c * b;
        }
        out = next;
    }
    out
}

/// Integer matrix of `P(X, Y) -> P(aX + bY, cX + dY)` on degree `n`
/// monomials: row `i` holds the image of `X^i Y^{n-i}`.
pub fn substitution_matrix(m: &Mat2, n: usize) -> Vec<Vec<BigInt>> {
    (0..=n)
        .map(|i| {
            let left = binomial_power(m.a, m.b, i);
            let right = binomial_power(m.c, m.d, n - i);
            let mut row = vec![BigInt::zero(); n + 1];
            for (s, x) in left.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (t, y) in right.iter().enumerate() {
                    row[s + t] += x * y;
                }
            }
            row
        })
        .collect()
}

/// `P(m00 X + m01 Y, m10 X + m11 Y)`. Composes as
/// `act_subst(act_subst(P, A), B) = act_subst(P, AB)`.
pub fn act_subst(field: &Field, p: &[FieldElement], m: &Mat2) -> Vec<FieldElement> {
    let n = p.len() - 1;
    let mut out = vec![field.zero(); n + 1];
    if p.iter().all(FieldElement::is_zero) {
        return out;
    }
    let images = substitution_matrix(m, n);
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (s, x) in images[i].iter().enumerate() {
            if !x.is_zero() {
                out[s] = &out[s] + &(c * &field.from_bigint(x));
            }
        }
    }
    out
}

/// Left action `g . P = act_subst(P, adj(g))`.
pub fn act_left(field: &Field, g: &Mat2, p: &[FieldElement]) -> Vec<FieldElement> {
    act_subst(field, p, &g.adj())
}

pub fn monomial(field: &Field, n: usize, i: usize) -> Vec<FieldElement> {
    let mut v = vec![field.zero(); n + 1];
    v[i] = field.one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_mat(rng: &mut ChaCha8Rng) -> Mat2 {
        Mat2::new(
            rng.gen_range(-5..=5),
            rng.gen_range(-5..=5),
            rng.gen_range(-5..=5),
            rng.gen_range(-5..=5),
        )
    }

    /// Evaluate the polynomial at integer points to compare with the naive
    /// definition of substitution.
    fn eval(p: &[FieldElement], x: i64, y: i64, field: &Field) -> FieldElement {
        let n = p.len() - 1;
        let mut acc = field.zero();
        for (i, c) in p.iter().enumerate() {
            let t = field.from_i64(x).pow(i as u64) * field.from_i64(y).pow((n - i) as u64);
            acc = acc + &(c * &t);
        }
        acc
    }

    #[test]
    fn identity_and_examples() {
        let q = Field::Rationals;
        let p: Vec<_> = [1, 2, 3].iter().map(|&x| q.from_i64(x)).collect();
        assert_eq!(act_subst(&q, &p, &Mat2::IDENTITY), p);
        // X -> -Y, Y -> X under sigma: X^i Y^j -> (-Y)^i X^j
        let x2 = monomial(&q, 2, 2);
        assert_eq!(act_subst(&q, &x2, &Mat2::SIGMA), monomial(&q, 2, 0));
        let xy = monomial(&q, 2, 1);
        assert_eq!(act_subst(&q, &xy, &Mat2::SIGMA), vec![q.zero(), q.from_i64(-1), q.zero()]);
    }

    #[test]
    fn composition_and_evaluation() {
        let q = Field::Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let n = rng.gen_range(0..=6);
            let p: Vec<_> = (0..=n).map(|_| q.from_i64(rng.gen_range(-4..=4))).collect();
            let (a, b) = (random_mat(&mut rng), random_mat(&mut rng));
            let lhs = act_subst(&q, &act_subst(&q, &p, &a), &b);
            assert_eq!(lhs, act_subst(&q, &p, &(a * b)));
            let (x, y) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            let sx = (a.a as i64) * x + (a.b as i64) * y;
            let sy = (a.c as i64) * x + (a.d as i64) * y;
            assert_eq!(eval(&act_subst(&q, &p, &a), x, y, &q), eval(&p, sx, sy, &q));
        }
    }

    #[test]
    fn left_action_is_a_left_action() {
        let f = Field::Prime(7);
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let p: Vec<_> = (0..=4).map(|_| f.from_i64(rng.gen_range(0..7))).collect();
            let (g, h) = (random_mat(&mut rng), random_mat(&mut rng));
            assert_eq!(act_left(&f, &g, &act_left(&f, &h, &p)), act_left(&f, &(g * h), &p));
        }
    }
}
