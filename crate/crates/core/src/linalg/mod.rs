//! Dense exact linear algebra: echelon forms, kernels, subspaces, minimal
//! and characteristic polynomials.

mod matrix;
mod polys;
mod subspace;

pub use matrix::Matrix;
pub use polys::{char_polynomial, minimal_polynomial};
pub use subspace::{restrict_operator, span_closure, Subspace};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Field, Poly};
    use crate::error::Error;
    use proptest::prelude::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn echelon_examples() {
        let i3 = Matrix::identity(&q(), 3);
        assert_eq!(i3.echelonize(), (i3.clone(), vec![0, 1, 2]));
        let m = Matrix::from_i64s(&q(), &[&[2, 4], &[1, 2]]);
        assert_eq!(
            m.echelonize(),
            (Matrix::from_i64s(&q(), &[&[1, 2], &[0, 0]]), vec![0])
        );
        let f5 = Field::Prime(5);
        let m = Matrix::from_i64s(&f5, &[&[1, 1], &[1, 1]]);
        assert_eq!(m.echelonize().0, Matrix::from_i64s(&f5, &[&[1, 1], &[0, 0]]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::zero(&q(), 2, 2).kernel_basis().dim(), 2);
        assert_eq!(Matrix::identity(&q(), 3).kernel_basis().dim(), 0);
        let k = Matrix::from_i64s(&q(), &[&[1, 2]]).kernel_basis();
        let half = q().from_ratio(&(-1).into(), &2.into()).unwrap();
        assert_eq!(k.basis(), &[vec![q().one(), half]]);
    }

    #[test]
    fn empty_shapes() {
        let m = Matrix::zero(&q(), 0, 3);
        assert_eq!(m.kernel_basis().dim(), 3);
        let m = Matrix::zero(&q(), 3, 0);
        assert_eq!(m.kernel_basis().dim(), 0);
        assert_eq!(m.rank(), 0);
        let e = Matrix::zero(&q(), 0, 0);
        assert!(minimal_polynomial(&e).unwrap().is_one());
        assert!(char_polynomial(&e).unwrap().is_one());
    }

    #[test]
    fn polynomial_examples() {
        let x = |c: &[i64]| Poly::from_i64s(&q(), c);
        assert_eq!(minimal_polynomial(&Matrix::identity(&q(), 4)).unwrap(), x(&[-1, 1]));
        let jordan0 = Matrix::from_i64s(&q(), &[&[0, 1], &[0, 0]]);
        assert_eq!(minimal_polynomial(&jordan0).unwrap(), x(&[0, 0, 1]));
        let d = Matrix::from_i64s(&q(), &[&[1, 0], &[0, 2]]);
        assert_eq!(minimal_polynomial(&d).unwrap(), x(&[2, -3, 1]));
        assert_eq!(char_polynomial(&d).unwrap(), x(&[2, -3, 1]));
        assert_eq!(char_polynomial(&Matrix::zero(&q(), 2, 2)).unwrap(), x(&[0, 0, 1]));
        let rot = Matrix::from_i64s(&q(), &[&[0, -1], &[1, 0]]);
        assert_eq!(char_polynomial(&rot).unwrap(), x(&[1, 0, 1]));
        assert!(matches!(
            minimal_polynomial(&Matrix::zero(&q(), 2, 3)),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            char_polynomial(&Matrix::zero(&q(), 1, 3)),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn span_examples() {
        let i = Matrix::identity(&q(), 2);
        assert_eq!(span_closure(&[i.clone()]).unwrap().dim(), 1);
        assert_eq!(span_closure(&[i.clone(), i.clone()]).unwrap().dim(), 1);
        let a = Matrix::from_i64s(&q(), &[&[1, 0], &[0, 0]]);
        let b = Matrix::from_i64s(&q(), &[&[0, 0], &[0, 1]]);
        assert_eq!(span_closure(&[a, b]).unwrap().dim(), 2);
        assert!(matches!(
            span_closure(&[i, Matrix::identity(&q(), 3)]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn restriction_examples() {
        let d = Matrix::from_i64s(&q(), &[&[1, 0], &[0, 2]]);
        let e1 = Subspace::from_vectors(&q(), 2, vec![vec![q().one(), q().zero()]]);
        assert_eq!(restrict_operator(&d, &e1).unwrap(), Matrix::from_i64s(&q(), &[&[1]]));
        let j = Matrix::from_i64s(&q(), &[&[3, 1], &[0, 3]]);
        assert_eq!(restrict_operator(&j, &e1).unwrap(), Matrix::from_i64s(&q(), &[&[3]]));
        let full = Subspace::full(&q(), 2);
        assert_eq!(restrict_operator(&j, &full).unwrap(), j);
        let e2 = Subspace::from_vectors(&q(), 2, vec![vec![q().zero(), q().one()]]);
        assert!(matches!(
            restrict_operator(&j, &e2),
            Err(Error::InvarianceViolation { .. })
        ));
    }

    #[test]
    fn subspace_operations() {
        let v = |a: &[i64]| a.iter().map(|&x| q().from_i64(x)).collect::<Vec<_>>();
        let a = Subspace::from_vectors(&q(), 3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::from_vectors(&q(), 3, vec![v(&[0, 1, 1]), v(&[1, 1, 0])]);
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&[1, 1, 0])));
        assert_eq!(a.sum(&b).dim(), 3);
        assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
    }

    fn arb_matrix(field: Field) -> impl Strategy<Value = Matrix> {
        (1usize..=8).prop_flat_map(move |n| {
            let f = field.clone();
            prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
                let rows: Vec<&[i64]> = v.chunks(n).collect();
                Matrix::from_i64s(&f, &rows)
            })
        })
    }

    fn check_polys(m: &Matrix) -> std::result::Result<(), TestCaseError> {
        let mp = minimal_polynomial(m).unwrap();
        let cp = char_polynomial(m).unwrap();
        prop_assert!(mp.is_monic() && cp.is_monic());
        prop_assert_eq!(cp.degree(), Some(m.rows()));
        prop_assert!(mp.divides(&cp));
        prop_assert!(m.eval_poly(&mp).unwrap().is_zero());
        prop_assert!(m.eval_poly(&cp).unwrap().is_zero());
        // no proper monic divisor of lower degree annihilates: test mp / p for
        // each irreducible factor p
        for (p, _) in crate::arith::poly_factor(&mp).unwrap() {
            let smaller = mp.div_exact(&p).unwrap();
            prop_assert!(!m.eval_poly(&smaller).unwrap().is_zero());
        }
        Ok(())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn polys_over_q(m in arb_matrix(Field::Rationals)) {
            check_polys(&m)?;
        }

        #[test]
        fn polys_over_f5(m in arb_matrix(Field::Prime(5))) {
            check_polys(&m)?;
        }

        #[test]
        fn echelon_idempotent_and_kernel(m in arb_matrix(Field::Prime(5))) {
            let (r, p) = m.echelonize();
            prop_assert_eq!(r.echelonize(), (r.clone(), p.clone()));
            let k = m.kernel_basis();
            prop_assert_eq!(k.dim() + p.len(), m.cols());
            for v in k.basis() {
                prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
            }
        }

        #[test]
        fn restriction_minpoly_divides(m in arb_matrix(Field::Rationals)) {
            // the kernel of any polynomial in m is invariant
            let k = m.eval_poly(&Poly::from_i64s(&Field::Rationals, &[0, 1, 1])).unwrap().kernel_basis();
            let r = restrict_operator(&m, &k).unwrap();
            let mr = minimal_polynomial(&r).unwrap();
            prop_assert!(mr.divides(&minimal_polynomial(&m).unwrap()));
        }
    }
}
