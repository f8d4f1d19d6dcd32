//! Splitting a module under a commutative algebra of operators: primary
//! pieces, idempotents, maximal ideals and eigenform classes.

mod eigen;
mod split;

pub use eigen::{eigenform_classes, eigenform_classes_seeded, local_factor, maximal_ideal, EigenformClass, LocalFactor, MAX_PRIMITIVE_TRIALS};
pub use split::{common_eigenspaces, common_eigenspaces_seeded, commutativity_witness, idempotents_of, SplitMode};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int::{gcd, is_prime};
    use crate::arith::{poly_factor, Field, FieldElement, Poly};
    use crate::error::Error;
    use crate::hecke::{hecke_algebra, HeckeContext, SubspaceTag};
    use crate::level::{char_group, DirichletCharacter};
    use crate::linalg::{minimal_polynomial, Matrix, Subspace};
    use crate::manin::build_space;
    use proptest::prelude::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn check_idempotents(m: &Matrix, es: &[Matrix]) {
        let n = m.rows();
        let f = m.field();
        let mut sum = Matrix::zero(f, n, n);
        for (i, e) in es.iter().enumerate() {
            assert_eq!(&(e * e), e);
            for (j, e2) in es.iter().enumerate() {
                if i != j {
                    assert!((e * e2).is_zero());
                }
            }
            assert_eq!(e * m, m * e);
            sum = &sum + e;
        }
        if n > 0 {
            assert!(sum.is_identity());
        }
    }

    #[test]
    fn eigenspace_examples() {
        let d = Matrix::from_i64s(&q(), &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let mut dims: Vec<usize> = common_eigenspaces(&[d], SplitMode::Primary).unwrap().iter().map(Subspace::dim).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2]);
        let j = Matrix::from_i64s(&q(), &[&[3, 1], &[0, 3]]);
        let p = common_eigenspaces(&[j.clone()], SplitMode::Primary).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].dim(), 2);
        let g = common_eigenspaces(&[j.clone()], SplitMode::Generalized).unwrap();
        assert_eq!(g.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![1]);
        let a = Matrix::from_i64s(&q(), &[&[0, 1], &[0, 0]]);
        let b = Matrix::from_i64s(&q(), &[&[0, 0], &[1, 0]]);
        assert_eq!(common_eigenspaces(&[Matrix::identity(&q(), 2), a, b], SplitMode::Primary), Err(Error::Commutativity(1, 2)));
    }

    #[test]
    fn idempotent_examples() {
        let m = Matrix::from_i64s(&q(), &[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            idempotents_of(&m).unwrap(),
            vec![m.clone(), Matrix::from_i64s(&q(), &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]])]
        );
        let i = Matrix::identity(&q(), 3);
        assert_eq!(idempotents_of(&i).unwrap(), vec![i.clone()]);
        let nil = Matrix::from_i64s(&q(), &[&[0, 1], &[0, 0]]);
        assert_eq!(idempotents_of(&nil).unwrap(), vec![Matrix::identity(&q(), 2)]);
        assert!(matches!(idempotents_of(&Matrix::zero(&q(), 2, 3)), Err(Error::Shape(_))));
    }

    #[test]
    fn maximal_ideal_examples() {
        let factor = |m: Matrix| LocalFactor {
            subspace: Subspace::full(&q(), m.rows()),
            generators: vec![m],
            is_field: false,
            residue_modulus: Poly::x(&q()),
        };
        let gens = maximal_ideal(&factor(Matrix::identity(&q(), 2))).unwrap();
        assert!(gens[0].is_zero());
        let j = Matrix::from_i64s(&q(), &[&[3, 1], &[0, 3]]);
        let gens = maximal_ideal(&factor(j)).unwrap();
        assert!(!gens[0].is_zero() && (&gens[0] * &gens[0]).is_zero());
        assert!(maximal_ideal(&factor(Matrix::from_i64s(&q(), &[&[-2]]))).unwrap()[0].is_zero());
        let d = Matrix::from_i64s(&q(), &[&[1, 0], &[0, 2]]);
        assert_eq!(maximal_ideal(&factor(d)), Err(Error::NotLocal(0)));
    }

    fn classes(n: u64, k: u32, chi: &DirichletCharacter, prec: usize) -> (Vec<EigenformClass>, usize) {
        let s = build_space(n, k, chi, chi.field()).unwrap();
        let ctx = HeckeContext::new(&s);
        let alg = hecke_algebra(&ctx, SubspaceTag::Plus).unwrap();
        (eigenform_classes(&ctx, &alg, prec).unwrap(), alg.module_dim())
    }

    fn trivial(n: u64, f: &Field) -> DirichletCharacter {
        DirichletCharacter::trivial(n, f).unwrap()
    }

    #[test]
    fn eigenform_examples() {
        let ints = |xs: &[i64]| xs.iter().map(|&x| q().from_i64(x)).collect::<Vec<_>>();
        let (c, _) = classes(11, 2, &trivial(11, &q()), 5);
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].degree(), c[0].an.clone()), (1, ints(&[1, -2, -1, 2, 1])));
        let (c, _) = classes(1, 12, &trivial(1, &q()), 3);
        assert_eq!(c[0].an, ints(&[1, -24, 252]));
        let (c, _) = classes(23, 2, &trivial(23, &q()), 1);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].degree(), 2);
        assert_eq!(c[0].modulus, Poly::from_i64s(&q(), &[-1, 1, 1]));
    }

    /// Over F_5 the level 23 factor stays local but is no longer a field.
    #[test]
    fn level_23_mod_5_is_local_non_reduced() {
        let f5 = Field::Prime(5);
        let s = build_space(23, 2, &trivial(23, &f5), &f5).unwrap();
        let ctx = HeckeContext::new(&s);
        let alg = hecke_algebra(&ctx, SubspaceTag::Plus).unwrap();
        let t2 = (*ctx.hecke_operator(2, SubspaceTag::Plus).unwrap()).clone();
        let pieces = common_eigenspaces(&[t2.clone()], SplitMode::Primary).unwrap();
        assert_eq!(pieces.len(), 1);
        let (factor, _, _) = local_factor(&[t2], &pieces[0]).unwrap();
        assert!(!factor.is_field);
        let c = eigenform_classes(&ctx, &alg, 4).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].degree(), 1);
        assert_eq!(c[0].an[1], f5.from_i64(2));
    }

    /// Hecke relations among the reported eigenvalues, and the degree count.
    #[test]
    fn eigenvalue_relations() {
        let q = q();
        let f13 = Field::Prime(13);
        let mut cases: Vec<(u64, u32, DirichletCharacter)> = vec![
            (23, 2, trivial(23, &q)),
            (37, 2, trivial(37, &q)),
            (11, 4, trivial(11, &q)),
            (12, 6, trivial(12, &q)),
            (29, 2, trivial(29, &Field::Prime(7))),
        ];
        for chi in char_group(13, &f13).unwrap() {
            if chi.value(-1).is_one() && !chi.is_trivial() {
                cases.push((13, 2, chi));
            }
        }
        for (n, k, chi) in cases {
            let prec = 30;
            let (cls, dim) = classes(n, k, &chi, prec);
            assert_eq!(cls.iter().map(EigenformClass::degree).sum::<usize>(), dim, "N = {n}");
            for c in &cls {
                assert!(c.an[0].is_one());
                for a in 1..=prec {
                    for b in 1..=prec / a {
                        if gcd(a as i128, b as i128) == 1 {
                            assert_eq!(c.an[a * b - 1], &c.an[a - 1] * &c.an[b - 1]);
                        }
                    }
                }
                for l in (2..=5usize).filter(|&l| is_prime(l as u64) && n % l as u64 != 0) {
                    let lk = c.field.from_i64((l as i64).pow(k - 1));
                    let chi_l = c.field.from_i64(0) + &lift(&c.field, &chi.value(l as i64));
                    let expected = &(&c.an[l - 1] * &c.an[l - 1]) - &(&lk * &chi_l);
                    assert_eq!(c.an[l * l - 1], expected, "N = {n}, l = {l}");
                }
            }
        }
    }

    fn lift(field: &Field, x: &FieldElement) -> FieldElement {
        match field {
            Field::Extension(_) => field.from_coords(vec![x.clone()]).unwrap(),
            _ => x.clone(),
        }
    }

    #[test]
    fn primary_refines_generalized() {
        let s = build_space(37, 2, &trivial(37, &q()), &q()).unwrap();
        let ctx = HeckeContext::new(&s);
        let ops: Vec<Matrix> = [2u64, 3]
            .iter()
            .map(|&p| (*ctx.hecke_operator(p, SubspaceTag::Cuspidal).unwrap()).clone())
            .collect();
        let primary = common_eigenspaces(&ops, SplitMode::Primary).unwrap();
        let general = common_eigenspaces(&ops, SplitMode::Generalized).unwrap();
        assert_eq!(primary.iter().map(Subspace::dim).sum::<usize>(), ops[0].rows());
        for g in &general {
            assert!(primary.iter().any(|p| g.is_subspace_of(p)));
        }
        for p in &primary {
            let t = crate::linalg::restrict_operator(&ops[0], p).unwrap();
            assert_eq!(poly_factor(&minimal_polynomial(&t).unwrap()).unwrap().len(), 1);
        }
    }

    fn arb_matrix(field: Field) -> impl Strategy<Value = Matrix> {
        (1usize..=6).prop_flat_map(move |n| {
            let f = field.clone();
            prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| {
                let rows: Vec<&[i64]> = v.chunks(n).collect();
                Matrix::from_i64s(&f, &rows)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn idempotent_axioms_over_q(m in arb_matrix(Field::Rationals)) {
            check_idempotents(&m, &idempotents_of(&m).unwrap());
        }

        #[test]
        fn idempotent_axioms_over_f7(m in arb_matrix(Field::Prime(7))) {
            let es = idempotents_of(&m).unwrap();
            check_idempotents(&m, &es);
            let pieces = common_eigenspaces(&[m.clone()], SplitMode::Primary).unwrap();
            prop_assert_eq!(pieces.len(), es.len());
        }
    }
}
