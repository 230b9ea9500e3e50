mod common;

use common::{all_vectors, fp, matrices, naive_bracket};
use liegal::format::{parse_algebra, serialize_algebra};
use liegal::lie::{catalog, flatten};
use liegal::{Field, LieAlgebra, Matrix, Scalar};
use proptest::prelude::*;

fn small_catalog(field: Field) -> Vec<LieAlgebra> {
    let mut v = vec![
        catalog::aff2(field).unwrap(),
        catalog::sl(field, 2).unwrap(),
        catalog::heisenberg(field, 1).unwrap(),
        catalog::heisenberg(field, 2).unwrap(),
        catalog::l(field, 1).unwrap(),
        catalog::l(field, 2).unwrap(),
        catalog::t(field, 1).unwrap(),
        catalog::b(field, 1).unwrap(),
        catalog::gl(field, 2).unwrap(),
        catalog::fivedim_perfect(field).unwrap(),
        catalog::gl_kn(field, 2).unwrap(),
    ];
    if field.characteristic() != 2 {
        v.push(catalog::holomorph(&catalog::sl(field, 2).unwrap()).unwrap());
    }
    v
}

fn jacobi_holds(l: &LieAlgebra) -> bool {
    let n = l.dim();
    (0..n).all(|i| (i + 1..n).all(|j| (j + 1..n).all(|k| l.jacobiator(i, j, k).iter().all(Scalar::is_zero))))
}

#[test]
fn catalog_algebras_satisfy_jacobi_and_round_trip() {
    for field in [Field::rationals(), fp(2), fp(3), fp(5)] {
        for l in small_catalog(field) {
            assert!(jacobi_holds(&l), "{:?}", l.names());
            let back = parse_algebra(&serialize_algebra(&l)).unwrap();
            assert_eq!(back, l);
        }
    }
}

#[test]
fn derivations_match_exhaustive_scan() {
    // Oracle: every n x n matrix over F_p, checked against the Leibniz rule
    // with the naive bracket.
    for (p, l) in [
        (2, catalog::aff2(fp(2)).unwrap()),
        (3, catalog::aff2(fp(3)).unwrap()),
        (2, catalog::heisenberg(fp(2), 1).unwrap()),
        (3, catalog::heisenberg(fp(3), 1).unwrap()),
        (2, catalog::sl(fp(2), 2).unwrap()),
        (3, catalog::sl(fp(3), 2).unwrap()),
    ] {
        let f = l.field();
        let n = l.dim();
        let basis: Vec<Vec<Scalar>> = (0..n).map(|i| l.basis_vector(i)).collect();
        let count = matrices(f, n, n)
            .filter(|d| {
                (0..n).all(|i| {
                    (i + 1..n).all(|j| {
                        let lhs = common::apply(d, &l.basis_bracket(i, j));
                        let a = naive_bracket(&l, &d.column(i), &basis[j]);
                        let b = naive_bracket(&l, &basis[i], &d.column(j));
                        let rhs: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                        lhs == rhs
                    })
                })
            })
            .count();
        let der = l.derivations();
        assert_eq!(count, (p as usize).pow(der.dim() as u32), "{:?} over F{p}", l.names());
    }
}

#[test]
fn center_matches_exhaustive_scan() {
    for l in [
        catalog::heisenberg(fp(3), 1).unwrap(),
        catalog::gl(fp(2), 2).unwrap(),
        catalog::gl(fp(3), 2).unwrap(),
        catalog::sl(fp(2), 2).unwrap(),
        catalog::t(fp(3), 1).unwrap(),
    ] {
        let f = l.field();
        let n = l.dim();
        let central = all_vectors(f, n)
            .into_iter()
            .filter(|z| (0..n).all(|i| naive_bracket(&l, z, &l.basis_vector(i)).iter().all(Scalar::is_zero)))
            .count();
        let p = f.characteristic() as usize;
        assert_eq!(central, p.pow(l.center().dim() as u32), "{:?}", l.names());
    }
}

#[test]
fn structural_facts_of_named_algebras() {
    let q = Field::rationals();
    let sl2 = catalog::sl(q, 2).unwrap().flags();
    assert!(sl2.perfect && sl2.complete && !sl2.solvable);
    assert!(sl2.sympathetic);
    let h5 = catalog::heisenberg(q, 2).unwrap();
    assert_eq!(h5.center().dim(), 1);
    assert_eq!(h5.flags().derived_series_dims, vec![5, 1, 0]);
    let l5 = catalog::l(q, 2).unwrap();
    assert_eq!(l5.flags().derived_series_dims, vec![5, 4, 0]);
    assert_eq!(catalog::gl(q, 3).unwrap().center().dim(), 1);
    for field in [q, fp(3), fp(5)] {
        let g = catalog::fivedim_perfect(field).unwrap();
        assert!(g.is_perfect());
        assert!(g.center().is_zero());
    }
    let hol = catalog::holomorph(&catalog::sl(q, 2).unwrap()).unwrap();
    assert_eq!(hol.dim(), 6);
}

#[test]
fn fivedim_derivation_is_outer_except_in_characteristic_three() {
    for p in [5, 7, 11] {
        let g = catalog::fivedim_perfect(fp(p)).unwrap();
        let d = catalog::fivedim_derivation(fp(p));
        assert!(g.is_derivation(&d).unwrap());
        assert!(g.is_inner(&d).unwrap().is_none(), "F{p}");
    }
    let q = Field::rationals();
    let g = catalog::fivedim_perfect(q).unwrap();
    assert!(g.is_inner(&catalog::fivedim_derivation(q)).unwrap().is_none());
    // In characteristic 3 the derivation is ad(2 e3 + e5).
    let f3 = fp(3);
    let g = catalog::fivedim_perfect(f3).unwrap();
    let x = liegal::linalg::vector(f3, &[0, 0, 2, 0, 1]);
    assert_eq!(g.ad(&x).unwrap(), catalog::fivedim_derivation(f3));
}

#[test]
fn literal_tables_match_single_extensions() {
    for field in [Field::rationals(), fp(3), fp(5)] {
        for n in 1..=2 {
            assert_eq!(catalog::t(field, n).unwrap(), catalog::t_table(field, n).unwrap());
            assert_eq!(catalog::b(field, n).unwrap(), catalog::b_table(field, n).unwrap());
        }
    }
}

fn arb_algebra() -> impl Strategy<Value = LieAlgebra> {
    (prop_oneof![Just(Field::rationals()), Just(fp(3)), Just(fp(5))], 0usize..6)
        .prop_map(|(f, i)| match i {
            0 => catalog::aff2(f).unwrap(),
            1 => catalog::sl(f, 2).unwrap(),
            2 => catalog::heisenberg(f, 1).unwrap(),
            3 => catalog::l(f, 1).unwrap(),
            4 => catalog::t(f, 1).unwrap(),
            _ => catalog::gl(f, 2).unwrap(),
        })
}

fn arb_invertible(l: LieAlgebra) -> impl Strategy<Value = (LieAlgebra, Matrix)> {
    let (f, n) = (l.field(), l.dim());
    prop::collection::vec(-2i64..=2, n * n)
        .prop_map(move |v| Matrix::from_i64(f, n, n, &v))
        .prop_filter("invertible", |m| m.is_invertible())
        .prop_map(move |m| (l.clone(), m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_is_bilinear_and_alternating(
        l in arb_algebra(),
        xs in prop::collection::vec(-4i64..=4, 5),
        ys in prop::collection::vec(-4i64..=4, 5),
        zs in prop::collection::vec(-4i64..=4, 5),
    ) {
        let f = l.field();
        let n = l.dim();
        let v = |c: &[i64]| -> Vec<Scalar> { c[..n].iter().map(|&a| f.from_i64(a)).collect() };
        let (x, y, z) = (v(&xs), v(&ys), v(&zs));
        let xy = l.bracket(&x, &y).unwrap();
        prop_assert_eq!(&xy, &naive_bracket(&l, &x, &y));
        prop_assert!(l.bracket(&x, &x).unwrap().iter().all(Scalar::is_zero));
        let yz: Vec<Scalar> = y.iter().zip(&z).map(|(a, b)| a + b).collect();
        let lhs = l.bracket(&x, &yz).unwrap();
        let rhs: Vec<Scalar> = xy.iter().zip(&l.bracket(&x, &z).unwrap()).map(|(a, b)| a + b).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn invariants_survive_change_of_basis((l, p) in arb_algebra().prop_flat_map(arb_invertible)) {
        let names = (0..l.dim()).map(|i| format!("b{i}")).collect();
        let other = l.induced(&p.columns(), names).unwrap();
        let (a, b) = (l.flags(), other.flags());
        prop_assert_eq!(a, b);
        // p is an isomorphism from the new basis to the old one
        prop_assert!(other.is_homomorphism(&l, &p).unwrap());
    }

    #[test]
    fn inner_derivations_are_derivations(l in arb_algebra(), c in prop::collection::vec(-3i64..=3, 5)) {
        let f = l.field();
        let x: Vec<Scalar> = c[..l.dim()].iter().map(|&a| f.from_i64(a)).collect();
        let ad = l.ad(&x).unwrap();
        prop_assert!(l.is_derivation(&ad).unwrap());
        prop_assert!(l.derivations().contains(&flatten(&ad)).unwrap());
        prop_assert!(l.is_inner(&ad).unwrap().is_some());
    }
}
