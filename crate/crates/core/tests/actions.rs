mod common;

use std::collections::HashSet;

use common::{all_vectors, apply, fp, in_span};
use liegal::actions::{close_group, conjugation_matrix, permutation_conjugation};
use liegal::lie::catalog;
use liegal::{Error, Field, LieAlgebra, Matrix, Scalar};
use proptest::prelude::*;

/// Closure by repeated multiplication until nothing new appears.
fn naive_closure(gens: &[Matrix]) -> HashSet<Matrix> {
    let mut set: HashSet<Matrix> = gens.iter().cloned().collect();
    loop {
        let mut fresh = Vec::new();
        for a in &set {
            for g in gens {
                let c = a * g;
                if !set.contains(&c) {
                    fresh.push(c);
                }
            }
        }
        if fresh.is_empty() {
            return set;
        }
        set.extend(fresh);
    }
}

fn diag(field: Field, entries: &[i64]) -> Matrix {
    let n = entries.len();
    let mut m = Matrix::zeros(field, n, n);
    for (i, &e) in entries.iter().enumerate() {
        m.set(i, i, field.from_i64(e));
    }
    m
}

/// `x -> a x, y -> b y, w -> ab w` on heisenberg(1).
fn heisenberg_scaling(field: Field, a: i64, b: i64) -> Matrix {
    diag(field, &[a, b, a * b])
}

#[test]
fn closure_matches_naive_closure() {
    let f5 = fp(5);
    let gl3 = catalog::gl(f5, 3).unwrap();
    let gens = vec![
        permutation_conjugation(f5, &[1, 0, 2]).unwrap(),
        permutation_conjugation(f5, &[1, 2, 0]).unwrap(),
    ];
    let act = close_group(&gl3, &gens, 1000).unwrap();
    assert_eq!(act.order(), 6);
    let naive = naive_closure(&gens);
    assert_eq!(naive.len(), 6);
    assert!(act.elements().iter().all(|e| naive.contains(e)));
    assert!(!act.analysis().abelian);

    let h3 = catalog::heisenberg(fp(7), 1).unwrap();
    let g = heisenberg_scaling(fp(7), 2, 3);
    let act = close_group(&h3, std::slice::from_ref(&g), 1000).unwrap();
    assert_eq!(act.order(), naive_closure(&[g]).len());
    assert!(act.analysis().cyclic);
}

#[test]
fn closure_rejects_non_automorphisms_and_respects_cap() {
    let f = fp(5);
    let h3 = catalog::heisenberg(f, 1).unwrap();
    let bad = diag(f, &[2, 1, 1]);
    assert!(matches!(close_group(&h3, &[bad], 100), Err(Error::NotAutomorphism(_))));
    let gens = [heisenberg_scaling(f, 2, 1)];
    assert!(matches!(close_group(&h3, &gens, 2), Err(Error::GroupTooLarge { .. })));
}

#[test]
fn invariants_match_exhaustive_fixed_point_scan() {
    for p in [2, 3] {
        let f = fp(p);
        let gl2 = catalog::gl(f, 2).unwrap();
        for gens in [
            vec![permutation_conjugation(f, &[1, 0]).unwrap()],
            vec![conjugation_matrix(&Matrix::from_i64(f, 2, 2, &[1, 1, 0, 1])).unwrap()],
        ] {
            let act = close_group(&gl2, &gens, 1000).unwrap();
            let inv = act.invariants();
            let fixed: Vec<Vec<Scalar>> = all_vectors(f, 4)
                .into_iter()
                .filter(|v| act.elements().iter().all(|g| apply(g, v) == *v))
                .collect();
            assert_eq!(fixed.len(), (p as usize).pow(inv.dim() as u32));
            let basis = inv.basis_vectors();
            assert!(fixed.iter().all(|v| in_span(f, &basis, v)));
            assert_eq!(inv, act.invariants_all_elements());
            assert!(gl2.is_subalgebra(&inv).unwrap());
        }
    }
}

#[test]
fn reynolds_operator_properties() {
    let f = fp(5);
    let gl3 = catalog::gl(f, 3).unwrap();
    let act = close_group(&gl3, &[permutation_conjugation(f, &[1, 2, 0]).unwrap()], 100).unwrap();
    let r = act.reynolds().unwrap();
    assert_eq!(&r.t * &r.t, r.t);
    for g in act.elements() {
        assert_eq!(&r.t * g, r.t);
        assert_eq!(g * &r.t, r.t);
    }
    assert_eq!(r.invariants, act.invariants());
    assert_eq!(r.invariants.dim() + r.kernel.dim(), 9);
    // |S3| = 6 is zero in F3
    let f3 = fp(3);
    let gens = [
        permutation_conjugation(f3, &[1, 0, 2]).unwrap(),
        permutation_conjugation(f3, &[1, 2, 0]).unwrap(),
    ];
    let s3 = close_group(&catalog::gl(f3, 3).unwrap(), &gens, 100).unwrap();
    assert!(matches!(s3.reynolds(), Err(Error::ModularCase { order: 6, characteristic: 3 })));
}

fn arb_cyclic_action() -> impl Strategy<Value = (LieAlgebra, Matrix)> {
    prop_oneof![
        // diagonal scalings of heisenberg(1)
        (prop_oneof![Just(3u64), Just(5), Just(7)], 1i64..7, 1i64..7).prop_map(|(p, a, b)| {
            let f = fp(p);
            (catalog::heisenberg(f, 1).unwrap(), heisenberg_scaling(f, a % p as i64 + (a % p as i64 == 0) as i64, b % p as i64 + (b % p as i64 == 0) as i64))
        }),
        // conjugation on gl(2) by an invertible matrix
        (prop_oneof![Just(3u64), Just(5)], prop::collection::vec(0i64..5, 4)).prop_filter_map("invertible", |(p, v)| {
            let f = fp(p);
            let u = Matrix::from_i64(f, 2, 2, &v);
            u.is_invertible().then(|| (catalog::gl(f, 2).unwrap(), conjugation_matrix(&u).unwrap()))
        }),
        // scaling of aff(2)
        (prop_oneof![Just(3u64), Just(5), Just(7)], 1i64..7).prop_map(|(p, b)| {
            let f = fp(p);
            let b = b % p as i64;
            (catalog::aff2(f).unwrap(), diag(f, &[1, if b == 0 { 1 } else { b }]))
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hilbert90_on_coprime_cyclic_actions((l, g) in arb_cyclic_action()) {
        let act = close_group(&l, &[g], 10_000).unwrap();
        let p = l.field().characteristic() as usize;
        prop_assume!(!act.order().is_multiple_of(p));
        let gamma = act.generators()[0];
        let report = act.hilbert90_check(gamma).unwrap();
        prop_assert!(report.holds);
        prop_assert_eq!(report.kernel, act.reynolds().unwrap().kernel);
    }

    #[test]
    fn artin_reconstruction_on_coprime_actions((l, g) in arb_cyclic_action()) {
        let act = close_group(&l, &[g], 10_000).unwrap();
        let p = l.field().characteristic() as usize;
        prop_assume!(!act.order().is_multiple_of(p));
        let r = act.artin_reconstruct().unwrap();
        prop_assert!(r.system.is_skew());
        prop_assert!(r.matches_canonical);
        prop_assert!(r.skew_axioms.passes());
        prop_assert!(r.iso);
    }

    #[test]
    fn gamma_abelian_actions_have_the_cyclic_structure((l, g) in arb_cyclic_action()) {
        let act = close_group(&l, &[g], 10_000).unwrap();
        let p = l.field().characteristic() as usize;
        prop_assume!(!act.order().is_multiple_of(p));
        let gamma = act.generators()[0];
        if act.gamma_abelian_check(gamma).unwrap() {
            let c = act.cyclic_structure(gamma).unwrap();
            prop_assert!(c.theta_vanishes);
            prop_assert!(c.h_gamma_is_ideal);
            prop_assert!(c.iso);
        } else {
            prop_assert!(matches!(act.cyclic_structure(gamma), Err(Error::NotGammaAbelian)));
        }
    }
}

#[test]
fn u2_on_sl2_is_not_gamma_abelian() {
    let f = fp(5);
    let sl2 = catalog::sl(f, 2).unwrap();
    let act = close_group(&sl2, &[diag(f, &[-1, -1, 1])], 10).unwrap();
    let gamma = act.generators()[0];
    let h = act.hilbert90_check(gamma).unwrap();
    assert!(h.holds);
    assert_eq!(h.kernel, liegal::Subspace::coordinate(f, 3, &[0, 1]).unwrap());
    assert!(!act.gamma_abelian_check(gamma).unwrap());
    assert_eq!(act.invariants(), liegal::Subspace::coordinate(f, 3, &[2]).unwrap());
}

#[test]
fn non_cyclic_group_rejected_for_hilbert90() {
    let f = fp(5);
    let gens = [
        permutation_conjugation(f, &[1, 0, 2]).unwrap(),
        permutation_conjugation(f, &[1, 2, 0]).unwrap(),
    ];
    let s3 = close_group(&catalog::gl(f, 3).unwrap(), &gens, 100).unwrap();
    assert!(matches!(s3.hilbert90_check(s3.generators()[0]), Err(Error::NotCyclic { .. })));
}
