//! Acceptance suite: one PASS/FAIL line per criterion, run sequentially so
//! the wall-clock bounds are measured without contention.

mod common;

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{all_vectors, fp, matrices};
use liegal::actions::{close_group, conjugation_matrix, permutation_conjugation, GroupAction};
use liegal::corpus;
use liegal::galois::{
    codim1_group, galois_group_direct, galois_group_structured, omega, verify_radical_chain, EnumerationOptions,
    GaloisGroup,
};
use liegal::lie::catalog;
use liegal::products::{
    canonical_extending_system, phi_iso_check, single_extension, twisted_derivation_check, unified_product, Extension,
    TwistedDerivation,
};
use liegal::{Error, Field, LieAlgebra, Matrix, Scalar, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn opts() -> EnumerationOptions {
    EnumerationOptions::default()
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    assert!(took < limit, "{what} took {took:?}, limit {limit:?}");
    out
}

fn structured(name: &str, p: u64) -> GaloisGroup {
    galois_group_structured(&corpus::extension(name, fp(p)).unwrap(), &opts()).unwrap()
}

fn diag(field: Field, entries: &[i64]) -> Matrix {
    let mut m = Matrix::zeros(field, entries.len(), entries.len());
    for (i, &e) in entries.iter().enumerate() {
        m.set(i, i, field.from_i64(e));
    }
    m
}

fn criterion_1() {
    for p in [3, 5, 7] {
        let ext = corpus::extension("aff2/ke1", fp(p)).unwrap();
        timed(Duration::from_secs(1), "aff2/ke1", || {
            let gal = galois_group_structured(&ext, &opts()).unwrap();
            let a = gal.analysis().unwrap();
            assert_eq!(a.order, p as usize - 1, "F{p}");
            assert!(a.cyclic, "F{p}");
            assert_eq!(gal, galois_group_direct(&ext, &opts()).unwrap(), "F{p}");
        });
    }
}

fn criterion_2() {
    for p in [3, 5] {
        let f = fp(p);
        let ext = corpus::extension("sl2/ke3", f).unwrap();
        timed(Duration::from_secs(1), "sl2/ke3", || {
            let gal = galois_group_structured(&ext, &opts()).unwrap();
            let a = gal.analysis().unwrap();
            assert_eq!(a.order, p as usize - 1, "F{p}");
            assert!(a.cyclic, "F{p}");
            let mut units = HashSet::new();
            for el in gal.elements() {
                let w = omega(&ext, &el).unwrap();
                let u = w.get(0, 0).clone();
                assert!(!u.is_zero());
                assert_eq!(w, diag_of(f, &[u.clone(), u.inv().unwrap(), f.one()]), "F{p}");
                units.insert(u);
            }
            assert_eq!(units.len(), p as usize - 1);
        });
    }
}

fn diag_of(field: Field, entries: &[Scalar]) -> Matrix {
    let mut m = Matrix::zeros(field, entries.len(), entries.len());
    for (i, e) in entries.iter().enumerate() {
        m.set(i, i, e.clone());
    }
    m
}

fn criterion_3() {
    assert_eq!(structured("h5/h3", 2).order(), 24);
    let ext = corpus::extension("h5/h3", fp(3)).unwrap();
    let gal = timed(Duration::from_secs(10), "structured h5/h3 over F3", || {
        galois_group_structured(&ext, &opts()).unwrap()
    });
    let a = gal.analysis().unwrap();
    assert_eq!(a.order, 216);
    assert!(!a.abelian);
    assert!(a.solvable);
    let direct = timed(Duration::from_secs(60), "direct h5/h3 over F3", || {
        galois_group_direct(&ext, &opts()).unwrap()
    });
    assert_eq!(gal, direct);
}

fn criterion_4() {
    timed(Duration::from_secs(5), "l5/l3 over F3", || {
        let a = structured("l5/l3", 3).analysis().unwrap();
        assert_eq!(a.order, 36);
        assert!(a.metabelian);
    });
}

fn codim1_pairs(gal: &GaloisGroup) -> HashSet<(Scalar, Vec<Scalar>)> {
    gal.codim1_pairs().expect("one-dimensional complement").into_iter().collect()
}

fn criterion_5() {
    let f = fp(5);
    let h3 = catalog::heisenberg(f, 1).unwrap();
    timed(Duration::from_secs(2), "t4/h3 and b4/h3", || {
        let t = codim1_group(&h3, &catalog::t_twisted_derivation(f, 1).unwrap(), &opts()).unwrap();
        let a = t.analysis().unwrap();
        assert_eq!(a.order, 4);
        assert!(a.cyclic);
        for (alpha, g0) in t.codim1_pairs().unwrap() {
            let w = &alpha - &f.one();
            assert_eq!(g0, vec![f.zero(), f.zero(), w]);
        }
        let direct = galois_group_direct(&corpus::extension("t4/h3", f).unwrap(), &opts()).unwrap();
        assert_eq!(codim1_pairs(&t), codim1_pairs(&direct));

        let b = codim1_group(&h3, &catalog::b_derivation(f, 1).unwrap(), &opts()).unwrap();
        let a = b.analysis().unwrap();
        assert_eq!(a.order, 5);
        assert!(a.elementary_abelian);
        let direct = galois_group_direct(&corpus::extension("b4/h3", f).unwrap(), &opts()).unwrap();
        assert_eq!(codim1_pairs(&b), codim1_pairs(&direct));
    });
}

fn criterion_6() {
    let mut orders = Vec::new();
    for p in [3, 5] {
        let order = timed(Duration::from_secs(5), "fivedim", || structured("fivedim", p).order());
        orders.push((p, order));
    }
    assert!(orders.iter().all(|&(_, o)| o == 1), "orders over (p, |Gal|): {orders:?}");
}

fn is_circulant(v: &[Scalar], n: usize) -> bool {
    (0..n).all(|i| (0..n).all(|j| v[i * n + j] == v[((i + 1) % n) * n + (j + 1) % n]))
}

fn criterion_7() {
    let f = fp(5);
    timed(Duration::from_secs(1), "invariants", || {
        for n in [2, 3] {
            let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            let gln = catalog::gl(f, n).unwrap();
            let act = close_group(&gln, &[permutation_conjugation(f, &cycle).unwrap()], 100).unwrap();
            let inv = act.invariants();
            assert_eq!(inv.dim(), n);
            assert!(inv.basis_vectors().iter().all(|v| is_circulant(v, n)));
        }
        let gl3 = catalog::gl(f, 3).unwrap();
        let s3 = close_group(&gl3, &s3_generators(f), 100).unwrap();
        let identity: Vec<Scalar> = (0..9).map(|k| if k % 4 == 0 { f.one() } else { f.zero() }).collect();
        let off: Vec<Scalar> = (0..9).map(|k| if k % 4 == 0 { f.zero() } else { f.one() }).collect();
        assert_eq!(s3.invariants(), Subspace::span(f, 9, &[identity, off]).unwrap());
    });
}

fn s3_generators(f: Field) -> Vec<Matrix> {
    vec![permutation_conjugation(f, &[1, 0, 2]).unwrap(), permutation_conjugation(f, &[1, 2, 0]).unwrap()]
}

/// The fixed cyclic actions plus `count` seeded random ones with `|G|` prime to `p`.
fn cyclic_corpus(count: usize) -> Vec<(String, GroupAction)> {
    let f5 = fp(5);
    let mut out = vec![
        ("U2 on sl2".to_string(), close_group(&catalog::sl(f5, 2).unwrap(), &[diag(f5, &[-1, -1, 1])], 10).unwrap()),
        (
            "C3 in S3 on gl3".to_string(),
            close_group(&catalog::gl(f5, 3).unwrap(), &[permutation_conjugation(f5, &[1, 2, 0]).unwrap()], 10).unwrap(),
        ),
        (
            "C2 in S3 on gl3".to_string(),
            close_group(&catalog::gl(f5, 3).unwrap(), &[permutation_conjugation(f5, &[1, 0, 2]).unwrap()], 10).unwrap(),
        ),
        ("C2 on aff2".to_string(), close_group(&catalog::aff2(f5).unwrap(), &[diag(f5, &[1, -1])], 10).unwrap()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut found = 0;
    while found < count {
        let p: u64 = if rng.gen_bool(0.5) { 3 } else { 5 };
        let f = fp(p);
        let (label, algebra, gen) = match rng.gen_range(0..3) {
            0 => {
                let a = rng.gen_range(1..p as i64);
                let b = rng.gen_range(1..p as i64);
                ("heisenberg scaling", catalog::heisenberg(f, 1).unwrap(), diag(f, &[a, b, a * b]))
            }
            1 => {
                let n = rng.gen_range(2..4);
                let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(0..p as i64)).collect();
                let u = Matrix::from_i64(f, n, n, &entries);
                if !u.is_invertible() {
                    continue;
                }
                ("conjugation on gl", catalog::gl(f, n).unwrap(), conjugation_matrix(&u).unwrap())
            }
            _ => {
                let b = rng.gen_range(1..p as i64);
                ("aff2 scaling", catalog::aff2(f).unwrap(), diag(f, &[1, b]))
            }
        };
        let Ok(act) = close_group(&algebra, &[gen], 1000) else { continue };
        if act.order() % p as usize == 0 {
            continue;
        }
        out.push((format!("random {label} over F{p}, |G| = {}", act.order()), act));
        found += 1;
    }
    out
}

fn criterion_8() {
    timed(Duration::from_secs(10), "Hilbert 90 suite", || {
        for (label, act) in cyclic_corpus(20) {
            let gamma = act.generators()[0];
            let report = act.hilbert90_check(gamma).unwrap();
            assert!(report.holds, "{label}");
            assert_eq!(report.kernel, act.reynolds().unwrap().kernel, "{label}");
            assert_eq!(report.kernel, act.h_gamma(gamma).unwrap(), "{label}");
        }
    });
}

fn criterion_9() {
    timed(Duration::from_secs(10), "Artin suite", || {
        let f5 = fp(5);
        let mut actions = cyclic_corpus(20);
        actions.push(("S3 on gl3".into(), close_group(&catalog::gl(f5, 3).unwrap(), &s3_generators(f5), 10).unwrap()));
        for (label, act) in actions {
            let r = act.artin_reconstruct().unwrap();
            assert!(r.skew_axioms.passes(), "{label}");
            assert!(r.iso, "{label}");
            assert!(r.matches_canonical, "{label}");
        }
    });
}

fn criterion_10() {
    for p in [2, 3] {
        let mut compared = 0;
        for (name, ext) in corpus::all(fp(p)).unwrap() {
            let pair = galois_group_structured(&ext, &opts()).and_then(|s| Ok((s, galois_group_direct(&ext, &opts())?)));
            let (s, d) = match pair {
                Ok(pair) => pair,
                Err(Error::BudgetExceeded { .. }) => continue,
                Err(e) => panic!("{name} over F{p}: {e}"),
            };
            assert_eq!(s, d, "{name} over F{p}");
            assert!(s.omega_homomorphism_check(&ext), "{name} over F{p}");
            compared += 1;
        }
        assert!(compared >= 10, "only {compared} feasible extensions over F{p}");
    }
}

fn twisted_derivations(g: &LieAlgebra) -> Vec<TwistedDerivation> {
    let f = g.field();
    let n = g.dim();
    let mut out = Vec::new();
    for lambda in all_vectors(f, n) {
        for delta in matrices(f, n, n) {
            if twisted_derivation_check(g, &lambda, &delta).unwrap() {
                out.push(TwistedDerivation::new(g, lambda.clone(), delta).unwrap());
            }
        }
    }
    out
}

fn criterion_11() {
    let mut cases: Vec<(LieAlgebra, TwistedDerivation)> = Vec::new();
    for g in [catalog::aff2(fp(3)).unwrap(), catalog::heisenberg(fp(2), 1).unwrap(), catalog::abelian(fp(3), 2).unwrap()] {
        for tw in twisted_derivations(&g) {
            cases.push((g.clone(), tw));
        }
    }
    for p in [3, 5] {
        let f = fp(p);
        let h3 = catalog::heisenberg(f, 1).unwrap();
        cases.push((h3.clone(), catalog::t_twisted_derivation(f, 1).unwrap()));
        cases.push((h3, catalog::b_derivation(f, 1).unwrap()));
        let g = catalog::fivedim_perfect(f).unwrap();
        let tw = TwistedDerivation::new(&g, vec![f.zero(); 5], catalog::fivedim_derivation(f)).unwrap();
        cases.push((g, tw));
    }
    for (g, tw) in &cases {
        let gal = codim1_group(g, tw, &opts()).unwrap();
        assert!(gal.analysis().unwrap().metabelian, "codim-1 group of order {} is not metabelian", gal.order());
        // sanity: the same group via the extension itself
        let h = single_extension(g, tw, "u").unwrap();
        let n = g.dim();
        let idx: Vec<usize> = (0..n).collect();
        let ext = Extension::new(h, Subspace::coordinate(g.field(), n + 1, &idx).unwrap()).unwrap();
        assert_eq!(gal.order(), galois_group_structured(&ext, &opts()).unwrap().order());
    }

    let f3 = fp(3);
    let chain = [
        Subspace::coordinate(f3, 5, &[0, 2, 4]).unwrap(),
        Subspace::coordinate(f3, 5, &[0, 1, 2, 4]).unwrap(),
    ];
    let rep = verify_radical_chain(&catalog::l(f3, 2).unwrap(), &chain, &opts()).unwrap();
    assert!(rep.radical && rep.analysis.solvable);
    for p in [3, 5, 7] {
        let f = fp(p);
        let rep = verify_radical_chain(&catalog::aff2(f).unwrap(), &[Subspace::coordinate(f, 2, &[0]).unwrap()], &opts())
            .unwrap();
        assert!(rep.radical && rep.analysis.solvable);
    }
}

fn criterion_12() {
    for field in [Field::rationals(), fp(2), fp(3), fp(5)] {
        for (name, ext) in corpus::all(field).unwrap() {
            let sys = canonical_extending_system(&ext);
            assert!(sys.check_extending_axioms().passes(), "{name} over {field}");
            let product = unified_product(&sys).unwrap();
            assert!(phi_iso_check(&ext, &product), "{name} over {field}");
        }
    }
}

fn main() {
    let criteria: [(&str, fn()); 12] = [
        ("Gal(aff(2)/ke1) is cyclic of order p-1", criterion_1),
        ("Gal(sl(2)/ke3) is the unit group acting diagonally", criterion_2),
        ("Gal(h5/h3) has order 24 and 216, solvable", criterion_3),
        ("Gal(l(5)/l(3)) over F3 is metabelian of order 36", criterion_4),
        ("codim-1 groups of t4 and b4 over F5", criterion_5),
        ("fivedim extension has trivial group over F3 and F5", criterion_6),
        ("invariants of gl(n) under C_n and S_3", criterion_7),
        ("Hilbert 90 on cyclic actions", criterion_8),
        ("Artin reconstruction", criterion_9),
        ("structured and direct enumerators agree", criterion_10),
        ("codim-1 groups metabelian, radical chains solvable", criterion_11),
        ("canonical system round trip", criterion_12),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let took = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS criterion {}: {label} ({took:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL criterion {}: {label} ({took:.2?}): {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
