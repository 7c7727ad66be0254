use std::sync::Arc;

use pathtt::gen;
use pathtt::rep::chom_formula;
use pathtt::verify::{hom_dimension, run_case, run_families, run_suite, Family};
use pathtt::{Error, Integers, PrimeField, Quiver, Representation};

fn f3() -> PrimeField {
    PrimeField::new(3).unwrap()
}

#[test]
fn hom_dimension_by_yoneda() {
    // Hom(P(i), X) = X_i
    let q = Arc::new(Quiver::linear_a(3));
    let mut rng = gen::rng(4);
    for _ in 0..20 {
        let x = gen::random_representation(&mut rng, &q, &f3(), 3, 3);
        for i in 0..3 {
            let p = Representation::projective(q.clone(), &f3(), i).unwrap();
            assert_eq!(hom_dimension(&p, &x).unwrap(), x.dims()[i]);
        }
    }
}

#[test]
fn hom_dimension_examples() {
    let q = Arc::new(Quiver::linear_a(2));
    let s = |i| Representation::vertex_simple(q.clone(), &f3(), i).unwrap();
    let u = Representation::unit(q.clone(), &f3());
    assert_eq!(hom_dimension(&s(0), &s(0)).unwrap(), 1);
    assert_eq!(hom_dimension(&s(0), &s(1)).unwrap(), 0);
    // U -> U(1) is not natural; U(2) is a subobject of U
    assert_eq!(hom_dimension(&u, &s(0)).unwrap(), 1);
    assert_eq!(hom_dimension(&s(0), &u).unwrap(), 0);
    assert_eq!(hom_dimension(&s(1), &u).unwrap(), 1);
    let uz = Representation::unit(q.clone(), &Integers);
    assert!(matches!(hom_dimension(&uz, &uz), Err(Error::NotAField(_))));
}

#[test]
fn chom_formula_examples() {
    let q = Arc::new(Quiver::linear_a(2));
    let u = Representation::unit(q.clone(), &f3());
    let s = |i| Representation::vertex_simple(q.clone(), &f3(), i).unwrap();
    assert_eq!(chom_formula(&u, &s(1)).unwrap().dims(), vec![0, 1]);
    assert_eq!(chom_formula(&s(0), &u).unwrap().dims(), vec![0, 0]);
    assert_eq!(chom_formula(&s(0), &s(0)).unwrap().dims(), vec![1, 0]);
}

#[test]
fn every_family_passes_on_a_small_run() {
    let report = run_suite(7, 6);
    assert_eq!(report.results.len(), 6 * Family::ALL.len());
    assert!(report.all_passed(), "{}", report.to_text());
}

#[test]
fn reports_are_deterministic_and_sorted() {
    let a = run_families(3, 5, &[Family::Kunneth, Family::Smith]);
    let b = run_families(3, 5, &[Family::Smith, Family::Kunneth]);
    assert_eq!(a, b);
    assert_eq!(a.to_text(), b.to_text());
    let ids: Vec<_> = a.results.iter().map(|r| (r.family, r.index)).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(run_case(3, Family::Kunneth, 2), a.results[7]);
}

#[test]
fn report_text_shape() {
    let r = run_families(1, 3, &[Family::Smith]);
    assert_eq!(r.to_text(), "seed 1 cases 3\nPASS smith              3/3\n");
    assert_eq!(r.summary(), vec![(Family::Smith, 3, 3)]);
}

#[test]
fn family_names_roundtrip() {
    for f in Family::ALL {
        assert_eq!(f.name().parse::<Family>().unwrap(), f);
    }
    assert!(matches!("nope".parse::<Family>(), Err(Error::Parse(_))));
}
