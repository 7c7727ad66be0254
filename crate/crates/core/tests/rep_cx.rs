use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use pathtt::linalg::{ElementaryDivisors, FgModule, Matrix};
use pathtt::rep::{
    box_tensor, cone_of_scalar, eval_vertex, evaluation_map, homology_equivalent, i_times, internal_hom, is_rigid,
    kan_extend, koszul_at, koszul_complex, module_complex, projective, projective_resolution, rigidity_report, unit,
    vertex_simple, ChainMap, HomologySignature, KanDirection,
};
use pathtt::{ComplexRQ, Error, Integers, IntegersMod, PrimeField, Quiver, Representation, Ring};

fn a2() -> Arc<Quiver> {
    Arc::new(Quiver::linear_a(2))
}

fn zz() -> Integers {
    Integers
}

fn f2() -> PrimeField {
    PrimeField::new(2).unwrap()
}

fn divs(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// Homology at degree `n`, vertex `v` as (torsion divisors, free rank).
fn h<R: Ring>(x: &ComplexRQ<R>, n: i64, v: usize) -> ElementaryDivisors<R> {
    x.homology(n).module(v).divisors().clone()
}

fn free_rank<R: Ring>(x: &ComplexRQ<R>, n: i64, v: usize) -> usize {
    h(x, n, v).free_rank
}

#[test]
fn evaluation_of_unit_restriction_vertex() {
    let q = a2();
    let x = eval_vertex(&unit(&q, &zz()), 0).unwrap();
    assert_eq!(x.range(), Some((0, 0)));
    assert_eq!(free_rank(&x, 0, 0), 1);
    // P(1) at vertex 2 is R: the single path 1 -> 2
    let p1 = projective(&q, &zz(), 0).unwrap();
    assert_eq!(free_rank(&eval_vertex(&p1, 1).unwrap(), 0, 0), 1);
    assert!(matches!(eval_vertex(&p1, 5), Err(Error::UnknownVertex(_))));
}

#[test]
fn cone_of_two_evaluates_to_z_mod_2() {
    let q = a2();
    let c = cone_of_scalar(&unit(&q, &zz()), &BigInt::from(2));
    c.validate().unwrap();
    for v in 0..2 {
        let e = eval_vertex(&c, v).unwrap();
        // direct oracle: Z --2--> Z has kernel 0 and cokernel Z/2 in the upper degree
        assert_eq!(h(&e, 0, 0).divisors, divs(&[2]));
        assert!(h(&e, -1, 0).is_zero());
    }
}

#[test]
fn cone_of_six_homology() {
    let q = a2();
    let c = cone_of_scalar(&unit(&q, &zz()), &BigInt::from(6));
    let h0 = c.homology(0);
    for v in 0..2 {
        assert_eq!(h0.module(v).divisors().divisors, divs(&[6]));
        assert_eq!(h0.module(v).divisors().free_rank, 0);
    }
    // the arrow acts as the identity of Z/6
    assert!(h0.module(1).maps_equal(h0.map(0), &Matrix::identity(&zz(), 1)));
    assert!(c.homology(-1).is_zero());
}

#[test]
fn kan_extensions_on_a2() {
    let q = a2();
    let r = module_complex(&zz(), FgModule::free(&zz(), 1));
    let left1 = kan_extend(&r, &q, 0, KanDirection::Left).unwrap();
    let p1 = projective(&q, &zz(), 0).unwrap();
    assert_eq!(left1.canonicalized(), p1.canonicalized());
    let left2 = kan_extend(&r, &q, 1, KanDirection::Left).unwrap();
    assert_eq!(left2.canonicalized(), projective(&q, &zz(), 1).unwrap().canonicalized());
    let right1 = kan_extend(&r, &q, 0, KanDirection::Right).unwrap();
    assert_eq!(right1.term(0).unwrap().dims(), vec![1, 0]);
}

#[test]
fn i_times_parks_a_module() {
    let q = a2();
    let r = module_complex(&zz(), FgModule::free(&zz(), 1));
    assert_eq!(i_times(&r, &q, 1).unwrap().canonicalized(), vertex_simple(&q, &zz(), 1).unwrap().canonicalized());
    let k = koszul_at(&q, &zz(), 0, &[BigInt::from(2)]).unwrap();
    assert!(eval_vertex(&k, 1).unwrap().is_acyclic());
    assert_eq!(h(&k, 0, 0).divisors, divs(&[2]));
}

#[test]
fn box_tensor_examples() {
    let q = a2();
    let z = zz();
    let u1 = vertex_simple(&q, &z, 0).unwrap();
    let u2 = vertex_simple(&q, &z, 1).unwrap();
    assert!(box_tensor(&u1, &u2).unwrap().is_acyclic());
    let x = cone_of_scalar(&projective(&q, &z, 0).unwrap(), &BigInt::from(3));
    assert_eq!(box_tensor(&unit(&q, &z), &x).unwrap().canonicalized(), x.canonicalized());

    // Tor oracle: Z/2 (x) Z/2 = Z/2 and Tor_1(Z/2, Z/2) = Z/2
    let k = koszul_at(&q, &z, 0, &[BigInt::from(2)]).unwrap();
    let t = box_tensor(&k, &k).unwrap();
    t.validate().unwrap();
    assert_eq!(h(&t, 0, 0).divisors, divs(&[2]));
    assert_eq!(h(&t, -1, 0).divisors, divs(&[2]));
    assert!(h(&t, -2, 0).is_zero());
    assert!(eval_vertex(&t, 1).unwrap().is_acyclic());
}

#[test]
fn box_tensor_refuses_underived_torsion() {
    let q = a2();
    let r = IntegersMod::new(4).unwrap();
    let m = Representation::new(
        q.clone(),
        &r,
        vec![FgModule::cyclic(&r, BigInt::from(2)), FgModule::zero(&r)],
        vec![Matrix::zeros(&r, 0, 1)],
    )
    .unwrap();
    let x = ComplexRQ::stalk(m, 0);
    assert!(matches!(box_tensor(&x, &x), Err(Error::NotDerivable(_))));
}

#[test]
fn internal_hom_unit_law() {
    let q = a2();
    let z = zz();
    let y = cone_of_scalar(&projective(&q, &z, 0).unwrap(), &BigInt::from(4));
    let c = internal_hom(&unit(&q, &z), &y).unwrap();
    c.validate().unwrap();
    assert!(homology_equivalent(&c, &y));
}

#[test]
fn internal_hom_of_sink_simple_into_unit() {
    // chom(U(2), U) over F2 A2: Hom(U(2) (x) P(k), U) is F2 at both vertices
    // and the arrow map is an isomorphism, so the result is U.
    let q = a2();
    let f = f2();
    let c = internal_hom(&vertex_simple(&q, &f, 1).unwrap(), &unit(&q, &f)).unwrap();
    c.validate().unwrap();
    assert!(homology_equivalent(&c, &unit(&q, &f)));
}

#[test]
fn internal_hom_of_source_simple() {
    let q = a2();
    let f = f2();
    let u1 = vertex_simple(&q, &f, 0).unwrap();
    let r = projective_resolution(&u1).unwrap();
    assert!(r.is_perfect());
    assert!(internal_hom(&r, &unit(&q, &f)).unwrap().is_acyclic());
    assert!(homology_equivalent(&internal_hom(&r, &u1).unwrap(), &u1));
    assert!(matches!(internal_hom(&u1, &u1), Err(Error::NotPerfect(_))));
}

#[test]
fn evaluation_maps_are_chain_maps() {
    let q = a2();
    let z = zz();
    let xs = vec![
        unit(&q, &z),
        projective(&q, &z, 0).unwrap(),
        projective_resolution(&vertex_simple(&q, &z, 0).unwrap()).unwrap(),
        koszul_at(&q, &z, 1, &[BigInt::from(2)]).unwrap(),
    ];
    for x in &xs {
        for y in &xs {
            let ev: ChainMap<_> = evaluation_map(x, y).unwrap();
            ev.validate().unwrap();
        }
    }
}

#[test]
fn rigidity_verdicts() {
    let q = a2();
    for_rings(&q);
}

fn for_rings(q: &Arc<Quiver>) {
    let f = f2();
    assert!(is_rigid(&unit(q, &f)).unwrap());
    let r1 = projective_resolution(&vertex_simple(q, &f, 0).unwrap()).unwrap();
    assert!(!is_rigid(&r1).unwrap());
    let rep = rigidity_report(&projective_resolution(&vertex_simple(q, &f, 1).unwrap()).unwrap()).unwrap();
    assert!(!rep.rigid);
    // chom(U(2), U) (x) U(2) = U(2) against chom(U(2), U(2)) = U
    assert!(homology_equivalent(&rep.left, &vertex_simple(q, &f, 1).unwrap()));
    assert!(homology_equivalent(&rep.right, &unit(q, &f)));

    let z = zz();
    assert!(is_rigid(&unit(q, &z)).unwrap());
    let r1 = projective_resolution(&vertex_simple(q, &z, 0).unwrap()).unwrap();
    assert!(!is_rigid(&r1).unwrap());
    assert!(is_rigid(&projective(q, &z, 0).unwrap()).unwrap());
}

#[test]
fn resolutions() {
    let q = a2();
    let f = f2();
    let u2 = vertex_simple(&q, &f, 1).unwrap();
    let r2 = projective_resolution(&u2).unwrap();
    assert_eq!(r2.range(), Some((0, 0)));
    let u1 = vertex_simple(&q, &f, 0).unwrap();
    let r1 = projective_resolution(&u1).unwrap();
    assert!(r1.is_perfect());
    assert_eq!(r1.trimmed().range(), Some((-1, 0)));
    assert!(homology_equivalent(&r1, &u1));

    let z = zz();
    let u = unit(&q, &z);
    let ru = projective_resolution(&u).unwrap();
    assert!(ru.is_perfect() && homology_equivalent(&ru, &u));

    // a torsion representation over Z needs a vertexwise resolution first
    let m = Representation::new(
        q.clone(),
        &z,
        vec![FgModule::cyclic(&z, BigInt::from(6)), FgModule::cyclic(&z, BigInt::from(3))],
        vec![Matrix::from_i64(&z, &[&[1]])],
    )
    .unwrap();
    let x = ComplexRQ::stalk(m, 2);
    let rx = projective_resolution(&x).unwrap();
    rx.validate().unwrap();
    assert!(rx.is_perfect());
    assert_eq!(HomologySignature::of(&rx), HomologySignature::of(&x));
}

#[test]
fn resolution_refused_over_non_regular_ring() {
    let q = a2();
    let r = IntegersMod::new(4).unwrap();
    let m = Representation::new(
        q.clone(),
        &r,
        vec![FgModule::cyclic(&r, BigInt::from(2)), FgModule::zero(&r)],
        vec![Matrix::zeros(&r, 0, 1)],
    )
    .unwrap();
    assert!(matches!(projective_resolution(&ComplexRQ::stalk(m, 0)), Err(Error::NonRegularRing(_))));
}

#[test]
fn shift_convention() {
    let q = a2();
    let k = koszul_at(&q, &zz(), 0, &[BigInt::from(5)]).unwrap();
    let s = k.shift(1);
    s.validate().unwrap();
    assert_eq!(h(&s, -1, 0).divisors, divs(&[5]));
    assert!(h(&s, 0, 0).is_zero());
}

#[test]
fn koszul_homology_two_generators() {
    let z = zz();
    let k = koszul_complex(&z, &[BigInt::from(2), BigInt::from(4)]).unwrap();
    k.validate().unwrap();
    assert_eq!(k.range(), Some((-2, 0)));
    // H^0 = Z/(2,4) = Z/2, H^{-1} = Z/2 (Tor of Z/2 against Z/4 via the regular element)
    assert_eq!(h(&k, 0, 0).divisors, divs(&[2]));
    assert_eq!(h(&k, -1, 0).divisors, divs(&[2]));
    assert!(h(&k, -2, 0).is_zero());
}

#[test]
fn restriction_and_zero_extension() {
    use pathtt::rep::{extend_by_zero, restrict_to_subquiver};
    let q = Arc::new(Quiver::linear_a(3));
    let z = zz();
    let u = unit(&q, &z);
    let members: BTreeSet<usize> = [1, 2].into_iter().collect();
    let r = restrict_to_subquiver(&u, &members).unwrap();
    assert_eq!(r.quiver().vertex_count(), 2);
    let e = extend_by_zero(&r, &q, &members).unwrap();
    e.validate().unwrap();
    assert_eq!(e.term(0).unwrap().dims(), vec![0, 1, 1]);
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn small_complex(seed: u64) -> ComplexRQ<Integers> {
        let q = a2();
        let z = zz();
        let base = [
            unit(&q, &z),
            projective(&q, &z, 0).unwrap(),
            projective(&q, &z, 1).unwrap(),
            vertex_simple(&q, &z, 1).unwrap(),
        ];
        let x = base[(seed % 4) as usize].clone();
        let r = BigInt::from((seed / 4 % 5) as i64 + 1);
        cone_of_scalar(&x, &r).shift((seed / 20 % 3) as i64 - 1)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn cones_and_tensors_are_complexes(a in 0u64..60, b in 0u64..60) {
            let (x, y) = (small_complex(a), small_complex(b));
            prop_assert!(x.validate().is_ok());
            let t = box_tensor(&x, &y).unwrap();
            prop_assert!(t.validate().is_ok());
            prop_assert!(t.is_perfect());
            let hm = internal_hom(&x, &y).unwrap();
            prop_assert!(hm.validate().is_ok());
        }

        #[test]
        fn vertex_evaluation_is_monoidal(a in 0u64..60, b in 0u64..60, v in 0usize..2) {
            let (x, y) = (small_complex(a), small_complex(b));
            let lhs = eval_vertex(&box_tensor(&x, &y).unwrap(), v).unwrap();
            let rhs = box_tensor(&eval_vertex(&x, v).unwrap(), &eval_vertex(&y, v).unwrap()).unwrap();
            prop_assert!(homology_equivalent(&lhs, &rhs));
        }

        #[test]
        fn tensor_is_symmetric_on_homology(a in 0u64..60, b in 0u64..60) {
            let (x, y) = (small_complex(a), small_complex(b));
            prop_assert!(homology_equivalent(&box_tensor(&x, &y).unwrap(), &box_tensor(&y, &x).unwrap()));
        }

        #[test]
        fn resolution_preserves_homology(a in 0u64..60) {
            let x = small_complex(a);
            let r = projective_resolution(&x).unwrap();
            prop_assert!(r.is_perfect());
            prop_assert!(homology_equivalent(&r, &x));
        }
    }
}
