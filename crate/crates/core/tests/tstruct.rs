use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use pathtt::gen;
use pathtt::rep::{box_tensor, eval_vertex, i_times, koszul_at, unit, vertex_simple};
use pathtt::ring::spec::enumerate_primes;
use pathtt::tstruct::{
    aisle_membership, c_aisle_decompose, c_aisle_reassemble, check_filtration_system, component_restrict,
    component_times, filtration_from_objects, serre_inverse, serre_translation, Filtration, FiltrationSystem,
    SerreChain,
};
use pathtt::tt::{compact_support, QSupport};
use pathtt::{ComplexRQ, Error, Integers, PrimeField, Quiver, Ring, SpClosedSet, VertexSet};

fn z() -> Integers {
    Integers
}

fn fin(gs: &[i64]) -> SpClosedSet<Integers> {
    SpClosedSet::finite(&z(), gs.iter().map(|&g| BigInt::from(g))).unwrap()
}

/// Direct oracle: every homology module's support sits inside the filtration.
fn member_oracle<R: Ring>(x: &ComplexRQ<R>, f: &Filtration<R>) -> bool {
    let Some((lo, hi)) = x.range() else { return true };
    (lo..=hi).all(|n| {
        (0..x.quiver().vertex_count()).all(|i| {
            let stalk = eval_vertex(x, i).unwrap();
            let ed = stalk.homology(n).module(0).divisors().clone();
            let allowed = f.value(n).part(i);
            if ed.free_rank > 0 {
                return allowed.is_all();
            }
            let ring = x.ring();
            ed.divisors.iter().all(|d| {
                ring.prime_divisors(d).into_iter().all(|p| allowed.is_all() || allowed.points().unwrap().contains(&p))
            })
        })
    })
}

#[test]
fn standard_filtration_examples() {
    let q = Arc::new(Quiver::linear_a(2));
    let f = Filtration::standard(&z(), 2);
    let u = unit(&q, &z());
    assert!(aisle_membership(&u, &f).unwrap());
    assert!(aisle_membership(&u.shift(1), &f).unwrap());
    assert!(!aisle_membership(&u.shift(-1), &f).unwrap());
    assert_eq!(f.jumps().len(), 1);
    assert_eq!(f.value(0), &QSupport::all(&z(), 2));
    assert_eq!(f.value(1), &QSupport::empty(&z(), 2));
}

#[test]
fn invalid_filtrations_are_rejected() {
    let all = QSupport::all(&z(), 1);
    let none = QSupport::empty(&z(), 1);
    assert!(matches!(
        Filtration::new(&z(), 1, none.clone(), vec![(0, all.clone())], none.clone()),
        Err(Error::InvalidFiltration(_))
    ));
    assert!(matches!(
        Filtration::new(&z(), 1, all.clone(), vec![(2, none.clone()), (1, none.clone())], none),
        Err(Error::InvalidFiltration(_))
    ));
}

#[test]
fn koszul_objects_probe_filtration_values() {
    let q = Arc::new(Quiver::linear_a(2));
    let mut rng = gen::rng(5);
    let primes = enumerate_primes(&z(), 7);
    for _ in 0..10 {
        let f = gen::random_filtration(&mut rng, &q, &z(), 7);
        for p in primes.iter().filter(|p| !p.is_zero()) {
            let g = p.generator().unwrap().clone();
            for i in 0..2 {
                let k = koszul_at(&q, &z(), i, &[g.clone()]).unwrap();
                for n in -3..=4 {
                    let x = k.shift(-n);
                    assert_eq!(aisle_membership(&x, &f).unwrap(), f.value(n).part(i).contains(p).unwrap());
                }
            }
        }
    }
}

#[test]
fn membership_matches_direct_oracle() {
    let q = Arc::new(Quiver::linear_a(2));
    let mut rng = gen::rng(9);
    for _ in 0..30 {
        let x = gen::random_perfect(&mut rng, &q, &z(), 5);
        let f = gen::random_filtration(&mut rng, &q, &z(), 5);
        assert_eq!(aisle_membership(&x, &f).unwrap(), member_oracle(&x, &f));
        let std = Filtration::standard(&z(), 2);
        let oracle = x.homology_degrees().iter().all(|&n| n <= 0);
        assert_eq!(aisle_membership(&x, &std).unwrap(), oracle);
    }
}

#[test]
fn generated_filtrations() {
    let q = Arc::new(Quiver::linear_a(2));
    let u = unit(&q, &z());
    assert_eq!(filtration_from_objects(&z(), &q, &[u]).unwrap(), Filtration::standard(&z(), 2));

    let k = koszul_at(&q, &z(), 0, &[BigInt::from(2)]).unwrap().shift(-3);
    let f = filtration_from_objects(&z(), &q, &[k.clone()]).unwrap();
    for n in -2..=3 {
        assert_eq!(f.value(n).parts(), &[fin(&[2]), fin(&[])]);
    }
    assert!(f.value(4).is_empty());

    let k2 = koszul_at(&q, &z(), 1, &[BigInt::from(3)]).unwrap();
    let g = filtration_from_objects(&z(), &q, &[k.clone(), k2.clone()]).unwrap();
    assert_eq!(g.value(0).parts(), &[fin(&[2]), fin(&[3])]);
    assert_eq!(g.value(1).parts(), &[fin(&[2]), fin(&[])]);
    assert!(aisle_membership(&k, &g).unwrap() && aisle_membership(&k2, &g).unwrap());
    assert_eq!(filtration_from_objects(&z(), &q, &[]).unwrap(), Filtration::constant(QSupport::empty(&z(), 2)));
}

#[test]
fn generated_filtration_is_least() {
    let q = Arc::new(Quiver::linear_a(2));
    let mut rng = gen::rng(21);
    for _ in 0..20 {
        let xs: Vec<_> = (0..2).map(|_| gen::random_perfect(&mut rng, &q, &z(), 4)).collect();
        let f = filtration_from_objects(&z(), &q, &xs).unwrap();
        for x in &xs {
            assert!(aisle_membership(x, &f).unwrap());
        }
        for _ in 0..10 {
            let g = gen::random_filtration(&mut rng, &q, &z(), 4);
            if xs.iter().all(|x| aisle_membership(x, &g).unwrap()) {
                assert!(f.is_subset(&g).unwrap());
            }
        }
    }
}

#[test]
fn aisles_absorb_the_standard_aisle() {
    let q = Arc::new(Quiver::linear_a(2));
    let mut rng = gen::rng(33);
    let std = Filtration::standard(&z(), 2);
    for _ in 0..25 {
        let x = gen::random_perfect(&mut rng, &q, &z(), 4);
        let y = gen::random_perfect(&mut rng, &q, &z(), 4);
        let f = filtration_from_objects(&z(), &q, &[x.clone()]).unwrap();
        if aisle_membership(&y, &std).unwrap() {
            assert!(aisle_membership(&box_tensor(&x, &y).unwrap(), &f).unwrap());
        }
    }
}

#[test]
fn serre_translation_over_a_field() {
    let f2 = PrimeField::new(2).unwrap();
    let std = Filtration::standard(&f2, 3);
    let chain = serre_translation(&std).unwrap();
    assert_eq!(chain.tail_low(), &BTreeSet::from([0, 1, 2]));
    assert_eq!(chain.jumps(), &[(1, BTreeSet::new())]);
    assert_eq!(serre_inverse(&f2, 3, &chain).unwrap(), std);

    let q = Arc::new(Quiver::linear_a(3));
    let f = filtration_from_objects(&f2, &q, &[vertex_simple(&q, &f2, 0).unwrap()]).unwrap();
    let c = serre_translation(&f).unwrap();
    assert_eq!(c.value(0), &BTreeSet::from([0]));
    assert_eq!(c.value(-5), &BTreeSet::from([0]));
    assert!(c.value(1).is_empty());

    let mut rng = gen::rng(2);
    for _ in 0..20 {
        let f = gen::random_filtration(&mut rng, &q, &f2, 3);
        assert_eq!(serre_inverse(&f2, 3, &serre_translation(&f).unwrap()).unwrap(), f);
    }
    assert!(matches!(serre_translation(&Filtration::standard(&z(), 2)), Err(Error::NotAField(_))));
    let bad = SerreChain::new(BTreeSet::new(), vec![(0, BTreeSet::from([0]))], BTreeSet::new()).unwrap();
    assert!(matches!(serre_inverse(&f2, 1, &bad), Err(Error::InvalidFiltration(_))));
}

fn d5_tilde_system(q: &Quiver) -> FiltrationSystem {
    FiltrationSystem::new(vec![
        VertexSet::from_names(q, &["1", "2", "3", "4", "5"]).unwrap(),
        VertexSet::from_names(q, &["6"]).unwrap(),
    ])
}

#[test]
fn filtration_system_examples() {
    let q = Quiver::d5_tilde();
    let r = check_filtration_system(&d5_tilde_system(&q), &q);
    assert!(r.is_system && r.is_dynkin_support);
    assert_eq!(r.ordering, Some(vec![1, 0]));

    let r = check_filtration_system(&FiltrationSystem::trivial(&q), &q);
    assert!(r.is_system && !r.is_dynkin_support);

    let r = check_filtration_system(&FiltrationSystem::simples(&q), &q);
    assert!(r.is_system && r.is_dynkin_support);

    let a3 = Quiver::linear_a(3);
    let bad = FiltrationSystem::new(vec![
        VertexSet::from_names(&a3, &["1", "3"]).unwrap(),
        VertexSet::from_names(&a3, &["2"]).unwrap(),
    ]);
    let r = check_filtration_system(&bad, &a3);
    assert!(!r.is_system && r.failure.is_some());
    let overlap = FiltrationSystem::new(vec![VertexSet::all(&a3), VertexSet::single(1)]);
    assert!(!check_filtration_system(&overlap, &a3).is_system);
    let gap = FiltrationSystem::new(vec![VertexSet::single(1)]);
    assert!(!check_filtration_system(&gap, &a3).is_system);
}

#[test]
fn simples_form_a_system_on_random_quivers() {
    let mut rng = gen::rng(17);
    for n in 1..=7 {
        for _ in 0..3 {
            let q = gen::random_acyclic_quiver(&mut rng, n, 0.4);
            let r = check_filtration_system(&FiltrationSystem::simples(&q), &q);
            assert!(r.is_system && r.is_dynkin_support);
        }
    }
}

#[test]
fn component_functors() {
    let q = Arc::new(Quiver::linear_a(3));
    let x = gen::random_perfect(&mut gen::rng(4), &q, &z(), 4);
    let triv = FiltrationSystem::trivial(&q);
    assert_eq!(component_restrict(&x, 0, &triv).unwrap(), x);
    assert_eq!(component_times(&x, 0, &triv, &q).unwrap(), x);
    assert!(matches!(component_restrict(&x, 1, &triv), Err(Error::IndexOutOfRange(1))));

    let simples = FiltrationSystem::simples(&q);
    for i in 0..3 {
        let r = component_restrict(&x, i, &simples).unwrap();
        assert_eq!(r.homology_degrees(), eval_vertex(&x, i).unwrap().homology_degrees());
        let lhs = component_times(&r, i, &simples, &q).unwrap();
        let rhs = i_times(&eval_vertex(&x, i).unwrap(), &q, i).unwrap();
        assert_eq!(compact_support(&lhs).unwrap(), compact_support(&rhs).unwrap());
    }
}

#[test]
fn component_roundtrip_on_d5_tilde() {
    let q = Arc::new(Quiver::d5_tilde());
    let c = d5_tilde_system(&q);
    let mut rng = gen::rng(8);
    for _ in 0..10 {
        let x = gen::random_perfect(&mut rng, &q, &z(), 3);
        let back = component_times(&component_restrict(&x, 0, &c).unwrap(), 0, &c, &q).unwrap();
        let (sx, sb) = (compact_support(&x).unwrap(), compact_support(&back).unwrap());
        for v in 0..5 {
            assert_eq!(sb.part(v), sx.part(v));
        }
        assert!(sb.part(5).is_empty());
    }
}

#[test]
fn aisle_decomposition_roundtrips() {
    let q = Arc::new(Quiver::d5_tilde());
    let c = d5_tilde_system(&q);
    let mut rng = gen::rng(12);
    for _ in 0..20 {
        let f = gen::random_filtration(&mut rng, &q, &z(), 5);
        let parts = c_aisle_decompose(&f, &c).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].vertex_count(), 5);
        assert_eq!(c_aisle_reassemble(&z(), 6, &parts, &c).unwrap(), f);
        let triv = FiltrationSystem::trivial(&q);
        assert_eq!(c_aisle_decompose(&f, &triv).unwrap(), vec![f.clone()]);
        let simples = c_aisle_decompose(&f, &FiltrationSystem::simples(&q)).unwrap();
        for (i, g) in simples.iter().enumerate() {
            for n in -3..=4 {
                assert_eq!(g.value(n).part(0), f.value(n).part(i));
            }
        }
    }
}
