use num_bigint::BigInt;
use num_rational::BigRational;
use pathtt::ring::spec::{enumerate_primes, module_support};
use pathtt::ring::Poly;
use pathtt::*;
use proptest::prelude::*;

fn bi(v: i64) -> BigInt {
    BigInt::from(v)
}

fn gens<R: Ring>(ps: &[PrimeIdeal<R>]) -> Vec<Option<String>> {
    ps.iter().map(|p| p.generator().map(|g| p.ring().format_elem(g))).collect()
}

#[test]
fn descriptors_roundtrip() {
    for s in ["Z", "Q", "Fp(2)", "Fp(7)", "Zmod(12)", "Zloc(3)", "FpX(5)"] {
        let d: RingDesc = s.parse().unwrap();
        assert_eq!(d.to_string(), s);
    }
    assert_eq!(" Zmod( 6 ) ".parse::<RingDesc>().unwrap(), RingDesc::IntegersMod(6));
    for bad in ["Fp(4)", "Zloc(1)", "Zmod(1)", "FpX(9)", "R", "Fp", "Fp(2", "Zp(3)", "Fp(x)"] {
        assert!(matches!(bad.parse::<RingDesc>(), Err(Error::UnsupportedRing(_))), "{bad}");
    }
    assert!(PrimeField::new(6).is_err() && IntegersMod::new(0).is_err());
}

#[test]
fn spectrum_windows() {
    let z = Integers;
    assert_eq!(gens(&enumerate_primes(&z, 10)), vec![None, Some("2".into()), Some("3".into()), Some("5".into()), Some("7".into())]);
    let zl = IntegersLocalized::new(3).unwrap();
    assert_eq!(enumerate_primes(&zl, 50).len(), 2);
    let f = PrimeField::new(5).unwrap();
    assert_eq!(enumerate_primes(&f, 50).len(), 1);
    let m = IntegersMod::new(12).unwrap();
    assert_eq!(gens(&enumerate_primes(&m, 50)), vec![Some("2".into()), Some("3".into())]);
    let m = IntegersMod::new(7).unwrap();
    assert!(m.is_field());
}

#[test]
fn prime_ideals() {
    let z = Integers;
    assert!(PrimeIdeal::new(&z, bi(4)).is_err());
    assert!(PrimeIdeal::new(&z, bi(1)).is_err());
    let p = PrimeIdeal::new(&z, bi(-5)).unwrap();
    assert_eq!(p.generator(), Some(&bi(5)));
    let zero = PrimeIdeal::zero(&z).unwrap();
    assert!(zero.is_contained_in(&p) && !p.is_contained_in(&zero) && p.is_contained_in(&p));
    assert!(p.contains_elem(&bi(15)) && !p.contains_elem(&bi(6)));
    // Z/4 has no zero prime
    assert!(PrimeIdeal::zero(&IntegersMod::new(4).unwrap()).is_err());
    assert!(PrimeIdeal::new(&IntegersMod::new(6).unwrap(), bi(3)).is_ok());
}

#[test]
fn closed_sets() {
    let z = Integers;
    let a = SpClosedSet::parse(&z, "[2, 3]").unwrap();
    let b = SpClosedSet::vanishing(&z, &bi(12));
    assert_eq!(a, b);
    assert!(SpClosedSet::vanishing(&z, &bi(0)).is_all());
    assert!(SpClosedSet::vanishing(&z, &bi(-1)).is_empty());
    let c = SpClosedSet::finite(&z, [bi(3), bi(5)]).unwrap();
    assert_eq!(a.union(&c).unwrap().to_string(), "[2, 3, 5]");
    assert_eq!(a.intersection(&c).unwrap().to_string(), "[3]");
    assert!(a.intersection(&c).unwrap().is_subset(&a).unwrap());
    assert!(!SpClosedSet::all(&z).is_subset(&a).unwrap());
    assert!(SpClosedSet::finite(&z, [bi(9)]).is_err());
    assert!(SpClosedSet::parse(&z, "2,3").is_err());
    let zero = PrimeIdeal::zero(&z).unwrap();
    assert!(!a.contains(&zero).unwrap() && SpClosedSet::all(&z).contains(&zero).unwrap());

    // over a ring with finite spectrum, all closed points is everything
    let m = IntegersMod::new(12).unwrap();
    assert!(SpClosedSet::parse(&m, "[2,3]").unwrap().is_all());
    assert!(!SpClosedSet::parse(&m, "[3]").unwrap().is_all());
}

#[test]
fn module_supports() {
    let z = Integers;
    assert!(module_support(&FgModule::free(&z, 1)).is_all());
    assert_eq!(module_support(&FgModule::cyclic(&z, bi(18))).to_string(), "[2, 3]");
    assert!(module_support(&FgModule::zero(&z)).is_empty());
}

#[test]
fn polynomial_primes() {
    // monic irreducibles of degree 2 over F_p number (p^2 - p) / 2
    for p in [2u64, 3, 5] {
        let r = PolyOverPrimeField::new(p).unwrap();
        let count = r.monic_of_degree(2).iter().filter(|f| r.is_irreducible(f)).count() as u64;
        assert_eq!(count, (p * p - p) / 2);
    }
    let r = PolyOverPrimeField::new(2).unwrap();
    assert!(r.is_prime_generator(&Poly(vec![1, 1, 1])));
    assert!(!r.is_prime_generator(&Poly(vec![1, 0, 1])));
}

#[test]
fn rational_and_local_units() {
    let q = Rationals;
    let half = BigRational::new(bi(1), bi(2));
    assert!(q.is_unit(&half) && q.is_field());
    let zl = IntegersLocalized::new(3).unwrap();
    assert!(zl.is_unit(&BigRational::new(bi(2), bi(5))));
    assert!(!zl.is_unit(&BigRational::new(bi(3), bi(5))));
    assert_eq!(zl.prime_divisors(&BigRational::new(bi(18), bi(7))), vec![BigRational::from(bi(3))]);
}

/// Division on representatives (lifts, for `Z/n`).
fn euclid_holds<R: Ring>(r: &R, a: &R::Elem, b: &R::Elem) -> bool {
    if r.is_zero(b) {
        return true;
    }
    let (q, rem) = r.div_rem(a, b);
    r.add(&r.mul(&q, b), &rem) == *a && (r.is_zero(&rem) || r.norm(&rem) < r.norm(b))
}

fn gcd_divides<R: Ring>(r: &R, a: &R::Elem, b: &R::Elem) -> bool {
    let g = r.gcd(a, b);
    r.divides(&g, a) && r.divides(&g, b)
}

proptest! {
    #[test]
    fn euclidean_division(a in -500i64..500, b in -50i64..50, n in 2u64..40) {
        let z = Integers;
        prop_assert!(euclid_holds(&z, &bi(a), &bi(b)));
        prop_assert!(gcd_divides(&z, &bi(a), &bi(b)));
        let m = IntegersMod::new(n).unwrap();
        let (x, y) = (m.from_i64(a), m.from_i64(b));
        prop_assert!(euclid_holds(&m, &x, &y));
        prop_assert!(gcd_divides(&m, &x, &y));
        let zl = IntegersLocalized::new(5).unwrap();
        prop_assert!(euclid_holds(&zl, &zl.from_i64(a), &zl.from_i64(b)));
    }

    #[test]
    fn field_inverses(a in 1u64..10_000, i in 0usize..6) {
        let p = [2u64, 3, 5, 7, 11, 101][i];
        let f = PrimeField::new(p).unwrap();
        let x = f.from_i64(a as i64);
        if !f.is_zero(&x) {
            prop_assert_eq!(f.mul(&x, &f.inverse(&x)), f.one());
        }
    }

    #[test]
    fn polynomial_division(a in prop::collection::vec(0u64..3, 0..7), b in prop::collection::vec(0u64..3, 1..5)) {
        let r = PolyOverPrimeField::new(3).unwrap();
        let (a, b) = (Poly::trimmed(a), Poly::trimmed(b));
        prop_assert!(euclid_holds(&r, &a, &b));
        prop_assert!(gcd_divides(&r, &a, &b));
    }

    #[test]
    fn canonical_generators_are_associates(a in -200i64..200, u in prop::sample::select(vec![-1i64, 1])) {
        let z = Integers;
        prop_assert_eq!(z.canonical(&bi(a)), z.canonical(&bi(a * u)));
        prop_assert!(z.associates(&bi(a), &bi(a * u)));
    }
}
