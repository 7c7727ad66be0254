use num_bigint::BigInt;
use pathtt::linalg::{cokernel_presentation, kernel_basis, smith_normal_form, FgModule};
use pathtt::ring::{Integers, IntegersMod, PolyOverPrimeField, Ring};
use pathtt::Matrix;
use proptest::prelude::*;

fn z(rows: &[&[i64]]) -> Matrix<Integers> {
    Matrix::from_i64(&Integers, rows)
}

fn divisors_i64(m: &Matrix<Integers>) -> Vec<i64> {
    cokernel_presentation(m).divisors.iter().map(|d| i64::try_from(d).unwrap()).collect()
}

/// Determinant by cofactor expansion, for the oracle.
fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| [&r[..j], &r[j + 1..]].concat()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

fn check_certificate<R: Ring>(m: &Matrix<R>) {
    let s = smith_normal_form(m);
    assert_eq!(s.u.mul(m).mul(&s.v).reduced(), s.d);
    let n = m.rows();
    assert_eq!(s.u.mul(&s.u_inv).reduced(), Matrix::identity(m.ring(), n).reduced());
    assert_eq!(s.v.mul(&s.v_inv).reduced(), Matrix::identity(m.ring(), m.cols()).reduced());
    let diag = s.diagonal();
    for w in diag.windows(2) {
        assert!(m.ring().divides(&w[0], &w[1]), "chain {:?}", diag);
    }
}

#[test]
fn snf_identity() {
    let s = smith_normal_form(&z(&[&[1, 0], &[0, 1]]));
    assert_eq!(s.d, z(&[&[1, 0], &[0, 1]]));
}

#[test]
fn snf_two_by_two() {
    let m = z(&[&[2, 4], &[6, 8]]);
    let s = smith_normal_form(&m);
    assert_eq!(s.u.mul(&m).mul(&s.v), s.d);
    // oracle: d1 = gcd of entries, d1 d2 = |det|
    assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    assert_eq!(2 * 4, det(&[vec![2, 4], vec![6, 8]]).abs());
}

#[test]
fn snf_polynomial() {
    let r = PolyOverPrimeField::new(2).unwrap();
    let x = r.x();
    let x2 = r.mul(&x, &x);
    let m = Matrix::from_rows(&r, vec![vec![x.clone(), x2]]).unwrap();
    let ed = cokernel_presentation(&m);
    assert_eq!(ed.divisors, vec![x]);
    assert_eq!(ed.free_rank, 0);
    assert_eq!(kernel_basis(&m).cols(), 1);
    // brute force: the kernel vector (x, 1) up to units
    let k = kernel_basis(&m);
    assert!(m.mul(&k).is_zero());
}

#[test]
fn cokernels() {
    assert_eq!(cokernel_presentation(&z(&[&[0]])).free_rank, 1);
    assert_eq!(divisors_i64(&z(&[&[6]])), vec![6]);
    assert_eq!(divisors_i64(&z(&[&[2, 0], &[0, 3]])), vec![6]);
}

#[test]
fn snf_mod_n_reduces_certificate() {
    let r = IntegersMod::new(12).unwrap();
    let m = Matrix::from_i64(&r, &[&[4, 6], &[2, 9]]);
    check_certificate(&m);
    let s = smith_normal_form(&m);
    for d in s.diagonal() {
        assert!((BigInt::from(12) % &d) == BigInt::from(0));
    }
}

#[test]
fn zmod_projectivity() {
    let r = IntegersMod::new(6).unwrap();
    assert!(FgModule::cyclic(&r, BigInt::from(2)).is_projective());
    let r4 = IntegersMod::new(4).unwrap();
    assert!(!FgModule::cyclic(&r4, BigInt::from(2)).is_projective());
    assert!(FgModule::free(&r4, 2).is_projective());
}

/// |Z^3 / im M| by enumeration: the image contains d Z^3 for d = |det|, so
/// the cokernel has d^3 / |image mod d| elements; the image mod d is found by
/// closing the columns under addition.
fn brute_cokernel_size(m: &[Vec<i64>]) -> i64 {
    let d = det(m).abs();
    let cols: Vec<[i64; 3]> = (0..3).map(|j| [m[0][j], m[1][j], m[2][j]]).collect();
    let mut seen = std::collections::HashSet::from([[0i64; 3]]);
    let mut stack = vec![[0i64; 3]];
    while let Some(v) = stack.pop() {
        for c in &cols {
            let w = [(v[0] + c[0]).rem_euclid(d), (v[1] + c[1]).rem_euclid(d), (v[2] + c[2]).rem_euclid(d)];
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    d * d * d / seen.len() as i64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn snf_certificate_over_z(entries in prop::collection::vec(-6i64..=6, 12)) {
        let rows: Vec<&[i64]> = entries.chunks(4).collect();
        check_certificate(&z(&rows));
    }

    #[test]
    fn cokernel_order_matches_enumeration(entries in prop::collection::vec(-4i64..=4, 9)) {
        let rows: Vec<Vec<i64>> = entries.chunks(3).map(<[i64]>::to_vec).collect();
        let d = det(&rows).abs();
        prop_assume!(d > 0 && d <= 40);
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let ed = cokernel_presentation(&z(&refs));
        prop_assert_eq!(ed.free_rank, 0);
        let prod: i64 = ed.divisors.iter().map(|x| i64::try_from(x).unwrap()).product();
        prop_assert_eq!(prod, brute_cokernel_size(&rows));
    }

    #[test]
    fn snf_certificate_mod_n(entries in prop::collection::vec(0i64..30, 9), n in 2u64..30) {
        let r = IntegersMod::new(n).unwrap();
        let rows: Vec<&[i64]> = entries.chunks(3).collect();
        check_certificate(&Matrix::from_i64(&r, &rows));
    }

    #[test]
    fn snf_certificate_poly(seed in 0u64..1000) {
        use rand::SeedableRng;
        let r = PolyOverPrimeField::new(3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let data = (0..6).map(|_| r.sample(&mut rng, 2)).collect();
        check_certificate(&Matrix::from_vec(&r, 2, 3, data).unwrap());
    }
}
