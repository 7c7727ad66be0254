use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore};

use crate::error::{Error, Result};

use super::{is_prime_u64, prime_factors_u64, Ring, RingDesc};

/// The integers; canonical associates are nonnegative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Integers;

pub(crate) fn int_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    // floor division leaves |r| < |b|
    a.div_mod_floor(b)
}

pub(crate) fn int_prime_divisors(a: &BigInt) -> Vec<BigInt> {
    let m = a.abs();
    match m.to_u64() {
        Some(v) => prime_factors_u64(v).into_iter().map(BigInt::from).collect(),
        None => {
            // large values: trial division with BigInt
            let mut out = Vec::new();
            let mut n = m;
            let mut d = BigInt::from(2);
            while &d * &d <= n {
                if (&n % &d).is_zero() {
                    out.push(d.clone());
                    while (&n % &d).is_zero() {
                        n /= &d;
                    }
                }
                d += 1;
            }
            if n > BigInt::one() {
                out.push(n);
            }
            out
        }
    }
}

pub(crate) fn parse_int(s: &str) -> Result<BigInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("not an integer: `{s}`")))
}

pub(crate) fn sample_int(rng: &mut dyn RngCore, size: u32) -> BigInt {
    let s = size.max(1) as i64;
    BigInt::from(rng.gen_range(-s..=s))
}

impl Ring for Integers {
    type Elem = BigInt;

    fn descriptor(&self) -> RingDesc {
        RingDesc::Integers
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        int_div_rem(a, b)
    }
    fn norm(&self, a: &BigInt) -> BigUint {
        a.magnitude().clone()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.magnitude().is_one()
    }
    fn inverse(&self, a: &BigInt) -> BigInt {
        assert!(self.is_unit(a), "{a} is not a unit");
        a.clone()
    }
    fn normalizer(&self, a: &BigInt) -> BigInt {
        if a.sign() == Sign::Minus {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn format_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<BigInt> {
        parse_int(s)
    }
    fn is_field(&self) -> bool {
        false
    }
    fn has_generic_point(&self) -> bool {
        true
    }
    fn window_primes(&self, bound: u64) -> Vec<BigInt> {
        (2..=bound).filter(|&q| is_prime_u64(q)).map(BigInt::from).collect()
    }
    fn prime_divisors(&self, a: &BigInt) -> Vec<BigInt> {
        int_prime_divisors(a)
    }
    fn is_prime_generator(&self, g: &BigInt) -> bool {
        g.to_u64().is_some_and(is_prime_u64)
    }
    fn sample(&self, rng: &mut dyn RngCore, size: u32) -> BigInt {
        sample_int(rng, size)
    }
    fn canonical(&self, a: &BigInt) -> BigInt {
        a.abs()
    }
}
