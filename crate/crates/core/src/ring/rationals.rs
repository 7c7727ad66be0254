use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, RngCore};

use crate::error::{Error, Result};

use super::{Ring, RingDesc};

/// The rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl Ring for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> RingDesc {
        RingDesc::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn div_rem(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        (a / b, BigRational::zero())
    }
    fn norm(&self, _a: &BigRational) -> BigUint {
        BigUint::one()
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
    fn inverse(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn normalizer(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        parse_rational(s)
    }
    fn is_field(&self) -> bool {
        true
    }
    fn has_generic_point(&self) -> bool {
        true
    }
    fn window_primes(&self, _bound: u64) -> Vec<BigRational> {
        Vec::new()
    }
    fn prime_divisors(&self, _a: &BigRational) -> Vec<BigRational> {
        Vec::new()
    }
    fn is_prime_generator(&self, _g: &BigRational) -> bool {
        false
    }
    fn sample(&self, rng: &mut dyn RngCore, size: u32) -> BigRational {
        let s = size.max(1) as i64;
        let n = rng.gen_range(-s..=s);
        let d = rng.gen_range(1..=s);
        BigRational::new(n.into(), d.into())
    }
}
