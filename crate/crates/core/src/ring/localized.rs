use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, RngCore};

use crate::error::{Error, Result};

use super::rationals::parse_rational;
use super::{Ring, RingDesc};

/// The integers localized at a prime `p`: fractions whose denominator is prime
/// to `p`. A discrete valuation ring; canonical associates are powers of `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegersLocalized {
    p: u64,
    p_big: BigInt,
}

impl IntegersLocalized {
    pub fn new(p: u64) -> Result<Self> {
        RingDesc::IntegersLocalized(p).validate()?;
        Ok(IntegersLocalized { p, p_big: BigInt::from(p) })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// p-adic valuation of a nonzero element.
    pub fn valuation(&self, a: &BigRational) -> u32 {
        let mut n = a.numer().clone();
        let mut v = 0;
        while !n.is_zero() && n.is_multiple_of(&self.p_big) {
            n /= &self.p_big;
            v += 1;
        }
        v
    }

    /// Whether a rational lies in the local ring.
    pub fn contains(&self, a: &BigRational) -> bool {
        !a.denom().is_multiple_of(&self.p_big)
    }

    fn p_power(&self, v: u32) -> BigRational {
        BigRational::from_integer(num_traits::pow(self.p_big.clone(), v as usize))
    }
}

impl Ring for IntegersLocalized {
    type Elem = BigRational;

    fn descriptor(&self) -> RingDesc {
        RingDesc::IntegersLocalized(self.p)
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
        if a.is_zero() || self.valuation(b) <= self.valuation(a) {
            (a / b, BigRational::zero())
        } else {
            (BigRational::zero(), a.clone())
        }
    }
    fn norm(&self, a: &BigRational) -> BigUint {
        BigUint::from(self.valuation(a))
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero() && self.valuation(a) == 0
    }
    fn inverse(&self, a: &BigRational) -> BigRational {
        assert!(self.is_unit(a), "{a} is not a unit");
        a.recip()
    }
    fn normalizer(&self, a: &BigRational) -> BigRational {
        self.p_power(self.valuation(a)) / a
    }
    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        let v = parse_rational(s)?;
        if !self.contains(&v) {
            return Err(Error::Parse(format!("`{s}` has denominator divisible by {}", self.p)));
        }
        Ok(v)
    }
    fn is_field(&self) -> bool {
        false
    }
    fn has_generic_point(&self) -> bool {
        true
    }
    fn window_primes(&self, _bound: u64) -> Vec<BigRational> {
        vec![self.p_power(1)]
    }
    fn prime_divisors(&self, a: &BigRational) -> Vec<BigRational> {
        if a.is_zero() || self.valuation(a) > 0 {
            vec![self.p_power(1)]
        } else {
            Vec::new()
        }
    }
    fn is_prime_generator(&self, g: &BigRational) -> bool {
        *g == self.p_power(1)
    }
    fn finite_spectrum(&self) -> Option<Vec<BigRational>> {
        Some(self.window_primes(0))
    }
    fn sample(&self, rng: &mut dyn RngCore, size: u32) -> BigRational {
        let s = size.max(1) as i64;
        let n = rng.gen_range(-s..=s);
        let mut d = rng.gen_range(1..=s);
        if d as u64 % self.p == 0 {
            d = 1;
        }
        BigRational::new(n.into(), d.into())
    }
}
