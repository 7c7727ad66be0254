use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use crate::error::Result;

use super::integers::{int_div_rem, parse_int};
use super::{is_prime_u64, prime_factors_u64, Ring, RingDesc};

/// `Z/n`. Elements are integer lifts and arithmetic is integer arithmetic;
/// [`Ring::reduce`] maps to residues in `[0, n)` and the module layer adds the
/// relation `n` to every generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegersMod {
    n: u64,
    n_big: BigInt,
}

impl IntegersMod {
    pub fn new(n: u64) -> Result<Self> {
        RingDesc::IntegersMod(n).validate()?;
        Ok(IntegersMod { n, n_big: BigInt::from(n) })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Whether `a` is invertible modulo `n` (as opposed to [`Ring::is_unit`],
    /// which answers for the lifted integer).
    pub fn is_residue_unit(&self, a: &BigInt) -> bool {
        a.gcd(&self.n_big).is_one()
    }
}

impl Ring for IntegersMod {
    type Elem = BigInt;

    fn descriptor(&self) -> RingDesc {
        RingDesc::IntegersMod(self.n)
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
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn reduce(&self, a: &BigInt) -> BigInt {
        a.mod_floor(&self.n_big)
    }
    fn modulus(&self) -> Option<BigInt> {
        Some(self.n_big.clone())
    }
    fn format_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<BigInt> {
        Ok(self.reduce(&parse_int(s)?))
    }
    fn is_field(&self) -> bool {
        is_prime_u64(self.n)
    }
    fn has_generic_point(&self) -> bool {
        false
    }
    fn window_primes(&self, _bound: u64) -> Vec<BigInt> {
        prime_factors_u64(self.n).into_iter().map(BigInt::from).collect()
    }
    fn prime_divisors(&self, a: &BigInt) -> Vec<BigInt> {
        prime_factors_u64(self.n)
            .into_iter()
            .map(BigInt::from)
            .filter(|p| (a % p).is_zero())
            .collect()
    }
    fn is_prime_generator(&self, g: &BigInt) -> bool {
        self.window_primes(0).contains(g)
    }
    fn finite_spectrum(&self) -> Option<Vec<BigInt>> {
        Some(self.window_primes(0))
    }
    fn field_elements(&self) -> Option<Vec<BigInt>> {
        self.is_field().then(|| (0..self.n).map(BigInt::from).collect())
    }
    fn sample(&self, rng: &mut dyn RngCore, _size: u32) -> BigInt {
        BigInt::from(rng.gen_range(0..self.n))
    }
    fn canonical(&self, a: &BigInt) -> BigInt {
        a.abs()
    }
}
