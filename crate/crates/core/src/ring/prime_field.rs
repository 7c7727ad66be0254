use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, RngCore};

use crate::error::{Error, Result};

use super::{Ring, RingDesc};

/// The prime field `F_p`, elements stored as residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut out = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            out = out * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    out
}

pub(crate) fn parse_residue(s: &str, p: u64) -> Result<u64> {
    let v: i128 = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("not an integer: `{s}`")))?;
    Ok(v.rem_euclid(p as i128) as u64)
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        RingDesc::PrimeField(p).validate()?;
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn descriptor(&self) -> RingDesc {
        RingDesc::PrimeField(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn div_rem(&self, a: &u64, b: &u64) -> (u64, u64) {
        (a * inv_mod(*b, self.p) % self.p, 0)
    }
    fn norm(&self, _a: &u64) -> BigUint {
        BigUint::one()
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn inverse(&self, a: &u64) -> u64 {
        inv_mod(*a, self.p)
    }
    fn normalizer(&self, a: &u64) -> u64 {
        inv_mod(*a, self.p)
    }
    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<u64> {
        parse_residue(s, self.p)
    }
    fn is_field(&self) -> bool {
        true
    }
    fn has_generic_point(&self) -> bool {
        true
    }
    fn window_primes(&self, _bound: u64) -> Vec<u64> {
        Vec::new()
    }
    fn prime_divisors(&self, _a: &u64) -> Vec<u64> {
        Vec::new()
    }
    fn is_prime_generator(&self, _g: &u64) -> bool {
        false
    }
    fn field_elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
    fn sample(&self, rng: &mut dyn RngCore, _size: u32) -> u64 {
        rng.gen_range(0..self.p)
    }
}
