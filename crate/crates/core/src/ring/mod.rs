//! Effective principal ideal rings.
//!
//! A [`Ring`] value is a context object: elements are plain data and every
//! operation goes through the ring, so runtime parameters such as `p` or `n`
//! never have to be encoded in the element type.

mod desc;
mod integers;
mod integers_mod;
mod localized;
mod poly;
mod prime_field;
mod rationals;
pub mod spec;

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigUint;
use rand::RngCore;

use crate::error::Result;

pub use desc::RingDesc;
pub use integers::Integers;
pub use integers_mod::IntegersMod;
pub use localized::IntegersLocalized;
pub use poly::{Poly, PolyOverPrimeField};
pub use prime_field::PrimeField;
pub use rationals::Rationals;

/// A commutative principal ideal ring with Euclidean division.
///
/// `IntegersMod` is the one non-domain in the tier. Its elements are integer
/// lifts and its arithmetic is that of the integers; the modulus is applied by
/// the module layer as an implicit relation (see [`Ring::modulus`]).
pub trait Ring: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Ord + Hash + Debug + Send + Sync;

    fn descriptor(&self) -> RingDesc;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// `a = q*b + r` with `r = 0` or `norm(r) < norm(b)`; `b` nonzero.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// Euclidean size of a nonzero element.
    fn norm(&self, a: &Self::Elem) -> BigUint;

    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// Inverse of a unit.
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;

    /// Unit `u` such that `u*a` is the canonical associate of `a`.
    fn normalizer(&self, a: &Self::Elem) -> Self::Elem;

    /// Canonical representative of an entry (residues for `IntegersMod`).
    fn reduce(&self, a: &Self::Elem) -> Self::Elem {
        a.clone()
    }

    /// Implicit relation carried by every module (`Some(n)` only for `Z/n`).
    fn modulus(&self) -> Option<Self::Elem> {
        None
    }

    fn format_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    fn is_field(&self) -> bool;

    /// Whether `(0)` is a prime ideal.
    fn has_generic_point(&self) -> bool;

    /// Canonical generators of the nonzero primes in the window `bound`.
    fn window_primes(&self, bound: u64) -> Vec<Self::Elem>;

    /// Canonical generators of the nonzero primes containing `a`, ascending.
    /// For `a = 0` this is only meaningful when the spectrum is finite.
    fn prime_divisors(&self, a: &Self::Elem) -> Vec<Self::Elem>;

    /// Whether `g` is the canonical generator of a nonzero prime.
    fn is_prime_generator(&self, g: &Self::Elem) -> bool;

    /// All nonzero primes, when there are finitely many.
    fn finite_spectrum(&self) -> Option<Vec<Self::Elem>> {
        if self.is_field() {
            Some(Vec::new())
        } else {
            None
        }
    }

    /// Every element, when the ring is a finite field.
    fn field_elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// A small random element; `size` bounds its magnitude or degree.
    fn sample(&self, rng: &mut dyn RngCore, size: u32) -> Self::Elem;

    fn canonical(&self, a: &Self::Elem) -> Self::Elem {
        if self.is_zero(a) {
            a.clone()
        } else {
            self.mul(&self.normalizer(a), a)
        }
    }

    fn divides(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        if self.is_zero(a) {
            return self.is_zero(b);
        }
        self.is_zero(&self.div_rem(b, a).1)
    }

    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(b) {
            return if self.is_zero(a) { Some(self.zero()) } else { None };
        }
        let (q, r) = self.div_rem(a, b);
        self.is_zero(&r).then_some(q)
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !self.is_zero(&y) {
            let r = self.div_rem(&x, &y).1;
            x = y;
            y = r;
        }
        self.canonical(&x)
    }

    fn associates(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.canonical(a) == self.canonical(b)
    }

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let mut out = self.one();
        for _ in 0..e {
            out = self.mul(&out, a);
        }
        out
    }
}

/// Trial-division primality for window enumeration.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors_u64(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
