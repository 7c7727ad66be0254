use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, RngCore};

use crate::error::{Error, Result};

use super::prime_field::{inv_mod, parse_residue};
use super::{Ring, RingDesc};

/// Polynomial over `F_p`, coefficients low degree first, no trailing zeros.
///
/// Ordered by degree, then by coefficients from the top down, which is the
/// enumeration order of [`PolyOverPrimeField::window_primes`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(pub Vec<u64>);

impl Poly {
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn trimmed(mut v: Vec<u64>) -> Poly {
        while v.last() == Some(&0) {
            v.pop();
        }
        Poly(v)
    }

    pub fn monomial(c: u64, deg: usize) -> Poly {
        let mut v = vec![0; deg + 1];
        v[deg] = c;
        Poly::trimmed(v)
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self))
    }
}

pub(crate) fn format_poly(a: &Poly) -> String {
    if a.is_zero() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (d, &c) in a.0.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coef = if c == 1 && d > 0 { String::new() } else { c.to_string() };
        terms.push(match d {
            0 => coef,
            1 => format!("{coef}x"),
            _ => format!("{coef}x^{d}"),
        });
    }
    terms.join("+")
}

/// `F_p[x]`; canonical associates are monic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyOverPrimeField {
    p: u64,
}

impl PolyOverPrimeField {
    pub fn new(p: u64) -> Result<Self> {
        RingDesc::PolyOverPrimeField(p).validate()?;
        Ok(PolyOverPrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `x`.
    pub fn x(&self) -> Poly {
        Poly(vec![0, 1])
    }

    pub fn constant(&self, c: u64) -> Poly {
        Poly::trimmed(vec![c % self.p])
    }

    /// Monic polynomials of exact degree `d`, in ascending order.
    pub fn monic_of_degree(&self, d: usize) -> Vec<Poly> {
        let count = self.p.pow(d as u32);
        (0..count)
            .map(|mut m| {
                let mut v = Vec::with_capacity(d + 1);
                for _ in 0..d {
                    v.push(m % self.p);
                    m /= self.p;
                }
                v.push(1);
                Poly(v)
            })
            .collect()
    }

    pub fn is_irreducible(&self, f: &Poly) -> bool {
        let Some(deg) = f.degree() else { return false };
        if deg == 0 {
            return false;
        }
        (1..=deg / 2).all(|d| self.monic_of_degree(d).iter().all(|g| !self.divides(g, f)))
    }

    fn scale(&self, a: &Poly, c: u64) -> Poly {
        Poly::trimmed(a.0.iter().map(|x| x * c % self.p).collect())
    }
}

impl Ring for PolyOverPrimeField {
    type Elem = Poly;

    fn descriptor(&self) -> RingDesc {
        RingDesc::PolyOverPrimeField(self.p)
    }
    fn zero(&self) -> Poly {
        Poly(Vec::new())
    }
    fn one(&self) -> Poly {
        Poly(vec![1])
    }
    fn from_i64(&self, v: i64) -> Poly {
        Poly::trimmed(vec![v.rem_euclid(self.p as i64) as u64])
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.0.len().max(b.0.len());
        let v = (0..n)
            .map(|i| (a.0.get(i).copied().unwrap_or(0) + b.0.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        Poly::trimmed(v)
    }
    fn neg(&self, a: &Poly) -> Poly {
        Poly(a.0.iter().map(|x| (self.p - x) % self.p).collect())
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut v = vec![0u64; a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                v[i + j] = (v[i + j] + x * y) % self.p;
            }
        }
        Poly::trimmed(v)
    }
    fn div_rem(&self, a: &Poly, b: &Poly) -> (Poly, Poly) {
        let db = b.degree().expect("division by zero polynomial");
        let lead_inv = inv_mod(b.0[db], self.p);
        let mut r = a.0.clone();
        let mut q = vec![0u64; a.0.len().saturating_sub(db).max(1)];
        while let Some(dr) = Poly::trimmed(r.clone()).degree() {
            r.truncate(dr + 1);
            if dr < db {
                break;
            }
            let c = r[dr] * lead_inv % self.p;
            let shift = dr - db;
            q[shift] = c;
            for (k, bk) in b.0.iter().enumerate() {
                r[k + shift] = (r[k + shift] + self.p - c * bk % self.p) % self.p;
            }
        }
        (Poly::trimmed(q), Poly::trimmed(r))
    }
    fn norm(&self, a: &Poly) -> BigUint {
        BigUint::from(a.degree().unwrap_or(0))
    }
    fn is_unit(&self, a: &Poly) -> bool {
        a.degree() == Some(0)
    }
    fn inverse(&self, a: &Poly) -> Poly {
        assert!(self.is_unit(a), "{a:?} is not a unit");
        Poly(vec![inv_mod(a.0[0], self.p)])
    }
    fn normalizer(&self, a: &Poly) -> Poly {
        Poly(vec![inv_mod(*a.0.last().expect("nonzero"), self.p)])
    }
    fn canonical(&self, a: &Poly) -> Poly {
        match a.0.last() {
            None => a.clone(),
            Some(&lead) => self.scale(a, inv_mod(lead, self.p)),
        }
    }
    fn format_elem(&self, a: &Poly) -> String {
        format_poly(a)
    }
    fn parse_elem(&self, s: &str) -> Result<Poly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = self.zero();
        // split on + and -, keeping the sign with the term
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for t in terms {
            let (neg, body) = match t.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, t.strip_prefix('+').unwrap_or(&t)),
            };
            let bad = || Error::Parse(format!("bad polynomial term `{t}`"));
            let (coef, deg) = match body.split_once('x') {
                None => (parse_residue(body, self.p)?, 0usize),
                Some((c, rest)) => {
                    let c = c.strip_suffix('*').unwrap_or(c);
                    let coef = if c.is_empty() { 1 } else { parse_residue(c, self.p)? };
                    let deg = match rest.strip_prefix('^') {
                        Some(d) => d.parse().map_err(|_| bad())?,
                        None if rest.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    (coef, deg)
                }
            };
            let coef = if neg { (self.p - coef) % self.p } else { coef };
            out = self.add(&out, &Poly::monomial(coef, deg));
        }
        Ok(out)
    }
    fn is_field(&self) -> bool {
        false
    }
    fn has_generic_point(&self) -> bool {
        true
    }
    fn window_primes(&self, bound: u64) -> Vec<Poly> {
        (1..=bound as usize)
            .flat_map(|d| self.monic_of_degree(d))
            .filter(|f| self.is_irreducible(f))
            .collect()
    }
    fn prime_divisors(&self, a: &Poly) -> Vec<Poly> {
        let mut rest = self.canonical(a);
        let mut out = Vec::new();
        let mut d = 1;
        while rest.degree().unwrap_or(0) >= 1 {
            if 2 * d > rest.degree().unwrap() {
                out.push(rest);
                break;
            }
            for g in self.monic_of_degree(d) {
                if self.divides(&g, &rest) {
                    out.push(g.clone());
                    while self.divides(&g, &rest) {
                        rest = self.div_rem(&rest, &g).0;
                    }
                }
            }
            d += 1;
        }
        out.sort();
        out
    }
    fn is_prime_generator(&self, g: &Poly) -> bool {
        g.0.last() == Some(&1) && self.is_irreducible(g)
    }
    fn sample(&self, rng: &mut dyn RngCore, size: u32) -> Poly {
        let deg = rng.gen_range(0..=size.max(1) as usize);
        Poly::trimmed((0..=deg).map(|_| rng.gen_range(0..self.p)).collect())
    }
}
