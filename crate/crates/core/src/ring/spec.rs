//! Prime spectra and specialization-closed subsets.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::FgModule;

use super::Ring;

/// A prime ideal, given by its canonical generator; `None` is `(0)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeIdeal<R: Ring> {
    ring: R,
    generator: Option<R::Elem>,
}

impl<R: Ring> PrimeIdeal<R> {
    /// The zero ideal, for domains; for `Z/p` this is `(p)`.
    pub fn zero(ring: &R) -> Result<Self> {
        if ring.has_generic_point() {
            return Ok(PrimeIdeal { ring: ring.clone(), generator: None });
        }
        match ring.finite_spectrum().as_deref() {
            Some([p]) if ring.is_field() => Self::new(ring, p.clone()),
            _ => Err(Error::Invalid(format!("(0) is not prime in {}", ring.descriptor()))),
        }
    }

    pub fn new(ring: &R, g: R::Elem) -> Result<Self> {
        let g = ring.canonical(&ring.reduce(&g));
        if ring.is_zero(&g) {
            return Self::zero(ring);
        }
        if !ring.is_prime_generator(&g) {
            return Err(Error::Invalid(format!("({}) is not a prime of {}", ring.format_elem(&g), ring.descriptor())));
        }
        Ok(PrimeIdeal { ring: ring.clone(), generator: Some(g) })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn generator(&self) -> Option<&R::Elem> {
        self.generator.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.generator.is_none()
    }

    /// Ideal containment `self <= other`; in a principal ideal ring this is
    /// `self = (0)` or equality.
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.is_zero() || self == other
    }

    /// Whether `r` lies in the ideal.
    pub fn contains_elem(&self, r: &R::Elem) -> bool {
        match &self.generator {
            None => self.ring.is_zero(r),
            // over Z/n, g divides n, so divisibility of the lift is well defined
            Some(g) => self.ring.divides(g, &self.ring.reduce(r)),
        }
    }
}

impl<R: Ring> Ord for PrimeIdeal<R> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.generator.cmp(&other.generator)
    }
}

impl<R: Ring> PartialOrd for PrimeIdeal<R> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<R: Ring> fmt::Display for PrimeIdeal<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.generator {
            None => write!(f, "(0)"),
            Some(g) => write!(f, "({})", self.ring.format_elem(g)),
        }
    }
}

impl<R: Ring> fmt::Debug for PrimeIdeal<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The finite window of `Spec(R)` used for enumeration: `(0)` when prime,
/// followed by the nonzero primes of [`Ring::window_primes`].
pub fn enumerate_primes<R: Ring>(ring: &R, bound: u64) -> Vec<PrimeIdeal<R>> {
    let mut out = Vec::new();
    if ring.has_generic_point() {
        out.push(PrimeIdeal { ring: ring.clone(), generator: None });
    }
    out.extend(
        ring.window_primes(bound)
            .into_iter()
            .map(|g| PrimeIdeal { ring: ring.clone(), generator: Some(g) }),
    );
    out
}

/// A specialization-closed subset of finite type: everything, or finitely
/// many closed points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpClosedSet<R: Ring> {
    ring: R,
    /// `None` is the whole spectrum.
    points: Option<BTreeSet<R::Elem>>,
}

impl<R: Ring> SpClosedSet<R> {
    pub fn all(ring: &R) -> Self {
        SpClosedSet { ring: ring.clone(), points: None }
    }

    pub fn empty(ring: &R) -> Self {
        SpClosedSet { ring: ring.clone(), points: Some(BTreeSet::new()) }
    }

    /// Finitely many closed points, given by prime generators.
    pub fn finite(ring: &R, gens: impl IntoIterator<Item = R::Elem>) -> Result<Self> {
        let mut pts = BTreeSet::new();
        for g in gens {
            let g = ring.canonical(&ring.reduce(&g));
            if !ring.is_prime_generator(&g) {
                return Err(Error::Invalid(format!(
                    "({}) is not a maximal prime of {}",
                    ring.format_elem(&g),
                    ring.descriptor()
                )));
            }
            pts.insert(g);
        }
        Ok(Self::normalized(ring, pts))
    }

    fn normalized(ring: &R, pts: BTreeSet<R::Elem>) -> Self {
        if !ring.has_generic_point() {
            if let Some(all) = ring.finite_spectrum() {
                if all.iter().all(|p| pts.contains(p)) {
                    return Self::all(ring);
                }
            }
        }
        SpClosedSet { ring: ring.clone(), points: Some(pts) }
    }

    /// `V(a)` for a nonzero element, or everything for `a = 0`.
    pub fn vanishing(ring: &R, a: &R::Elem) -> Self {
        if ring.is_zero(&ring.reduce(a)) && ring.modulus().is_none() {
            return Self::all(ring);
        }
        Self::normalized(ring, ring.prime_divisors(a).into_iter().collect())
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn is_all(&self) -> bool {
        self.points.is_none()
    }

    pub fn is_empty(&self) -> bool {
        self.points.as_ref().is_some_and(BTreeSet::is_empty)
    }

    /// Listed closed points, `None` for everything.
    pub fn points(&self) -> Option<&BTreeSet<R::Elem>> {
        self.points.as_ref()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{} vs {}",
                self.ring.descriptor(),
                other.ring.descriptor()
            )));
        }
        Ok(())
    }

    pub fn contains(&self, p: &PrimeIdeal<R>) -> Result<bool> {
        if self.ring != p.ring {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring.descriptor(), p.ring.descriptor())));
        }
        Ok(match (&self.points, &p.generator) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(pts), Some(g)) => pts.contains(g),
        })
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(match (&self.points, &other.points) {
            (Some(a), Some(b)) => Self::normalized(&self.ring, a.union(b).cloned().collect()),
            _ => Self::all(&self.ring),
        })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(match (&self.points, &other.points) {
            (None, _) => other.clone(),
            (_, None) => self.clone(),
            (Some(a), Some(b)) => Self::normalized(&self.ring, a.intersection(b).cloned().collect()),
        })
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(match (&self.points, &other.points) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => a.is_subset(b),
        })
    }

    /// Parses `all` or `[g1, g2, ...]`.
    pub fn parse(ring: &R, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("all") {
            return Ok(Self::all(ring));
        }
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("support spec must be `all` or `[..]`, got `{s}`")))?;
        let gens = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| ring.parse_elem(t))
            .collect::<Result<Vec<_>>>()?;
        Self::finite(ring, gens).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl<R: Ring> fmt::Display for SpClosedSet<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.points {
            None => write!(f, "all"),
            Some(pts) => {
                let v: Vec<String> = pts.iter().map(|g| self.ring.format_elem(g)).collect();
                write!(f, "[{}]", v.join(", "))
            }
        }
    }
}

impl<R: Ring> fmt::Debug for SpClosedSet<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Support of a finitely generated module: everything if it has a free
/// summand, else the primes dividing some invariant factor.
pub fn module_support<R: Ring>(m: &FgModule<R>) -> SpClosedSet<R> {
    let ring = m.ring();
    let ed = m.divisors();
    if ed.free_rank > 0 {
        return SpClosedSet::all(ring);
    }
    let pts = ed.divisors.iter().flat_map(|d| ring.prime_divisors(d)).collect();
    SpClosedSet::normalized(ring, pts)
}
