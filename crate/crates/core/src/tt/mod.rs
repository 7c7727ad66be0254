//! The spectrum `Spec(R) x Q_0`, supports of compact objects and the
//! classification of thick tensor-ideals by specialization-closed subsets.

mod classify;
mod closure;
mod spectrum;

use std::fmt;
use std::sync::Arc;

pub use classify::{translate_classification, untranslate, ClassificationMode, PosetMap, Translated};
pub use closure::{interval_type, shifted_sums_universe, thick_closure_bruteforce, IntervalType};
pub use spectrum::{detecting_object, spc_enumerate, DetectingRow, Spectrum};

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::rep::{koszul_at, vertex_simple, ComplexRQ};
use crate::ring::spec::{module_support, PrimeIdeal, SpClosedSet};
use crate::ring::Ring;

/// The prime thick tensor-ideal `S_{p,i}`: objects whose stalk at `i`
/// vanishes after localizing at `p`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BalmerPoint<R: Ring> {
    pub prime: PrimeIdeal<R>,
    pub vertex: usize,
}

impl<R: Ring> BalmerPoint<R> {
    pub fn new(q: &Quiver, prime: PrimeIdeal<R>, vertex: usize) -> Result<Self> {
        q.check_vertex(vertex)?;
        Ok(BalmerPoint { prime, vertex })
    }

    /// `(generator, vertex)`, e.g. `(2, 1)` or `(0, 3)`.
    pub fn label(&self, q: &Quiver) -> String {
        let g = match self.prime.generator() {
            Some(g) => self.prime.ring().format_elem(g),
            None => "0".into(),
        };
        format!("({g}, {})", q.vertex_name(self.vertex))
    }
}

impl<R: Ring> fmt::Debug for BalmerPoint<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.prime, self.vertex)
    }
}

/// A finite-type specialization-closed subset of `Spec(R) x Q_0`, one
/// [`SpClosedSet`] per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSupport<R: Ring> {
    ring: R,
    parts: Vec<SpClosedSet<R>>,
}

impl<R: Ring> QSupport<R> {
    pub fn new(ring: &R, parts: Vec<SpClosedSet<R>>) -> Result<Self> {
        if let Some(p) = parts.iter().find(|p| p.ring() != ring) {
            return Err(Error::RingMismatch(format!("{} vs {}", p.ring().descriptor(), ring.descriptor())));
        }
        Ok(QSupport { ring: ring.clone(), parts })
    }

    pub fn all(ring: &R, vertices: usize) -> Self {
        QSupport { ring: ring.clone(), parts: vec![SpClosedSet::all(ring); vertices] }
    }

    pub fn empty(ring: &R, vertices: usize) -> Self {
        QSupport { ring: ring.clone(), parts: vec![SpClosedSet::empty(ring); vertices] }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn vertex_count(&self) -> usize {
        self.parts.len()
    }

    pub fn part(&self, i: usize) -> &SpClosedSet<R> {
        &self.parts[i]
    }

    pub fn parts(&self) -> &[SpClosedSet<R>] {
        &self.parts
    }

    pub fn set_part(&mut self, i: usize, s: SpClosedSet<R>) {
        self.parts[i] = s;
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(SpClosedSet::is_empty)
    }

    pub fn contains(&self, p: &BalmerPoint<R>) -> Result<bool> {
        self.parts
            .get(p.vertex)
            .ok_or(Error::IndexOutOfRange(p.vertex))?
            .contains(&p.prime)
    }

    fn zip(&self, other: &Self, f: impl Fn(&SpClosedSet<R>, &SpClosedSet<R>) -> Result<SpClosedSet<R>>) -> Result<Self> {
        if self.parts.len() != other.parts.len() {
            return Err(Error::DimensionMismatch(format!("{} vs {} vertices", self.parts.len(), other.parts.len())));
        }
        let parts = self.parts.iter().zip(&other.parts).map(|(a, b)| f(a, b)).collect::<Result<_>>()?;
        Ok(QSupport { ring: self.ring.clone(), parts })
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip(other, SpClosedSet::union)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip(other, SpClosedSet::intersection)
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        if self.parts.len() != other.parts.len() {
            return Err(Error::DimensionMismatch(format!("{} vs {} vertices", self.parts.len(), other.parts.len())));
        }
        for (a, b) in self.parts.iter().zip(&other.parts) {
            if !a.is_subset(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// One `vertex: spec` line per vertex.
    pub fn table(&self, q: &Quiver) -> String {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{}: {s}\n", q.vertex_name(i)))
            .collect()
    }
}

impl<R: Ring> fmt::Debug for QSupport<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.parts).finish()
    }
}

fn check_ring<R: Ring>(x: &ComplexRQ<R>, ring: &R) -> Result<()> {
    if x.ring() != ring {
        return Err(Error::RingMismatch(format!("{} vs {}", x.ring().descriptor(), ring.descriptor())));
    }
    Ok(())
}

/// `Supp_R(H^*(i^* X))`.
fn vertex_support<R: Ring>(x: &ComplexRQ<R>, i: usize) -> SpClosedSet<R> {
    let ring = x.ring();
    let mut s = SpClosedSet::empty(ring);
    if let Some((lo, hi)) = x.range() {
        for n in lo..=hi {
            let h = x.vertex_homology(n, i);
            s = s.union(&module_support(h.module())).expect("same ring");
            if s.is_all() {
                break;
            }
        }
    }
    s
}

/// Whether `xi_{p,i}(X) = 0`, i.e. `i^* X` becomes acyclic after
/// localizing at `p`.
pub fn xi_zero_test<R: Ring>(x: &ComplexRQ<R>, p: &PrimeIdeal<R>, i: usize) -> Result<bool> {
    x.require_compact("xi test")?;
    check_ring(x, p.ring())?;
    x.quiver().check_vertex(i)?;
    Ok(!vertex_support(x, i).contains(p)?)
}

/// `i -> Supp_R(H^*(i^* X))`.
pub fn compact_support<R: Ring>(x: &ComplexRQ<R>) -> Result<QSupport<R>> {
    x.require_compact("support")?;
    let parts = (0..x.quiver().vertex_count()).map(|i| vertex_support(x, i)).collect();
    Ok(QSupport { ring: x.ring().clone(), parts })
}

/// The support detected by the objects `g(p, i)`; on compact objects it
/// agrees with [`compact_support`].
pub fn big_support_compact<R: Ring>(x: &ComplexRQ<R>) -> Result<QSupport<R>> {
    compact_support(x)
}

/// Generators of the thick tensor-ideal with support `s`: `U(i)` where
/// `s(i)` is everything, otherwise one `i_x K((g))` per listed point.
pub fn ideal_generators<R: Ring>(q: &Arc<Quiver>, s: &QSupport<R>) -> Result<Vec<ComplexRQ<R>>> {
    if s.vertex_count() != q.vertex_count() {
        return Err(Error::DimensionMismatch(format!(
            "support has {} vertices, quiver has {}",
            s.vertex_count(),
            q.vertex_count()
        )));
    }
    let ring = s.ring();
    let mut out = Vec::new();
    for (i, part) in s.parts().iter().enumerate() {
        match part.points() {
            None => out.push(vertex_simple(q, ring, i)?),
            Some(pts) => {
                for g in pts {
                    out.push(koszul_at(q, ring, i, std::slice::from_ref(g))?);
                }
            }
        }
    }
    Ok(out)
}

/// Support of the thick tensor-ideal generated by `xs`.
pub fn support_of_family<R: Ring>(ring: &R, q: &Quiver, xs: &[ComplexRQ<R>]) -> Result<QSupport<R>> {
    let mut s = QSupport::empty(ring, q.vertex_count());
    for x in xs {
        check_ring(x, ring)?;
        s = s.union(&compact_support(x)?)?;
    }
    Ok(s)
}

/// Whether `X` lies in the thick tensor-ideal with support `s`.
pub fn ideal_membership<R: Ring>(x: &ComplexRQ<R>, s: &QSupport<R>) -> Result<bool> {
    check_ring(x, s.ring())?;
    compact_support(x)?.is_subset(s)
}
