//! Filtrations of supports, compactly generated tensor-aisles, the field-case
//! Serre translation and filtration systems of the unit.

mod chain;
mod system;

use std::collections::BTreeSet;

pub use chain::StepChain;
pub use system::{
    c_aisle_decompose, c_aisle_reassemble, check_filtration_system, component_restrict, component_times,
    FiltrationSystem, SystemReport,
};

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::rep::ComplexRQ;
use crate::ring::spec::{module_support, SpClosedSet};
use crate::ring::Ring;
use crate::tt::QSupport;

/// A weakly decreasing `Z`-indexed chain `Phi(n)` of supports, stored by its
/// jump points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration<R: Ring> {
    ring: R,
    vertices: usize,
    chain: StepChain<QSupport<R>>,
}

impl<R: Ring> Filtration<R> {
    /// `Phi(n) = tail_low` below the first entry, the entry value from each
    /// entry up to the next, and `tail_high` above the last entry.
    pub fn new(ring: &R, vertices: usize, tail_low: QSupport<R>, entries: Vec<(i64, QSupport<R>)>, tail_high: QSupport<R>) -> Result<Self> {
        let chain = StepChain::new(tail_low, entries, tail_high)?;
        Self::from_chain(ring, vertices, chain)
    }

    fn from_chain(ring: &R, vertices: usize, chain: StepChain<QSupport<R>>) -> Result<Self> {
        for v in chain.values() {
            if v.ring() != ring {
                return Err(Error::RingMismatch(format!("{} vs {}", v.ring().descriptor(), ring.descriptor())));
            }
            if v.vertex_count() != vertices {
                return Err(Error::InvalidFiltration(format!("value with {} vertices, expected {vertices}", v.vertex_count())));
            }
        }
        for w in chain.values().collect::<Vec<_>>().windows(2) {
            if !w[1].is_subset(w[0])? {
                return Err(Error::InvalidFiltration(format!("{:?} does not contain {:?}", w[0], w[1])));
            }
        }
        Ok(Filtration { ring: ring.clone(), vertices, chain })
    }

    /// `Phi(n)` = everything for `n <= 0` and nothing for `n >= 1`.
    pub fn standard(ring: &R, vertices: usize) -> Self {
        let chain = StepChain::new(QSupport::all(ring, vertices), vec![(1, QSupport::empty(ring, vertices))], QSupport::empty(ring, vertices))
            .expect("valid chain");
        Filtration { ring: ring.clone(), vertices, chain }
    }

    pub fn constant(value: QSupport<R>) -> Self {
        Filtration {
            ring: value.ring().clone(),
            vertices: value.vertex_count(),
            chain: StepChain::constant(value),
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn value(&self, n: i64) -> &QSupport<R> {
        self.chain.value(n)
    }

    pub fn chain(&self) -> &StepChain<QSupport<R>> {
        &self.chain
    }

    pub fn tail_low(&self) -> &QSupport<R> {
        self.chain.tail_low()
    }

    pub fn tail_high(&self) -> &QSupport<R> {
        self.chain.tail_high()
    }

    /// Jump points `(n, Phi(n))` with `Phi(n) != Phi(n - 1)`.
    pub fn jumps(&self) -> &[(i64, QSupport<R>)] {
        self.chain.jumps()
    }

    fn combine(&self, other: &Self, f: impl Fn(&QSupport<R>, &QSupport<R>) -> Result<QSupport<R>>) -> Result<Self> {
        if self.vertices != other.vertices {
            return Err(Error::DimensionMismatch(format!("{} vs {} vertices", self.vertices, other.vertices)));
        }
        let chain = self.chain.zip_with(&other.chain, f)?;
        Self::from_chain(&self.ring, self.vertices, chain)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.combine(other, QSupport::union)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.combine(other, QSupport::intersection)
    }

    /// Pointwise containment.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        let mut ok = true;
        self.chain.zip_with(&other.chain, |a, b| {
            ok &= a.is_subset(b)?;
            Ok(a.clone())
        })?;
        Ok(ok)
    }

    /// One line per jump, plus both tails.
    pub fn table(&self, q: &Quiver) -> String {
        let row = |s: &QSupport<R>| {
            (0..s.vertex_count())
                .map(|i| format!("{}={}", q.vertex_name(i), s.part(i)))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut out = format!("below: {}\n", row(self.tail_low()));
        for (n, v) in self.jumps() {
            out.push_str(&format!("from {n}: {}\n", row(v)));
        }
        out
    }
}

/// Per-degree supports `n -> i -> Supp_R(H^n(i^* X))`.
fn degree_supports<R: Ring>(x: &ComplexRQ<R>) -> Result<Vec<(i64, QSupport<R>)>> {
    x.require_compact("aisle")?;
    let ring = x.ring();
    let nv = x.quiver().vertex_count();
    let Some((lo, hi)) = x.range() else { return Ok(Vec::new()) };
    (lo..=hi)
        .map(|n| {
            let parts = (0..nv).map(|i| module_support(x.vertex_homology(n, i).module())).collect();
            Ok((n, QSupport::new(ring, parts)?))
        })
        .collect()
}

/// Whether `X` lies in the compactly generated tensor-aisle of `f`:
/// `Supp_R(H^n(i^* X)) <= Phi(n)(i)` for all `n` and `i`.
pub fn aisle_membership<R: Ring>(x: &ComplexRQ<R>, f: &Filtration<R>) -> Result<bool> {
    if x.ring() != f.ring() {
        return Err(Error::RingMismatch(format!("{} vs {}", x.ring().descriptor(), f.ring().descriptor())));
    }
    if x.quiver().vertex_count() != f.vertex_count() {
        return Err(Error::DimensionMismatch("complex and filtration differ in vertex count".into()));
    }
    for (n, s) in degree_supports(x)? {
        if !s.is_subset(f.value(n))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The filtration of the smallest compactly generated tensor-aisle
/// containing `xs`: `Phi(n)(i)` is the union over `m >= n` of the supports
/// of `H^m(i^* X)`.
pub fn filtration_from_objects<R: Ring>(ring: &R, q: &Quiver, xs: &[ComplexRQ<R>]) -> Result<Filtration<R>> {
    let nv = q.vertex_count();
    let mut per_degree: std::collections::BTreeMap<i64, QSupport<R>> = std::collections::BTreeMap::new();
    for x in xs {
        if x.ring() != ring {
            return Err(Error::RingMismatch(format!("{} vs {}", x.ring().descriptor(), ring.descriptor())));
        }
        for (n, s) in degree_supports(x)? {
            let e = per_degree.entry(n).or_insert_with(|| QSupport::empty(ring, nv));
            *e = e.union(&s)?;
        }
    }
    let empty = QSupport::empty(ring, nv);
    let mut acc = empty.clone();
    let mut entries = Vec::new();
    if let (Some(&lo), Some(&hi)) = (per_degree.keys().next(), per_degree.keys().next_back()) {
        entries.push((hi + 1, empty.clone()));
        for n in (lo..=hi).rev() {
            if let Some(s) = per_degree.get(&n) {
                acc = acc.union(s)?;
            }
            entries.push((n, acc.clone()));
        }
        entries.reverse();
    }
    Filtration::new(ring, nv, acc, entries, empty)
}

/// A decreasing chain of vertex sets, the field-case form of a filtration.
pub type SerreChain = StepChain<BTreeSet<usize>>;

/// Over a field each support is everything or nothing at a vertex, so a
/// filtration is a decreasing chain of vertex sets.
pub fn serre_translation<R: Ring>(f: &Filtration<R>) -> Result<SerreChain> {
    if !f.ring().is_field() {
        return Err(Error::NotAField(f.ring().descriptor().to_string()));
    }
    let to_set = |s: &QSupport<R>| -> BTreeSet<usize> { (0..s.vertex_count()).filter(|&i| s.part(i).is_all()).collect() };
    Ok(f.chain.map(to_set))
}

/// Inverse of [`serre_translation`].
pub fn serre_inverse<R: Ring>(ring: &R, vertices: usize, c: &SerreChain) -> Result<Filtration<R>> {
    if !ring.is_field() {
        return Err(Error::NotAField(ring.descriptor().to_string()));
    }
    if let Some(&v) = c.values().flatten().find(|&&v| v >= vertices) {
        return Err(Error::IndexOutOfRange(v));
    }
    let chain = c.map(|set| {
        let parts = (0..vertices)
            .map(|i| if set.contains(&i) { SpClosedSet::all(ring) } else { SpClosedSet::empty(ring) })
            .collect();
        QSupport::new(ring, parts).expect("one ring")
    });
    Filtration::from_chain(ring, vertices, chain)
}
