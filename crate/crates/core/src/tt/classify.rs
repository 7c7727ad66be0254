use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::ring::spec::{PrimeIdeal, SpClosedSet};
use crate::ring::Ring;

use super::QSupport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassificationMode {
    /// One thick subcategory of `D^c(R)` per vertex.
    PerVertex,
    /// A monotone map from `Spec(R)` to vertex subsets.
    PosetMap,
}

/// A monotone map `Spec(R) -> P(Q_0)` of finite type: `default` is the value
/// on all but finitely many points (including `(0)` when it is prime),
/// `exceptions` lists the remaining maximal primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetMap<R: Ring> {
    ring: R,
    default: BTreeSet<usize>,
    exceptions: BTreeMap<R::Elem, BTreeSet<usize>>,
}

impl<R: Ring> PosetMap<R> {
    /// Validates generators and monotonicity, and drops exceptions equal to
    /// the default.
    pub fn new(ring: &R, default: BTreeSet<usize>, exceptions: BTreeMap<R::Elem, BTreeSet<usize>>) -> Result<Self> {
        let mut clean = BTreeMap::new();
        for (g, v) in exceptions {
            let p = PrimeIdeal::new(ring, g)?;
            let Some(g) = p.generator().cloned() else {
                return Err(Error::Invalid("the generic point carries the default value".into()));
            };
            if ring.has_generic_point() && !default.is_subset(&v) {
                return Err(Error::MonotonicityViolation(format!(
                    "value at (0) is {default:?} but value at ({}) is {v:?}",
                    ring.format_elem(&g)
                )));
            }
            if v != default {
                clean.insert(g, v);
            }
        }
        Ok(PosetMap { ring: ring.clone(), default, exceptions: clean })
    }

    pub fn default_value(&self) -> &BTreeSet<usize> {
        &self.default
    }

    pub fn exceptions(&self) -> &BTreeMap<R::Elem, BTreeSet<usize>> {
        &self.exceptions
    }

    pub fn value(&self, p: &PrimeIdeal<R>) -> &BTreeSet<usize> {
        p.generator().and_then(|g| self.exceptions.get(g)).unwrap_or(&self.default)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Translated<R: Ring> {
    PerVertex(Vec<SpClosedSet<R>>),
    PosetMap(PosetMap<R>),
}

/// Rewrites a support in one of the two equivalent classification forms.
pub fn translate_classification<R: Ring>(s: &QSupport<R>, mode: ClassificationMode) -> Result<Translated<R>> {
    match mode {
        ClassificationMode::PerVertex => Ok(Translated::PerVertex(s.parts().to_vec())),
        ClassificationMode::PosetMap => {
            let ring = s.ring();
            let default: BTreeSet<usize> = (0..s.vertex_count()).filter(|&i| s.part(i).is_all()).collect();
            let mut exceptions: BTreeMap<R::Elem, BTreeSet<usize>> = BTreeMap::new();
            for (i, part) in s.parts().iter().enumerate() {
                if let Some(pts) = part.points() {
                    for g in pts {
                        exceptions.entry(g.clone()).or_insert_with(|| default.clone()).insert(i);
                    }
                }
            }
            Ok(Translated::PosetMap(PosetMap::new(ring, default, exceptions)?))
        }
    }
}

/// Inverse of [`translate_classification`].
pub fn untranslate<R: Ring>(ring: &R, vertices: usize, t: &Translated<R>) -> Result<QSupport<R>> {
    match t {
        Translated::PerVertex(parts) => {
            if parts.len() != vertices {
                return Err(Error::DimensionMismatch(format!("{} parts for {vertices} vertices", parts.len())));
            }
            QSupport::new(ring, parts.clone())
        }
        Translated::PosetMap(m) => {
            if let Some(&v) = m.default.iter().chain(m.exceptions.values().flatten()).find(|&&v| v >= vertices) {
                return Err(Error::IndexOutOfRange(v));
            }
            let mut parts = Vec::with_capacity(vertices);
            for i in 0..vertices {
                let part = if m.default.contains(&i) {
                    // without a generic point the spectrum is finite and an
                    // exception may remove a point from the default
                    match ring.finite_spectrum().filter(|_| !ring.has_generic_point()) {
                        Some(all) => SpClosedSet::finite(
                            ring,
                            all.into_iter().filter(|g| m.exceptions.get(g).is_none_or(|v| v.contains(&i))),
                        )?,
                        None => SpClosedSet::all(ring),
                    }
                } else {
                    SpClosedSet::finite(
                        ring,
                        m.exceptions.iter().filter(|(_, v)| v.contains(&i)).map(|(g, _)| g.clone()),
                    )?
                };
                parts.push(part);
            }
            QSupport::new(ring, parts)
        }
    }
}
