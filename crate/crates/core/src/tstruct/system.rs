use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quiver::{Quiver, VertexSet};
use crate::rep::{extend_by_zero, restrict_to_subquiver, ComplexRQ};
use crate::ring::spec::SpClosedSet;
use crate::ring::Ring;
use crate::tt::QSupport;

use super::Filtration;

/// Candidate filtration system `{C_k = U|S_k}` given by vertex sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationSystem {
    pub parts: Vec<VertexSet>,
}

impl FiltrationSystem {
    pub fn new(parts: Vec<VertexSet>) -> Self {
        FiltrationSystem { parts }
    }

    /// `{U(i) : i in Q_0}`.
    pub fn simples(q: &Quiver) -> Self {
        FiltrationSystem { parts: (0..q.vertex_count()).map(VertexSet::single).collect() }
    }

    /// `{U}`.
    pub fn trivial(q: &Quiver) -> Self {
        FiltrationSystem { parts: vec![VertexSet::all(q)] }
    }

    fn part(&self, k: usize) -> Result<&VertexSet> {
        self.parts.get(k).ok_or(Error::IndexOutOfRange(k))
    }
}

/// Verdict of [`check_filtration_system`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemReport {
    pub is_system: bool,
    pub is_dynkin_support: bool,
    /// Part indices whose partial unions are successor-closed, when found.
    pub ordering: Option<Vec<usize>>,
    /// Per part: whether its full subquiver is a disjoint union of ADE types.
    pub dynkin: Vec<bool>,
    /// The failing condition, if any.
    pub failure: Option<String>,
}

fn successor_closed(q: &Quiver, s: &BTreeSet<usize>) -> bool {
    q.arrows().iter().all(|a| !s.contains(&a.source) || s.contains(&a.target))
}

/// Checks that the parts are pairwise disjoint, cover `Q_0`, and admit an
/// ordering whose partial unions are closed under arrow targets; that
/// ordering is a filtration of `U` by submodules with factors `U|S_k`.
/// Greedy search suffices because successor-closed sets are closed under
/// union.
pub fn check_filtration_system(c: &FiltrationSystem, q: &Quiver) -> SystemReport {
    let dynkin: Vec<bool> = c.parts.iter().map(|p| q.full_subquiver(&p.members).0.is_dynkin()).collect();
    let fail = |msg: String, dynkin: Vec<bool>| SystemReport {
        is_system: false,
        is_dynkin_support: false,
        ordering: None,
        dynkin,
        failure: Some(msg),
    };
    let mut owner = vec![None; q.vertex_count()];
    for (k, p) in c.parts.iter().enumerate() {
        for &v in &p.members {
            if v >= q.vertex_count() {
                return fail(format!("part {k} names vertex index {v} outside the quiver"), dynkin);
            }
            if let Some(j) = owner[v] {
                return fail(format!("parts {j} and {k} share vertex {}", q.vertex_name(v)), dynkin);
            }
            owner[v] = Some(k);
        }
    }
    if let Some(v) = owner.iter().position(Option::is_none) {
        return fail(format!("vertex {} is in no part", q.vertex_name(v)), dynkin);
    }
    let mut used = vec![false; c.parts.len()];
    let mut acc = BTreeSet::new();
    let mut ordering = Vec::new();
    while ordering.len() < c.parts.len() {
        let next = (0..c.parts.len()).find(|&k| {
            !used[k] && {
                let mut t = acc.clone();
                t.extend(c.parts[k].members.iter().copied());
                successor_closed(q, &t)
            }
        });
        let Some(k) = next else {
            let rest: Vec<usize> = (0..c.parts.len()).filter(|&k| !used[k]).collect();
            return fail(
                format!("no remaining part among {rest:?} extends {:?} to a successor-closed set", names(q, &acc)),
                dynkin,
            );
        };
        used[k] = true;
        acc.extend(c.parts[k].members.iter().copied());
        ordering.push(k);
    }
    let all_dynkin = dynkin.iter().all(|&d| d);
    SystemReport {
        is_system: true,
        is_dynkin_support: all_dynkin,
        ordering: Some(ordering),
        failure: if all_dynkin { None } else { Some("a part is not of Dynkin type".into()) },
        dynkin,
    }
}

fn names(q: &Quiver, s: &BTreeSet<usize>) -> Vec<String> {
    s.iter().map(|&v| q.vertex_name(v).to_string()).collect()
}

/// `c_k^*`: restriction to the full subquiver `Q_k`.
pub fn component_restrict<R: Ring>(x: &ComplexRQ<R>, k: usize, c: &FiltrationSystem) -> Result<ComplexRQ<R>> {
    restrict_to_subquiver(x, &c.part(k)?.members)
}

/// `c_k x`: extension of a complex over `Q_k` by zero.
pub fn component_times<R: Ring>(m: &ComplexRQ<R>, k: usize, c: &FiltrationSystem, q: &Arc<Quiver>) -> Result<ComplexRQ<R>> {
    extend_by_zero(m, q, &c.part(k)?.members)
}

/// Restricts every level of `f` to each part.
pub fn c_aisle_decompose<R: Ring>(f: &Filtration<R>, c: &FiltrationSystem) -> Result<Vec<Filtration<R>>> {
    c.parts
        .iter()
        .map(|p| {
            if let Some(&v) = p.members.iter().find(|&&v| v >= f.vertex_count()) {
                return Err(Error::IndexOutOfRange(v));
            }
            let restrict = |s: &QSupport<R>| {
                QSupport::new(f.ring(), p.members.iter().map(|&v| s.part(v).clone()).collect()).expect("one ring")
            };
            Filtration::from_chain(f.ring(), p.members.len(), f.chain().map(restrict))
        })
        .collect()
}

/// Inverse of [`c_aisle_decompose`]: reassembles per-part filtrations on a
/// quiver with `vertices` vertices; vertices in no part get the empty set.
pub fn c_aisle_reassemble<R: Ring>(ring: &R, vertices: usize, parts: &[Filtration<R>], c: &FiltrationSystem) -> Result<Filtration<R>> {
    if parts.len() != c.parts.len() {
        return Err(Error::DimensionMismatch(format!("{} filtrations for {} parts", parts.len(), c.parts.len())));
    }
    let mut acc = Filtration::constant(QSupport::empty(ring, vertices));
    for (f, p) in parts.iter().zip(&c.parts) {
        if f.vertex_count() != p.members.len() {
            return Err(Error::DimensionMismatch("filtration does not match its part".into()));
        }
        let embed = |s: &QSupport<R>| {
            let mut out = vec![SpClosedSet::empty(ring); vertices];
            for (k, &v) in p.members.iter().enumerate() {
                out[v] = s.part(k).clone();
            }
            QSupport::new(ring, out).expect("one ring")
        };
        let lifted = Filtration::from_chain(ring, vertices, f.chain().map(embed))?;
        acc = acc.union(&lifted)?;
    }
    Ok(acc)
}
