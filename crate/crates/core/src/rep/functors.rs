//! Vertex evaluation, Kan extensions, `i_x`, restriction to full subquivers
//! and extension by zero.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{FgModule, Matrix};
use crate::quiver::Quiver;
use crate::ring::Ring;

use super::{ComplexR, ComplexRQ, Representation};

/// Which Kan extension along the inclusion of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KanDirection {
    Left,
    Right,
}

fn same_quiver<R: Ring>(x: &ComplexRQ<R>, y: &ComplexRQ<R>) -> Result<()> {
    if x.ring() != y.ring() {
        return Err(Error::RingMismatch(format!("{} vs {}", x.ring().descriptor(), y.ring().descriptor())));
    }
    if x.quiver() != y.quiver() {
        return Err(Error::Invalid("complexes over different quivers".into()));
    }
    Ok(())
}

pub(crate) fn check_compatible<R: Ring>(x: &ComplexRQ<R>, y: &ComplexRQ<R>) -> Result<()> {
    same_quiver(x, y)
}

/// `i^* X`: the complex of modules at vertex `i`.
pub fn eval_vertex<R: Ring>(x: &ComplexRQ<R>, i: usize) -> Result<ComplexR<R>> {
    x.quiver().check_vertex(i)?;
    let pt = Arc::new(Quiver::point());
    let ring = x.ring();
    let Some((lo, hi)) = x.range() else { return Ok(ComplexRQ::zero(pt, ring)) };
    let terms = (lo..=hi)
        .map(|n| Representation::new_unchecked(pt.clone(), ring, vec![x.vertex_module(n, i)], Vec::new()))
        .collect();
    let diffs = (lo..hi).map(|n| vec![x.diff(n, i)]).collect();
    Ok(ComplexRQ::new_unchecked(pt, ring, lo, terms, diffs))
}

fn check_point<R: Ring>(m: &ComplexR<R>) -> Result<()> {
    if m.quiver().vertex_count() != 1 || !m.quiver().arrows().is_empty() {
        return Err(Error::Invalid("expected a complex over the one-vertex quiver".into()));
    }
    Ok(())
}

/// Repeats a module: `copies` copies, block-diagonal relations.
fn copies<R: Ring>(ring: &R, m: &FgModule<R>, copies: usize) -> FgModule<R> {
    FgModule::new(Matrix::identity(ring, copies).kron(m.relations()))
}

/// `i_! M` (left) or `i_* M` (right) along the inclusion of vertex `i`.
///
/// Left: `(i_! M)_j` is a copy of `M` per path `i ~> j`; an arrow `b` sends
/// copy `w` to copy `w b`. Right: `(i_* M)_j` is a copy per path `j ~> i`;
/// the component `w'` of the image under `b: j -> l` is the input component
/// `b w'`.
pub fn kan_extend<R: Ring>(m: &ComplexR<R>, q: &Arc<Quiver>, i: usize, dir: KanDirection) -> Result<ComplexRQ<R>> {
    check_point(m)?;
    q.check_vertex(i)?;
    let ring = m.ring();
    let Some((lo, hi)) = m.range() else { return Ok(ComplexRQ::zero(q.clone(), ring)) };
    let paths_at = |k: usize| -> Vec<Vec<usize>> {
        match dir {
            KanDirection::Left => q.paths(i, k).to_vec(),
            KanDirection::Right => q.paths(k, i).to_vec(),
        }
    };
    let terms: Vec<Representation<R>> = (lo..=hi)
        .map(|n| {
            let base = m.vertex_module(n, 0);
            let g = base.gens();
            let modules = (0..q.vertex_count()).map(|k| copies(ring, &base, paths_at(k).len())).collect();
            let maps = q
                .arrows()
                .iter()
                .enumerate()
                .map(|(b, a)| {
                    let src = paths_at(a.source);
                    let tgt = paths_at(a.target);
                    let mut mat = Matrix::zeros(ring, tgt.len() * g, src.len() * g);
                    let id = Matrix::identity(ring, g);
                    match dir {
                        KanDirection::Left => {
                            for (c, w) in src.iter().enumerate() {
                                let mut ext = w.clone();
                                ext.push(b);
                                let r = tgt.iter().position(|p| *p == ext).expect("extended path");
                                mat.set_block(r * g, c * g, &id);
                            }
                        }
                        KanDirection::Right => {
                            for (r, w) in tgt.iter().enumerate() {
                                let mut ext = vec![b];
                                ext.extend_from_slice(w);
                                let c = src.iter().position(|p| *p == ext).expect("prefixed path");
                                mat.set_block(r * g, c * g, &id);
                            }
                        }
                    }
                    mat
                })
                .collect();
            Representation::new_unchecked(q.clone(), ring, modules, maps)
        })
        .collect();
    let diffs = (lo..hi)
        .map(|n| {
            let d = m.diff(n, 0);
            (0..q.vertex_count()).map(|k| Matrix::identity(ring, paths_at(k).len()).kron(&d)).collect()
        })
        .collect();
    Ok(ComplexRQ::new_unchecked(q.clone(), ring, lo, terms, diffs))
}

/// `i_x M`: `M` at vertex `i`, zero elsewhere and on every arrow.
pub fn i_times<R: Ring>(m: &ComplexR<R>, q: &Arc<Quiver>, i: usize) -> Result<ComplexRQ<R>> {
    check_point(m)?;
    q.check_vertex(i)?;
    let members: BTreeSet<usize> = [i].into();
    let (sub, _) = q.full_subquiver(&members);
    extend_by_zero(&m.with_quiver(Arc::new(sub)), q, &members)
}

/// Restriction to the full subquiver on `members` (vertices renumbered in
/// increasing order).
pub fn restrict_to_subquiver<R: Ring>(x: &ComplexRQ<R>, members: &BTreeSet<usize>) -> Result<ComplexRQ<R>> {
    let q = x.quiver();
    for &v in members {
        q.check_vertex(v)?;
    }
    let (sub, map) = q.full_subquiver(members);
    let sub = Arc::new(sub);
    let ring = x.ring();
    let old: Vec<usize> = members.iter().copied().collect();
    let inner: Vec<usize> = q
        .arrows()
        .iter()
        .enumerate()
        .filter(|(_, a)| map[a.source].is_some() && map[a.target].is_some())
        .map(|(k, _)| k)
        .collect();
    let Some((lo, hi)) = x.range() else { return Ok(ComplexRQ::zero(sub, ring)) };
    let terms = (lo..=hi)
        .map(|n| {
            let t = x.term_or_zero(n);
            let modules = old.iter().map(|&v| t.module(v).clone()).collect();
            let maps = inner.iter().map(|&a| t.map(a).clone()).collect();
            Representation::new_unchecked(sub.clone(), ring, modules, maps)
        })
        .collect();
    let diffs = (lo..hi).map(|n| old.iter().map(|&v| x.diff(n, v)).collect()).collect();
    Ok(ComplexRQ::new_unchecked(sub, ring, lo, terms, diffs))
}

/// Extension by zero from the full subquiver on `members` to `q`: arrows
/// inside keep their maps, all others are zero.
pub fn extend_by_zero<R: Ring>(x: &ComplexRQ<R>, q: &Arc<Quiver>, members: &BTreeSet<usize>) -> Result<ComplexRQ<R>> {
    for &v in members {
        q.check_vertex(v)?;
    }
    let (sub, map) = q.full_subquiver(members);
    if x.quiver().vertex_count() != sub.vertex_count() || x.quiver().arrows().len() != sub.arrows().len() {
        return Err(Error::Invalid("complex is not over the given full subquiver".into()));
    }
    let ring = x.ring();
    let Some((lo, hi)) = x.range() else { return Ok(ComplexRQ::zero(q.clone(), ring)) };
    let terms = (lo..=hi)
        .map(|n| {
            let t = x.term_or_zero(n);
            let modules: Vec<FgModule<R>> = (0..q.vertex_count())
                .map(|v| map[v].map_or_else(|| FgModule::zero(ring), |k| t.module(k).clone()))
                .collect();
            let mut inner = 0;
            let maps = q
                .arrows()
                .iter()
                .map(|a| match (map[a.source], map[a.target]) {
                    (Some(_), Some(_)) => {
                        inner += 1;
                        t.map(inner - 1).clone()
                    }
                    _ => Matrix::zeros(ring, modules[a.target].gens(), modules[a.source].gens()),
                })
                .collect();
            Representation::new_unchecked(q.clone(), ring, modules, maps)
        })
        .collect();
    let diffs = (lo..hi)
        .map(|n| {
            (0..q.vertex_count())
                .map(|v| match map[v] {
                    Some(k) => x.diff(n, k),
                    None => Matrix::zeros(ring, 0, 0),
                })
                .collect()
        })
        .collect();
    Ok(ComplexRQ::new_unchecked(q.clone(), ring, lo, terms, diffs))
}

/// A single module (over the one-vertex quiver) in degree 0.
pub fn module_complex<R: Ring>(ring: &R, m: FgModule<R>) -> ComplexR<R> {
    let pt = Arc::new(Quiver::point());
    ComplexRQ::stalk(Representation::new_unchecked(pt, ring, vec![m], Vec::new()), 0)
}
