//! Representations, bounded complexes and the homological operations on them.

mod complex;
mod functors;
mod hom;
mod koszul;
mod representation;
mod resolution;
mod signature;
mod tensor;

use std::sync::Arc;

pub use complex::{ChainMap, ComplexR, ComplexRQ};
pub use functors::{eval_vertex, extend_by_zero, i_times, kan_extend, module_complex, restrict_to_subquiver, KanDirection};
pub use hom::{chom_formula, evaluation_map, internal_hom, is_rigid, rigidity_report, unit_complex, RigidityReport};
pub use koszul::koszul_complex;
pub use representation::{RepMorphism, Representation};
pub use resolution::projective_resolution;
pub use signature::{homology_equivalent, HomologySignature, PathInvariant};
pub use tensor::{box_tensor, box_tensor_termwise};


use crate::error::Result;
use crate::quiver::{Quiver, VertexSet};
use crate::ring::Ring;

/// `U` in degree 0.
pub fn unit<R: Ring>(q: &Arc<Quiver>, ring: &R) -> ComplexRQ<R> {
    ComplexRQ::stalk(Representation::unit(q.clone(), ring), 0)
}

/// `U(i)` in degree 0.
pub fn vertex_simple<R: Ring>(q: &Arc<Quiver>, ring: &R, i: usize) -> Result<ComplexRQ<R>> {
    Ok(ComplexRQ::stalk(Representation::vertex_simple(q.clone(), ring, i)?, 0))
}

/// `P(i)` in degree 0.
pub fn projective<R: Ring>(q: &Arc<Quiver>, ring: &R, i: usize) -> Result<ComplexRQ<R>> {
    Ok(ComplexRQ::stalk(Representation::projective(q.clone(), ring, i)?, 0))
}

/// Unit restriction to `s` in degree 0.
pub fn unit_restriction<R: Ring>(q: &Arc<Quiver>, ring: &R, s: &VertexSet) -> Result<ComplexRQ<R>> {
    Ok(ComplexRQ::stalk(Representation::unit_restriction(q.clone(), ring, s)?, 0))
}

/// `i_x K((g_1, ..., g_k))`.
pub fn koszul_at<R: Ring>(q: &Arc<Quiver>, ring: &R, i: usize, gens: &[R::Elem]) -> Result<ComplexRQ<R>> {
    i_times(&koszul_complex(ring, gens)?, q, i)
}

/// The cone of multiplication by `r` on `x`.
pub fn cone_of_scalar<R: Ring>(x: &ComplexRQ<R>, r: &R::Elem) -> ComplexRQ<R> {
    let ring = x.ring();
    let components = x
        .terms()
        .iter()
        .map(|t| t.modules().iter().map(|m| crate::linalg::Matrix::identity(ring, m.gens()).scale(r)).collect())
        .collect();
    ChainMap { source: x.clone(), target: x.clone(), components }.cone()
}
