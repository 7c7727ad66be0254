use crate::linalg::{ElementaryDivisors, FgModule, Matrix, Subquotient};
use crate::ring::Ring;

use super::{ComplexRQ, Representation};

/// Invariants of one path map `H_i -> H_k` of a homology representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathInvariant<R: Ring> {
    pub from: usize,
    pub to: usize,
    pub path: usize,
    pub kernel: ElementaryDivisors<R>,
    pub cokernel: ElementaryDivisors<R>,
}

/// Isomorphism invariants of the homology of a complex: per degree, the
/// invariant factors at each vertex and of kernels and cokernels of every
/// path map. Equal signatures are necessary for quasi-isomorphism; over a
/// field on a linearly oriented `A_n` they are also sufficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologySignature<R: Ring> {
    pub degrees: Vec<(i64, Vec<ElementaryDivisors<R>>, Vec<PathInvariant<R>>)>,
}

pub(crate) fn rep_invariants<R: Ring>(h: &Representation<R>) -> (Vec<ElementaryDivisors<R>>, Vec<PathInvariant<R>>) {
    let q = h.quiver();
    let ring = h.ring();
    let vertex = h.modules().iter().map(|m| m.divisors().clone()).collect();
    let mut paths = Vec::new();
    for i in 0..q.vertex_count() {
        for k in 0..q.vertex_count() {
            if i == k {
                continue;
            }
            for (pi, p) in q.paths(i, k).iter().enumerate() {
                let m = h.path_map(i, p);
                let (src, tgt) = (h.module(i), h.module(k));
                let kernel = Subquotient::kernel_mod(&m, &tgt.full_relations(), &src.full_relations())
                    .module()
                    .divisors()
                    .clone();
                let cokernel = FgModule::new(Matrix::hstack(ring, tgt.gens(), &[&m, tgt.relations()])).divisors().clone();
                paths.push(PathInvariant { from: i, to: k, path: pi, kernel, cokernel });
            }
        }
    }
    (vertex, paths)
}

impl<R: Ring> HomologySignature<R> {
    pub fn of(x: &ComplexRQ<R>) -> Self {
        let mut degrees = Vec::new();
        if let Some((lo, hi)) = x.range() {
            for n in lo..=hi {
                let h = x.homology(n);
                if h.is_zero() {
                    continue;
                }
                let (v, p) = rep_invariants(&h);
                degrees.push((n, v, p));
            }
        }
        HomologySignature { degrees }
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// Necessary condition for `x` and `y` to be quasi-isomorphic (sufficient
/// over a field on a linearly oriented `A_n`).
pub fn homology_equivalent<R: Ring>(x: &ComplexRQ<R>, y: &ComplexRQ<R>) -> bool {
    HomologySignature::of(x) == HomologySignature::of(y)
}
