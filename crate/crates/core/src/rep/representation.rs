use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{FgModule, Matrix, Subquotient};
use crate::quiver::{Quiver, VertexSet};
use crate::ring::Ring;

/// A representation: a finitely presented module at each vertex and, for
/// each arrow, a matrix on the chosen generators.
#[derive(Clone, PartialEq, Eq)]
pub struct Representation<R: Ring> {
    quiver: Arc<Quiver>,
    ring: R,
    modules: Vec<FgModule<R>>,
    maps: Vec<Matrix<R>>,
}

impl<R: Ring> fmt::Debug for Representation<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{{")?;
        for (i, m) in self.modules.iter().enumerate() {
            write!(f, "{}: {:?}; ", self.quiver.vertex_name(i), m)?;
        }
        for (a, m) in self.maps.iter().enumerate() {
            write!(f, "{}: {}; ", self.quiver.arrow(a).name, m)?;
        }
        write!(f, "}}")
    }
}

impl<R: Ring> Representation<R> {
    /// Validates shapes and that arrow maps respect the presentations.
    pub fn new(quiver: Arc<Quiver>, ring: &R, modules: Vec<FgModule<R>>, maps: Vec<Matrix<R>>) -> Result<Self> {
        let rep = Self::new_unchecked(quiver, ring, modules, maps);
        rep.validate()?;
        Ok(rep)
    }

    pub(crate) fn new_unchecked(quiver: Arc<Quiver>, ring: &R, modules: Vec<FgModule<R>>, maps: Vec<Matrix<R>>) -> Self {
        Representation { quiver, ring: ring.clone(), modules, maps }
    }

    pub fn validate(&self) -> Result<()> {
        let q = &self.quiver;
        if self.modules.len() != q.vertex_count() || self.maps.len() != q.arrows().len() {
            return Err(Error::DimensionMismatch("representation size does not match quiver".into()));
        }
        for m in &self.modules {
            if m.ring() != &self.ring {
                return Err(Error::RingMismatch("vertex module over another ring".into()));
            }
        }
        for (a, arrow) in q.arrows().iter().enumerate() {
            let m = &self.maps[a];
            let (s, t) = (&self.modules[arrow.source], &self.modules[arrow.target]);
            if m.shape() != (t.gens(), s.gens()) {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} has shape {:?}, expected {:?}",
                    arrow.name,
                    m.shape(),
                    (t.gens(), s.gens())
                )));
            }
            if !t.is_zero_map(&m.mul(&s.full_relations())) {
                return Err(Error::Invalid(format!("arrow {} does not respect relations", arrow.name)));
            }
        }
        Ok(())
    }

    /// Free modules of the given ranks with the given arrow matrices.
    pub fn free(quiver: Arc<Quiver>, ring: &R, ranks: &[usize], maps: Vec<Matrix<R>>) -> Result<Self> {
        let modules = ranks.iter().map(|&r| FgModule::free(ring, r)).collect();
        Self::new(quiver, ring, modules, maps)
    }

    pub fn zero(quiver: Arc<Quiver>, ring: &R) -> Self {
        let modules = vec![FgModule::zero(ring); quiver.vertex_count()];
        let maps = vec![Matrix::zeros(ring, 0, 0); quiver.arrows().len()];
        Representation { quiver, ring: ring.clone(), modules, maps }
    }

    /// `R` on the vertices of `s`, identities on arrows inside `s`.
    pub fn unit_restriction(quiver: Arc<Quiver>, ring: &R, s: &VertexSet) -> Result<Self> {
        for &v in &s.members {
            quiver.check_vertex(v)?;
        }
        let ranks: Vec<usize> = (0..quiver.vertex_count()).map(|v| usize::from(s.contains(v))).collect();
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| {
                let (rs, rt) = (ranks[a.source], ranks[a.target]);
                if rs == 1 && rt == 1 {
                    Matrix::identity(ring, 1)
                } else {
                    Matrix::zeros(ring, rt, rs)
                }
            })
            .collect();
        Self::free(quiver, ring, &ranks, maps)
    }

    /// The tensor unit `U`.
    pub fn unit(quiver: Arc<Quiver>, ring: &R) -> Self {
        let all = VertexSet::all(&quiver);
        Self::unit_restriction(quiver, ring, &all).expect("valid")
    }

    /// `U(i)`: `R` at `i`, zero elsewhere.
    pub fn vertex_simple(quiver: Arc<Quiver>, ring: &R, i: usize) -> Result<Self> {
        Self::unit_restriction(quiver, ring, &VertexSet::single(i))
    }

    /// `P(i)`: free on paths from `i`, arrows act by appending.
    pub fn projective(quiver: Arc<Quiver>, ring: &R, i: usize) -> Result<Self> {
        quiver.check_vertex(i)?;
        let q = &quiver;
        let ranks: Vec<usize> = (0..q.vertex_count()).map(|k| q.paths(i, k).len()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(b, a)| {
                let mut m = Matrix::zeros(ring, ranks[a.target], ranks[a.source]);
                for (c, w) in q.paths(i, a.source).iter().enumerate() {
                    let mut ext = w.clone();
                    ext.push(b);
                    m.set(q.path_position(i, a.target, &ext), c, ring.one());
                }
                m
            })
            .collect();
        Self::free(quiver.clone(), ring, &ranks, maps)
    }

    /// The map `P(i) -> P(j)` sending `e_i` to `sum c_w w` over paths
    /// `w: j ~> i`, listed in [`Quiver::paths`] order.
    pub fn projective_map(quiver: &Quiver, ring: &R, i: usize, j: usize, coeffs: &[R::Elem]) -> Vec<Matrix<R>> {
        let q = quiver;
        let ws = q.paths(j, i);
        assert_eq!(ws.len(), coeffs.len(), "one coefficient per path");
        (0..q.vertex_count())
            .map(|k| {
                let src = q.paths(i, k);
                let tgt = q.paths(j, k);
                let mut m = Matrix::zeros(ring, tgt.len(), src.len());
                for (c, pi) in src.iter().enumerate() {
                    for (w, coef) in ws.iter().zip(coeffs) {
                        if ring.is_zero(coef) {
                            continue;
                        }
                        let mut comp = w.clone();
                        comp.extend_from_slice(pi);
                        let r = q.path_position(j, k, &comp);
                        let v = ring.add(m.get(r, c), coef);
                        m.set(r, c, v);
                    }
                }
                m
            })
            .collect()
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn module(&self, i: usize) -> &FgModule<R> {
        &self.modules[i]
    }

    pub fn modules(&self) -> &[FgModule<R>] {
        &self.modules
    }

    pub fn map(&self, a: usize) -> &Matrix<R> {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[Matrix<R>] {
        &self.maps
    }

    /// Generator counts per vertex.
    pub fn dims(&self) -> Vec<usize> {
        self.modules.iter().map(FgModule::gens).collect()
    }

    pub fn total_gens(&self) -> usize {
        self.modules.iter().map(FgModule::gens).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.modules.iter().all(FgModule::is_zero)
    }

    /// Matrix of the composite along a path starting at `i`.
    pub fn path_map(&self, i: usize, path: &[usize]) -> Matrix<R> {
        let mut m = Matrix::identity(&self.ring, self.modules[i].gens());
        for &a in path {
            m = self.maps[a].mul(&m);
        }
        m
    }

    pub fn is_vertexwise_projective(&self) -> bool {
        self.modules.iter().all(FgModule::is_projective)
    }

    pub fn is_vertexwise_free_presented(&self) -> bool {
        self.modules.iter().all(FgModule::is_free_presented)
    }

    /// Projectivity over the path algebra: each vertex module projective and,
    /// at every vertex `k`, the map from the sum over incoming arrows is a
    /// split monomorphism (injective with projective cokernel).
    pub fn is_projective(&self) -> bool {
        if !self.is_vertexwise_projective() {
            return false;
        }
        let q = &self.quiver;
        (0..q.vertex_count()).all(|k| {
            let incoming: Vec<usize> = (0..q.arrows().len()).filter(|&a| q.arrow(a).target == k).collect();
            if incoming.is_empty() {
                return true;
            }
            let parts: Vec<&FgModule<R>> = incoming.iter().map(|&a| &self.modules[q.arrow(a).source]).collect();
            let dom = FgModule::direct_sum_all(&self.ring, &parts);
            let blocks: Vec<&Matrix<R>> = incoming.iter().map(|&a| &self.maps[a]).collect();
            let tgt = &self.modules[k];
            let m = Matrix::hstack(&self.ring, tgt.gens(), &blocks);
            let kernel = Subquotient::kernel_mod(&m, &tgt.full_relations(), &dom.full_relations());
            if !kernel.module().is_zero() {
                return false;
            }
            let coker = FgModule::new(Matrix::hstack(&self.ring, tgt.gens(), &[&m, tgt.relations()]));
            coker.is_projective()
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let modules = self.modules.iter().zip(&other.modules).map(|(a, b)| a.direct_sum(b)).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| Matrix::block_diag(&self.ring, &[a, b]))
            .collect();
        Representation { quiver: self.quiver.clone(), ring: self.ring.clone(), modules, maps }
    }

    /// Vertexwise tensor product `X (x) Y` with Kronecker arrow maps.
    pub fn tensor(&self, other: &Self) -> Self {
        let modules = self.modules.iter().zip(&other.modules).map(|(a, b)| a.tensor(b)).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.kron(b)).collect();
        Representation { quiver: self.quiver.clone(), ring: self.ring.clone(), modules, maps }
    }

    /// Each vertex module in canonical presentation, with the per-vertex
    /// coordinate changes `(to, from)`.
    pub fn canonicalized(&self) -> (Self, Vec<Matrix<R>>, Vec<Matrix<R>>) {
        let mut modules = Vec::new();
        let mut to = Vec::new();
        let mut from = Vec::new();
        for m in &self.modules {
            let (c, t, f) = m.canonical_form();
            modules.push(c);
            to.push(t);
            from.push(f);
        }
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| to[a.target].mul(m).mul(&from[a.source]).reduced())
            .collect();
        (Representation { quiver: self.quiver.clone(), ring: self.ring.clone(), modules, maps }, to, from)
    }

    /// Same data over another ring via an entry map (for base change).
    pub fn map_ring<S: Ring>(&self, ring: &S, f: &impl Fn(&R::Elem) -> S::Elem) -> Representation<S> {
        Representation {
            quiver: self.quiver.clone(),
            ring: ring.clone(),
            modules: self.modules.iter().map(|m| FgModule::new(m.relations().map_ring(ring, f))).collect(),
            maps: self.maps.iter().map(|m| m.map_ring(ring, f)).collect(),
        }
    }

    /// Same modules and maps over a quiver with identical vertex and arrow
    /// structure (used to move between a quiver and a relabelled copy).
    pub(crate) fn with_quiver(&self, quiver: Arc<Quiver>) -> Self {
        Representation { quiver, ring: self.ring.clone(), modules: self.modules.clone(), maps: self.maps.clone() }
    }
}

/// A morphism of representations, given by one matrix per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMorphism<R: Ring> {
    pub source: Representation<R>,
    pub target: Representation<R>,
    pub maps: Vec<Matrix<R>>,
}

impl<R: Ring> RepMorphism<R> {
    /// Validates shapes, well-definedness and naturality.
    pub fn new(source: Representation<R>, target: Representation<R>, maps: Vec<Matrix<R>>) -> Result<Self> {
        let f = RepMorphism { source, target, maps };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        let q = self.source.quiver().clone();
        if self.maps.len() != q.vertex_count() {
            return Err(Error::DimensionMismatch("one matrix per vertex".into()));
        }
        for (i, m) in self.maps.iter().enumerate() {
            let (s, t) = (self.source.module(i), self.target.module(i));
            if m.shape() != (t.gens(), s.gens()) {
                return Err(Error::DimensionMismatch(format!("component at {}", q.vertex_name(i))));
            }
            if !t.is_zero_map(&m.mul(&s.full_relations())) {
                return Err(Error::Invalid(format!("component at {} is not well defined", q.vertex_name(i))));
            }
        }
        for (a, arrow) in q.arrows().iter().enumerate() {
            let lhs = self.maps[arrow.target].mul(self.source.map(a));
            let rhs = self.target.map(a).mul(&self.maps[arrow.source]);
            if !self.target.module(arrow.target).maps_equal(&lhs, &rhs) {
                return Err(Error::Invalid(format!("naturality fails at arrow {}", arrow.name)));
            }
        }
        Ok(())
    }
}
