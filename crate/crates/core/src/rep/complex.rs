use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linalg::{FgModule, Matrix, Subquotient};
use crate::quiver::Quiver;
use crate::ring::Ring;

use super::Representation;

/// Bounded complex of representations, cohomologically graded:
/// `d^n: X^n -> X^{n+1}`.
///
/// Terms sit in degrees `lo ..= lo + terms.len() - 1`; the zero complex has no
/// terms.
#[derive(Clone)]
pub struct ComplexRQ<R: Ring> {
    quiver: Arc<Quiver>,
    ring: R,
    lo: i64,
    terms: Vec<Representation<R>>,
    /// `diffs[k][v]`: the differential from `terms[k]` to `terms[k + 1]` at
    /// vertex `v`.
    diffs: Vec<Vec<Matrix<R>>>,
    perfect: OnceLock<bool>,
}

impl<R: Ring> PartialEq for ComplexRQ<R> {
    fn eq(&self, other: &Self) -> bool {
        let a = self.trimmed();
        let b = other.trimmed();
        a.quiver == b.quiver && a.ring == b.ring && a.terms == b.terms && a.diffs == b.diffs && (a.terms.is_empty() || a.lo == b.lo)
    }
}

impl<R: Ring> fmt::Debug for ComplexRQ<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Complex over {} from degree {}", self.ring.descriptor(), self.lo)?;
        for (k, t) in self.terms.iter().enumerate() {
            writeln!(f, "  [{}] {:?}", self.lo + k as i64, t)?;
            if let Some(d) = self.diffs.get(k) {
                writeln!(f, "    d = {:?}", d)?;
            }
        }
        Ok(())
    }
}

/// A complex over the one-vertex quiver, i.e. a complex of modules.
pub type ComplexR<R> = ComplexRQ<R>;

impl<R: Ring> ComplexRQ<R> {
    /// Validates shapes, naturality of each differential and `d^2 = 0`.
    pub fn new(
        quiver: Arc<Quiver>,
        ring: &R,
        lo: i64,
        terms: Vec<Representation<R>>,
        diffs: Vec<Vec<Matrix<R>>>,
    ) -> Result<Self> {
        let c = Self::new_unchecked(quiver, ring, lo, terms, diffs);
        c.validate()?;
        Ok(c)
    }

    pub(crate) fn new_unchecked(
        quiver: Arc<Quiver>,
        ring: &R,
        lo: i64,
        terms: Vec<Representation<R>>,
        diffs: Vec<Vec<Matrix<R>>>,
    ) -> Self {
        let diffs = diffs.into_iter().map(|d| d.into_iter().map(|m| m.reduced()).collect()).collect();
        ComplexRQ { quiver, ring: ring.clone(), lo, terms, diffs, perfect: OnceLock::new() }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.terms.len();
        if self.diffs.len() != n.saturating_sub(1) {
            return Err(Error::DimensionMismatch("one differential between consecutive terms".into()));
        }
        for t in &self.terms {
            if t.quiver() != &self.quiver {
                return Err(Error::Invalid("term over another quiver".into()));
            }
            if t.ring() != &self.ring {
                return Err(Error::RingMismatch("term over another ring".into()));
            }
            t.validate()?;
        }
        for k in 0..self.diffs.len() {
            super::RepMorphism::new(self.terms[k].clone(), self.terms[k + 1].clone(), self.diffs[k].clone())
                .map_err(|e| Error::Invalid(format!("differential in degree {}: {e}", self.lo + k as i64)))?;
        }
        for k in 0..self.diffs.len().saturating_sub(1) {
            for v in 0..self.quiver.vertex_count() {
                let dd = self.diffs[k + 1][v].mul(&self.diffs[k][v]);
                if !self.terms[k + 2].module(v).is_zero_map(&dd) {
                    return Err(Error::Invalid(format!(
                        "d^2 != 0 in degree {} at vertex {}",
                        self.lo + k as i64,
                        self.quiver.vertex_name(v)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(quiver: Arc<Quiver>, ring: &R) -> Self {
        Self::new_unchecked(quiver, ring, 0, Vec::new(), Vec::new())
    }

    /// A representation concentrated in one degree.
    pub fn stalk(rep: Representation<R>, degree: i64) -> Self {
        let q = rep.quiver().clone();
        let ring = rep.ring().clone();
        Self::new_unchecked(q, &ring, degree, vec![rep], Vec::new())
    }

    /// Two-term complex `source -> target` with `source` in degree `lo`.
    pub fn two_term(source: Representation<R>, target: Representation<R>, d: Vec<Matrix<R>>, lo: i64) -> Result<Self> {
        let q = source.quiver().clone();
        let ring = source.ring().clone();
        Self::new(q, &ring, lo, vec![source, target], vec![d])
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// `(lo, hi)`, or `None` for the complex with no terms.
    pub fn range(&self) -> Option<(i64, i64)> {
        (!self.terms.is_empty()).then(|| (self.lo, self.lo + self.terms.len() as i64 - 1))
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn terms(&self) -> &[Representation<R>] {
        &self.terms
    }

    pub fn term(&self, n: i64) -> Option<&Representation<R>> {
        let k = n - self.lo;
        (k >= 0).then(|| self.terms.get(k as usize)).flatten()
    }

    pub fn term_or_zero(&self, n: i64) -> Representation<R> {
        self.term(n)
            .cloned()
            .unwrap_or_else(|| Representation::zero(self.quiver.clone(), &self.ring))
    }

    /// `d^n` at vertex `v`, zero when either end is missing.
    pub fn diff(&self, n: i64, v: usize) -> Matrix<R> {
        let k = n - self.lo;
        if k >= 0 && (k as usize) < self.diffs.len() {
            return self.diffs[k as usize][v].clone();
        }
        let rows = self.term(n + 1).map_or(0, |t| t.module(v).gens());
        let cols = self.term(n).map_or(0, |t| t.module(v).gens());
        Matrix::zeros(&self.ring, rows, cols)
    }

    pub fn diffs(&self) -> &[Vec<Matrix<R>>] {
        &self.diffs
    }

    /// Drops terms with no generators at either end.
    pub fn trimmed(&self) -> Self {
        let empty = |t: &Representation<R>| t.total_gens() == 0;
        let mut a = 0;
        let mut b = self.terms.len();
        while a < b && empty(&self.terms[a]) {
            a += 1;
        }
        while b > a && empty(&self.terms[b - 1]) {
            b -= 1;
        }
        if a == b {
            return Self::zero(self.quiver.clone(), &self.ring);
        }
        let terms = self.terms[a..b].to_vec();
        let diffs = self.diffs[a..b - 1].to_vec();
        Self::new_unchecked(self.quiver.clone(), &self.ring, self.lo + a as i64, terms, diffs)
    }

    /// Every term is projective over the path algebra.
    pub fn is_perfect(&self) -> bool {
        *self.perfect.get_or_init(|| self.terms.iter().all(Representation::is_projective))
    }

    /// Every term has projective vertex modules.
    pub fn is_vertexwise_projective(&self) -> bool {
        self.terms.iter().all(Representation::is_vertexwise_projective)
    }

    /// Compact in the derived category: perfect, or termwise finitely presented
    /// over a regular ring of the tier, or vertexwise projective.
    pub fn is_compact(&self) -> bool {
        self.ring.modulus().is_none() || self.ring.is_field() || self.is_vertexwise_projective() || self.is_perfect()
    }

    /// Errors with `NotPerfect` unless the complex is compact.
    pub fn require_compact(&self, what: &str) -> Result<()> {
        if self.is_compact() {
            Ok(())
        } else {
            Err(Error::NotPerfect(format!("{what}: complex is not compact (resolve it first)")))
        }
    }

    pub fn require_perfect(&self, what: &str) -> Result<()> {
        if self.is_perfect() {
            Ok(())
        } else {
            Err(Error::NotPerfect(format!("{what}: terms are not projective over the path algebra")))
        }
    }

    /// `X[k]`: `(X[k])^n = X^{n+k}`, differential scaled by `(-1)^k`.
    pub fn shift(&self, k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 1 { self.ring.from_i64(-1) } else { self.ring.one() };
        let diffs = self.diffs.iter().map(|d| d.iter().map(|m| m.scale(&sign)).collect()).collect();
        Self::new_unchecked(self.quiver.clone(), &self.ring, self.lo - k, self.terms.clone(), diffs)
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let (Some((a0, a1)), Some((b0, b1))) = (self.range(), other.range()) else {
            return if self.terms.is_empty() { other.clone() } else { self.clone() };
        };
        let (lo, hi) = (a0.min(b0), a1.max(b1));
        let terms = (lo..=hi).map(|n| self.term_or_zero(n).direct_sum(&other.term_or_zero(n))).collect();
        let diffs = (lo..hi)
            .map(|n| {
                (0..self.quiver.vertex_count())
                    .map(|v| Matrix::block_diag(&self.ring, &[&self.diff(n, v), &other.diff(n, v)]))
                    .collect()
            })
            .collect();
        Self::new_unchecked(self.quiver.clone(), &self.ring, lo, terms, diffs)
    }

    /// Vertex modules in canonical presentation.
    pub fn canonicalized(&self) -> Self {
        let parts: Vec<_> = self.terms.iter().map(Representation::canonicalized).collect();
        let diffs = (0..self.diffs.len())
            .map(|k| {
                (0..self.quiver.vertex_count())
                    .map(|v| parts[k + 1].1[v].mul(&self.diffs[k][v]).mul(&parts[k].2[v]))
                    .collect()
            })
            .collect();
        let terms = parts.into_iter().map(|p| p.0).collect();
        Self::new_unchecked(self.quiver.clone(), &self.ring, self.lo, terms, diffs)
    }

    /// `ker d^n / im d^{n-1}` at vertex `v`, as a subquotient of `X^n_v`.
    pub fn vertex_homology(&self, n: i64, v: usize) -> Subquotient<R> {
        let ring = &self.ring;
        let Some(t) = self.term(n) else {
            return Subquotient::new(&Matrix::zeros(ring, 0, 0), &Matrix::zeros(ring, 0, 0));
        };
        let m = t.module(v);
        let num = match self.term(n + 1) {
            Some(next) => crate::linalg::preimage(&self.diff(n, v), &next.module(v).full_relations()),
            None => Matrix::identity(ring, m.gens()),
        };
        let den = Matrix::hstack(ring, m.gens(), &[&m.full_relations(), &self.diff(n - 1, v)]);
        Subquotient::new(&num, &den)
    }

    /// `H^n` as a representation, with induced arrow maps.
    pub fn homology(&self, n: i64) -> Representation<R> {
        let q = &self.quiver;
        let sqs: Vec<Subquotient<R>> = (0..q.vertex_count()).map(|v| self.vertex_homology(n, v)).collect();
        let modules = sqs.iter().map(|s| s.module().clone()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| match self.term(n) {
                Some(t) => {
                    let images = t.map(a).mul(sqs[arrow.source].generators());
                    sqs[arrow.target].coords_matrix(&images)
                }
                None => Matrix::zeros(&self.ring, 0, 0),
            })
            .collect();
        Representation::new_unchecked(q.clone(), &self.ring, modules, maps)
    }

    /// Whether `H^n` vanishes at every vertex and degree.
    pub fn is_acyclic(&self) -> bool {
        let Some((lo, hi)) = self.range() else { return true };
        (lo..=hi).all(|n| (0..self.quiver.vertex_count()).all(|v| self.vertex_homology(n, v).module().is_zero()))
    }

    /// Degrees with nonzero homology somewhere.
    pub fn homology_degrees(&self) -> Vec<i64> {
        let Some((lo, hi)) = self.range() else { return Vec::new() };
        (lo..=hi)
            .filter(|&n| (0..self.quiver.vertex_count()).any(|v| !self.vertex_homology(n, v).module().is_zero()))
            .collect()
    }

    /// The same complex over another ring via an entry map.
    pub fn map_ring<S: Ring>(&self, ring: &S, f: impl Fn(&R::Elem) -> S::Elem) -> ComplexRQ<S> {
        let terms = self.terms.iter().map(|t| t.map_ring(ring, &f)).collect();
        let diffs = self.diffs.iter().map(|d| d.iter().map(|m| m.map_ring(ring, &f)).collect()).collect();
        ComplexRQ::new_unchecked(self.quiver.clone(), ring, self.lo, terms, diffs)
    }

    pub(crate) fn with_quiver(&self, quiver: Arc<Quiver>) -> Self {
        let terms = self.terms.iter().map(|t| t.with_quiver(quiver.clone())).collect();
        Self::new_unchecked(quiver, &self.ring, self.lo, terms, self.diffs.clone())
    }

    /// Generator counts per degree and vertex.
    pub fn dims(&self) -> Vec<(i64, Vec<usize>)> {
        self.terms.iter().enumerate().map(|(k, t)| (self.lo + k as i64, t.dims())).collect()
    }

    pub(crate) fn vertex_module(&self, n: i64, v: usize) -> FgModule<R> {
        self.term(n).map_or_else(|| FgModule::zero(&self.ring), |t| t.module(v).clone())
    }
}

/// A degreewise family of representation morphisms commuting with the
/// differentials; `components[k]` acts on the source term of degree
/// `source.lo() + k`.
#[derive(Debug, Clone)]
pub struct ChainMap<R: Ring> {
    pub source: ComplexRQ<R>,
    pub target: ComplexRQ<R>,
    pub components: Vec<Vec<Matrix<R>>>,
}

impl<R: Ring> ChainMap<R> {
    /// Component in degree `n` at vertex `v` (zero outside the source range).
    pub fn component(&self, n: i64, v: usize) -> Matrix<R> {
        let k = n - self.source.lo();
        if k >= 0 && (k as usize) < self.components.len() {
            return self.components[k as usize][v].clone();
        }
        let rows = self.target.term(n).map_or(0, |t| t.module(v).gens());
        let cols = self.source.term(n).map_or(0, |t| t.module(v).gens());
        Matrix::zeros(self.source.ring(), rows, cols)
    }

    /// Checks naturality, well-definedness and commutation with `d`.
    pub fn validate(&self) -> Result<()> {
        let Some((lo, hi)) = self.source.range() else { return Ok(()) };
        let q = self.source.quiver();
        for n in lo..=hi {
            let maps = (0..q.vertex_count()).map(|v| self.component(n, v)).collect();
            super::RepMorphism::new(self.source.term_or_zero(n), self.target.term_or_zero(n), maps)
                .map_err(|e| Error::Invalid(format!("chain map in degree {n}: {e}")))?;
            for v in 0..q.vertex_count() {
                let lhs = self.target.diff(n, v).mul(&self.component(n, v));
                let rhs = self.component(n + 1, v).mul(&self.source.diff(n, v));
                if !self.target.vertex_module(n + 1, v).maps_equal(&lhs, &rhs) {
                    return Err(Error::Invalid(format!(
                        "chain map does not commute with d in degree {n} at {}",
                        q.vertex_name(v)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Mapping cone: `C^n = X^{n+1} + Y^n`, `d(x, y) = (-dx, f x + dy)`.
    pub fn cone(&self) -> ComplexRQ<R> {
        let x = &self.source;
        let y = &self.target;
        let ring = x.ring();
        let q = x.quiver().clone();
        let xs = x.shift(1);
        let (lo, hi) = match (xs.range(), y.range()) {
            (None, None) => return ComplexRQ::zero(q, ring),
            (Some(r), None) | (None, Some(r)) => r,
            (Some((a, b)), Some((c, d))) => (a.min(c), b.max(d)),
        };
        let terms = (lo..=hi).map(|n| x.term_or_zero(n + 1).direct_sum(&y.term_or_zero(n))).collect();
        let diffs = (lo..hi)
            .map(|n| {
                (0..q.vertex_count())
                    .map(|v| {
                        let dx = x.diff(n + 1, v).neg();
                        let f = self.component(n + 1, v);
                        let dy = y.diff(n, v);
                        let (xr, xc) = dx.shape();
                        let mut m = Matrix::zeros(ring, xr + dy.rows(), xc + dy.cols());
                        m.set_block(0, 0, &dx);
                        m.set_block(xr, 0, &f);
                        m.set_block(xr, xc, &dy);
                        m
                    })
                    .collect()
            })
            .collect();
        ComplexRQ::new_unchecked(q, ring, lo, terms, diffs)
    }
}
