use std::fmt;
use std::sync::OnceLock;

use crate::ring::Ring;

use super::snf::{smith_lifted, Track};
use super::Matrix;

/// Invariant factors `d_1 | d_2 | ... | d_k` (non-units, canonical) and a free
/// rank. Over `Z/n` a summand `Z/n` counts as free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementaryDivisors<R: Ring> {
    pub divisors: Vec<R::Elem>,
    pub free_rank: usize,
}

impl<R: Ring> ElementaryDivisors<R> {
    pub fn is_zero(&self) -> bool {
        self.divisors.is_empty() && self.free_rank == 0
    }
}

/// Finitely presented module: cokernel of `relations` (`gens x r`), plus the
/// ring's implicit modulus when there is one.
#[derive(Clone)]
pub struct FgModule<R: Ring> {
    ring: R,
    relations: Matrix<R>,
    divisors: OnceLock<ElementaryDivisors<R>>,
}

impl<R: Ring> PartialEq for FgModule<R> {
    fn eq(&self, other: &Self) -> bool {
        self.relations == other.relations
    }
}
impl<R: Ring> Eq for FgModule<R> {}

impl<R: Ring> fmt::Debug for FgModule<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.relations.cols() == 0 {
            write!(f, "R^{}", self.gens())
        } else {
            write!(f, "coker{}", self.relations)
        }
    }
}

impl<R: Ring> FgModule<R> {
    pub fn new(relations: Matrix<R>) -> Self {
        FgModule { ring: relations.ring().clone(), relations, divisors: OnceLock::new() }
    }

    pub fn free(ring: &R, rank: usize) -> Self {
        Self::new(Matrix::zeros(ring, rank, 0))
    }

    pub fn zero(ring: &R) -> Self {
        Self::free(ring, 0)
    }

    /// `R/(d)` on one generator.
    pub fn cyclic(ring: &R, d: R::Elem) -> Self {
        Self::new(Matrix::from_vec(ring, 1, 1, vec![d]).expect("1x1"))
    }

    /// Canonical module with the given invariants: torsion generators first.
    pub fn from_divisors(ring: &R, ed: &ElementaryDivisors<R>) -> Self {
        let t = ed.divisors.len();
        let rel = Matrix::diagonal(ring, t + ed.free_rank, t, &ed.divisors);
        Self::new(rel)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn gens(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &Matrix<R> {
        &self.relations
    }

    /// Explicit relations together with the modulus relation on every generator.
    pub fn full_relations(&self) -> Matrix<R> {
        match self.ring.modulus() {
            None => self.relations.clone(),
            Some(n) => {
                let g = self.gens();
                let nid = Matrix::identity(&self.ring, g).scale(&n);
                Matrix::hstack(&self.ring, g, &[&self.relations, &nid])
            }
        }
    }

    /// True when the presentation has no explicit relations.
    pub fn is_free_presented(&self) -> bool {
        self.relations.cols() == 0
    }

    pub fn divisors(&self) -> &ElementaryDivisors<R> {
        self.divisors.get_or_init(|| divisors_of_presentation(&self.full_relations()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens() == 0 || self.divisors().is_zero()
    }

    /// Projective over the ring: free over a domain; over `Z/n`, every
    /// divisor `d` satisfies `gcd(d, n/d) = 1`.
    pub fn is_projective(&self) -> bool {
        let ed = self.divisors();
        match self.ring.modulus() {
            None => ed.divisors.is_empty(),
            Some(n) => ed.divisors.iter().all(|d| {
                let co = self.ring.exact_div(&n, d).expect("divisor of n");
                self.ring.is_unit(&self.ring.gcd(d, &co))
            }),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::new(Matrix::block_diag(&self.ring, &[&self.relations, &other.relations]))
    }

    pub fn direct_sum_all(ring: &R, parts: &[&Self]) -> Self {
        let rels: Vec<&Matrix<R>> = parts.iter().map(|m| &m.relations).collect();
        Self::new(Matrix::block_diag(ring, &rels))
    }

    /// `M (x) N` on generators `m_a (x) n_b`, indexed `a * gens(N) + b`.
    pub fn tensor(&self, other: &Self) -> Self {
        let r = &self.ring;
        let left = self.relations.kron(&Matrix::identity(r, other.gens()));
        let right = Matrix::identity(r, self.gens()).kron(&other.relations);
        Self::new(Matrix::hstack(r, self.gens() * other.gens(), &[&left, &right]))
    }

    /// Whether `m` (target gens x k) is the zero map into this module.
    pub fn is_zero_map(&self, m: &Matrix<R>) -> bool {
        lattice_contains(&self.full_relations(), m)
    }

    /// Whether two maps into this module agree.
    pub fn maps_equal(&self, a: &Matrix<R>, b: &Matrix<R>) -> bool {
        self.is_zero_map(&a.sub(b))
    }
}

/// Invariants of the cokernel of `rel` over the computational ring.
pub(crate) fn divisors_of_presentation<R: Ring>(rel: &Matrix<R>) -> ElementaryDivisors<R> {
    let ring = rel.ring();
    let s = smith_lifted(rel, Track::NONE);
    let n = ring.modulus();
    let mut divisors = Vec::new();
    let mut free_rank = rel.rows() - s.rank;
    for d in s.diagonal() {
        if ring.is_unit(&d) {
            continue;
        }
        if n.as_ref().is_some_and(|n| ring.associates(&d, n)) {
            free_rank += 1;
        } else {
            divisors.push(ring.canonical(&d));
        }
    }
    ElementaryDivisors { divisors, free_rank }
}

/// Invariants of the cokernel of `m`, read as a map of free modules.
pub fn cokernel_presentation<R: Ring>(m: &Matrix<R>) -> ElementaryDivisors<R> {
    FgModule::new(m.clone()).divisors().clone()
}

/// Whether every column of `v` lies in the column span of `basis`.
pub fn lattice_contains<R: Ring>(basis: &Matrix<R>, v: &Matrix<R>) -> bool {
    if v.is_zero() {
        return true;
    }
    if basis.cols() == 0 {
        return false;
    }
    solve(basis, v).is_some()
}

/// Some `x` with `a * x = b`, if one exists.
pub fn solve<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Option<Matrix<R>> {
    let ring = a.ring();
    assert_eq!(a.rows(), b.rows(), "solve shape");
    let s = smith_lifted(a, Track::ALL);
    let ub = s.u.mul(b);
    let mut y = Matrix::zeros(ring, a.cols(), b.cols());
    for j in 0..b.cols() {
        for i in 0..a.rows() {
            let x = ub.get(i, j);
            if i < s.rank {
                let q = ring.exact_div(x, s.d.get(i, i))?;
                y.set(i, j, q);
            } else if !ring.is_zero(x) {
                return None;
            }
        }
    }
    Some(s.v.mul(&y))
}

/// Basis of the kernel of `m` (columns), over the computational ring.
pub fn kernel_basis<R: Ring>(m: &Matrix<R>) -> Matrix<R> {
    let s = smith_lifted(m, Track::RIGHT);
    let idx: Vec<usize> = (s.rank..m.cols()).collect();
    s.v.select_cols(&idx)
}
