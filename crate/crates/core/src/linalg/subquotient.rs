use crate::ring::Ring;

use super::module::{kernel_basis, FgModule};
use super::snf::{smith_lifted, Track};
use super::Matrix;

/// `N / D` for lattices `D <= N <= R^m` given by generating columns, with a
/// canonical presentation and coordinate maps.
///
/// The canonical generators come from two Smith forms: one putting `N` in a
/// diagonal basis, one diagonalising `D` inside that basis. Generators with a
/// unit divisor are dropped.
#[derive(Debug, Clone)]
pub struct Subquotient<R: Ring> {
    ring: R,
    ambient: usize,
    module: FgModule<R>,
    /// First `k` rows of the left transform for `N`.
    u1: Matrix<R>,
    d1: Vec<R::Elem>,
    /// Left transform for `D` in `N`-coordinates, restricted to kept rows.
    u2: Matrix<R>,
    /// Modulus for each kept coordinate, `None` for free ones.
    moduli: Vec<Option<R::Elem>>,
    /// Ambient vectors of the kept generators.
    generators: Matrix<R>,
}

impl<R: Ring> Subquotient<R> {
    /// `num` and `den` are `m x a` and `m x b`; the span of `den` must lie in
    /// the span of `num`.
    pub fn new(num: &Matrix<R>, den: &Matrix<R>) -> Self {
        let ring = num.ring().clone();
        let m = num.rows();
        assert_eq!(den.rows(), m, "subquotient ambient");
        let s1 = smith_lifted(num, Track::LEFT);
        let k = s1.rank;
        let d1 = s1.diagonal();
        let idx: Vec<usize> = (0..k).collect();
        let u1 = s1.u.select_rows(&idx);
        let basis = s1.u_inv.select_cols(&idx).mul(&Matrix::diagonal(&ring, k, k, &d1));

        let ud = u1.mul(den);
        let mut c = Matrix::zeros(&ring, k, den.cols());
        for i in 0..k {
            for j in 0..den.cols() {
                let q = ring.exact_div(ud.get(i, j), &d1[i]).expect("denominator lies in numerator");
                c.set(i, j, q);
            }
        }
        let s2 = smith_lifted(&c, Track::LEFT);
        let e = s2.diagonal();
        let g_all = basis.mul(&s2.u_inv);
        let modulus = ring.modulus();
        let mut kept = Vec::new();
        let mut moduli = Vec::new();
        let mut torsion = Vec::new();
        for j in 0..k {
            let ej = e.get(j).cloned().unwrap_or_else(|| ring.zero());
            if !ring.is_zero(&ej) && ring.is_unit(&ej) {
                continue;
            }
            kept.push(j);
            let implicit = modulus.as_ref().is_some_and(|n| ring.associates(&ej, n));
            if ring.is_zero(&ej) || implicit {
                moduli.push(modulus.clone());
            } else {
                torsion.push(ej.clone());
                moduli.push(Some(ej));
            }
        }
        let module = FgModule::new(Matrix::diagonal(&ring, kept.len(), torsion.len(), &torsion));
        let u2 = s2.u.select_rows(&kept);
        let generators = g_all.select_cols(&kept).reduced();
        Subquotient { ring, ambient: m, module, u1, d1, u2, moduli, generators }
    }

    /// `ker(map) / im(den)` where the kernel is taken modulo `target_rel`:
    /// the elements `v` with `map * v` in the span of `target_rel`.
    pub fn kernel_mod(map: &Matrix<R>, target_rel: &Matrix<R>, den: &Matrix<R>) -> Self {
        Self::new(&preimage(map, target_rel), den)
    }

    pub fn module(&self) -> &FgModule<R> {
        &self.module
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Ambient vectors of the canonical generators (columns).
    pub fn generators(&self) -> &Matrix<R> {
        &self.generators
    }

    /// Canonical coordinates of an ambient vector of `N`; `None` if outside `N`.
    pub fn coords(&self, v: &[R::Elem]) -> Option<Vec<R::Elem>> {
        let r = &self.ring;
        let w = self.u1.apply(v);
        let mut scaled = Vec::with_capacity(w.len());
        for (x, d) in w.iter().zip(&self.d1) {
            scaled.push(r.exact_div(x, d)?);
        }
        let z = self.u2.apply(&scaled);
        Some(
            z.iter()
                .zip(&self.moduli)
                .map(|(x, m)| match m {
                    Some(m) => r.div_rem(x, m).1,
                    None => x.clone(),
                })
                .map(|x| r.reduce(&x))
                .collect(),
        )
    }

    /// Matrix of a linear map into `N`, in canonical coordinates; `images` are
    /// ambient columns.
    pub fn coords_matrix(&self, images: &Matrix<R>) -> Matrix<R> {
        let cols: Vec<Vec<R::Elem>> = (0..images.cols())
            .map(|j| self.coords(&images.column(j)).expect("image lies in the numerator"))
            .collect();
        Matrix::from_columns(&self.ring, self.module.gens(), &cols)
    }

    /// Ambient representative of a coordinate vector.
    pub fn lift(&self, c: &[R::Elem]) -> Vec<R::Elem> {
        self.generators.apply(c)
    }

    /// Whether the ambient vector of `N` is zero in `N / D`.
    pub fn is_zero_vector(&self, v: &[R::Elem]) -> bool {
        match self.coords(v) {
            Some(c) => c.iter().all(|x| self.ring.is_zero(x)),
            None => false,
        }
    }
}

/// Generators of `{v : map * v in span(target_rel)}`.
pub fn preimage<R: Ring>(map: &Matrix<R>, target_rel: &Matrix<R>) -> Matrix<R> {
    let ring = map.ring();
    let s = map.cols();
    if target_rel.cols() == 0 {
        if map.is_zero() {
            return Matrix::identity(ring, s);
        }
        return kernel_basis(map);
    }
    let stacked = Matrix::hstack(ring, map.rows(), &[map, target_rel]);
    let k = kernel_basis(&stacked);
    let idx: Vec<usize> = (0..s).collect();
    k.select_rows(&idx)
}

impl<R: Ring> FgModule<R> {
    /// Canonical presentation: `(module, to_canonical, from_canonical)`, where
    /// the matrices map old generators to new coordinates and back.
    pub fn canonical_form(&self) -> (FgModule<R>, Matrix<R>, Matrix<R>) {
        let g = self.gens();
        let sq = Subquotient::new(&Matrix::identity(self.ring(), g), &self.full_relations());
        let to = sq.coords_matrix(&Matrix::identity(self.ring(), g));
        (sq.module().clone(), to, sq.generators().clone())
    }
}
