//! Projective resolutions of bounded complexes.
//!
//! First the vertex modules are resolved over the ring (a two-term free
//! resolution per module, twisted so the result is again a complex of
//! representations), then the standard resolution
//! `0 -> sum_a P(t a) (x) M_{s a} -> sum_i P(i) (x) M_i -> M -> 0` is applied
//! termwise and the double complex totalized.

use crate::error::{Error, Result};
use crate::linalg::{FgModule, Matrix};
use crate::ring::Ring;

use super::{ComplexRQ, Representation};

/// A quasi-isomorphic perfect complex. Perfect inputs are returned unchanged.
pub fn projective_resolution<R: Ring>(x: &ComplexRQ<R>) -> Result<ComplexRQ<R>> {
    if x.is_perfect() {
        return Ok(x.clone());
    }
    let ring = x.ring();
    let regular = ring.modulus().is_none() || ring.is_field();
    if !regular && !x.is_vertexwise_projective() {
        return Err(Error::NonRegularRing(format!(
            "{} has non-projective modules of infinite projective dimension; supply a perfect complex",
            ring.descriptor()
        )));
    }
    let c = x.canonicalized();
    let t = if c.is_vertexwise_projective() { c } else { free_model(&c) };
    Ok(standard_resolution(&t).trimmed())
}

/// Divides `v` by the relation matrix `diag(d)` (torsion rows first): the
/// unique `w` with `rho * w = v`.
fn div_rho<R: Ring>(ring: &R, d: &[R::Elem], v: &Matrix<R>) -> Matrix<R> {
    let mut w = Matrix::zeros(ring, d.len(), v.cols());
    for (r, dr) in d.iter().enumerate() {
        for c in 0..v.cols() {
            w.set(r, c, ring.exact_div(v.get(r, c), dr).expect("image lies in the relations"));
        }
    }
    debug_assert!((d.len()..v.rows()).all(|r| (0..v.cols()).all(|c| ring.is_zero(v.get(r, c)))));
    w
}

/// Vertexwise free complex quasi-isomorphic to a canonicalized complex over
/// a domain: `T^n = F_n + E_{n+1}` with `F` the generators and `E` the
/// relations of each vertex module.
fn free_model<R: Ring>(c: &ComplexRQ<R>) -> ComplexRQ<R> {
    let ring = c.ring();
    let q = c.quiver().clone();
    let nv = q.vertex_count();
    let (lo, hi) = c.range().expect("nonempty");
    let divs = |n: i64, v: usize| -> Vec<R::Elem> {
        let rel = c.vertex_module(n, v).relations().clone();
        (0..rel.cols()).map(|j| rel.get(j, j).clone()).collect()
    };
    let g = |n: i64, v: usize| c.vertex_module(n, v).gens();
    let rho = |n: i64, v: usize| Matrix::diagonal(ring, g(n, v), divs(n, v).len(), &divs(n, v));
    let phi = |n: i64, v: usize| c.diff(n, v);
    let phi_a = |n: i64, a: usize| -> Matrix<R> {
        match c.term(n) {
            Some(t) => t.map(a).clone(),
            None => {
                let arrow = q.arrow(a);
                Matrix::zeros(ring, g(n, arrow.target), g(n, arrow.source))
            }
        }
    };
    let psi = |n: i64, v: usize| div_rho(ring, &divs(n + 1, v), &phi(n, v).mul(&rho(n, v)));
    let h = |n: i64, v: usize| div_rho(ring, &divs(n + 2, v), &phi(n + 1, v).mul(&phi(n, v)));
    let psi_a = |n: i64, a: usize| {
        let arrow = q.arrow(a);
        div_rho(ring, &divs(n, arrow.target), &phi_a(n, a).mul(&rho(n, arrow.source)))
    };
    let kappa = |n: i64, a: usize| {
        let arrow = q.arrow(a);
        let (i, j) = (arrow.source, arrow.target);
        let v = phi_a(n + 1, a).mul(&phi(n, i)).sub(&phi(n, j).mul(&phi_a(n, a)));
        div_rho(ring, &divs(n + 1, j), &v)
    };

    let tlo = lo - 1;
    let terms: Vec<Representation<R>> = (tlo..=hi)
        .map(|n| {
            let ranks: Vec<usize> = (0..nv).map(|v| g(n, v) + divs(n + 1, v).len()).collect();
            let maps = (0..q.arrows().len())
                .map(|a| {
                    let arrow = q.arrow(a);
                    let (i, j) = (arrow.source, arrow.target);
                    let (fi, ei) = (g(n, i), divs(n + 1, i).len());
                    let (fj, ej) = (g(n, j), divs(n + 1, j).len());
                    let mut m = Matrix::zeros(ring, fj + ej, fi + ei);
                    m.set_block(0, 0, &phi_a(n, a));
                    m.set_block(fj, 0, &kappa(n, a));
                    m.set_block(fj, fi, &psi_a(n + 1, a));
                    m
                })
                .collect();
            Representation::free(q.clone(), ring, &ranks, maps).expect("free model term")
        })
        .collect();
    let minus = ring.from_i64(-1);
    let diffs = (tlo..hi)
        .map(|n| {
            (0..nv)
                .map(|v| {
                    let (f0, e0) = (g(n, v), divs(n + 1, v).len());
                    let (f1, e1) = (g(n + 1, v), divs(n + 2, v).len());
                    let mut m = Matrix::zeros(ring, f1 + e1, f0 + e0);
                    m.set_block(0, 0, &phi(n, v));
                    m.set_block(0, f0, &rho(n + 1, v));
                    m.set_block(f1, 0, &h(n, v).scale(&minus));
                    m.set_block(f1, f0, &psi(n + 1, v).scale(&minus));
                    m
                })
                .collect()
        })
        .collect();
    ComplexRQ::new_unchecked(q, ring, tlo, terms, diffs)
}

/// Basis bookkeeping for `P0(M) = sum_i P(i) (x) M_i` and
/// `P1(M) = sum_a P(t a) (x) M_{s a}` at a vertex `k`: offsets of the
/// `(summand, path)` blocks, each of size `gens(M_summand)`.
struct StdLayout {
    /// `p0[k]`: `(source vertex i, path index, offset)`.
    p0: Vec<Vec<(usize, usize, usize)>>,
    p0_dim: Vec<usize>,
    /// `p1[k]`: `(arrow a, path index from t(a), offset)`.
    p1: Vec<Vec<(usize, usize, usize)>>,
    p1_dim: Vec<usize>,
}

fn std_layout<R: Ring>(m: &Representation<R>) -> StdLayout {
    let q = m.quiver();
    let nv = q.vertex_count();
    let mut out = StdLayout { p0: vec![Vec::new(); nv], p0_dim: vec![0; nv], p1: vec![Vec::new(); nv], p1_dim: vec![0; nv] };
    for k in 0..nv {
        for i in 0..nv {
            for w in 0..q.paths(i, k).len() {
                out.p0[k].push((i, w, out.p0_dim[k]));
                out.p0_dim[k] += m.module(i).gens();
            }
        }
        for (a, arrow) in q.arrows().iter().enumerate() {
            for w in 0..q.paths(arrow.target, k).len() {
                out.p1[k].push((a, w, out.p1_dim[k]));
                out.p1_dim[k] += m.module(arrow.source).gens();
            }
        }
    }
    out
}

fn p0_rep<R: Ring>(m: &Representation<R>, lay: &StdLayout) -> Representation<R> {
    let q = m.quiver().clone();
    let ring = m.ring();
    let modules = (0..q.vertex_count())
        .map(|k| {
            let parts: Vec<&FgModule<R>> = lay.p0[k].iter().map(|&(i, _, _)| m.module(i)).collect();
            FgModule::direct_sum_all(ring, &parts)
        })
        .collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(b, arrow)| {
            let (k, l) = (arrow.source, arrow.target);
            let mut mat = Matrix::zeros(ring, lay.p0_dim[l], lay.p0_dim[k]);
            for &(i, w, off) in &lay.p0[k] {
                let mut ext = q.paths(i, k)[w].clone();
                ext.push(b);
                let w2 = q.path_position(i, l, &ext);
                let &(_, _, off2) = lay.p0[l].iter().find(|&&(i2, ww, _)| i2 == i && ww == w2).expect("block");
                mat.set_block(off2, off, &Matrix::identity(ring, m.module(i).gens()));
            }
            mat
        })
        .collect();
    Representation::new_unchecked(q, ring, modules, maps)
}

fn p1_rep<R: Ring>(m: &Representation<R>, lay: &StdLayout) -> Representation<R> {
    let q = m.quiver().clone();
    let ring = m.ring();
    let modules = (0..q.vertex_count())
        .map(|k| {
            let parts: Vec<&FgModule<R>> = lay.p1[k].iter().map(|&(a, _, _)| m.module(q.arrow(a).source)).collect();
            FgModule::direct_sum_all(ring, &parts)
        })
        .collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(b, arrow)| {
            let (k, l) = (arrow.source, arrow.target);
            let mut mat = Matrix::zeros(ring, lay.p1_dim[l], lay.p1_dim[k]);
            for &(a, w, off) in &lay.p1[k] {
                let t = q.arrow(a).target;
                let mut ext = q.paths(t, k)[w].clone();
                ext.push(b);
                let w2 = q.path_position(t, l, &ext);
                let &(_, _, off2) = lay.p1[l].iter().find(|&&(a2, ww, _)| a2 == a && ww == w2).expect("block");
                mat.set_block(off2, off, &Matrix::identity(ring, m.module(q.arrow(a).source).gens()));
            }
            mat
        })
        .collect();
    Representation::new_unchecked(q, ring, modules, maps)
}

/// `d: P1(M) -> P0(M)`, `(a, w, r) -> (s a, a w, r) - (t a, w, M_a r)`.
fn std_boundary<R: Ring>(m: &Representation<R>, lay: &StdLayout, k: usize) -> Matrix<R> {
    let q = m.quiver();
    let ring = m.ring();
    let mut mat = Matrix::zeros(ring, lay.p0_dim[k], lay.p1_dim[k]);
    for &(a, w, off) in &lay.p1[k] {
        let arrow = q.arrow(a);
        let (s, t) = (arrow.source, arrow.target);
        let path = &q.paths(t, k)[w];
        let mut pre = vec![a];
        pre.extend_from_slice(path);
        let ws = q.path_position(s, k, &pre);
        let &(_, _, o1) = lay.p0[k].iter().find(|&&(i, ww, _)| i == s && ww == ws).expect("block");
        mat.add_block(o1, off, &Matrix::identity(ring, m.module(s).gens()));
        let &(_, _, o2) = lay.p0[k].iter().find(|&&(i, ww, _)| i == t && ww == w).expect("block");
        mat.add_block(o2, off, &m.map(a).neg());
    }
    mat
}

/// `P0(f)` or `P1(f)` for a vertexwise map `f` (`maps[i]: M_i -> M'_i`).
fn std_map<R: Ring>(
    blocks_src: &[(usize, usize, usize)],
    blocks_tgt: &[(usize, usize, usize)],
    rows: usize,
    cols: usize,
    summand_map: impl Fn(usize) -> Matrix<R>,
    ring: &R,
) -> Matrix<R> {
    let mut mat = Matrix::zeros(ring, rows, cols);
    for (&(x, w, off), &(x2, w2, off2)) in blocks_src.iter().zip(blocks_tgt) {
        debug_assert_eq!((x, w), (x2, w2));
        mat.set_block(off2, off, &summand_map(x));
    }
    mat
}

/// Totalization of `P1(T) -> P0(T)`: `S^n = P0(T^n) + P1(T^{n+1})`.
fn standard_resolution<R: Ring>(t: &ComplexRQ<R>) -> ComplexRQ<R> {
    let ring = t.ring();
    let q = t.quiver().clone();
    let nv = q.vertex_count();
    let Some((lo, hi)) = t.range() else { return ComplexRQ::zero(q, ring) };
    let terms_t: Vec<Representation<R>> = (lo - 1..=hi + 1).map(|n| t.term_or_zero(n)).collect();
    let at = |n: i64| &terms_t[(n - lo + 1) as usize];
    let lays: Vec<StdLayout> = terms_t.iter().map(std_layout).collect();
    let lay = |n: i64| &lays[(n - lo + 1) as usize];

    let slo = lo - 1;
    let terms = (slo..=hi)
        .map(|n| p0_rep(at(n), lay(n)).direct_sum(&p1_rep(at(n + 1), lay(n + 1))))
        .collect();
    let minus = ring.from_i64(-1);
    let diffs = (slo..hi)
        .map(|n| {
            (0..nv)
                .map(|k| {
                    let (a0, a1) = (lay(n).p0_dim[k], lay(n + 1).p1_dim[k]);
                    let (b0, b1) = (lay(n + 1).p0_dim[k], lay(n + 2).p1_dim[k]);
                    let p0d = std_map(&lay(n).p0[k], &lay(n + 1).p0[k], b0, a0, |i| t.diff(n, i), ring);
                    let p1d = std_map(
                        &lay(n + 1).p1[k],
                        &lay(n + 2).p1[k],
                        b1,
                        a1,
                        |a| t.diff(n + 1, q.arrow(a).source),
                        ring,
                    );
                    let bd = std_boundary(at(n + 1), lay(n + 1), k);
                    let mut m = Matrix::zeros(ring, b0 + b1, a0 + a1);
                    m.set_block(0, 0, &p0d);
                    m.set_block(0, a0, &bd);
                    m.set_block(b0, a0, &p1d.scale(&minus));
                    m
                })
                .collect()
        })
        .collect();
    ComplexRQ::new_unchecked(q, ring, slo, terms, diffs)
}
