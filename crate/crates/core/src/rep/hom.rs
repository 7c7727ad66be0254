//! Internal hom and the evaluation map.
//!
//! `chom(X, Y)_i = Hom(X (x) P(i), Y)`; with `X` vertexwise free this is a
//! kernel of a naturality-difference map inside a product of copies of the
//! vertex modules of `Y`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{preimage, Matrix, Subquotient};
use crate::ring::Ring;

use super::functors::check_compatible;
use super::tensor::{box_tensor, tensor_blocks};
use super::{ChainMap, ComplexRQ, Representation};

/// `Hom(R^{xg * p}, Y^{m+n}_k)` inside the ambient space, flattened column
/// by column.
#[derive(Debug, Clone)]
struct Block {
    m: i64,
    k: usize,
    offset: usize,
    xg: usize,
    p: usize,
    yg: usize,
}

impl Block {
    fn cols(&self) -> usize {
        self.xg * self.p
    }
    fn size(&self) -> usize {
        self.cols() * self.yg
    }
}

#[derive(Debug, Clone, Default)]
struct Layout {
    blocks: Vec<Block>,
    dim: usize,
}

impl Layout {
    fn find(&self, m: i64, k: usize) -> Option<&Block> {
        self.blocks.iter().find(|b| b.m == m && b.k == k)
    }
}

/// The internal hom complex with the coordinate data needed to map into it.
pub(crate) struct HomComplex<R: Ring> {
    pub complex: ComplexRQ<R>,
    lo: i64,
    layouts: Vec<Vec<Layout>>,
    sqs: Vec<Vec<Subquotient<R>>>,
}

impl<R: Ring> HomComplex<R> {
    fn index(&self, n: i64) -> Option<usize> {
        let k = n - self.lo;
        (k >= 0 && (k as usize) < self.sqs.len()).then_some(k as usize)
    }
}

/// Canonicalizes `x` and checks it is perfect with free vertex modules.
fn prepare_source<R: Ring>(x: &ComplexRQ<R>) -> Result<ComplexRQ<R>> {
    x.require_perfect("internal hom")?;
    let xc = x.canonicalized();
    if !xc.terms().iter().all(Representation::is_vertexwise_free_presented) {
        return Err(Error::NotPerfect("internal hom needs free vertex modules in the first argument".into()));
    }
    Ok(xc)
}

fn kron_ids<R: Ring>(ring: &R, a: usize, m: &Matrix<R>) -> Matrix<R> {
    Matrix::identity(ring, a).kron(m)
}

pub(crate) fn hom_complex<R: Ring>(x: &ComplexRQ<R>, y: &ComplexRQ<R>) -> Result<HomComplex<R>> {
    check_compatible(x, y)?;
    hom_complex_free(&prepare_source(x)?, y)
}

/// `hom_complex` for a canonicalized `xc` with free vertex modules.
fn hom_complex_free<R: Ring>(xc: &ComplexRQ<R>, y: &ComplexRQ<R>) -> Result<HomComplex<R>> {
    let q = xc.quiver().clone();
    let ring = xc.ring().clone();
    let nv = q.vertex_count();
    let (Some((xl, xh)), Some((yl, yh))) = (xc.range(), y.range()) else {
        return Ok(HomComplex { complex: ComplexRQ::zero(q, &ring), lo: 0, layouts: Vec::new(), sqs: Vec::new() });
    };
    let (lo, hi) = (yl - xh, yh - xl);
    let projectives: Vec<Representation<R>> =
        (0..nv).map(|i| Representation::projective(q.clone(), &ring, i).expect("vertex")).collect();

    let layout = |n: i64, i: usize| -> Layout {
        let mut out = Layout::default();
        for m in xl..=xh {
            if y.term(m + n).is_none() {
                continue;
            }
            for k in 0..nv {
                let b = Block {
                    m,
                    k,
                    offset: out.dim,
                    xg: xc.vertex_module(m, k).gens(),
                    p: q.paths(i, k).len(),
                    yg: y.vertex_module(m + n, k).gens(),
                };
                if b.size() > 0 {
                    out.dim += b.size();
                    out.blocks.push(b);
                }
            }
        }
        out
    };

    let mut layouts = Vec::new();
    let mut sqs = Vec::new();
    for n in lo..=hi {
        let mut lrow = Vec::new();
        let mut srow = Vec::new();
        for i in 0..nv {
            let lay = layout(n, i);
            // relations of the ambient product
            let rel_blocks: Vec<Matrix<R>> = lay
                .blocks
                .iter()
                .map(|b| kron_ids(&ring, b.cols(), &y.vertex_module(b.m + n, b.k).full_relations()))
                .collect();
            let den = Matrix::block_diag(&ring, &rel_blocks.iter().collect::<Vec<_>>());
            // naturality constraints f_l A_b - Y_b f_k, one group per (m, arrow)
            let mut phi_rows: Vec<Matrix<R>> = Vec::new();
            let mut crel: Vec<Matrix<R>> = Vec::new();
            for m in xl..=xh {
                if y.term(m + n).is_none() {
                    continue;
                }
                let xt = xc.term_or_zero(m);
                let yt = y.term_or_zero(m + n);
                for (bi, arrow) in q.arrows().iter().enumerate() {
                    let (k, l) = (arrow.source, arrow.target);
                    let cols_k = xt.module(k).gens() * q.paths(i, k).len();
                    let (yk, yl_) = (yt.module(k).gens(), yt.module(l).gens());
                    if cols_k == 0 || yl_ == 0 {
                        continue;
                    }
                    let mut row = Matrix::zeros(&ring, cols_k * yl_, lay.dim);
                    if let Some(b) = lay.find(m, l) {
                        let a_beta = xt.map(bi).kron(projectives[i].map(bi));
                        row.set_block(0, b.offset, &a_beta.transpose().kron(&Matrix::identity(&ring, yl_)));
                    }
                    if let Some(b) = lay.find(m, k) {
                        debug_assert_eq!(b.yg, yk);
                        row.set_block(0, b.offset, &kron_ids(&ring, cols_k, yt.map(bi)).neg());
                    }
                    phi_rows.push(row);
                    crel.push(kron_ids(&ring, cols_k, &yt.module(l).full_relations()));
                }
            }
            let total: usize = phi_rows.iter().map(Matrix::rows).sum();
            let phi = Matrix::vstack(&ring, lay.dim, &phi_rows.iter().collect::<Vec<_>>());
            let crel = Matrix::block_diag(&ring, &crel.iter().collect::<Vec<_>>());
            debug_assert_eq!(phi.rows(), total);
            let num = preimage(&phi, &crel);
            srow.push(Subquotient::new(&num, &den));
            lrow.push(lay);
        }
        layouts.push(lrow);
        sqs.push(srow);
    }

    let minus = ring.from_i64(-1);
    let nidx = |n: i64| (n - lo) as usize;

    // differentials
    let mut diffs = Vec::new();
    for n in lo..hi {
        let mut per_vertex = Vec::new();
        for i in 0..nv {
            let src = &layouts[nidx(n)][i];
            let tgt = &layouts[nidx(n + 1)][i];
            let mut l = Matrix::zeros(&ring, tgt.dim, src.dim);
            // sign of the second term: -(-1)^n
            let c2 = if n.rem_euclid(2) == 0 { minus.clone() } else { ring.one() };
            for tb in &tgt.blocks {
                if let Some(sb) = src.find(tb.m, tb.k) {
                    let dy = y.diff(tb.m + n, tb.k);
                    l.set_block(tb.offset, sb.offset, &kron_ids(&ring, tb.cols(), &dy));
                }
                if let Some(sb) = src.find(tb.m + 1, tb.k) {
                    let nmat = xc.diff(tb.m, tb.k).kron(&Matrix::identity(&ring, tb.p));
                    let blk = nmat.transpose().kron(&Matrix::identity(&ring, tb.yg)).scale(&c2);
                    l.add_block(tb.offset, sb.offset, &blk);
                }
            }
            let s_from = &sqs[nidx(n)][i];
            let s_to = &sqs[nidx(n + 1)][i];
            per_vertex.push(s_to.coords_matrix(&l.mul(s_from.generators())));
        }
        diffs.push(per_vertex);
    }

    // terms with arrow maps by precomposition with id (x) iota
    let mut terms = Vec::new();
    for n in lo..=hi {
        let modules = (0..nv).map(|i| sqs[nidx(n)][i].module().clone()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, arrow)| {
                let (i, j) = (arrow.source, arrow.target);
                let src = &layouts[nidx(n)][i];
                let tgt = &layouts[nidx(n)][j];
                let coeffs: Vec<R::Elem> = q
                    .paths(i, j)
                    .iter()
                    .map(|p| if p.as_slice() == [ai] { ring.one() } else { ring.zero() })
                    .collect();
                let iota = Representation::projective_map(&q, &ring, j, i, &coeffs);
                let mut l = Matrix::zeros(&ring, tgt.dim, src.dim);
                for tb in &tgt.blocks {
                    if let Some(sb) = src.find(tb.m, tb.k) {
                        let nmat = kron_ids(&ring, tb.xg, &iota[tb.k]);
                        l.set_block(tb.offset, sb.offset, &nmat.transpose().kron(&Matrix::identity(&ring, tb.yg)));
                    }
                }
                sqs[nidx(n)][j].coords_matrix(&l.mul(sqs[nidx(n)][i].generators()))
            })
            .collect();
        terms.push(Representation::new_unchecked(q.clone(), &ring, modules, maps));
    }
    let complex = ComplexRQ::new_unchecked(q, &ring, lo, terms, diffs);
    Ok(HomComplex { complex, lo, layouts, sqs })
}

/// Internal hom `chom(X, Y)`; `X` must be perfect, `Y` any bounded complex.
pub fn internal_hom<R: Ring>(x: &ComplexRQ<R>, y: &ComplexRQ<R>) -> Result<ComplexRQ<R>> {
    Ok(hom_complex(x, y)?.complex)
}

/// The module-level formula `chom(Y, Z)_i = Hom(Y (x) P(i), Z)` for
/// representations, with `Y` vertexwise free but not necessarily projective.
pub fn chom_formula<R: Ring>(y: &Representation<R>, z: &Representation<R>) -> Result<Representation<R>> {
    let (ys, zs) = (ComplexRQ::stalk(y.clone(), 0), ComplexRQ::stalk(z.clone(), 0));
    check_compatible(&ys, &zs)?;
    let yc = ys.canonicalized();
    if !yc.terms().iter().all(Representation::is_vertexwise_free_presented) {
        return Err(Error::NotPerfect("chom formula needs free vertex modules in the first argument".into()));
    }
    Ok(hom_complex_free(&yc, &zs)?.complex.term_or_zero(0))
}

/// The unit `U` as a stalk complex in degree 0.
pub fn unit_complex<R: Ring>(x: &ComplexRQ<R>) -> ComplexRQ<R> {
    ComplexRQ::stalk(Representation::unit(x.quiver().clone(), x.ring()), 0)
}

/// The evaluation map `chom(X, U) (x) Y -> chom(X, Y)`.
///
/// On `f (x) y` with `f` in degree `a` and `y` in degree `b` at vertex `i`, the
/// image is `x (x) w -> (-1)^{ab} f(x (x) w) Y_w(y)` for a path `w` from `i`.
pub fn evaluation_map<R: Ring>(x: &ComplexRQ<R>, y: &ComplexRQ<R>) -> Result<ChainMap<R>> {
    check_compatible(x, y)?;
    let u = unit_complex(x);
    let s = hom_complex(x, &u)?;
    let t = hom_complex(x, y)?;
    let w = box_tensor(&s.complex, y)?;
    let q = x.quiver().clone();
    let ring = x.ring().clone();
    let nv = q.vertex_count();
    let Some((wl, wh)) = w.range() else {
        return Ok(ChainMap { source: w, target: t.complex, components: Vec::new() });
    };
    let mut components = Vec::new();
    for n in wl..=wh {
        let mut per_vertex = Vec::new();
        for i in 0..nv {
            let rows = t.complex.vertex_module(n, i).gens();
            let mut cols: Vec<Vec<R::Elem>> = Vec::new();
            let tidx = t.index(n);
            for (a, b) in tensor_blocks(&s.complex, y, n) {
                let sidx = s.index(a).expect("degree of chom(X, U)");
                let s_sq = &s.sqs[sidx][i];
                let s_lay = &s.layouts[sidx][i];
                let ygen = y.vertex_module(b, i).gens();
                let sign = if (a * b).rem_euclid(2) == 1 { ring.from_i64(-1) } else { ring.one() };
                let yt = y.term_or_zero(b);
                for g in 0..s_sq.module().gens() {
                    let fvec = s_sq.generators().column(g);
                    for l in 0..ygen {
                        let Some(ti) = tidx else {
                            cols.push(Vec::new());
                            continue;
                        };
                        let t_lay = &t.layouts[ti][i];
                        let mut amb = vec![ring.zero(); t_lay.dim];
                        for sb in &s_lay.blocks {
                            debug_assert_eq!(sb.m, -a);
                            let Some(tb) = t_lay.find(sb.m, sb.k) else { continue };
                            let paths = q.paths(i, sb.k);
                            for c in 0..sb.cols() {
                                let fval = &fvec[sb.offset + c];
                                if ring.is_zero(fval) {
                                    continue;
                                }
                                let coef = ring.mul(&sign, fval);
                                let ymap = yt.path_map(i, &paths[c % sb.p]);
                                for r in 0..tb.yg {
                                    let e = ymap.get(r, l);
                                    if ring.is_zero(e) {
                                        continue;
                                    }
                                    let idx = tb.offset + c * tb.yg + r;
                                    amb[idx] = ring.add(&amb[idx], &ring.mul(&coef, e));
                                }
                            }
                        }
                        let c = t.sqs[ti][i].coords(&amb).ok_or_else(|| {
                            Error::Invalid("evaluation lands outside the internal hom".into())
                        })?;
                        cols.push(c);
                    }
                }
            }
            per_vertex.push(Matrix::from_columns(&ring, rows, &cols));
        }
        components.push(per_vertex);
    }
    Ok(ChainMap { source: w, target: t.complex, components })
}

/// Result of the probe-set rigidity test.
#[derive(Debug, Clone)]
pub struct RigidityReport<R: Ring> {
    pub rigid: bool,
    /// `(probe name, evaluation map is a quasi-isomorphism)`.
    pub probes: Vec<(String, bool)>,
    /// `chom(X, U) (x) X`.
    pub left: ComplexRQ<R>,
    /// `chom(X, X)`.
    pub right: ComplexRQ<R>,
}

/// Probe-set rigidity: the evaluation map is a quasi-isomorphism for
/// `Y` in `{U, U(j) for all j, X}`. A `false` answer is a proof of
/// non-rigidity; `true` is evidence only.
pub fn rigidity_report<R: Ring>(x: &ComplexRQ<R>) -> Result<RigidityReport<R>> {
    x.require_perfect("rigidity")?;
    let q: Arc<_> = x.quiver().clone();
    let ring = x.ring();
    let mut probes: Vec<(String, ComplexRQ<R>)> = vec![("U".into(), unit_complex(x))];
    for j in 0..q.vertex_count() {
        let uj = Representation::vertex_simple(q.clone(), ring, j)?;
        probes.push((format!("U({})", q.vertex_name(j)), ComplexRQ::stalk(uj, 0)));
    }
    probes.push(("X".into(), x.clone()));
    let mut results = Vec::new();
    let mut left = None;
    let mut right = None;
    for (name, y) in &probes {
        let ev = evaluation_map(x, y)?;
        let ok = ev.cone().is_acyclic();
        if name == "X" {
            left = Some(ev.source.clone());
            right = Some(ev.target.clone());
        }
        results.push((name.clone(), ok));
    }
    Ok(RigidityReport {
        rigid: results.iter().all(|(_, ok)| *ok),
        probes: results,
        left: left.expect("X probe"),
        right: right.expect("X probe"),
    })
}

pub fn is_rigid<R: Ring>(x: &ComplexRQ<R>) -> Result<bool> {
    Ok(rigidity_report(x)?.rigid)
}
