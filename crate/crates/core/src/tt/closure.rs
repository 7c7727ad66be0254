//! Brute-force thick tensor-ideal closure over a finite field on a linearly
//! oriented `A_n`.
//!
//! Over `kA_n` every complex is a sum of shifted interval modules `[a, b]`,
//! read off from homology by the rank function of the path maps. A thick
//! subcategory closed under shifts is determined by the intervals it
//! contains, so the closure runs on interval sets: it adds the summands of
//! `I (x) u` for every universe element `u`, and the summands of the cones
//! of every chain map between resolutions of `I[k]` and `J`, for `I, J`
//! already present and `k` in `-2..=2`. Every chain map is enumerated over
//! the field, so the cone step needs no homotopy bookkeeping.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, smith_normal_form, Matrix};
use crate::quiver::Quiver;
use crate::rep::{box_tensor_termwise, projective_resolution, ChainMap, ComplexRQ, Representation};
use crate::ring::Ring;

/// Largest chain-map space enumerated in full.
const MAX_ENUMERATION: usize = 1 << 14;

/// Summands of a complex over `kA_n`: `(degree, a, b) -> multiplicity`,
/// positions counted along the line from the source end.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntervalType {
    pub summands: BTreeMap<(i64, usize, usize), usize>,
}

impl IntervalType {
    /// Intervals up to shift.
    pub fn intervals(&self) -> BTreeSet<(usize, usize)> {
        self.summands.keys().map(|&(_, a, b)| (a, b)).collect()
    }
}

/// Vertex order along a linearly oriented `A_n`, or `UnsupportedQuiver`.
fn line_order(q: &Quiver) -> Result<Vec<usize>> {
    let n = q.vertex_count();
    let order = q.topological_order().to_vec();
    let linear = q.arrows().len() + 1 == n
        && q.arrows().iter().all(|a| {
            let (s, t) = (order.iter().position(|&v| v == a.source), order.iter().position(|&v| v == a.target));
            matches!((s, t), (Some(s), Some(t)) if t == s + 1)
        });
    if n == 0 || !linear {
        return Err(Error::UnsupportedQuiver("brute-force closure needs a linearly oriented A_n".into()));
    }
    Ok(order)
}

/// The arrow path from `order[a]` to `order[b]`.
fn line_path(q: &Quiver, order: &[usize], a: usize, b: usize) -> Vec<usize> {
    q.paths(order[a], order[b]).first().cloned().unwrap_or_default()
}

/// Decomposes `x` into shifted interval modules.
pub fn interval_type<R: Ring>(x: &ComplexRQ<R>) -> Result<IntervalType> {
    if !x.ring().is_field() {
        return Err(Error::NotAField(x.ring().descriptor().to_string()));
    }
    let q = x.quiver();
    let order = line_order(q)?;
    let n = order.len();
    let mut out = IntervalType::default();
    let Some((lo, hi)) = x.range() else { return Ok(out) };
    for deg in lo..=hi {
        let h = x.homology(deg);
        let rank = |a: isize, b: isize| -> i64 {
            if a < 0 || b >= n as isize || a > b {
                return 0;
            }
            let (a, b) = (a as usize, b as usize);
            if a == b {
                return h.module(order[a]).divisors().free_rank as i64;
            }
            smith_normal_form(&h.path_map(order[a], &line_path(q, &order, a, b))).rank as i64
        };
        for a in 0..n as isize {
            for b in a..n as isize {
                let m = rank(a, b) - rank(a - 1, b) - rank(a, b + 1) + rank(a - 1, b + 1);
                if m > 0 {
                    out.summands.insert((deg, a as usize, b as usize), m as usize);
                }
            }
        }
    }
    Ok(out)
}

/// The interval module `[a, b]` in degree 0.
fn interval_module<R: Ring>(q: &Arc<Quiver>, ring: &R, order: &[usize], a: usize, b: usize) -> Result<ComplexRQ<R>> {
    let mut ranks = vec![0; q.vertex_count()];
    for &v in &order[a..=b] {
        ranks[v] = 1;
    }
    let maps = q
        .arrows()
        .iter()
        .map(|ar| {
            if ranks[ar.source] == 1 && ranks[ar.target] == 1 {
                Matrix::identity(ring, 1)
            } else {
                Matrix::zeros(ring, ranks[ar.target], ranks[ar.source])
            }
        })
        .collect();
    Ok(ComplexRQ::stalk(Representation::free(q.clone(), ring, &ranks, maps)?, 0))
}

/// Every chain map `a -> b` between complexes of free vertex modules.
fn all_chain_maps<R: Ring>(a: &ComplexRQ<R>, b: &ComplexRQ<R>) -> Result<Vec<ChainMap<R>>> {
    let ring = a.ring();
    let q = a.quiver();
    let Some((lo, hi)) = a.range() else { return Ok(Vec::new()) };
    let nv = q.vertex_count();
    let gens = |x: &ComplexRQ<R>, n: i64, v: usize| x.term(n).map_or(0, |t| t.module(v).gens());
    // unknown blocks f^n_v, row-major
    let mut offsets = BTreeMap::new();
    let mut total = 0;
    for n in lo..=hi {
        for v in 0..nv {
            offsets.insert((n, v), total);
            total += gens(b, n, v) * gens(a, n, v);
        }
    }
    let var = |n: i64, v: usize, r: usize, c: usize| offsets[&(n, v)] + r * gens(a, n, v) + c;
    let mut rows: Vec<Vec<R::Elem>> = Vec::new();
    let mut push = |terms: Vec<(usize, R::Elem)>| {
        let mut row = vec![ring.zero(); total];
        for (k, e) in terms {
            row[k] = ring.add(&row[k], &e);
        }
        rows.push(row);
    };
    for n in lo..=hi {
        let (ta, tb) = (a.term_or_zero(n), b.term_or_zero(n));
        // naturality: f_t A_al - B_al f_s = 0
        for (al, arrow) in q.arrows().iter().enumerate() {
            let (s, t) = (arrow.source, arrow.target);
            for r in 0..gens(b, n, t) {
                for c in 0..gens(a, n, s) {
                    let mut terms = Vec::new();
                    for k in 0..gens(a, n, t) {
                        terms.push((var(n, t, r, k), ta.map(al).get(k, c).clone()));
                    }
                    for k in 0..gens(b, n, s) {
                        terms.push((var(n, s, k, c), ring.neg(tb.map(al).get(r, k))));
                    }
                    push(terms);
                }
            }
        }
        // commutation: dB f^n - f^{n+1} dA = 0
        for v in 0..nv {
            let (db, da) = (b.diff(n, v), a.diff(n, v));
            for r in 0..gens(b, n + 1, v) {
                for c in 0..gens(a, n, v) {
                    let mut terms = Vec::new();
                    for k in 0..gens(b, n, v) {
                        terms.push((var(n, v, k, c), db.get(r, k).clone()));
                    }
                    if n < hi {
                        for k in 0..gens(a, n + 1, v) {
                            terms.push((var(n + 1, v, r, k), ring.neg(da.get(k, c))));
                        }
                    }
                    push(terms);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zeros(ring, 0, total)
    } else {
        Matrix::from_rows(ring, rows)?
    };
    let basis = kernel_basis(&system);
    let elems = ring.field_elements().ok_or_else(|| Error::NotAField(ring.descriptor().to_string()))?;
    let count = (elems.len() as u128).checked_pow(basis.cols() as u32).unwrap_or(u128::MAX);
    if count > MAX_ENUMERATION as u128 {
        return Err(Error::Invalid(format!("chain-map space of dimension {} is too large to enumerate", basis.cols())));
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; basis.cols()];
    loop {
        let mut vec = vec![ring.zero(); total];
        for (j, &d) in digits.iter().enumerate() {
            if d != 0 {
                for (i, slot) in vec.iter_mut().enumerate() {
                    *slot = ring.add(slot, &ring.mul(&elems[d], basis.get(i, j)));
                }
            }
        }
        let components = (lo..=hi)
            .map(|n| {
                (0..nv)
                    .map(|v| {
                        let (r, c) = (gens(b, n, v), gens(a, n, v));
                        let o = offsets[&(n, v)];
                        Matrix::from_vec(ring, r, c, vec[o..o + r * c].to_vec()).expect("block shape")
                    })
                    .collect()
            })
            .collect();
        out.push(ChainMap { source: a.clone(), target: b.clone(), components });
        // next digit tuple
        let mut k = 0;
        while k < digits.len() {
            digits[k] += 1;
            if digits[k] < elems.len() {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
        if k == digits.len() {
            break;
        }
    }
    Ok(out)
}

struct Oracle<'a, R: Ring> {
    q: &'a Arc<Quiver>,
    ring: &'a R,
    order: Vec<usize>,
    universe: &'a [ComplexRQ<R>],
    known: BTreeSet<(usize, usize)>,
    resolutions: HashMap<(usize, usize), ComplexRQ<R>>,
}

impl<R: Ring> Oracle<'_, R> {
    fn admit(&self, t: &IntervalType, what: &str) -> Result<BTreeSet<(usize, usize)>> {
        let iv = t.intervals();
        if let Some(&(a, b)) = iv.iter().find(|i| !self.known.contains(i)) {
            return Err(Error::UniverseNotClosed(format!(
                "{what} has a summand [{}, {}] outside the universe",
                self.q.vertex_name(self.order[a]),
                self.q.vertex_name(self.order[b])
            )));
        }
        Ok(iv)
    }

    fn resolution(&mut self, iv: (usize, usize)) -> Result<ComplexRQ<R>> {
        if let Some(r) = self.resolutions.get(&iv) {
            return Ok(r.clone());
        }
        let m = interval_module(self.q, self.ring, &self.order, iv.0, iv.1)?;
        let r = projective_resolution(&m)?.canonicalized();
        self.resolutions.insert(iv, r.clone());
        Ok(r)
    }

    fn close(&mut self, start: BTreeSet<(usize, usize)>) -> Result<BTreeSet<(usize, usize)>> {
        let mut have = start;
        let mut done_pairs = BTreeSet::new();
        let mut done_tensor = BTreeSet::new();
        loop {
            let mut new = BTreeSet::new();
            for &i in &have {
                if done_tensor.insert(i) {
                    let m = interval_module(self.q, self.ring, &self.order, i.0, i.1)?;
                    for u in self.universe {
                        let t = interval_type(&box_tensor_termwise(&m, u))?;
                        new.extend(self.admit(&t, "a tensor product")?);
                    }
                }
                for &j in &have {
                    if !done_pairs.insert((i, j)) {
                        continue;
                    }
                    let (ri, rj) = (self.resolution(i)?, self.resolution(j)?);
                    for k in -2..=2 {
                        for f in all_chain_maps(&ri.shift(k), &rj)? {
                            let t = interval_type(&f.cone())?;
                            new.extend(self.admit(&t, "a cone")?);
                        }
                    }
                }
            }
            let before = have.len();
            have.extend(new);
            if have.len() == before && done_pairs.len() == have.len() * have.len() {
                return Ok(have);
            }
        }
    }
}

/// Indices of the universe elements lying in the thick tensor-ideal
/// generated by `generators`. Needs a finite field and a linearly oriented
/// `A_n`; fails with `UniverseNotClosed` when a tensor product or cone has a
/// summand whose interval never occurs in the universe.
pub fn thick_closure_bruteforce<R: Ring>(generators: &[ComplexRQ<R>], universe: &[ComplexRQ<R>]) -> Result<Vec<usize>> {
    let Some(first) = universe.first().or(generators.first()) else { return Ok(Vec::new()) };
    let (q, ring) = (first.quiver().clone(), first.ring().clone());
    if ring.field_elements().is_none() {
        return Err(Error::NotAField(ring.descriptor().to_string()));
    }
    let order = line_order(&q)?;
    let types = universe.iter().map(interval_type).collect::<Result<Vec<_>>>()?;
    let mut oracle = Oracle {
        q: &q,
        ring: &ring,
        order,
        universe,
        known: types.iter().flat_map(IntervalType::intervals).collect(),
        resolutions: HashMap::new(),
    };
    let mut start = BTreeSet::new();
    for g in generators {
        if g.quiver() != &q || g.ring() != &ring {
            return Err(Error::RingMismatch("generators and universe differ in ring or quiver".into()));
        }
        start.extend(oracle.admit(&interval_type(g)?, "a generator")?);
    }
    let closed = oracle.close(start)?;
    Ok(types
        .iter()
        .enumerate()
        .filter(|(_, t)| t.intervals().is_subset(&closed))
        .map(|(k, _)| k)
        .collect())
}

/// `0`, every `b[s]` and every `b[s] + c[t]` for basis objects `b, c` and
/// shifts `s, t` from `shifts`, without repeated unordered pairs.
pub fn shifted_sums_universe<R: Ring>(basis: &[ComplexRQ<R>], shifts: &[i64]) -> Vec<ComplexRQ<R>> {
    let Some(first) = basis.first() else { return Vec::new() };
    let singles: Vec<ComplexRQ<R>> = basis.iter().flat_map(|b| shifts.iter().map(move |&s| b.shift(s))).collect();
    let mut out = vec![ComplexRQ::zero(first.quiver().clone(), first.ring())];
    out.extend(singles.iter().cloned());
    for (k, x) in singles.iter().enumerate() {
        for y in &singles[k..] {
            out.push(x.direct_sum(y));
        }
    }
    out
}
