//! Seeded random inputs for property checks and the verification suite.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::Matrix;
use crate::quiver::Quiver;
use crate::rep::{ComplexRQ, Representation};
use crate::ring::spec::{enumerate_primes, SpClosedSet};
use crate::ring::Ring;
use crate::tstruct::Filtration;
use crate::tt::QSupport;

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random acyclic quiver on `n` vertices: each pair `i < j` gets an arrow
/// `i -> j` with probability `p`.
pub fn random_acyclic_quiver(rng: &mut GenRng, n: usize, p: f64) -> Quiver {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Quiver::from_edges(n, &edges).expect("forward edges are acyclic")
}

/// Direct sum of the projectives `P(v)` for `v` in `vs`.
fn projective_sum<R: Ring>(q: &Arc<Quiver>, ring: &R, vs: &[usize]) -> Representation<R> {
    vs.iter().fold(Representation::zero(q.clone(), ring), |acc, &v| {
        acc.direct_sum(&Representation::projective(q.clone(), ring, v).expect("vertex in range"))
    })
}

/// A random map `sum P(src) -> sum P(tgt)`, per vertex.
fn random_projective_map<R: Ring>(
    rng: &mut GenRng,
    q: &Arc<Quiver>,
    ring: &R,
    src: &[usize],
    tgt: &[usize],
    size: u32,
) -> Vec<Matrix<R>> {
    let offsets = |vs: &[usize], k: usize| -> Vec<usize> {
        let mut o = vec![0];
        for &v in vs {
            o.push(o.last().unwrap() + q.paths(v, k).len());
        }
        o
    };
    let mut mats: Vec<Matrix<R>> = (0..q.vertex_count())
        .map(|k| Matrix::zeros(ring, *offsets(tgt, k).last().unwrap(), *offsets(src, k).last().unwrap()))
        .collect();
    for (a, &j) in src.iter().enumerate() {
        for (b, &i) in tgt.iter().enumerate() {
            let ws = q.paths(i, j);
            if ws.is_empty() {
                continue;
            }
            let coeffs: Vec<R::Elem> = ws.iter().map(|_| ring.sample(rng, size)).collect();
            for (k, m) in Representation::projective_map(q, ring, j, i, &coeffs).iter().enumerate() {
                mats[k].add_block(offsets(tgt, k)[b], offsets(src, k)[a], m);
            }
        }
    }
    mats
}

/// A random two-term complex of projectives `P -> P'` in degrees `-1, 0`.
pub fn random_two_term<R: Ring>(rng: &mut GenRng, q: &Arc<Quiver>, ring: &R, max_summands: usize, size: u32) -> ComplexRQ<R> {
    let n = q.vertex_count();
    let pick = |rng: &mut GenRng| -> Vec<usize> {
        let k = rng.gen_range(0..=max_summands);
        let mut vs: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
        vs.sort_unstable();
        vs
    };
    let src = pick(rng);
    let tgt = pick(rng);
    let d = random_projective_map(rng, q, ring, &src, &tgt, size);
    ComplexRQ::two_term(projective_sum(q, ring, &src), projective_sum(q, ring, &tgt), d, -1)
        .expect("two-term complexes have d^2 = 0")
}

/// A random perfect complex: a sum of one or two shifted two-term complexes
/// with homology in degrees `-3..=3`.
pub fn random_perfect<R: Ring>(rng: &mut GenRng, q: &Arc<Quiver>, ring: &R, size: u32) -> ComplexRQ<R> {
    let parts = rng.gen_range(1..=2);
    let mut x = ComplexRQ::zero(q.clone(), ring);
    for _ in 0..parts {
        let t = random_two_term(rng, q, ring, 2, size);
        let s = rng.gen_range(-2..=2);
        x = x.direct_sum(&t.shift(s));
    }
    x
}

/// A random representation with free vertex modules of rank at most
/// `max_rank` and random arrow matrices.
pub fn random_representation<R: Ring>(
    rng: &mut GenRng,
    q: &Arc<Quiver>,
    ring: &R,
    max_rank: usize,
    size: u32,
) -> Representation<R> {
    let ranks: Vec<usize> = (0..q.vertex_count()).map(|_| rng.gen_range(0..=max_rank)).collect();
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (ranks[a.target], ranks[a.source]);
            let data = (0..r * c).map(|_| ring.sample(rng, size)).collect();
            Matrix::from_vec(ring, r, c, data).expect("shape")
        })
        .collect();
    Representation::free(q.clone(), ring, &ranks, maps).expect("free modules accept any maps")
}

/// A random finite-type support over the prime window `bound`: each vertex
/// is everything with probability 1/4, else a random set of window primes.
pub fn random_qsupport<R: Ring>(rng: &mut GenRng, q: &Quiver, ring: &R, bound: u64) -> QSupport<R> {
    let window: Vec<R::Elem> = enumerate_primes(ring, bound).into_iter().filter_map(|p| p.generator().cloned()).collect();
    let parts = (0..q.vertex_count())
        .map(|_| {
            if rng.gen_bool(0.25) {
                return SpClosedSet::all(ring);
            }
            let k = rng.gen_range(0..=window.len());
            let pts: Vec<R::Elem> = window.choose_multiple(rng, k).cloned().collect();
            SpClosedSet::finite(ring, pts).expect("window primes are maximal")
        })
        .collect();
    QSupport::new(ring, parts).expect("one ring")
}

/// A random valid filtration: a decreasing chain obtained by intersecting
/// random supports, with jumps among the indices `-2..=3`.
pub fn random_filtration<R: Ring>(rng: &mut GenRng, q: &Quiver, ring: &R, bound: u64) -> Filtration<R> {
    let nv = q.vertex_count();
    let mut cur = random_qsupport(rng, q, ring, bound);
    let tail_low = cur.clone();
    let mut entries = Vec::new();
    for n in -2..=3 {
        if rng.gen_bool(0.5) {
            cur = cur.intersection(&random_qsupport(rng, q, ring, bound)).expect("one ring");
            entries.push((n, cur.clone()));
        }
    }
    let tail_high = if rng.gen_bool(0.5) { QSupport::empty(ring, nv) } else { cur.clone() };
    if entries.is_empty() && tail_high != tail_low {
        entries.push((0, tail_low.clone()));
    }
    Filtration::new(ring, nv, tail_low, entries, tail_high).expect("decreasing by construction")
}
