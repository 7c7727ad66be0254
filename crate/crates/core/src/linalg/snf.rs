//! Smith normal form with transformation certificates.

use num_bigint::BigUint;

use crate::ring::Ring;

use super::Matrix;

/// `u * m * v = d` with `d` diagonal and `d[i] | d[i+1]`.
///
/// `u_inv` and `v_inv` are the inverses of `u` and `v`, tracked alongside so
/// no inversion is ever needed.
#[derive(Debug, Clone)]
pub struct SmithForm<R: Ring> {
    pub d: Matrix<R>,
    pub u: Matrix<R>,
    pub u_inv: Matrix<R>,
    pub v: Matrix<R>,
    pub v_inv: Matrix<R>,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

impl<R: Ring> SmithForm<R> {
    pub fn diagonal(&self) -> Vec<R::Elem> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

/// Which transformation matrices to track.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Track {
    pub left: bool,
    pub right: bool,
}

impl Track {
    pub const ALL: Track = Track { left: true, right: true };
    pub const LEFT: Track = Track { left: true, right: false };
    pub const RIGHT: Track = Track { left: false, right: true };
    pub const NONE: Track = Track { left: false, right: false };
}

/// Smith normal form over the ring of `m`.
///
/// For `Z/n` the form is computed on the integer lift and reduced; diagonal
/// entries are then normalized to `gcd(d, n)`, the canonical associate in
/// `Z/n`.
pub fn smith_normal_form<R: Ring>(m: &Matrix<R>) -> SmithForm<R> {
    let mut s = smith_lifted(m, Track::ALL);
    let ring = m.ring().clone();
    let Some(n) = ring.modulus() else { return s };
    // d_i = g * w modulo n with w a unit; fold w^{-1} into v.
    let mut rank = 0;
    for i in 0..s.rank {
        let d = s.d.get(i, i).clone();
        let g = ring.gcd(&d, &n);
        if ring.associates(&g, &n) {
            s.d.set(i, i, ring.zero());
            continue;
        }
        rank += 1;
        // w = d/g is a unit modulo n/g; lift it to a unit modulo n.
        let step = ring.exact_div(&n, &g).expect("gcd divides");
        let mut w = ring.exact_div(&d, &g).expect("gcd divides");
        while !ring.is_unit(&ring.gcd(&w, &n)) {
            w = ring.add(&w, &step);
        }
        let w_inv = inverse_mod(&ring, &w, &n);
        s.d.set(i, i, g);
        s.v.scale_col(i, &w_inv);
        s.v_inv.scale_row(i, &w);
    }
    s.rank = rank;
    s.d = s.d.reduced();
    s.u = s.u.reduced();
    s.u_inv = s.u_inv.reduced();
    s.v = s.v.reduced();
    s.v_inv = s.v_inv.reduced();
    s
}

/// Inverse of `w` modulo `n` by the extended Euclidean algorithm.
fn inverse_mod<R: Ring>(ring: &R, w: &R::Elem, n: &R::Elem) -> R::Elem {
    let (mut r0, mut r1) = (ring.reduce(w), n.clone());
    let (mut s0, mut s1) = (ring.one(), ring.zero());
    while !ring.is_zero(&r1) {
        let (q, r) = ring.div_rem(&r0, &r1);
        r0 = r1;
        r1 = r;
        let s = ring.sub(&s0, &ring.mul(&q, &s1));
        s0 = s1;
        s1 = s;
    }
    debug_assert!(ring.is_unit(&r0), "not invertible modulo n");
    ring.reduce(&ring.mul(&s0, &ring.inverse(&r0)))
}

/// Smith form over the computational ring (integers for `Z/n`), no reduction.
pub(crate) fn smith_lifted<R: Ring>(m: &Matrix<R>, track: Track) -> SmithForm<R> {
    let ring = m.ring().clone();
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let id_r = |n| if track.left { Matrix::identity(&ring, n) } else { Matrix::zeros(&ring, 0, 0) };
    let id_c = |n| if track.right { Matrix::identity(&ring, n) } else { Matrix::zeros(&ring, 0, 0) };
    let mut u = id_r(rows);
    let mut u_inv = id_r(rows);
    let mut v = id_c(cols);
    let mut v_inv = id_c(cols);
    let minus = |q: &R::Elem| ring.neg(q);

    let mut t = 0;
    'outer: while t < rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_norm_pivot(&a, t) else { break 'outer };
            if pi != t {
                a.swap_rows(t, pi);
                if track.left {
                    u.swap_rows(t, pi);
                    u_inv.swap_cols(t, pi);
                }
            }
            if pj != t {
                a.swap_cols(t, pj);
                if track.right {
                    v.swap_cols(t, pj);
                    v_inv.swap_rows(t, pj);
                }
            }
            let pivot = a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..rows {
                if ring.is_zero(a.get(i, t)) {
                    continue;
                }
                let (q, r) = ring.div_rem(a.get(i, t), &pivot);
                let mq = minus(&q);
                a.add_row_multiple(i, t, &mq);
                if track.left {
                    u.add_row_multiple(i, t, &mq);
                    u_inv.add_col_multiple(t, i, &q);
                }
                dirty |= !ring.is_zero(&r);
            }
            for j in t + 1..cols {
                if ring.is_zero(a.get(t, j)) {
                    continue;
                }
                let (q, r) = ring.div_rem(a.get(t, j), &pivot);
                let mq = minus(&q);
                a.add_col_multiple(j, t, &mq);
                if track.right {
                    v.add_col_multiple(j, t, &mq);
                    v_inv.add_row_multiple(t, j, &q);
                }
                dirty |= !ring.is_zero(&r);
            }
            if dirty {
                continue;
            }
            // divisibility of the remaining block by the pivot
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !ring.divides(&pivot, a.get(i, j))));
            if let Some(i) = bad {
                let one = ring.one();
                a.add_row_multiple(t, i, &one);
                if track.left {
                    u.add_row_multiple(t, i, &one);
                    u_inv.add_col_multiple(i, t, &ring.neg(&one));
                }
                continue;
            }
            break;
        }
        let w = ring.normalizer(a.get(t, t));
        if w != ring.one() {
            a.scale_row(t, &w);
            if track.left {
                u.scale_row(t, &w);
                u_inv.scale_col(t, &ring.inverse(&w));
            }
        }
        t += 1;
    }
    SmithForm { d: a, u, u_inv, v, v_inv, rank: t }
}

/// Smallest-norm nonzero entry in the block `[t.., t..]`, ties to lowest row
/// then column.
fn min_norm_pivot<R: Ring>(a: &Matrix<R>, t: usize) -> Option<(usize, usize)> {
    let ring = a.ring();
    let mut best: Option<(BigUint, usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a.get(i, j);
            if ring.is_zero(x) {
                continue;
            }
            let n = ring.norm(x);
            if best.as_ref().is_none_or(|(b, _, _)| n < *b) {
                best = Some((n, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}
