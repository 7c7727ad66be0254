use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quiver::Quiver;
use crate::ring::Ring;

use super::{ComplexR, ComplexRQ, Representation};

/// Size-`j` subsets of `0..k` in lexicographic order.
fn subsets(k: usize, j: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, j: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == j {
            out.push(cur.clone());
            return;
        }
        for s in start..k {
            cur.push(s);
            rec(s + 1, k, j, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, j, &mut Vec::new(), &mut out);
    out
}

/// Koszul complex on `g_1, ..., g_k` in degrees `[-k, 0]`, with
/// `d(e_S) = sum_pos (-1)^pos g_{S[pos]} e_{S minus S[pos]}`.
pub fn koszul_complex<R: Ring>(ring: &R, generators: &[R::Elem]) -> Result<ComplexR<R>> {
    if generators.is_empty() {
        return Err(Error::Invalid("Koszul complex needs at least one generator".into()));
    }
    if generators.iter().any(|g| ring.is_zero(&ring.reduce(g))) {
        return Err(Error::Invalid("Koszul generators must be nonzero".into()));
    }
    let k = generators.len();
    let pt = Arc::new(Quiver::point());
    let bases: Vec<Vec<Vec<usize>>> = (0..=k).map(|j| subsets(k, j)).collect();
    // term at degree -j has basis bases[j]; store ascending in degree
    let terms = (0..=k)
        .rev()
        .map(|j| Representation::free(pt.clone(), ring, &[bases[j].len()], Vec::new()).expect("free"))
        .collect();
    let diffs = (1..=k)
        .rev()
        .map(|j| {
            let mut m = Matrix::zeros(ring, bases[j - 1].len(), bases[j].len());
            for (c, s) in bases[j].iter().enumerate() {
                for (pos, &gi) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(pos);
                    let r = bases[j - 1].iter().position(|t| *t == rest).expect("face");
                    let g = if pos % 2 == 1 { ring.neg(&generators[gi]) } else { generators[gi].clone() };
                    m.set(r, c, g);
                }
            }
            vec![m]
        })
        .collect();
    ComplexRQ::new(pt, ring, -(k as i64), terms, diffs)
}
