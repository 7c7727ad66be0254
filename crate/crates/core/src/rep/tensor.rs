use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::Ring;

use super::functors::check_compatible;
use super::ComplexRQ;

/// Summands `(a, b)` of `(X (x) Y)^n`, ascending in `a`.
pub(crate) fn tensor_blocks<R: Ring>(x: &ComplexRQ<R>, y: &ComplexRQ<R>, n: i64) -> Vec<(i64, i64)> {
    let (Some((xl, xh)), Some((yl, yh))) = (x.range(), y.range()) else { return Vec::new() };
    (xl..=xh).filter(|a| (yl..=yh).contains(&(n - a))).map(|a| (a, n - a)).collect()
}

/// Derived vertexwise tensor product.
///
/// Computed termwise, which is exact when one factor has projective vertex
/// modules in every degree; otherwise `NotDerivable`.
pub fn box_tensor<R: Ring>(x: &ComplexRQ<R>, y: &ComplexRQ<R>) -> Result<ComplexRQ<R>> {
    check_compatible(x, y)?;
    if !(x.is_vertexwise_projective() || y.is_vertexwise_projective()) {
        return Err(Error::NotDerivable("neither factor has projective vertex modules".into()));
    }
    Ok(box_tensor_termwise(x, y))
}

/// Termwise tensor product with Koszul signs `d(x (x) y) = dx (x) y +
/// (-1)^|x| x (x) dy`.
pub fn box_tensor_termwise<R: Ring>(x: &ComplexRQ<R>, y: &ComplexRQ<R>) -> ComplexRQ<R> {
    let q = x.quiver().clone();
    let ring = x.ring();
    let (Some((xl, xh)), Some((yl, yh))) = (x.range(), y.range()) else {
        return ComplexRQ::zero(q, ring);
    };
    let (lo, hi) = (xl + yl, xh + yh);
    let terms = (lo..=hi)
        .map(|n| {
            let blocks = tensor_blocks(x, y, n);
            let mut acc: Option<super::Representation<R>> = None;
            for (a, b) in blocks {
                let t = x.term_or_zero(a).tensor(&y.term_or_zero(b));
                acc = Some(match acc {
                    None => t,
                    Some(s) => s.direct_sum(&t),
                });
            }
            acc.unwrap_or_else(|| super::Representation::zero(q.clone(), ring))
        })
        .collect();
    let minus = ring.from_i64(-1);
    let diffs = (lo..hi)
        .map(|n| {
            let src = tensor_blocks(x, y, n);
            let tgt = tensor_blocks(x, y, n + 1);
            (0..q.vertex_count())
                .map(|v| {
                    let size = |a: i64, b: i64| x.vertex_module(a, v).gens() * y.vertex_module(b, v).gens();
                    let offsets = |bl: &[(i64, i64)]| {
                        let mut off = Vec::new();
                        let mut acc = 0;
                        for &(a, b) in bl {
                            off.push(acc);
                            acc += size(a, b);
                        }
                        (off, acc)
                    };
                    let (soff, stotal) = offsets(&src);
                    let (toff, ttotal) = offsets(&tgt);
                    let mut m = Matrix::zeros(ring, ttotal, stotal);
                    for (s, &(a, b)) in src.iter().enumerate() {
                        let ix = Matrix::identity(ring, x.vertex_module(a, v).gens());
                        let iy = Matrix::identity(ring, y.vertex_module(b, v).gens());
                        if let Some(t) = tgt.iter().position(|&p| p == (a + 1, b)) {
                            m.set_block(toff[t], soff[s], &x.diff(a, v).kron(&iy));
                        }
                        if let Some(t) = tgt.iter().position(|&p| p == (a, b + 1)) {
                            let mut blk = ix.kron(&y.diff(b, v));
                            if a.rem_euclid(2) == 1 {
                                blk = blk.scale(&minus);
                            }
                            m.set_block(toff[t], soff[s], &blk);
                        }
                    }
                    m
                })
                .collect()
        })
        .collect();
    ComplexRQ::new_unchecked(q, ring, lo, terms, diffs)
}
