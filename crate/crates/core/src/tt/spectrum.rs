use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::Result;
use crate::quiver::Quiver;
use crate::rep::{koszul_at, vertex_simple, ComplexRQ};
use crate::ring::spec::enumerate_primes;
use crate::ring::Ring;

use super::{compact_support, BalmerPoint, QSupport};

/// Membership of one detecting object `D(r, i)` in every enumerated prime.
#[derive(Debug, Clone)]
pub struct DetectingRow<R: Ring> {
    pub element: R::Elem,
    pub vertex: usize,
    /// `member[k]`: `D(r, i)` lies in the prime `points[k]`.
    pub member: Vec<bool>,
}

/// The enumerated window of the spectrum with its inclusion order.
#[derive(Debug, Clone)]
pub struct Spectrum<R: Ring> {
    pub ring: R,
    pub quiver: Arc<Quiver>,
    pub points: Vec<BalmerPoint<R>>,
    /// `leq[a][b]`: the prime `points[a]` is contained in `points[b]`.
    pub leq: Vec<Vec<bool>>,
    pub detecting: Vec<DetectingRow<R>>,
}

/// `D(r, i) = i_x K((r)) + sum over l != i of U(l)`: it lies in `S_{q,j}`
/// exactly when `j = i` and `r` is not in `q`.
pub fn detecting_object<R: Ring>(q: &Arc<Quiver>, ring: &R, r: &R::Elem, i: usize) -> Result<ComplexRQ<R>> {
    let mut d = koszul_at(q, ring, i, std::slice::from_ref(r))?;
    for l in 0..q.vertex_count() {
        if l != i {
            d = d.direct_sum(&vertex_simple(q, ring, l)?);
        }
    }
    Ok(d)
}

/// Enumerates `Spec(R) x Q_0` over the prime window `bound`. The order is
/// computed from membership of the detecting objects `D(r, i)`, `r` ranging
/// over `1` and the window generators: one prime is contained in another iff
/// every detecting object in the first lies in the second.
pub fn spc_enumerate<R: Ring>(ring: &R, q: &Arc<Quiver>, bound: u64) -> Result<Spectrum<R>> {
    let primes = enumerate_primes(ring, bound);
    let mut points = Vec::new();
    for p in &primes {
        for v in 0..q.vertex_count() {
            points.push(BalmerPoint { prime: p.clone(), vertex: v });
        }
    }
    let mut elements = vec![ring.one()];
    elements.extend(primes.iter().filter_map(|p| p.generator().cloned()));

    let mut detecting = Vec::new();
    for r in &elements {
        for i in 0..q.vertex_count() {
            let supp: QSupport<R> = compact_support(&detecting_object(q, ring, r, i)?)?;
            let member = points.iter().map(|pt| supp.contains(pt).map(|c| !c)).collect::<Result<_>>()?;
            detecting.push(DetectingRow { element: r.clone(), vertex: i, member });
        }
    }
    let n = points.len();
    let leq = (0..n)
        .map(|a| (0..n).map(|b| detecting.iter().all(|row| !row.member[a] || row.member[b])).collect())
        .collect();
    Ok(Spectrum { ring: ring.clone(), quiver: q.clone(), points, leq, detecting })
}

impl<R: Ring> Spectrum<R> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Covering pairs `(a, b)`: `a < b` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.points.len();
        let lt = |a: usize, b: usize| a != b && self.leq[a][b] && !self.leq[b][a];
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Whether every detecting row matches `j = i and r not in q`.
    pub fn detecting_table_certified(&self) -> bool {
        self.detecting.iter().all(|row| {
            row.member
                .iter()
                .zip(&self.points)
                .all(|(&m, pt)| m == (pt.vertex == row.vertex && !pt.prime.contains_elem(&row.element)))
        })
    }

    pub fn label(&self, k: usize) -> String {
        self.points[k].label(&self.quiver)
    }

    /// Graphviz rendering with one edge per covering pair, smaller prime first.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph spc {\n");
        for k in 0..self.points.len() {
            let _ = writeln!(s, "  \"{}\";", self.label(k));
        }
        for (a, b) in self.covers() {
            let _ = writeln!(s, "  \"{}\" -> \"{}\";", self.label(a), self.label(b));
        }
        s.push_str("}\n");
        s
    }

    /// Plain table: points, covering relations and the detecting table.
    pub fn table(&self) -> String {
        let mut s = format!("points: {}\n", self.points.len());
        for k in 0..self.points.len() {
            let _ = writeln!(s, "  {}", self.label(k));
        }
        s.push_str("covers:\n");
        for (a, b) in self.covers() {
            let _ = writeln!(s, "  {} < {}", self.label(a), self.label(b));
        }
        s.push_str("detecting objects:\n");
        for row in &self.detecting {
            let bits: String = row.member.iter().map(|&m| if m { '1' } else { '.' }).collect();
            let _ = writeln!(
                s,
                "  D({}, {}) {bits}",
                self.ring.format_elem(&row.element),
                self.quiver.vertex_name(row.vertex)
            );
        }
        s
    }
}
