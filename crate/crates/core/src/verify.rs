//! The seeded invariant suite behind `pathtt verify` and the acceptance
//! tests. Every case draws from its own stream, so cases run in parallel and
//! the report does not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng as _;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gen::{self, GenRng};
use crate::linalg::{kernel_basis, smith_normal_form, Matrix};
use crate::quiver::{Quiver, VertexSet};
use crate::rep::{
    box_tensor, chom_formula, eval_vertex, homology_equivalent, i_times, kan_extend, koszul_complex, projective_resolution,
    vertex_simple, ComplexR, ComplexRQ, KanDirection, Representation,
};
use crate::ring::spec::enumerate_primes;
use crate::ring::{Integers, PrimeField, Ring};
use crate::tstruct::{
    aisle_membership, c_aisle_decompose, c_aisle_reassemble, check_filtration_system, filtration_from_objects,
    serre_inverse, serre_translation, Filtration, FiltrationSystem,
};
use crate::tt::{
    compact_support, ideal_generators, translate_classification, untranslate, xi_zero_test, BalmerPoint,
    ClassificationMode,
};

/// A property family; each case of a family is an independent seeded check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Smith,
    Koszul,
    Classification,
    KanIprop,
    Adjunction,
    Resolution,
    Aisle,
    AisleRoundtrip,
    FiltrationSystem,
    Kunneth,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Smith,
        Family::Koszul,
        Family::Classification,
        Family::KanIprop,
        Family::Adjunction,
        Family::Resolution,
        Family::Aisle,
        Family::AisleRoundtrip,
        Family::FiltrationSystem,
        Family::Kunneth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Smith => "smith",
            Family::Koszul => "koszul",
            Family::Classification => "classification",
            Family::KanIprop => "kan-iprop",
            Family::Adjunction => "adjunction",
            Family::Resolution => "resolution",
            Family::Aisle => "aisle",
            Family::AisleRoundtrip => "aisle-roundtrip",
            Family::FiltrationSystem => "filtration-system",
            Family::Kunneth => "kunneth",
        }
    }

    fn check(self, rng: &mut GenRng, index: usize) -> Result<()> {
        match self {
            Family::Smith => smith_case(rng),
            Family::Koszul => koszul_case(index),
            Family::Classification => classification_case(rng),
            Family::KanIprop => {
                if index % 2 == 0 {
                    kan_iprop_case(rng, &PrimeField::new(2)?)
                } else {
                    kan_iprop_case(rng, &Integers)
                }
            }
            Family::Adjunction => adjunction_case(rng),
            Family::Resolution => resolution_case(rng),
            Family::Aisle => aisle_case(rng),
            Family::AisleRoundtrip => aisle_roundtrip_case(rng),
            Family::FiltrationSystem => filtration_system_case(rng, index),
            Family::Kunneth => kunneth_case(rng),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown property family {s:?}")))
    }
}

/// Outcome of one case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub family: Family,
    pub index: usize,
    /// `None` on success, otherwise the violated property.
    pub failure: Option<String>,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn id(&self) -> String {
        format!("{}#{}", self.family, self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub seed: u64,
    pub cases: usize,
    /// Sorted by family, then index.
    pub results: Vec<CaseResult>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(CaseResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    /// `(family, passed, total)` per family.
    pub fn summary(&self) -> Vec<(Family, usize, usize)> {
        let mut m: BTreeMap<Family, (usize, usize)> = BTreeMap::new();
        for r in &self.results {
            let e = m.entry(r.family).or_default();
            e.0 += usize::from(r.passed());
            e.1 += 1;
        }
        m.into_iter().map(|(f, (p, t))| (f, p, t)).collect()
    }

    /// Plain-text report: one line per family, then one per failing case.
    pub fn to_text(&self) -> String {
        let mut out = format!("seed {} cases {}\n", self.seed, self.cases);
        for (f, p, t) in self.summary() {
            let verdict = if p == t { "PASS" } else { "FAIL" };
            out.push_str(&format!("{verdict} {f:<18} {p}/{t}\n"));
        }
        for r in self.failures() {
            out.push_str(&format!("failed {}: {}\n", r.id(), r.failure.as_deref().unwrap_or("")));
        }
        out
    }
}

/// The stream for one case: the seed picks the key, the case id the stream.
fn case_rng(seed: u64, family: Family, index: usize) -> GenRng {
    let mut rng = gen::rng(seed);
    rng.set_stream(((family as u64) << 32) | index as u64);
    rng
}

pub fn run_case(seed: u64, family: Family, index: usize) -> CaseResult {
    let mut rng = case_rng(seed, family, index);
    let failure = match family.check(&mut rng, index) {
        Ok(()) => None,
        Err(e) => Some(e.to_string()),
    };
    CaseResult { family, index, failure }
}

/// Runs `cases` cases of each family in `families`, in parallel.
pub fn run_families(seed: u64, cases: usize, families: &[Family]) -> VerifyReport {
    let ids: Vec<(Family, usize)> = families.iter().flat_map(|&f| (0..cases).map(move |i| (f, i))).collect();
    let mut results: Vec<CaseResult> = ids.into_par_iter().map(|(f, i)| run_case(seed, f, i)).collect();
    results.sort_by_key(|r| (r.family, r.index));
    VerifyReport { seed, cases, results }
}

/// The whole suite.
pub fn run_suite(seed: u64, cases: usize) -> VerifyReport {
    run_families(seed, cases, &Family::ALL)
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Invalid(what()))
    }
}

fn smith_case(rng: &mut GenRng) -> Result<()> {
    let z = Integers;
    let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
    let data = (0..r * c).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
    let m = Matrix::from_vec(&z, r, c, data)?;
    let s = smith_normal_form(&m);
    ensure(s.u.mul(&m).mul(&s.v) == s.d, || format!("u m v != d for {m:?}"))?;
    let diag = s.diagonal();
    for w in diag.windows(2) {
        ensure(z.divides(&w[0], &w[1]), || format!("divisor chain broken: {diag:?}"))?;
    }
    for (i, j) in (0..r).flat_map(|i| (0..c).map(move |j| (i, j))) {
        ensure(i == j || z.is_zero(s.d.get(i, j)), || "d is not diagonal".into())?;
    }
    Ok(())
}

/// All ordered prime pairs `(a, b)` with `a, b <= 7`, cycled by index.
fn koszul_case(index: usize) -> Result<()> {
    let z = Integers;
    let primes = [2i64, 3, 5, 7];
    let (a, b) = (primes[index % 4], primes[(index / 4) % 4]);
    let (ga, gb) = (BigInt::from(a), BigInt::from(b));
    let q = Arc::new(Quiver::point());
    let ka = i_times(&koszul_complex(&z, &[ga.clone()])?, &q, 0)?;
    let kb = i_times(&koszul_complex(&z, &[gb.clone()])?, &q, 0)?;
    let prod = box_tensor(&ka, &kb)?;
    let sum = i_times(&koszul_complex(&z, &[ga, gb])?, &q, 0)?;
    ensure(homology_equivalent(&prod, &sum), || format!("K(({a})) (x) K(({b})) differs from K(({a}, {b}))"))?;
    if a != b {
        ensure(prod.is_acyclic(), || format!("K(({a})) (x) K(({b})) is not acyclic"))?;
    }
    Ok(())
}

fn classification_case(rng: &mut GenRng) -> Result<()> {
    let z = Integers;
    let q = Arc::new(Quiver::d4());
    let s = gen::random_qsupport(rng, &q, &z, 7);
    let gens = ideal_generators(&q, &s)?;
    let mut supp = crate::tt::QSupport::empty(&z, q.vertex_count());
    for g in &gens {
        supp = supp.union(&compact_support(g)?)?;
    }
    ensure(supp == s, || format!("generators of {s:?} have support {supp:?}"))?;
    for mode in [ClassificationMode::PerVertex, ClassificationMode::PosetMap] {
        let t = translate_classification(&s, mode)?;
        let back = untranslate(&z, q.vertex_count(), &t)?;
        ensure(back == s, || format!("{mode:?} roundtrip sent {s:?} to {back:?}"))?;
    }
    Ok(())
}

fn small_quiver(rng: &mut GenRng) -> Arc<Quiver> {
    let n = rng.gen_range(2..=3);
    Arc::new(gen::random_acyclic_quiver(rng, n, 0.6))
}

fn copies<R: Ring>(m: &ComplexR<R>, k: usize) -> ComplexR<R> {
    (0..k).fold(ComplexRQ::zero(m.quiver().clone(), m.ring()), |acc, _| acc.direct_sum(m))
}

fn kan_iprop_case<R: Ring>(rng: &mut GenRng, ring: &R) -> Result<()> {
    let q = small_quiver(rng);
    let nv = q.vertex_count();
    let x = gen::random_perfect(rng, &q, ring, 3);
    let y = gen::random_perfect(rng, &q, ring, 3);
    let i = rng.gen_range(0..nv);
    let j = rng.gen_range(0..nv);
    let xi = eval_vertex(&x, i)?;
    let yi = eval_vertex(&y, i)?;

    // i_x i^* X = U(i) (x) X
    let lhs = i_times(&xi, &q, i)?;
    let rhs = box_tensor(&vertex_simple(&q, ring, i)?, &x)?;
    ensure(homology_equivalent(&lhs, &rhs), || format!("i_x i^* X != X(i) at vertex {i}"))?;

    // j^* i_x M = M or 0
    let back = eval_vertex(&lhs, j)?;
    if i == j {
        ensure(homology_equivalent(&back, &xi), || "i^* i_x M != M".into())?;
    } else {
        ensure(back.is_acyclic(), || format!("j^* i_x M != 0 for {j} != {i}"))?;
    }

    // i^*(X (x) Y) = i^*X (x) i^*Y
    let xy = box_tensor(&x, &y)?;
    ensure(homology_equivalent(&eval_vertex(&xy, i)?, &box_tensor(&xi, &yi)?), || {
        format!("evaluation at {i} is not monoidal")
    })?;

    // i_x(M (x) N) = i_x M (x) i_x N
    let lhs = i_times(&box_tensor(&xi, &yi)?, &q, i)?;
    let rhs = box_tensor(&i_times(&xi, &q, i)?, &i_times(&yi, &q, i)?)?;
    ensure(homology_equivalent(&lhs, &rhs), || "i_x is not monoidal".into())?;

    // j^* i_! M = sum over paths(i, j); j^* i_* M = product over paths(j, i)
    let left = eval_vertex(&kan_extend(&xi, &q, i, KanDirection::Left)?, j)?;
    ensure(homology_equivalent(&left, &copies(&xi, q.paths(i, j).len())), || {
        format!("j^* i_! M has the wrong size for i = {i}, j = {j}")
    })?;
    let right = eval_vertex(&kan_extend(&xi, &q, i, KanDirection::Right)?, j)?;
    ensure(homology_equivalent(&right, &copies(&xi, q.paths(j, i).len())), || {
        format!("j^* i_* M has the wrong size for i = {i}, j = {j}")
    })
}

/// `dim Hom_RQ(A, B)` over a field, by solving the naturality equations
/// `f_t A_a = B_a f_s` for vertexwise free `A`, `B`.
pub fn hom_dimension<R: Ring>(a: &Representation<R>, b: &Representation<R>) -> Result<usize> {
    let ring = a.ring();
    if !ring.is_field() {
        return Err(Error::NotAField(ring.descriptor().to_string()));
    }
    let (a, _, _) = a.canonicalized();
    let (b, _, _) = b.canonicalized();
    if !a.is_vertexwise_free_presented() || !b.is_vertexwise_free_presented() {
        return Err(Error::Invalid("hom dimension needs free vertex modules".into()));
    }
    let q = a.quiver();
    let (da, db) = (a.dims(), b.dims());
    let mut offset = vec![0; q.vertex_count()];
    let mut unknowns = 0;
    for v in 0..q.vertex_count() {
        offset[v] = unknowns;
        unknowns += da[v] * db[v];
    }
    let mut rows = Vec::new();
    for (k, arrow) in q.arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let mut row = Matrix::zeros(ring, db[t] * da[s], unknowns);
        row.add_block(0, offset[t], &a.map(k).transpose().kron(&Matrix::identity(ring, db[t])));
        row.add_block(0, offset[s], &Matrix::identity(ring, da[s]).kron(b.map(k)).neg());
        rows.push(row);
    }
    let system = Matrix::vstack(ring, unknowns, &rows.iter().collect::<Vec<_>>());
    if system.rows() == 0 {
        return Ok(unknowns);
    }
    Ok(kernel_basis(&system).cols())
}

fn adjunction_case(rng: &mut GenRng) -> Result<()> {
    let f3 = PrimeField::new(3)?;
    let q = Arc::new(Quiver::linear_a(3));
    let [x, y, z] = [0; 3].map(|_| gen::random_representation(rng, &q, &f3, 2, 3));
    let lhs = hom_dimension(&x.tensor(&y), &z)?;
    let rhs = hom_dimension(&x, &chom_formula(&y, &z)?)?;
    ensure(lhs == rhs, || format!("dim Hom(X (x) Y, Z) = {lhs} but dim Hom(X, chom(Y, Z)) = {rhs}"))
}

fn resolution_case(rng: &mut GenRng) -> Result<()> {
    let q = small_quiver(rng);
    let check = |x: ComplexRQ<_>| -> Result<()> {
        let p = projective_resolution(&x)?;
        ensure(p.is_perfect(), || "resolution is not perfect".into())?;
        ensure(homology_equivalent(&p, &x), || "resolution changed the homology".into())
    };
    check(ComplexRQ::stalk(gen::random_representation(rng, &q, &Integers, 2, 4), 0))?;
    let f2 = PrimeField::new(2)?;
    let p = projective_resolution(&ComplexRQ::stalk(gen::random_representation(rng, &q, &f2, 2, 2), 0))?;
    ensure(p.is_perfect(), || "resolution over F2 is not perfect".into())
}

fn aisle_case(rng: &mut GenRng) -> Result<()> {
    let z = Integers;
    let q = Arc::new(Quiver::linear_a(2));
    let x = gen::random_perfect(rng, &q, &z, 4);
    let std = Filtration::standard(&z, 2);
    let expected = x.homology_degrees().iter().all(|&n| n <= 0);
    ensure(aisle_membership(&x, &std)? == expected, || "standard aisle membership disagrees with homology".into())?;
    let y = gen::random_perfect(rng, &q, &z, 4);
    let f = filtration_from_objects(&z, &q, &[x.clone(), y.clone()])?;
    ensure(aisle_membership(&x, &f)? && aisle_membership(&y, &f)?, || "a generator is outside its aisle".into())?;
    if aisle_membership(&y, &std)? {
        ensure(aisle_membership(&box_tensor(&x, &y)?, &f)?, || "aisle is not a tensor-aisle".into())?;
    }
    Ok(())
}

fn d5_tilde_system(q: &Quiver) -> Result<FiltrationSystem> {
    Ok(FiltrationSystem::new(vec![
        VertexSet::from_names(q, &["1", "2", "3", "4", "5"])?,
        VertexSet::from_names(q, &["6"])?,
    ]))
}

fn aisle_roundtrip_case(rng: &mut GenRng) -> Result<()> {
    let f2 = PrimeField::new(2)?;
    let q = Arc::new(Quiver::linear_a(3));
    let f = gen::random_filtration(rng, &q, &f2, 2);
    let back = serre_inverse(&f2, 3, &serre_translation(&f)?)?;
    ensure(back == f, || "Serre translation does not roundtrip".into())?;

    let z = Integers;
    let q = Quiver::d5_tilde();
    let c = d5_tilde_system(&q)?;
    let f = gen::random_filtration(rng, &q, &z, 5);
    let back = c_aisle_reassemble(&z, q.vertex_count(), &c_aisle_decompose(&f, &c)?, &c)?;
    ensure(back == f, || "aisle decomposition does not roundtrip".into())
}

fn filtration_system_case(rng: &mut GenRng, index: usize) -> Result<()> {
    let n = 1 + index % 7;
    let q = gen::random_acyclic_quiver(rng, n, 0.4);
    let r = check_filtration_system(&FiltrationSystem::simples(&q), &q);
    ensure(r.is_system && r.is_dynkin_support, || format!("simples rejected on {n} vertices: {:?}", r.failure))
}

fn kunneth_case(rng: &mut GenRng) -> Result<()> {
    let z = Integers;
    let q = Arc::new(Quiver::linear_a(2));
    let x = gen::random_perfect(rng, &q, &z, 5);
    let y = gen::random_perfect(rng, &q, &z, 5);
    let xy = box_tensor(&x, &y)?;
    for p in enumerate_primes(&z, 7) {
        for i in 0..q.vertex_count() {
            let nonzero = |c: &ComplexRQ<Integers>| xi_zero_test(c, &p, i).map(|zero| !zero);
            if nonzero(&x)? && nonzero(&y)? {
                ensure(nonzero(&xy)?, || format!("product vanishes at {}", BalmerPoint::new(&q, p.clone(), i).map(|b| b.label(&q)).unwrap_or_default()))?;
            }
        }
    }
    let (sx, sy, sxy) = (compact_support(&x)?, compact_support(&y)?, compact_support(&xy)?);
    ensure(sxy == sx.intersection(&sy)?, || "support of a product is not the intersection".into())
}
