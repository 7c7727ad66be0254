//! Workspace files: a ring, a quiver, and named objects, supports and
//! filtrations over them.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::Arc;

use pathtt::linalg::{FgModule, Matrix};
use pathtt::rep::{
    box_tensor, cone_of_scalar, koszul_at, projective, projective_resolution, unit, unit_restriction, vertex_simple,
};
use pathtt::tstruct::Filtration;
use pathtt::tt::QSupport;
use pathtt::{ComplexRQ, Error, Quiver, Representation, Ring, RingDesc, SpClosedSet, VertexSet};
use serde::Deserialize;
use serde_yaml::{Mapping, Value};

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawQuiver {
    pub vertices: Vec<Value>,
    #[serde(default)]
    pub arrows: Vec<String>,
}

/// The file as read, before anything ring-dependent is parsed.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawWorkspace {
    pub ring: String,
    pub quiver: RawQuiver,
    #[serde(default)]
    pub objects: Mapping,
    #[serde(default)]
    pub supports: Mapping,
    #[serde(default)]
    pub filtrations: Mapping,
}

impl RawWorkspace {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_yaml::from_str(text).map_err(|e| CliError::Yaml(e.to_string()))
    }

    pub fn ring_desc(&self) -> Result<RingDesc, CliError> {
        Ok(self.ring.parse::<RingDesc>()?)
    }
}

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Core(Error::Parse(msg.into()))
}

/// YAML scalars as text, so that `1`, `"1"` and `x+1` all reach the ring
/// parser unchanged.
fn scalar(v: &Value) -> Result<String, CliError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        Value::Bool(b) => Ok(b.to_string()),
        other => Err(parse_err(format!("expected a scalar, got {other:?}"))),
    }
}

fn int(v: &Value) -> Result<i64, CliError> {
    scalar(v)?.trim().parse().map_err(|_| parse_err(format!("expected an integer, got {v:?}")))
}

/// `a: 1 -> 2`.
fn parse_arrow(s: &str) -> Result<(String, String, String), CliError> {
    let bad = || parse_err(format!("arrow must look like `a: 1 -> 2`, got `{s}`"));
    let (name, rest) = s.split_once(':').ok_or_else(bad)?;
    let (src, tgt) = rest.split_once("->").ok_or_else(bad)?;
    let parts = [name, src, tgt].map(|t| t.trim().to_string());
    if parts.iter().any(String::is_empty) {
        return Err(bad());
    }
    let [a, b, c] = parts;
    Ok((a, b, c))
}

pub fn parse_quiver(raw: &RawQuiver) -> Result<Quiver, CliError> {
    let vertices = raw.vertices.iter().map(scalar).collect::<Result<Vec<_>, _>>()?;
    let arrows = raw.arrows.iter().map(|a| parse_arrow(a)).collect::<Result<Vec<_>, _>>()?;
    Ok(Quiver::new(&vertices, &arrows)?)
}

/// `[g1, g2]`, `all`, or a YAML list of generators.
pub fn parse_spclosed<R: Ring>(ring: &R, v: &Value) -> Result<SpClosedSet<R>, CliError> {
    match v {
        Value::Sequence(items) => {
            let gens = items.iter().map(|g| Ok(ring.parse_elem(&scalar(g)?)?)).collect::<Result<Vec<_>, CliError>>()?;
            Ok(SpClosedSet::finite(ring, gens).map_err(|e| Error::Parse(e.to_string()))?)
        }
        other => Ok(SpClosedSet::parse(ring, &scalar(other)?)?),
    }
}

/// A map `vertex -> support spec`; vertices not mentioned get the empty set.
pub fn parse_qsupport<R: Ring>(ring: &R, q: &Quiver, v: &Value) -> Result<QSupport<R>, CliError> {
    let map = v.as_mapping().ok_or_else(|| parse_err("a support is a map from vertices to `all` or `[..]`"))?;
    let mut parts = vec![SpClosedSet::empty(ring); q.vertex_count()];
    for (k, s) in map {
        parts[q.vertex(&scalar(k)?)?] = parse_spclosed(ring, s)?;
    }
    Ok(QSupport::new(ring, parts)?)
}

/// Inline support syntax for the command line: `1=all;2=[2,3]`.
pub fn parse_inline_support<R: Ring>(ring: &R, q: &Quiver, s: &str) -> Result<QSupport<R>, CliError> {
    let mut parts = vec![SpClosedSet::empty(ring); q.vertex_count()];
    for item in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
        let (v, spec) = item.split_once('=').ok_or_else(|| parse_err(format!("expected `vertex=spec`, got `{item}`")))?;
        parts[q.vertex(v.trim())?] = SpClosedSet::parse(ring, spec)?;
    }
    Ok(QSupport::new(ring, parts)?)
}

/// `{below: SUPPORT, entries: [{from: n, value: SUPPORT}, ...], above: SUPPORT}`.
pub fn parse_filtration<R: Ring>(ring: &R, q: &Quiver, v: &Value) -> Result<Filtration<R>, CliError> {
    let map = v.as_mapping().ok_or_else(|| parse_err("a filtration is a map with keys below, entries, above"))?;
    let nv = q.vertex_count();
    let mut below = None;
    let mut above = None;
    let mut entries = Vec::new();
    for (k, val) in map {
        match scalar(k)?.as_str() {
            "below" => below = Some(parse_qsupport(ring, q, val)?),
            "above" => above = Some(parse_qsupport(ring, q, val)?),
            "entries" => {
                let seq = val.as_sequence().ok_or_else(|| parse_err("entries must be a list"))?;
                for e in seq {
                    let from = e.get("from").ok_or_else(|| parse_err("entry without `from`"))?;
                    let value = e.get("value").ok_or_else(|| parse_err("entry without `value`"))?;
                    entries.push((int(from)?, parse_qsupport(ring, q, value)?));
                }
            }
            other => return Err(parse_err(format!("unknown filtration key `{other}`"))),
        }
    }
    let below = below.ok_or_else(|| parse_err("filtration without `below`"))?;
    let above = above.unwrap_or_else(|| QSupport::empty(ring, nv));
    Filtration::new(ring, nv, below, entries, above).map_err(|e| CliError::Core(Error::Parse(e.to_string())))
}

fn parse_matrix<R: Ring>(ring: &R, v: &Value, rows: usize, cols: usize, what: &str) -> Result<Matrix<R>, CliError> {
    let seq = v.as_sequence().ok_or_else(|| parse_err(format!("{what}: expected a list of rows")))?;
    if seq.is_empty() && (rows == 0 || cols == 0) {
        return Ok(Matrix::zeros(ring, rows, cols));
    }
    let data = seq
        .iter()
        .map(|row| {
            let r = row.as_sequence().ok_or_else(|| parse_err(format!("{what}: rows must be lists")))?;
            r.iter().map(|e| Ok(ring.parse_elem(&scalar(e)?)?)).collect::<Result<Vec<_>, CliError>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let m = Matrix::from_rows(ring, data).map_err(|e| parse_err(format!("{what}: {e}")))?;
    if m.shape() != (rows, cols) {
        return Err(parse_err(format!("{what}: expected a {rows}x{cols} matrix, got {}x{}", m.rows(), m.cols())));
    }
    Ok(m)
}

/// `free k`, a bare rank, `{free: k}` or `{presentation: [[..]]}` (columns
/// are relations).
fn parse_module<R: Ring>(ring: &R, v: &Value, what: &str) -> Result<FgModule<R>, CliError> {
    if let Some(m) = v.as_mapping() {
        if let Some(k) = m.get("free") {
            return Ok(FgModule::free(ring, int(k)?.try_into().map_err(|_| parse_err("negative rank"))?));
        }
        if let Some(p) = m.get("presentation") {
            let rows = p.as_sequence().map_or(0, Vec::len);
            let cols = p.as_sequence().and_then(|s| s.first()).and_then(Value::as_sequence).map_or(0, Vec::len);
            return Ok(FgModule::new(parse_matrix(ring, p, rows, cols, what)?));
        }
        return Err(parse_err(format!("{what}: expected `free` or `presentation`")));
    }
    let s = scalar(v)?;
    let rank = s.trim().strip_prefix("free").unwrap_or(&s).trim();
    let rank: usize = rank.parse().map_err(|_| parse_err(format!("{what}: expected `free k`, got `{s}`")))?;
    Ok(FgModule::free(ring, rank))
}

fn parse_explicit<R: Ring>(ring: &R, q: &Arc<Quiver>, m: &Mapping, name: &str) -> Result<ComplexRQ<R>, CliError> {
    let nv = q.vertex_count();
    let degrees = m.get("degrees").and_then(Value::as_mapping).ok_or_else(|| parse_err(format!("{name}: missing `degrees`")))?;
    let mut terms: BTreeMap<i64, Representation<R>> = BTreeMap::new();
    for (dk, dv) in degrees {
        let n = int(dk)?;
        let dm = dv.as_mapping().ok_or_else(|| parse_err(format!("{name}: degree {n} must be a map")))?;
        let mut modules = vec![FgModule::zero(ring); nv];
        let mut arrow_vals: BTreeMap<usize, &Value> = BTreeMap::new();
        for (k, val) in dm {
            let key = scalar(k)?;
            if key == "arrow_maps" {
                let am = val.as_mapping().ok_or_else(|| parse_err(format!("{name}: arrow_maps must be a map")))?;
                for (a, mv) in am {
                    let a = scalar(a)?;
                    let idx = q.arrow_index(&a).ok_or_else(|| parse_err(format!("{name}: unknown arrow `{a}`")))?;
                    arrow_vals.insert(idx, mv);
                }
            } else {
                modules[q.vertex(&key)?] = parse_module(ring, val, &format!("{name}, degree {n}, vertex {key}"))?;
            }
        }
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(idx, a)| {
                let (r, c) = (modules[a.target].gens(), modules[a.source].gens());
                match arrow_vals.get(&idx) {
                    Some(v) => parse_matrix(ring, v, r, c, &format!("{name}, degree {n}, arrow {}", a.name)),
                    None => Ok(Matrix::zeros(ring, r, c)),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        let rep = Representation::new(q.clone(), ring, modules, maps)
            .map_err(|e| parse_err(format!("{name}, degree {n}: {e}")))?;
        terms.insert(n, rep);
    }
    let (Some(&lo), Some(&hi)) = (terms.keys().next(), terms.keys().next_back()) else {
        return Ok(ComplexRQ::zero(q.clone(), ring));
    };
    let all_terms: Vec<Representation<R>> =
        (lo..=hi).map(|n| terms.get(&n).cloned().unwrap_or_else(|| Representation::zero(q.clone(), ring))).collect();
    let diff_map = match m.get("differentials") {
        Some(v) => v.as_mapping().cloned().ok_or_else(|| parse_err(format!("{name}: differentials must be a map")))?,
        None => Mapping::new(),
    };
    let mut given: BTreeMap<i64, &Value> = BTreeMap::new();
    for (k, v) in &diff_map {
        let n = int(k)?;
        if n < lo || n >= hi {
            return Err(parse_err(format!("{name}: differential d^{n} leaves the degree range {lo}..{hi}")));
        }
        given.insert(n, v);
    }
    let mut diffs = Vec::new();
    for n in lo..hi {
        let (src, tgt) = (&all_terms[(n - lo) as usize], &all_terms[(n - lo + 1) as usize]);
        let mut per_vertex: BTreeMap<usize, &Value> = BTreeMap::new();
        if let Some(v) = given.get(&n) {
            let pv = v.as_mapping().ok_or_else(|| parse_err(format!("{name}: d^{n} must map vertices to matrices")))?;
            for (k, mv) in pv {
                per_vertex.insert(q.vertex(&scalar(k)?)?, mv);
            }
        }
        let mut ds = Vec::new();
        for v in 0..nv {
            let (r, c) = (tgt.module(v).gens(), src.module(v).gens());
            match per_vertex.get(&v) {
                Some(mv) => ds.push(parse_matrix(ring, mv, r, c, &format!("{name}, d^{n} at {}", q.vertex_name(v)))?),
                None => ds.push(Matrix::zeros(ring, r, c)),
            }
        }
        diffs.push(ds);
    }
    ComplexRQ::new(q.clone(), ring, lo, all_terms, diffs).map_err(|e| parse_err(format!("{name}: {e}")))
}

/// A parsed workspace over a concrete ring.
pub struct Workspace<R: Ring> {
    pub ring: R,
    pub quiver: Arc<Quiver>,
    pub objects: BTreeMap<String, ComplexRQ<R>>,
    pub supports: BTreeMap<String, QSupport<R>>,
    pub filtrations: BTreeMap<String, Filtration<R>>,
}

struct ObjectBuilder<'a, R: Ring> {
    ring: &'a R,
    q: &'a Arc<Quiver>,
    specs: &'a Mapping,
    done: BTreeMap<String, ComplexRQ<R>>,
    visiting: BTreeSet<String>,
}

impl<R: Ring> ObjectBuilder<'_, R> {
    fn get(&mut self, name: &str) -> Result<ComplexRQ<R>, CliError> {
        if let Some(x) = self.done.get(name) {
            return Ok(x.clone());
        }
        if !self.visiting.insert(name.to_string()) {
            return Err(parse_err(format!("object `{name}` refers to itself")));
        }
        let spec = self
            .specs
            .get(Value::String(name.to_string()))
            .ok_or_else(|| parse_err(format!("unknown object `{name}`")))?
            .clone();
        let x = self.build(name, &spec)?;
        self.visiting.remove(name);
        self.done.insert(name.to_string(), x.clone());
        Ok(x)
    }

    fn vertex(&self, v: &Value) -> Result<usize, CliError> {
        Ok(self.q.vertex(&scalar(v)?)?)
    }

    fn names(&mut self, v: &Value, what: &str) -> Result<Vec<ComplexRQ<R>>, CliError> {
        let seq = v.as_sequence().ok_or_else(|| parse_err(format!("`{what}` takes a list of object names")))?;
        seq.iter().map(|n| self.get(&scalar(n)?)).collect()
    }

    fn build(&mut self, name: &str, spec: &Value) -> Result<ComplexRQ<R>, CliError> {
        let (ring, q) = (self.ring, self.q);
        if let Value::String(s) = spec {
            return match s.as_str() {
                "unit" => Ok(unit(q, ring)),
                "zero" => Ok(ComplexRQ::zero(q.clone(), ring)),
                other => Err(parse_err(format!("{name}: unknown object keyword `{other}`"))),
            };
        }
        let m = spec.as_mapping().ok_or_else(|| parse_err(format!("{name}: an object is a keyword or a map")))?;
        if m.contains_key("degrees") {
            return parse_explicit(ring, q, m, name);
        }
        if m.len() != 1 {
            return Err(parse_err(format!("{name}: expected exactly one constructor key")));
        }
        let (k, arg) = m.iter().next().expect("one entry");
        let field = |key: &str| arg.get(key).ok_or_else(|| parse_err(format!("{name}: missing `{key}`")));
        let x = match scalar(k)?.as_str() {
            "simple" => vertex_simple(q, ring, self.vertex(arg)?)?,
            "projective" => projective(q, ring, self.vertex(arg)?)?,
            "restriction" => {
                let vs = arg.as_sequence().ok_or_else(|| parse_err(format!("{name}: restriction takes a vertex list")))?;
                let members = vs.iter().map(|v| self.vertex(v)).collect::<Result<Vec<_>, _>>()?;
                unit_restriction(q, ring, &VertexSet::new(q, members)?)?
            }
            "koszul" => {
                let at = self.vertex(field("at")?)?;
                let gens = field("gens")?
                    .as_sequence()
                    .ok_or_else(|| parse_err(format!("{name}: gens must be a list")))?
                    .iter()
                    .map(|g| Ok(ring.parse_elem(&scalar(g)?)?))
                    .collect::<Result<Vec<_>, CliError>>()?;
                koszul_at(q, ring, at, &gens)?
            }
            "cone" => {
                let of = self.get(&scalar(field("of")?)?)?;
                cone_of_scalar(&of, &ring.parse_elem(&scalar(field("scalar")?)?)?)
            }
            "shift" => self.get(&scalar(field("of")?)?)?.shift(int(field("by")?)?),
            "sum" => {
                let xs = self.names(arg, "sum")?;
                xs.iter().fold(ComplexRQ::zero(q.clone(), ring), |acc, x| acc.direct_sum(x))
            }
            "tensor" => {
                let xs = self.names(arg, "tensor")?;
                let mut acc = unit(q, ring);
                for x in &xs {
                    acc = box_tensor(&acc, x)?;
                }
                acc
            }
            "resolve" => projective_resolution(&self.get(&scalar(arg)?)?)?,
            other => return Err(parse_err(format!("{name}: unknown constructor `{other}`"))),
        };
        Ok(x)
    }
}

impl<R: Ring> Workspace<R> {
    pub fn from_raw(ring: R, raw: &RawWorkspace) -> Result<Self, CliError> {
        let quiver = Arc::new(parse_quiver(&raw.quiver)?);
        let mut builder =
            ObjectBuilder { ring: &ring, q: &quiver, specs: &raw.objects, done: BTreeMap::new(), visiting: BTreeSet::new() };
        for k in raw.objects.keys() {
            builder.get(&scalar(k)?)?;
        }
        let objects = builder.done;
        let mut supports = BTreeMap::new();
        for (k, v) in &raw.supports {
            supports.insert(scalar(k)?, parse_qsupport(&ring, &quiver, v)?);
        }
        let mut filtrations = BTreeMap::new();
        for (k, v) in &raw.filtrations {
            filtrations.insert(scalar(k)?, parse_filtration(&ring, &quiver, v)?);
        }
        Ok(Workspace { ring, quiver, objects, supports, filtrations })
    }

    pub fn object(&self, name: &str) -> Result<&ComplexRQ<R>, CliError> {
        self.objects.get(name).ok_or_else(|| parse_err(format!("unknown object `{name}`")))
    }

    /// A named support, or the inline syntax `1=all;2=[2,3]`.
    pub fn support(&self, spec: &str) -> Result<QSupport<R>, CliError> {
        match self.supports.get(spec) {
            Some(s) => Ok(s.clone()),
            None => parse_inline_support(&self.ring, &self.quiver, spec),
        }
    }

    /// A named filtration, or a YAML file holding one filtration.
    pub fn filtration(&self, spec: &str) -> Result<Filtration<R>, CliError> {
        if let Some(f) = self.filtrations.get(spec) {
            return Ok(f.clone());
        }
        let text = std::fs::read_to_string(spec)
            .map_err(|e| CliError::Io(format!("`{spec}` is neither a filtration name nor a readable file: {e}")))?;
        let v: Value = serde_yaml::from_str(&text).map_err(|e| CliError::Yaml(e.to_string()))?;
        parse_filtration(&self.ring, &self.quiver, &v)
    }
}
