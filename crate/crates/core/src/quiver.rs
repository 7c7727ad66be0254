//! Finite acyclic quivers and their path combinatorics.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// An arrow `name: source -> target` (vertex indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A path as a sequence of arrow indices; empty is the trivial path.
pub type Path = Vec<usize>;

/// Finite acyclic quiver with named vertices and arrows.
#[derive(Clone)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    index: HashMap<String, usize>,
    topo: Vec<usize>,
    paths: OnceLock<Vec<Vec<Vec<Path>>>>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}
impl Eq for Quiver {}

impl std::hash::Hash for Quiver {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vertices.hash(state);
        self.arrows.hash(state);
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .arrows
            .iter()
            .map(|a| format!("{}: {} -> {}", a.name, self.vertices[a.source], self.vertices[a.target]))
            .collect();
        write!(f, "Quiver{{[{}]; [{}]}}", self.vertices.join(", "), arrows.join(", "))
    }
}

impl Quiver {
    /// Validates names and acyclicity; arrows are `(name, source, target)`.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateName(v.clone()));
            }
        }
        let mut names = BTreeSet::new();
        let mut arr = Vec::new();
        for (name, s, t) in arrows {
            let name = name.as_ref().to_string();
            if !names.insert(name.clone()) {
                return Err(Error::DuplicateName(name));
            }
            let source = *index.get(s.as_ref()).ok_or_else(|| Error::UnknownVertex(s.as_ref().into()))?;
            let target = *index.get(t.as_ref()).ok_or_else(|| Error::UnknownVertex(t.as_ref().into()))?;
            arr.push(Arrow { name, source, target });
        }
        let topo = topological_order(vertices.len(), &arr).map_err(|cycle| {
            Error::CyclicQuiver(cycle.into_iter().map(|v| vertices[v].clone()).collect())
        })?;
        Ok(Quiver { vertices, arrows: arr, index, topo, paths: OnceLock::new() })
    }

    /// Vertices `1..=n` with arrows given by index pairs (0-based), named
    /// `a1, a2, ...`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows: Vec<(String, String, String)> = edges
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| (format!("a{}", k + 1), vs[s].clone(), vs[t].clone()))
            .collect();
        Self::new(&vs, &arrows)
    }

    /// Linearly oriented `A_n`: `1 -> 2 -> ... -> n`.
    pub fn linear_a(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("valid")
    }

    /// `D_4` with arms `1 -> 2`, `3 -> 2`, `4 -> 2`.
    pub fn d4() -> Self {
        Self::from_edges(4, &[(0, 1), (2, 1), (3, 1)]).expect("valid")
    }

    /// The Euclidean quiver of type `D~5`: `1 -> 3`, `2 -> 3`, `3 -> 4`,
    /// `4 -> 5`, `4 -> 6`.
    pub fn d5_tilde() -> Self {
        Self::from_edges(6, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]).expect("valid")
    }

    /// One vertex named `*`, no arrows; complexes over it are complexes of
    /// modules.
    pub fn point() -> Self {
        Self::new(&["*"], &[]).expect("valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownVertex(name.into()))
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn check_vertex(&self, i: usize) -> Result<()> {
        if i < self.vertices.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{i}")))
        }
    }

    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.arrows.iter().all(|a| a.target != v)).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.arrows.iter().all(|a| a.source != v)).collect()
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    fn all_paths(&self) -> &Vec<Vec<Vec<Path>>> {
        self.paths.get_or_init(|| {
            let n = self.vertex_count();
            let mut out = vec![vec![Vec::new(); n]; n];
            for i in 0..n {
                let mut stack: Vec<(usize, Path)> = vec![(i, Vec::new())];
                while let Some((v, p)) = stack.pop() {
                    out[i][v].push(p.clone());
                    for a in self.arrows_from(v) {
                        let mut q = p.clone();
                        q.push(a);
                        stack.push((self.arrows[a].target, q));
                    }
                }
                for list in out[i].iter_mut() {
                    list.sort_by(|x, y| self.path_names(x).cmp(&self.path_names(y)));
                }
            }
            out
        })
    }

    fn path_names<'a>(&'a self, p: &'a Path) -> Vec<&'a str> {
        p.iter().map(|&a| self.arrows[a].name.as_str()).collect()
    }

    /// Paths `i ~> j`, ordered lexicographically by arrow names.
    pub fn paths(&self, i: usize, j: usize) -> &[Path] {
        &self.all_paths()[i][j]
    }

    /// Paths between named vertices.
    pub fn paths_named(&self, i: &str, j: &str) -> Result<Vec<Path>> {
        Ok(self.paths(self.vertex(i)?, self.vertex(j)?).to_vec())
    }

    /// Position of a path in [`Quiver::paths`] between its endpoints.
    pub fn path_position(&self, i: usize, j: usize, p: &[usize]) -> usize {
        self.paths(i, j).iter().position(|q| q == p).expect("path between the given vertices")
    }

    pub fn format_path(&self, i: usize, p: &[usize]) -> String {
        if p.is_empty() {
            return format!("e{}", self.vertices[i]);
        }
        let mut s = self.vertices[i].clone();
        for &a in p {
            s.push_str(" -> ");
            s.push_str(&self.vertices[self.arrows[a].target]);
        }
        s
    }

    /// Full subquiver on `members`, with the new index of each old vertex.
    pub fn full_subquiver(&self, members: &BTreeSet<usize>) -> (Quiver, Vec<Option<usize>>) {
        let mut map = vec![None; self.vertex_count()];
        let vs: Vec<String> = members.iter().map(|&v| self.vertices[v].clone()).collect();
        for (k, &v) in members.iter().enumerate() {
            map[v] = Some(k);
        }
        let arrows: Vec<(String, String, String)> = self
            .arrows
            .iter()
            .filter(|a| members.contains(&a.source) && members.contains(&a.target))
            .map(|a| (a.name.clone(), self.vertices[a.source].clone(), self.vertices[a.target].clone()))
            .collect();
        (Quiver::new(&vs, &arrows).expect("subquiver of an acyclic quiver"), map)
    }

    /// Same underlying graph with the arrows in `flip` reversed; `None` if the
    /// result has a cycle.
    pub fn reoriented(&self, flip: &[bool]) -> Option<Quiver> {
        let arrows: Vec<(String, String, String)> = self
            .arrows
            .iter()
            .zip(flip)
            .map(|(a, &f)| {
                let (s, t) = if f { (a.target, a.source) } else { (a.source, a.target) };
                (a.name.clone(), self.vertices[s].clone(), self.vertices[t].clone())
            })
            .collect();
        Quiver::new(&self.vertices, &arrows).ok()
    }

    /// Connected components of the underlying graph.
    pub fn components(&self) -> Vec<BTreeSet<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for a in &self.arrows {
                    for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                        if x == v && !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Every component of the underlying graph is of type A, D or E.
    pub fn is_dynkin(&self) -> bool {
        self.components().iter().all(|c| self.component_is_dynkin(c))
    }

    fn component_is_dynkin(&self, comp: &BTreeSet<usize>) -> bool {
        let mut edges = BTreeSet::new();
        let mut count = 0;
        for a in &self.arrows {
            if comp.contains(&a.source) {
                count += 1;
                edges.insert((a.source.min(a.target), a.source.max(a.target)));
            }
        }
        // a tree without multiple edges
        if count != edges.len() || count + 1 != comp.len() {
            return false;
        }
        let mut adj: HashMap<usize, Vec<usize>> = comp.iter().map(|&v| (v, Vec::new())).collect();
        for &(x, y) in &edges {
            adj.get_mut(&x).unwrap().push(y);
            adj.get_mut(&y).unwrap().push(x);
        }
        let branch: Vec<usize> = comp.iter().copied().filter(|v| adj[v].len() >= 3).collect();
        match branch.as_slice() {
            [] => true,
            [b] if adj[b].len() == 3 => {
                let mut arms: Vec<usize> = adj[b]
                    .iter()
                    .map(|&start| {
                        let (mut prev, mut cur, mut len) = (*b, start, 1);
                        loop {
                            let next: Vec<usize> = adj[&cur].iter().copied().filter(|&w| w != prev).collect();
                            match next.as_slice() {
                                [] => break len,
                                [w] => {
                                    prev = cur;
                                    cur = *w;
                                    len += 1;
                                }
                                _ => break usize::MAX,
                            }
                        }
                    })
                    .collect();
                arms.sort_unstable();
                matches!(arms.as_slice(), [1, 1, _] | [1, 2, 2] | [1, 2, 3] | [1, 2, 4])
            }
            _ => false,
        }
    }
}

/// Kahn's algorithm; on failure returns a directed cycle.
fn topological_order(n: usize, arrows: &[Arrow]) -> std::result::Result<Vec<usize>, Vec<usize>> {
    let mut indeg = vec![0usize; n];
    for a in arrows {
        indeg[a.target] += 1;
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for a in arrows.iter().filter(|a| a.source == v) {
            indeg[a.target] -= 1;
            if indeg[a.target] == 0 {
                ready.insert(a.target);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // walk backwards along remaining arrows until a vertex repeats
    let mut v = (0..n).find(|&v| indeg[v] > 0).expect("cycle vertex");
    let mut seen: Vec<usize> = Vec::new();
    while !seen.contains(&v) {
        seen.push(v);
        v = arrows
            .iter()
            .find(|a| a.target == v && indeg[a.source] > 0)
            .map(|a| a.source)
            .expect("predecessor in cycle");
    }
    let start = seen.iter().position(|&w| w == v).unwrap();
    let mut cycle: Vec<usize> = seen[start..].to_vec();
    cycle.reverse();
    cycle.push(cycle[0]);
    Err(cycle)
}

/// A subset of a quiver's vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    pub members: BTreeSet<usize>,
}

impl VertexSet {
    pub fn new(q: &Quiver, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        for &m in &members {
            q.check_vertex(m)?;
        }
        Ok(VertexSet { members })
    }

    pub fn from_names<S: AsRef<str>>(q: &Quiver, names: &[S]) -> Result<Self> {
        let idx = names.iter().map(|n| q.vertex(n.as_ref())).collect::<Result<Vec<_>>>()?;
        Self::new(q, idx)
    }

    pub fn all(q: &Quiver) -> Self {
        VertexSet { members: (0..q.vertex_count()).collect() }
    }

    pub fn single(v: usize) -> Self {
        VertexSet { members: [v].into() }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn names(&self, q: &Quiver) -> Vec<String> {
        self.members.iter().map(|&v| q.vertex_name(v).to_string()).collect()
    }
}

pub type QuiverRef = Arc<Quiver>;
