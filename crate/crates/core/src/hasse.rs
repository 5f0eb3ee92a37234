//! Labeled DAGs: the gluing `H^𝒩`, the subposet `𝒩` of Prop. 2.6,
//! isomorphism testing and DOT export.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tilting::{HasseQuiver, TauContext};

/// A finite acyclic quiver without loops or parallel arrows, with opaque labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DagFile", into = "DagFile")]
pub struct LabeledDag {
    labels: Vec<String>,
    arrows: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DagFile {
    labels: Vec<String>,
    arrows: Vec<(usize, usize)>,
}

impl TryFrom<DagFile> for LabeledDag {
    type Error = Error;
    fn try_from(f: DagFile) -> Result<Self> {
        LabeledDag::new(f.labels, f.arrows)
    }
}

impl From<LabeledDag> for DagFile {
    fn from(d: LabeledDag) -> Self {
        DagFile { labels: d.labels, arrows: d.arrows }
    }
}

impl LabeledDag {
    pub fn new(labels: Vec<String>, mut arrows: Vec<(usize, usize)>) -> Result<Self> {
        let n = labels.len();
        arrows.sort_unstable();
        for w in arrows.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidDag(format!("parallel arrows {} -> {}", w[0].0, w[0].1)));
            }
        }
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in &arrows {
            if u >= n || v >= n {
                return Err(Error::InvalidDag(format!("arrow {u} -> {v} leaves the vertex range 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidDag(format!("loop at {u}")));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        let dag = LabeledDag { labels, arrows, out, inn };
        if dag.topological_order().len() != n {
            return Err(Error::InvalidDag("not acyclic".into()));
        }
        Ok(dag)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    /// Arrows in ascending order.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn has_arrow(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// Kahn's algorithm; shorter than `len()` iff there is a cycle.
    fn topological_order(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> = self.inn.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..self.len()).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.len());
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &self.out[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        order
    }

    /// Longest-path distance from the sources.
    pub fn levels(&self) -> Vec<usize> {
        let mut level = vec![0; self.len()];
        for u in self.topological_order() {
            for &v in &self.out[u] {
                level[v] = level[v].max(level[u] + 1);
            }
        }
        level
    }

    /// Longest-path distance to the sinks.
    fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.len()];
        for u in self.topological_order().into_iter().rev() {
            for &v in &self.out[u] {
                depth[u] = depth[u].max(depth[v] + 1);
            }
        }
        depth
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dag serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// `H^𝒩`: adds a copy `n⁺` of every `n ∈ 𝒩`, redirects arrows from `𝒩′`
/// into `𝒩` to the copies, duplicates arrows inside `𝒩` onto `𝒩⁺`, and adds
/// `n⁺ → n`. Copies are appended in ascending order of `n`.
pub fn glue(h: &LabeledDag, subset: &[usize]) -> Result<LabeledDag> {
    let members: BTreeSet<usize> = subset.iter().copied().collect();
    if let Some(&bad) = members.iter().find(|&&v| v >= h.len()) {
        return Err(Error::NotASubset(bad));
    }
    let copy: BTreeMap<usize, usize> = members.iter().enumerate().map(|(k, &v)| (v, h.len() + k)).collect();
    let mut labels = h.labels.clone();
    labels.extend(members.iter().map(|&v| format!("{}+", h.labels[v])));
    let mut arrows = Vec::with_capacity(h.arrows.len() + 2 * members.len());
    for &(u, v) in &h.arrows {
        match (copy.get(&u), copy.get(&v)) {
            (None, None) | (Some(_), None) => arrows.push((u, v)),
            (Some(&cu), Some(&cv)) => {
                arrows.push((u, v));
                arrows.push((cu, cv));
            }
            (None, Some(&cv)) => arrows.push((u, cv)),
        }
    }
    arrows.extend(copy.iter().map(|(&n, &c)| (c, n)));
    LabeledDag::new(labels, arrows)
}

/// `𝒩 = {S_new ⊕ L}` inside `H(A × k)`: pairs whose module part contains the
/// simple at the isolated vertex `new_vertex` and whose other summands vanish
/// at `source`.
pub fn select_n(hasse: &HasseQuiver, ctx: &TauContext, new_vertex: usize, source: usize) -> Result<Vec<usize>> {
    let alg = ctx.algebra();
    let n = alg.num_vertices();
    if new_vertex >= n || source >= n || new_vertex == source {
        return Err(Error::ContextMismatch(format!("vertices {new_vertex}, {source} out of range for {n} vertices")));
    }
    if alg.arrows().iter().any(|a| a.source == new_vertex || a.target == new_vertex) {
        return Err(Error::ContextMismatch(format!("vertex `{}` is not isolated", alg.vertex_id(new_vertex))));
    }
    let catalog = ctx.catalog();
    let simple = catalog
        .simple(new_vertex)
        .ok_or_else(|| Error::ContextMismatch("isolated simple missing from catalog".into()))?;
    Ok((0..hasse.len())
        .filter(|&k| {
            let m = &hasse.pairs()[k].module;
            m.contains(simple) && m.indices().iter().all(|&x| x == simple || catalog.entry(x).dims()[source] == 0)
        })
        .collect())
}

/// Joint colour refinement of both graphs, seeded with degrees and levels.
fn refine(x: &LabeledDag, y: &LabeledDag) -> (Vec<usize>, Vec<usize>) {
    let seed = |d: &LabeledDag| -> Vec<(usize, usize, usize, usize)> {
        let (lv, dp) = (d.levels(), d.depths());
        (0..d.len()).map(|v| (d.in_degree(v), d.out_degree(v), lv[v], dp[v])).collect()
    };
    let mut palette = BTreeMap::new();
    let assign = |keys: Vec<Vec<usize>>, palette: &mut BTreeMap<Vec<usize>, usize>| -> Vec<usize> {
        keys.into_iter()
            .map(|k| {
                let next = palette.len();
                *palette.entry(k).or_insert(next)
            })
            .collect()
    };
    let to_key = |s: (usize, usize, usize, usize)| vec![s.0, s.1, s.2, s.3];
    let mut cx = assign(seed(x).into_iter().map(to_key).collect(), &mut palette);
    let mut cy = assign(seed(y).into_iter().map(to_key).collect(), &mut palette);
    let mut classes = count_classes(&cx, &cy);
    loop {
        let sig = |d: &LabeledDag, c: &[usize], v: usize| -> Vec<usize> {
            let mut outs: Vec<usize> = d.out[v].iter().map(|&w| c[w]).collect();
            let mut ins: Vec<usize> = d.inn[v].iter().map(|&w| c[w]).collect();
            outs.sort_unstable();
            ins.sort_unstable();
            let mut key = vec![c[v], usize::MAX];
            key.extend(outs);
            key.push(usize::MAX);
            key.extend(ins);
            key
        };
        let kx: Vec<Vec<usize>> = (0..x.len()).map(|v| sig(x, &cx, v)).collect();
        let ky: Vec<Vec<usize>> = (0..y.len()).map(|v| sig(y, &cy, v)).collect();
        let mut palette = BTreeMap::new();
        let nx = assign(kx, &mut palette);
        let ny = assign(ky, &mut palette);
        let next = count_classes(&nx, &ny);
        cx = nx;
        cy = ny;
        if next == classes {
            return (cx, cy);
        }
        classes = next;
    }
}

fn count_classes(a: &[usize], b: &[usize]) -> usize {
    a.iter().chain(b).collect::<BTreeSet<_>>().len()
}

fn histogram(c: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &k in c {
        *h.entry(k).or_insert(0) += 1;
    }
    h
}

/// An arrow-preserving bijection `x → y`, if one exists.
pub fn dag_isomorphism(x: &LabeledDag, y: &LabeledDag) -> Option<Vec<usize>> {
    if x.len() != y.len() || x.arrows.len() != y.arrows.len() {
        return None;
    }
    let (cx, cy) = refine(x, y);
    if histogram(&cx) != histogram(&cy) {
        return None;
    }
    let sizes = histogram(&cx);
    let mut order: Vec<usize> = (0..x.len()).collect();
    let level = x.levels();
    order.sort_by_key(|&v| (level[v], sizes[&cx[v]], v));
    let mut search =
        Search { x, y, cx: &cx, cy: &cy, order: &order, map: vec![usize::MAX; x.len()], used: vec![false; y.len()] };
    search.extend(0).then_some(search.map)
}

struct Search<'a> {
    x: &'a LabeledDag,
    y: &'a LabeledDag,
    cx: &'a [usize],
    cy: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn consistent(&self, u: usize, v: usize) -> bool {
        let mapped = |w: usize| self.map[w] != usize::MAX;
        let mut mapped_out = 0;
        for &w in &self.x.out[u] {
            if mapped(w) {
                if !self.y.has_arrow(v, self.map[w]) {
                    return false;
                }
                mapped_out += 1;
            }
        }
        let mut mapped_in = 0;
        for &w in &self.x.inn[u] {
            if mapped(w) {
                if !self.y.has_arrow(self.map[w], v) {
                    return false;
                }
                mapped_in += 1;
            }
        }
        let used_out = self.y.out[v].iter().filter(|&&w| self.used[w]).count();
        let used_in = self.y.inn[v].iter().filter(|&&w| self.used[w]).count();
        used_out == mapped_out && used_in == mapped_in
    }

    fn extend(&mut self, depth: usize) -> bool {
        let Some(&u) = self.order.get(depth) else { return true };
        for v in 0..self.y.len() {
            if self.used[v] || self.cy[v] != self.cx[u] || !self.consistent(u, v) {
                continue;
            }
            self.map[u] = v;
            self.used[v] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.map[u] = usize::MAX;
            self.used[v] = false;
        }
        false
    }
}

pub fn dag_iso(x: &LabeledDag, y: &LabeledDag) -> bool {
    dag_isomorphism(x, y).is_some()
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"").replace('\n', "\\n")
}

/// DOT text: one node line per vertex in index order, then arrows in ascending order.
pub fn to_dot(d: &LabeledDag) -> String {
    let mut s = String::from("digraph H {\n");
    for (v, label) in d.labels.iter().enumerate() {
        let _ = writeln!(s, "  n{v} [label=\"{}\"];", escape(label));
    }
    for &(u, v) in &d.arrows {
        let _ = writeln!(s, "  n{u} -> n{v};");
    }
    s.push_str("}\n");
    s
}
