//! Quivers with monomial relations and their path bases.
//!
//! Paths compose left to right: `(α₁, …, α_k)` requires
//! `target(α_m) == source(α_{m+1})`, so for `α: 3 → 2` and `β: 2 → 1` the
//! relation `αβ = 0` is written `["α", "β"]`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub id: String,
    pub from: String,
    pub to: String,
}

/// On-disk form of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<ArrowSpec>) -> Result<Self> {
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut arrow_index = HashMap::new();
        let mut built = Vec::with_capacity(arrows.len());
        for (i, a) in arrows.into_iter().enumerate() {
            if arrow_index.insert(a.id.clone(), i).is_some() {
                return Err(Error::DuplicateArrow(a.id));
            }
            let source = *vertex_index.get(&a.from).ok_or_else(|| Error::UnknownVertex(a.from.clone()))?;
            let target = *vertex_index.get(&a.to).ok_or_else(|| Error::UnknownVertex(a.to.clone()))?;
            built.push(Arrow { id: a.id, source, target });
        }
        Ok(Quiver { vertices, arrows: built, vertex_index, arrow_index })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrow_index.get(id).copied()
    }

    fn arrow_specs(&self) -> Vec<ArrowSpec> {
        self.arrows
            .iter()
            .map(|a| ArrowSpec {
                id: a.id.clone(),
                from: self.vertices[a.source].clone(),
                to: self.vertices[a.target].clone(),
            })
            .collect()
    }

    fn fresh_vertex_id(&self) -> String {
        let numeric: Option<Vec<u64>> = self.vertices.iter().map(|v| v.parse::<u64>().ok()).collect();
        if let Some(ids) = numeric {
            return (ids.into_iter().max().unwrap_or(0) + 1).to_string();
        }
        let mut k = 0usize;
        loop {
            let candidate = if k == 0 { "a*".to_string() } else { format!("a*{k}") };
            if !self.vertex_index.contains_key(&candidate) {
                return candidate;
            }
            k += 1;
        }
    }

    fn fresh_arrow_id(&self, base: String) -> String {
        let mut id = base;
        while self.arrow_index.contains_key(&id) {
            id.push('\'');
        }
        id
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexRole {
    pub vertex: usize,
    pub is_source: bool,
    pub is_sink: bool,
}

/// A basis path: `arrows` is empty exactly for the trivial path `e_start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// A finite-dimensional monomial bound quiver algebra over the rationals.
#[derive(Debug)]
pub struct Algebra {
    quiver: Quiver,
    relations: Vec<Vec<usize>>,
    paths: Vec<Path>,
    path_index: HashMap<(usize, Vec<usize>), usize>,
    between: Vec<Vec<usize>>,
    opposite: OnceLock<Arc<Algebra>>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra {
            quiver: self.quiver.clone(),
            relations: self.relations.clone(),
            paths: self.paths.clone(),
            path_index: self.path_index.clone(),
            between: self.between.clone(),
            opposite: OnceLock::new(),
        }
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Builds the algebra `kQ / ⟨rels⟩` and computes its path basis.
    pub fn new(quiver: Quiver, relations: Vec<Vec<String>>) -> Result<Self> {
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            if r.len() < 2 {
                return Err(Error::ShortRelation(r));
            }
            let idx: Vec<usize> = r
                .iter()
                .map(|id| quiver.arrow_index(id).ok_or_else(|| Error::UnknownArrow(id.clone())))
                .collect::<Result<_>>()?;
            let arrows = quiver.arrows();
            if idx.windows(2).any(|w| arrows[w[0]].target != arrows[w[1]].source) {
                return Err(Error::NonComposableRelation(r));
            }
            rels.push(idx);
        }
        let relations = normalize_relations(&quiver, rels);
        let paths = enumerate_paths(&quiver, &relations)?;
        let n = quiver.vertices().len();
        let mut path_index = HashMap::with_capacity(paths.len());
        let mut between = vec![Vec::new(); n * n];
        for (i, p) in paths.iter().enumerate() {
            path_index.insert((p.start, p.arrows.clone()), i);
            between[p.start * n + p.end].push(i);
        }
        Ok(Algebra { quiver, relations, paths, path_index, between, opposite: OnceLock::new() })
    }

    pub fn from_file(file: &AlgebraFile) -> Result<Self> {
        let quiver = Quiver::new(file.vertices.clone(), file.arrows.clone())?;
        Algebra::new(quiver, file.relations.clone())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        Algebra::from_file(&file)
    }

    /// The normalized presentation.
    pub fn to_file(&self) -> AlgebraFile {
        AlgebraFile {
            vertices: self.quiver.vertices.clone(),
            arrows: self.quiver.arrow_specs(),
            relations: self.relation_ids(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("algebra file serializes");
        s.push('\n');
        s
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.quiver.vertices[v]
    }

    pub fn vertex(&self, id: &str) -> Result<usize> {
        self.quiver.vertex_index(id).ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn arrows(&self) -> &[Arrow] {
        self.quiver.arrows()
    }

    /// Normalized relations as arrow-index sequences.
    pub fn relations(&self) -> &[Vec<usize>] {
        &self.relations
    }

    pub fn relation_ids(&self) -> Vec<Vec<String>> {
        self.relations.iter().map(|r| r.iter().map(|&a| self.arrows()[a].id.clone()).collect()).collect()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn dimension(&self) -> usize {
        self.paths.len()
    }

    /// Indices of basis paths from `from` to `to`, in basis order.
    pub fn paths_between(&self, from: usize, to: usize) -> &[usize] {
        &self.between[from * self.num_vertices() + to]
    }

    pub fn path_lookup(&self, start: usize, arrows: &[usize]) -> Option<usize> {
        self.path_index.get(&(start, arrows.to_vec())).copied()
    }

    /// `p` followed by `q`, or `None` if not composable or zero in the algebra.
    pub fn compose(&self, p: usize, q: usize) -> Option<usize> {
        let (p, q) = (&self.paths[p], &self.paths[q]);
        if p.end != q.start {
            return None;
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        self.path_lookup(p.start, &arrows)
    }

    pub fn roles(&self) -> Vec<VertexRole> {
        (0..self.num_vertices())
            .map(|v| VertexRole { vertex: v, is_source: self.is_source(v), is_sink: self.is_sink(v) })
            .collect()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows().iter().all(|a| a.target != v)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows().iter().all(|a| a.source != v)
    }

    /// The opposite algebra: same vertex and arrow ids, arrows and relations reversed.
    pub fn opposite(&self) -> Arc<Algebra> {
        self.opposite
            .get_or_init(|| {
                let file = self.to_file();
                let arrows = file.arrows.into_iter().map(|a| ArrowSpec { id: a.id, from: a.to, to: a.from }).collect();
                let relations = file
                    .relations
                    .into_iter()
                    .map(|mut r| {
                        r.reverse();
                        r
                    })
                    .collect();
                let quiver = Quiver::new(file.vertices, arrows).expect("opposite quiver is valid");
                Arc::new(Algebra::new(quiver, relations).expect("opposite algebra is valid"))
            })
            .clone()
    }

    /// The one-point extension `A[S_i]` at a source `i`: a fresh vertex with a
    /// single arrow into `i`, and every path of length two leaving it forbidden.
    pub fn one_point_extension(&self, source: &str) -> Result<(Algebra, String)> {
        let new_vertex = self.quiver.fresh_vertex_id();
        let new_arrow = self.quiver.fresh_arrow_id(format!("a{new_vertex}"));
        let b = self.one_point_extension_named(source, &new_vertex, &new_arrow)?;
        Ok((b, new_vertex))
    }

    pub fn one_point_extension_named(&self, source: &str, new_vertex: &str, new_arrow: &str) -> Result<Algebra> {
        let i = self.vertex(source)?;
        if !self.is_source(i) {
            return Err(Error::NotASource(source.to_string()));
        }
        if self.quiver.vertex_index(new_vertex).is_some() {
            return Err(Error::DuplicateVertex(new_vertex.to_string()));
        }
        let mut file = self.to_file();
        file.vertices.push(new_vertex.to_string());
        file.arrows.push(ArrowSpec { id: new_arrow.to_string(), from: new_vertex.to_string(), to: source.to_string() });
        for a in self.arrows().iter().filter(|a| a.source == i) {
            file.relations.push(vec![new_arrow.to_string(), a.id.clone()]);
        }
        Algebra::from_file(&file)
    }

    /// The quotient by the ideal generated by `e_i`: the vertex and every arrow
    /// touching it disappear, together with the relations using those arrows.
    pub fn delete_vertex(&self, vertex: &str) -> Result<Algebra> {
        let i = self.vertex(vertex)?;
        let file = self.to_file();
        let dead: BTreeSet<&str> =
            self.arrows().iter().filter(|a| a.source == i || a.target == i).map(|a| a.id.as_str()).collect();
        let out = AlgebraFile {
            vertices: file.vertices.iter().filter(|v| v.as_str() != vertex).cloned().collect(),
            arrows: file.arrows.iter().filter(|a| !dead.contains(a.id.as_str())).cloned().collect(),
            relations: file
                .relations
                .iter()
                .filter(|r| r.iter().all(|a| !dead.contains(a.as_str())))
                .cloned()
                .collect(),
        };
        Algebra::from_file(&out)
    }

    /// `A × k`: one more vertex, no new arrows.
    pub fn add_isolated_vertex(&self) -> (Algebra, String) {
        let id = self.quiver.fresh_vertex_id();
        let mut file = self.to_file();
        file.vertices.push(id.clone());
        (Algebra::from_file(&file).expect("adding an isolated vertex keeps the algebra valid"), id)
    }

    /// True iff the relabeling transports the presentation of `self` exactly
    /// onto that of `other`.
    pub fn equal_upto_relabel(
        &self,
        other: &Algebra,
        vertex_map: &BTreeMap<String, String>,
        arrow_map: &BTreeMap<String, String>,
    ) -> Result<bool> {
        check_injective_total("vertex", self.quiver.vertices.iter(), vertex_map)?;
        check_injective_total("arrow", self.arrows().iter().map(|a| &a.id), arrow_map)?;

        let image: BTreeSet<&String> = vertex_map.values().collect();
        let theirs: BTreeSet<&String> = other.quiver.vertices.iter().collect();
        if image != theirs || self.dimension() != other.dimension() {
            return Ok(false);
        }
        let mapped_arrows: BTreeSet<(String, String, String)> = self
            .quiver
            .arrow_specs()
            .into_iter()
            .map(|a| (arrow_map[&a.id].clone(), vertex_map[&a.from].clone(), vertex_map[&a.to].clone()))
            .collect();
        let their_arrows: BTreeSet<(String, String, String)> =
            other.quiver.arrow_specs().into_iter().map(|a| (a.id, a.from, a.to)).collect();
        if mapped_arrows != their_arrows {
            return Ok(false);
        }
        let mapped_rels: BTreeSet<Vec<String>> =
            self.relation_ids().into_iter().map(|r| r.into_iter().map(|a| arrow_map[&a].clone()).collect()).collect();
        let their_rels: BTreeSet<Vec<String>> = other.relation_ids().into_iter().collect();
        Ok(mapped_rels == their_rels)
    }
}

fn check_injective_total<'a>(
    what: &str,
    domain: impl Iterator<Item = &'a String>,
    map: &BTreeMap<String, String>,
) -> Result<()> {
    let mut seen = BTreeSet::new();
    let mut count = 0;
    for d in domain {
        count += 1;
        let Some(img) = map.get(d) else {
            return Err(Error::NonBijectiveRelabel(format!("{what} `{d}` is not mapped")));
        };
        if !seen.insert(img) {
            return Err(Error::NonBijectiveRelabel(format!("{what} image `{img}` is hit twice")));
        }
    }
    if map.len() != count {
        return Err(Error::NonBijectiveRelabel(format!("{what} map has keys outside the domain")));
    }
    Ok(())
}

fn contains_subpath(haystack: &[usize], needle: &[usize]) -> bool {
    needle.len() <= haystack.len() && haystack.windows(needle.len()).any(|w| w == needle)
}

fn normalize_relations(quiver: &Quiver, mut rels: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    rels.sort();
    rels.dedup();
    let minimal: Vec<Vec<usize>> =
        rels.iter().filter(|r| !rels.iter().any(|s| s != *r && contains_subpath(r, s))).cloned().collect();
    let key = |r: &Vec<usize>| r.iter().map(|&a| quiver.arrows()[a].id.clone()).collect::<Vec<_>>();
    let mut keyed: Vec<(Vec<String>, Vec<usize>)> = minimal.into_iter().map(|r| (key(&r), r)).collect();
    keyed.sort();
    keyed.into_iter().map(|(_, r)| r).collect()
}

/// Breadth-first enumeration of the paths avoiding every relation.
///
/// An allowed path is a walk in the automaton whose state is (end vertex,
/// longest suffix that is a proper prefix of a relation); more steps than
/// states means a pumpable cycle and an infinite basis.
fn enumerate_paths(quiver: &Quiver, relations: &[Vec<usize>]) -> Result<Vec<Path>> {
    let bound = quiver.vertices().len() + relations.iter().map(Vec::len).sum::<usize>() + 1;
    let mut paths: Vec<Path> =
        (0..quiver.vertices().len()).map(|v| Path { start: v, end: v, arrows: Vec::new() }).collect();
    let mut frontier: Vec<usize> = (0..paths.len()).collect();
    let mut length = 0;
    while !frontier.is_empty() {
        length += 1;
        let mut next = Vec::new();
        for &pi in &frontier {
            for (ai, a) in quiver.arrows().iter().enumerate() {
                if a.source != paths[pi].end {
                    continue;
                }
                let mut arrows = paths[pi].arrows.clone();
                arrows.push(ai);
                if relations.iter().any(|r| arrows.ends_with(r)) {
                    continue;
                }
                if length > bound {
                    return Err(Error::InfiniteDimensional);
                }
                next.push(paths.len());
                paths.push(Path { start: paths[pi].start, end: a.target, arrows });
            }
        }
        frontier = next;
    }
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(vertices: &[&str], arrows: &[(&str, &str, &str)], rels: &[&[&str]]) -> AlgebraFile {
        AlgebraFile {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|(id, f, t)| ArrowSpec { id: id.to_string(), from: f.to_string(), to: t.to_string() })
                .collect(),
            relations: rels.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
        }
    }

    fn a2() -> Algebra {
        Algebra::from_file(&spec(&["1", "2"], &[("b", "2", "1")], &[])).unwrap()
    }

    #[test]
    fn linear_three_with_relation() {
        let a =
            Algebra::from_file(&spec(&["1", "2", "3"], &[("a", "3", "2"), ("b", "2", "1")], &[&["a", "b"]])).unwrap();
        assert_eq!(a.dimension(), 5);
        assert!(a.paths().iter().all(|p| p.len() <= 1));
        for v in 0..3 {
            assert!(a.paths()[v].is_trivial());
            assert_eq!(a.paths()[v].start, v);
        }
    }

    #[test]
    fn path_algebra_dimensions() {
        assert_eq!(a2().dimension(), 3);
        let no_rel = Algebra::from_file(&spec(&["1", "2", "3"], &[("a", "3", "2"), ("b", "2", "1")], &[])).unwrap();
        assert_eq!(no_rel.dimension(), 6);
    }

    #[test]
    fn loop_without_relation_is_infinite() {
        let err = Algebra::from_file(&spec(&["1"], &[("x", "1", "1")], &[])).unwrap_err();
        assert!(matches!(err, Error::InfiniteDimensional));
        let ok = Algebra::from_file(&spec(&["1"], &[("x", "1", "1")], &[&["x", "x", "x"]])).unwrap();
        assert_eq!(ok.dimension(), 3);
    }

    #[test]
    fn bad_relations_are_rejected() {
        let f = spec(&["1", "2", "3"], &[("a", "3", "2"), ("b", "2", "1")], &[&["b", "a"]]);
        assert!(matches!(Algebra::from_file(&f), Err(Error::NonComposableRelation(_))));
        let f = spec(&["1", "2"], &[("b", "2", "1")], &[&["b", "zz"]]);
        assert!(matches!(Algebra::from_file(&f), Err(Error::UnknownArrow(_))));
        let f = spec(&["1", "2"], &[("b", "2", "1")], &[&["b"]]);
        assert!(matches!(Algebra::from_file(&f), Err(Error::ShortRelation(_))));
        let f = spec(&["1", "1"], &[], &[]);
        assert!(matches!(Algebra::from_file(&f), Err(Error::DuplicateVertex(_))));
        let f = spec(&["1"], &[("b", "2", "1")], &[]);
        assert!(matches!(Algebra::from_file(&f), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn relations_are_normalized() {
        let f = spec(
            &["1", "2", "3", "4"],
            &[("c", "4", "3"), ("a", "3", "2"), ("b", "2", "1")],
            &[&["c", "a", "b"], &["a", "b"], &["a", "b"]],
        );
        let a = Algebra::from_file(&f).unwrap();
        assert_eq!(a.relation_ids(), vec![vec!["a".to_string(), "b".to_string()]]);
    }

    #[test]
    fn one_point_extension_of_a2() {
        let (b, new) = a2().one_point_extension("2").unwrap();
        assert_eq!(new, "3");
        assert_eq!(b.dimension(), 5);
        assert_eq!(b.relation_ids(), vec![vec!["a3".to_string(), "b".to_string()]]);
        assert!(matches!(a2().one_point_extension("1"), Err(Error::NotASource(_))));
        assert!(matches!(a2().one_point_extension("9"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn one_point_extension_of_star() {
        let a = Algebra::from_file(&spec(&["2", "3", "4"], &[("x", "2", "3"), ("y", "2", "4")], &[])).unwrap();
        let b = a.one_point_extension_named("2", "1", "z").unwrap();
        let rels: BTreeSet<Vec<String>> = b.relation_ids().into_iter().collect();
        let want: BTreeSet<Vec<String>> =
            [vec!["z".to_string(), "x".to_string()], vec!["z".to_string(), "y".to_string()]].into();
        assert_eq!(rels, want);
        assert_eq!(b.dimension(), a.dimension() + 2);
    }

    #[test]
    fn delete_vertex_cases() {
        let (l3, _) = a2().one_point_extension("2").unwrap();
        assert_eq!(l3.delete_vertex("3").unwrap(), a2());
        let free3 = Algebra::from_file(&spec(&["1", "2", "3"], &[("a", "3", "2"), ("b", "2", "1")], &[])).unwrap();
        let split = free3.delete_vertex("2").unwrap();
        assert_eq!(split.num_vertices(), 2);
        assert!(split.arrows().is_empty());
        assert_eq!(split.dimension(), 2);
        assert!(matches!(free3.delete_vertex("7"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn delete_keeps_subset_of_basis() {
        let (l3, _) = a2().one_point_extension("2").unwrap();
        let q = l3.delete_vertex("2").unwrap();
        let original: BTreeSet<(String, String, Vec<String>)> = l3
            .paths()
            .iter()
            .map(|p| {
                (
                    l3.vertex_id(p.start).to_string(),
                    l3.vertex_id(p.end).to_string(),
                    p.arrows.iter().map(|&a| l3.arrows()[a].id.clone()).collect(),
                )
            })
            .collect();
        for p in q.paths() {
            let key = (
                q.vertex_id(p.start).to_string(),
                q.vertex_id(p.end).to_string(),
                p.arrows.iter().map(|&a| q.arrows()[a].id.clone()).collect(),
            );
            assert!(original.contains(&key));
        }
    }

    #[test]
    fn isolated_vertex() {
        let (b, id) = a2().add_isolated_vertex();
        assert_eq!(id, "3");
        assert_eq!(b.num_vertices(), 3);
        assert_eq!(b.dimension(), 4);
        let k = Algebra::from_file(&spec(&["1"], &[], &[])).unwrap();
        let (kk, _) = k.add_isolated_vertex();
        assert_eq!(kk.num_vertices(), 2);
        assert!(kk.arrows().is_empty());
    }

    #[test]
    fn relabel_checks() {
        let a = a2();
        let ids: BTreeMap<String, String> =
            [("1", "1"), ("2", "2")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        let arrows: BTreeMap<String, String> = [("b".to_string(), "b".to_string())].into();
        assert!(a.equal_upto_relabel(&a, &ids, &arrows).unwrap());

        let swapped: BTreeMap<String, String> =
            [("1", "2"), ("2", "1")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert!(!a.equal_upto_relabel(&a, &swapped, &arrows).unwrap());

        let (l3, _) = a.one_point_extension("2").unwrap();
        assert!(!a.equal_upto_relabel(&l3, &ids, &arrows).unwrap());

        let collapsing: BTreeMap<String, String> =
            [("1", "1"), ("2", "1")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        assert!(matches!(a.equal_upto_relabel(&a, &collapsing, &arrows), Err(Error::NonBijectiveRelabel(_))));
    }

    #[test]
    fn json_round_trip_is_stable() {
        let (l3, _) = a2().one_point_extension("2").unwrap();
        let text = l3.to_json();
        let again = Algebra::from_json(&text).unwrap();
        assert_eq!(again, l3);
        assert_eq!(again.to_json(), text);
    }

    #[test]
    fn opposite_reverses_arrows() {
        let (l3, _) = a2().one_point_extension("2").unwrap();
        let op = l3.opposite();
        assert_eq!(op.dimension(), l3.dimension());
        assert_eq!(op.relation_ids(), vec![vec!["b".to_string(), "a3".to_string()]]);
        assert_eq!(*op.opposite(), l3);
    }

    #[test]
    fn roles() {
        let roles = a2().roles();
        assert!(roles[1].is_source && !roles[1].is_sink);
        assert!(roles[0].is_sink && !roles[0].is_source);
    }
}
