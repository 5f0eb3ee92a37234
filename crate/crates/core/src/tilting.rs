//! τ-rigid modules, support τ-tilting pairs, classical tilting modules,
//! g-vectors and the support τ-tilting (Hasse) quiver.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::hasse::LabeledDag;
use crate::rep::{ext1, hom_dim, pd_at_most_one, Catalog, ModuleRef};

/// Default bound on the number of τ-rigid modules visited by [`TauContext::enumerate`].
pub const DEFAULT_CLIQUE_CAP: usize = 1_000_000;

/// Enumeration guardrails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub clique_cap: usize,
    /// Catalog iteration cap; `None` means `10·n²`.
    pub catalog_cap: Option<usize>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { clique_cap: DEFAULT_CLIQUE_CAP, catalog_cap: None }
    }
}

/// A support τ-tilting pair `(M, P)`: `M` basic τ-rigid, `P = ⊕_{v ∈ proj} P_v`
/// with `Hom(P, M) = 0` and `|M| + |P| = n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct STauPair {
    pub module: ModuleRef,
    /// Vertex indices of the projective part, ascending.
    pub proj: Vec<usize>,
    /// `g(M) − Σ_{v ∈ proj} e_v`.
    pub g: Vec<i64>,
}

impl STauPair {
    pub fn is_tau_tilting(&self) -> bool {
        self.proj.is_empty()
    }

    /// Module summands (catalog indices) followed by `offset + v` for each
    /// projective-part vertex: the element set compared by mutation.
    fn elements(&self, offset: usize) -> Vec<usize> {
        let mut e: Vec<usize> = self.module.indices().to_vec();
        e.extend(self.proj.iter().map(|&v| offset + v));
        e
    }
}

impl PartialOrd for STauPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for STauPair {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.g, &self.module, &self.proj).cmp(&(&other.g, &other.module, &other.proj))
    }
}

/// Catalog plus the precomputed table `Hom(x, τy) ≠ 0` over catalog pairs.
#[derive(Debug)]
pub struct TauContext {
    catalog: Arc<Catalog>,
    hom_tau: Vec<Vec<bool>>,
    pd: OnceLock<Vec<bool>>,
    ext: OnceLock<Vec<Vec<usize>>>,
}

impl TauContext {
    pub fn new(algebra: Arc<Algebra>) -> Result<Self> {
        Self::with_limits(algebra, &Limits::default())
    }

    pub fn with_limits(algebra: Arc<Algebra>, limits: &Limits) -> Result<Self> {
        let catalog = match limits.catalog_cap {
            Some(cap) => Catalog::build_with_cap(algebra, cap)?,
            None => Catalog::build(algebra)?,
        };
        Self::from_catalog(Arc::new(catalog))
    }

    pub fn from_catalog(catalog: Arc<Catalog>) -> Result<Self> {
        let m = catalog.len();
        let flat: Vec<bool> = (0..m * m)
            .into_par_iter()
            .map(|k| {
                let (x, y) = (k / m, k % m);
                let t = &catalog.entry(y).tau;
                if t.is_zero() {
                    Ok(false)
                } else {
                    Ok(hom_dim(&catalog.entry(x).rep, t)? > 0)
                }
            })
            .collect::<Result<_>>()?;
        let hom_tau = flat.chunks(m.max(1)).map(<[bool]>::to_vec).take(m).collect();
        Ok(TauContext { catalog, hom_tau, pd: OnceLock::new(), ext: OnceLock::new() })
    }

    pub fn catalog(&self) -> &Arc<Catalog> {
        &self.catalog
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.catalog.algebra()
    }

    pub fn num_vertices(&self) -> usize {
        self.algebra().num_vertices()
    }

    /// `Hom(x, τy) ≠ 0` for catalog entries `x`, `y`.
    pub fn hom_to_tau(&self, x: usize, y: usize) -> bool {
        self.hom_tau[x][y]
    }

    /// `x ⊕ y` is τ-rigid.
    pub fn compatible(&self, x: usize, y: usize) -> bool {
        !self.hom_tau[x][y] && !self.hom_tau[y][x]
    }

    pub fn is_tau_rigid(&self, m: &ModuleRef) -> bool {
        let idx = m.indices();
        idx.iter().all(|&x| idx.iter().all(|&y| !self.hom_tau[x][y]))
    }

    /// Vertices `v` with `dims_M[v] ≠ 0`.
    pub fn support(&self, m: &ModuleRef) -> Vec<usize> {
        let dims = self.catalog.dims_of(m);
        (0..dims.len()).filter(|&v| dims[v] != 0).collect()
    }

    pub fn is_tau_tilting(&self, m: &ModuleRef) -> bool {
        m.is_basic() && m.distinct() == self.num_vertices() && self.is_tau_rigid(m)
    }

    pub fn is_support_tau_tilting(&self, m: &ModuleRef) -> bool {
        m.is_basic() && self.is_tau_rigid(m) && m.distinct() == self.support(m).len()
    }

    /// The pair `(m, P)` with `P` the projectives at the vertices outside the support of `m`.
    pub fn complete_to_pair(&self, m: &ModuleRef) -> Result<STauPair> {
        if !self.is_support_tau_tilting(m) {
            return Err(Error::Precondition(format!("{} is not a support τ-tilting module", self.catalog.name_of(m))));
        }
        let support = self.support(m);
        let proj = (0..self.num_vertices()).filter(|v| !support.contains(v)).collect();
        Ok(self.make_pair(m.clone(), proj))
    }

    fn make_pair(&self, module: ModuleRef, proj: Vec<usize>) -> STauPair {
        let g = self.g_vector(&module, &proj);
        STauPair { module, proj, g }
    }

    /// `Σ g(summands) − Σ_{v ∈ proj} e_v`.
    pub fn g_vector(&self, m: &ModuleRef, proj: &[usize]) -> Vec<i64> {
        let mut g = vec![0i64; self.num_vertices()];
        for &i in m.indices() {
            for (t, x) in g.iter_mut().zip(&self.catalog.entry(i).g_vector) {
                *t += x;
            }
        }
        for &v in proj {
            g[v] -= 1;
        }
        g
    }

    fn pd_table(&self) -> Result<&Vec<bool>> {
        if let Some(t) = self.pd.get() {
            return Ok(t);
        }
        let t = self.catalog.entries().par_iter().map(|e| pd_at_most_one(&e.rep)).collect::<Result<Vec<_>>>()?;
        Ok(self.pd.get_or_init(|| t))
    }

    fn ext_table(&self) -> Result<&Vec<Vec<usize>>> {
        if let Some(t) = self.ext.get() {
            return Ok(t);
        }
        let entries = self.catalog.entries();
        let t = entries
            .par_iter()
            .map(|x| entries.iter().map(|y| ext1(&x.rep, &y.rep)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(self.ext.get_or_init(|| t))
    }

    /// `pd m ≤ 1`, `Ext¹(m, m) = 0` and `|m| = n`, each checked directly.
    pub fn is_tilting(&self, m: &ModuleRef) -> Result<bool> {
        if !m.is_basic() || m.distinct() != self.num_vertices() {
            return Ok(false);
        }
        let pd = self.pd_table()?;
        if !m.indices().iter().all(|&i| pd[i]) {
            return Ok(false);
        }
        let ext = self.ext_table()?;
        let idx = m.indices();
        Ok(idx.iter().all(|&x| idx.iter().all(|&y| ext[x][y] == 0)))
    }

    pub fn is_projective_dimension_at_most_one(&self, i: usize) -> Result<bool> {
        Ok(self.pd_table()?[i])
    }

    pub fn ext1_dim(&self, x: usize, y: usize) -> Result<usize> {
        Ok(self.ext_table()?[x][y])
    }

    /// All support τ-tilting pairs, ordered by g-vector.
    ///
    /// Basic τ-rigid modules are exactly the cliques of the compatibility
    /// graph on τ-rigid indecomposables; those with `|M| = |supp M|` are kept.
    pub fn enumerate(&self) -> Result<Vec<STauPair>> {
        self.enumerate_with_cap(DEFAULT_CLIQUE_CAP)
    }

    pub fn enumerate_with_cap(&self, cap: usize) -> Result<Vec<STauPair>> {
        let n = self.num_vertices();
        let mut pairs: Vec<STauPair> = self
            .cliques(cap, true)?
            .into_iter()
            .map(|m| {
                let support = self.support(&m);
                let proj = (0..n).filter(|v| !support.contains(v)).collect();
                self.make_pair(m, proj)
            })
            .collect();
        pairs.sort();
        for w in pairs.windows(2) {
            if w[0].g == w[1].g {
                return Err(Error::Invariant(format!(
                    "g-vector {:?} shared by {} and {}",
                    w[0].g,
                    self.pair_label(&w[0]),
                    self.pair_label(&w[1])
                )));
            }
        }
        Ok(pairs)
    }

    /// Every basic τ-rigid module, the zero module included, in ascending order.
    pub fn tau_rigid_modules(&self, cap: usize) -> Result<Vec<ModuleRef>> {
        let mut all = self.cliques(cap, false)?;
        all.sort();
        Ok(all)
    }

    fn cliques(&self, cap: usize, support_only: bool) -> Result<Vec<ModuleRef>> {
        let n = self.num_vertices();
        let rigid: Vec<usize> = (0..self.catalog.len()).filter(|&x| !self.hom_tau[x][x]).collect();
        let visited = AtomicUsize::new(1);
        let roots: Vec<Vec<ModuleRef>> = (0..rigid.len())
            .into_par_iter()
            .map(|r| {
                let x = rigid[r];
                let candidates: Vec<usize> =
                    rigid[r + 1..].iter().copied().filter(|&y| self.compatible(x, y)).collect();
                let mut out = Vec::new();
                let mut current = vec![x];
                let search = CliqueSearch { ctx: self, n, cap, support_only, visited: &visited };
                search.extend(&mut current, &candidates, &mut out)?;
                Ok(out)
            })
            .collect::<Result<_>>()?;
        Ok(std::iter::once(ModuleRef::default()).chain(roots.into_iter().flatten()).collect())
    }

    /// `(M, P)` in catalog names, e.g. `(S2, P1)`.
    pub fn pair_label(&self, p: &STauPair) -> String {
        let module = if p.module.is_empty() {
            "0".to_string()
        } else {
            p.module.indices().iter().map(|&i| self.catalog.entry(i).name.as_str()).collect::<Vec<_>>().join("⊕")
        };
        let proj = if p.proj.is_empty() {
            "0".to_string()
        } else {
            p.proj.iter().map(|&v| format!("P{}", self.algebra().vertex_id(v))).collect::<Vec<_>>().join("⊕")
        };
        format!("({module}, {proj})")
    }

    /// `Fac M' ⊆ Fac M`, i.e. `Hom(M', τM) = 0` and `M'` vanishes on the projective part of `T`.
    pub fn generates_below(&self, t: &STauPair, t2: &STauPair) -> bool {
        let killed = t2.module.indices().iter().all(|&x| t.module.indices().iter().all(|&y| !self.hom_tau[x][y]));
        let dims = self.catalog.dims_of(&t2.module);
        killed && t.proj.iter().all(|&v| dims[v] == 0)
    }

    /// The Hasse quiver on the given complete set of pairs.
    pub fn hasse(&self, pairs: &[STauPair]) -> Result<HasseQuiver> {
        let n = self.num_vertices();
        let offset = self.catalog.len();
        let mut groups: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (idx, p) in pairs.iter().enumerate() {
            let elements = p.elements(offset);
            for k in 0..elements.len() {
                let mut key = elements.clone();
                key.remove(k);
                key.sort_unstable();
                groups.entry(key).or_default().push(idx);
            }
        }
        let mut degree = vec![0usize; pairs.len()];
        let mut arrows = Vec::new();
        for members in groups.values() {
            match members.as_slice() {
                [_] => {}
                [a, b] => {
                    let (a, b) = (*a, *b);
                    degree[a] += 1;
                    degree[b] += 1;
                    match (self.generates_below(&pairs[a], &pairs[b]), self.generates_below(&pairs[b], &pairs[a])) {
                        (true, false) => arrows.push((a, b)),
                        (false, true) => arrows.push((b, a)),
                        _ => {
                            return Err(Error::Invariant(format!(
                                "mutation {} — {} has no unique direction",
                                self.pair_label(&pairs[a]),
                                self.pair_label(&pairs[b])
                            )))
                        }
                    }
                }
                more => {
                    return Err(Error::Regularity(format!("{} pairs share an almost complete pair", more.len())));
                }
            }
        }
        if let Some(bad) = degree.iter().position(|&d| d != n) {
            return Err(Error::Regularity(format!(
                "{} has {} neighbours, expected {n}",
                self.pair_label(&pairs[bad]),
                degree[bad]
            )));
        }
        arrows.sort_unstable();
        let labels: Vec<String> = pairs.iter().map(|p| self.pair_label(p)).collect();
        let dag = LabeledDag::new(labels, arrows)?;
        let quiver = HasseQuiver { pairs: pairs.to_vec(), dag };

        let projectives: ModuleRef = (0..n).map(|v| self.catalog.projective(v)).collect();
        let source = quiver.unique(|i| quiver.dag.in_degree(i) == 0, "source")?;
        let sink = quiver.unique(|i| quiver.dag.out_degree(i) == 0, "sink")?;
        if quiver.pairs[source].module != projectives || !quiver.pairs[source].proj.is_empty() {
            return Err(Error::Invariant(format!("source is {}, not (A, 0)", quiver.dag.label(source))));
        }
        if !quiver.pairs[sink].module.is_empty() {
            return Err(Error::Invariant(format!("sink is {}, not (0, A)", quiver.dag.label(sink))));
        }
        Ok(quiver)
    }

    pub fn dump(&self, pairs: &[STauPair]) -> EnumerationDump {
        let alg = self.algebra();
        EnumerationDump {
            count: pairs.len(),
            pairs: pairs
                .iter()
                .map(|p| PairRecord {
                    label: self.pair_label(p),
                    summands: p.module.indices().to_vec(),
                    support_complement: p.proj.iter().map(|&v| alg.vertex_id(v).to_string()).collect(),
                    g: p.g.clone(),
                })
                .collect(),
        }
    }
}

struct CliqueSearch<'a> {
    ctx: &'a TauContext,
    n: usize,
    cap: usize,
    support_only: bool,
    visited: &'a AtomicUsize,
}

impl CliqueSearch<'_> {
    fn extend(&self, current: &mut Vec<usize>, candidates: &[usize], out: &mut Vec<ModuleRef>) -> Result<()> {
        if self.visited.fetch_add(1, AtomicOrdering::Relaxed) >= self.cap {
            return Err(Error::CliqueCap(self.cap));
        }
        let m = ModuleRef::new(current.clone());
        if !self.support_only || self.ctx.support(&m).len() == current.len() {
            out.push(m);
        }
        if current.len() == self.n {
            return Ok(());
        }
        for (j, &c) in candidates.iter().enumerate() {
            let next: Vec<usize> = candidates[j + 1..].iter().copied().filter(|&y| self.ctx.compatible(c, y)).collect();
            current.push(c);
            self.extend(current, &next, out)?;
            current.pop();
        }
        Ok(())
    }
}

/// Serialized enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationDump {
    pub pairs: Vec<PairRecord>,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub label: String,
    pub summands: Vec<usize>,
    pub support_complement: Vec<String>,
    pub g: Vec<i64>,
}

/// Support τ-tilting pairs as vertices, left mutations as arrows.
#[derive(Clone, Debug)]
pub struct HasseQuiver {
    pairs: Vec<STauPair>,
    dag: LabeledDag,
}

impl HasseQuiver {
    fn unique(&self, pred: impl Fn(usize) -> bool, what: &str) -> Result<usize> {
        let found: Vec<usize> = (0..self.pairs.len()).filter(|&i| pred(i)).collect();
        match found.as_slice() {
            [one] => Ok(*one),
            _ => Err(Error::Invariant(format!("expected a unique {what}, found {}", found.len()))),
        }
    }

    pub fn pairs(&self) -> &[STauPair] {
        &self.pairs
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        self.dag.arrows()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn source(&self) -> usize {
        (0..self.len()).find(|&i| self.dag.in_degree(i) == 0).expect("validated at construction")
    }

    pub fn sink(&self) -> usize {
        (0..self.len()).find(|&i| self.dag.out_degree(i) == 0).expect("validated at construction")
    }

    pub fn dag(&self) -> &LabeledDag {
        &self.dag
    }
}

/// Catalog, enumeration and Hasse quiver in one go.
pub fn enumerate_stau(algebra: Arc<Algebra>) -> Result<(TauContext, Vec<STauPair>)> {
    let ctx = TauContext::new(algebra)?;
    let pairs = ctx.enumerate()?;
    Ok((ctx, pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::Representation;
    use crate::test_support::*;

    fn counts(alg: Arc<Algebra>) -> (usize, usize) {
        let (_, pairs) = enumerate_stau(alg).unwrap();
        (pairs.iter().filter(|p| p.is_tau_tilting()).count(), pairs.len())
    }

    #[test]
    fn small_counts() {
        assert_eq!(counts(a_family(1)), (1, 2));
        assert_eq!(counts(a2_path()), (2, 5));
        assert_eq!(counts(lambda3()), (3, 12));
        assert_eq!(counts(a_family(4)), (5, 29));
    }

    #[test]
    fn rigidity_examples() {
        let ctx = TauContext::new(a2_path()).unwrap();
        let c = ctx.catalog();
        let (s1, s2) = (c.simple(0).unwrap(), c.simple(1).unwrap());
        assert!(!ctx.is_tau_rigid(&ModuleRef::new(vec![s1, s2])));
        let regular: ModuleRef = (0..2).map(|v| c.projective(v)).collect();
        assert!(ctx.is_tau_rigid(&regular));
        assert!(ctx.is_tau_tilting(&regular));
        assert!(ctx.is_tilting(&regular).unwrap());
        let zero = ModuleRef::default();
        assert!(ctx.is_support_tau_tilting(&zero));
        assert_eq!(ctx.complete_to_pair(&zero).unwrap().proj, vec![0, 1]);
        for i in 0..c.len() {
            assert!(ctx.is_tau_rigid(&ModuleRef::new(vec![i])));
        }
    }

    #[test]
    fn g_vectors() {
        let ctx = TauContext::new(a2_path()).unwrap();
        let pairs = ctx.enumerate().unwrap();
        let top = pairs
            .iter()
            .find(|p| {
                p.proj.is_empty()
                    && p.module.distinct() == 2
                    && p.module.indices().iter().all(|&i| ctx.catalog().entry(i).projective_at.is_some())
            })
            .unwrap();
        assert_eq!(top.g, vec![1, 1]);
        let bottom = pairs.iter().find(|p| p.module.is_empty()).unwrap();
        assert_eq!(bottom.g, vec![-1, -1]);
        let s2 = ctx.catalog().simple(1).unwrap();
        let p = ctx.complete_to_pair(&ModuleRef::new(vec![s2])).unwrap();
        assert_eq!(p.proj, vec![0]);
        assert_eq!(p.g, vec![-2, 1]);
    }

    #[test]
    fn hasse_of_a2() {
        let ctx = TauContext::new(a2_path()).unwrap();
        let pairs = ctx.enumerate().unwrap();
        let h = ctx.hasse(&pairs).unwrap();
        assert_eq!((h.len(), h.arrows().len()), (5, 5));
        assert_eq!(ctx.pair_label(&h.pairs()[h.source()]), "(P1⊕P2, 0)");
        assert_eq!(ctx.pair_label(&h.pairs()[h.sink()]), "(0, P1⊕P2)");
    }

    #[test]
    fn hasse_of_single_vertex() {
        let ctx = TauContext::new(a_family(1)).unwrap();
        let h = ctx.hasse(&ctx.enumerate().unwrap()).unwrap();
        assert_eq!((h.len(), h.arrows().len()), (2, 1));
    }

    #[test]
    fn hasse_of_lambda3() {
        let ctx = TauContext::new(lambda3()).unwrap();
        let h = ctx.hasse(&ctx.enumerate().unwrap()).unwrap();
        assert_eq!(h.len(), 12);
        assert_eq!(h.arrows().len(), 12 * 3 / 2);
    }

    #[test]
    fn tilting_over_lambda3() {
        let ctx = TauContext::new(lambda3()).unwrap();
        let pairs = ctx.enumerate().unwrap();
        let tilting: Vec<_> = pairs.iter().filter(|p| ctx.is_tilting(&p.module).unwrap()).collect();
        assert_eq!(tilting.len(), 2);
        // S3 over Λ₃² has pd 2, so a τ-tilting module containing it is not tilting
        let s3 = ctx.catalog().simple(2).unwrap();
        assert!(!ctx.is_projective_dimension_at_most_one(s3).unwrap());
        let p3 = Representation::projective(lambda3(), 2).unwrap();
        assert!(ctx.catalog().lookup(&p3).unwrap().is_some());
    }

    #[test]
    fn clique_cap() {
        let ctx = TauContext::new(lambda3()).unwrap();
        assert!(matches!(ctx.enumerate_with_cap(3), Err(Error::CliqueCap(3))));
    }

    #[test]
    fn dump_round_trip() {
        let ctx = TauContext::new(a2_path()).unwrap();
        let pairs = ctx.enumerate().unwrap();
        let dump = ctx.dump(&pairs);
        let text = serde_json::to_string(&dump).unwrap();
        let back: EnumerationDump = serde_json::from_str(&text).unwrap();
        assert_eq!(back, dump);
        assert_eq!(back.count, 5);
    }
}
