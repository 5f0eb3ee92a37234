//! Isomorphism testing, decomposition into indecomposables, and the catalog
//! of all indecomposables of a representation-directed algebra.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use super::{hom_basis, min_presentation, same_algebra, subrepresentation, tau, tau_inverse, Morphism, Representation};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{q, QMatrix};

/// A direct sum of catalog entries, as a sorted multiset of indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleRef(Vec<usize>);

impl ModuleRef {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        ModuleRef(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_basic(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// `|M|`: the number of pairwise non-isomorphic summands.
    pub fn distinct(&self) -> usize {
        let mut v = self.0.clone();
        v.dedup();
        v.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn with(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.push(i);
        ModuleRef::new(v)
    }

    pub fn union(&self, other: &ModuleRef) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ModuleRef::new(v)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<usize> for ModuleRef {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ModuleRef::new(iter.into_iter().collect())
    }
}

fn endomorphism_basis(m: &Representation) -> Result<Vec<Morphism>> {
    hom_basis(m, m)
}

/// `dim End(m)/rad End(m)`, the rank of the trace form `(φ, ψ) ↦ tr(φψ)` on
/// `End(m)`. In characteristic zero its kernel is the radical.
pub fn endomorphism_local_rank(m: &Representation) -> Result<usize> {
    let basis = endomorphism_basis(m)?;
    Ok(trace_form_rank(&basis))
}

fn trace_form_rank(basis: &[Morphism]) -> usize {
    let k = basis.len();
    let gram = QMatrix::from_fn(k, k, |i, j| basis[i].then(&basis[j]).trace());
    gram.rank()
}

fn is_local(m: &Representation) -> Result<bool> {
    Ok(!m.is_zero() && endomorphism_local_rank(m)? == 1)
}

/// An isomorphism `x → y`, if one exists.
///
/// When either side has a local endomorphism ring, `x ≅ y` iff some composite
/// of basis morphisms `g_j ∘ f_i` is invertible. Otherwise the generic element
/// `Σ c_i f_i` is tested on the grid `{0, …, d}^r` with `d` the total
/// dimension, which bounds the degree of its determinant in each variable.
pub fn iso_certificate(x: &Representation, y: &Representation) -> Result<Option<Morphism>> {
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if x.dims() != y.dims() {
        return Ok(None);
    }
    if x.is_zero() {
        return Ok(Some(Morphism::zero(x, y)));
    }
    let forward = hom_basis(x, y)?;
    if forward.is_empty() {
        return Ok(None);
    }
    if let Some(f) = forward.iter().find(|f| f.is_iso()) {
        return Ok(Some(f.clone()));
    }
    let backward = hom_basis(y, x)?;
    if backward.is_empty() {
        return Ok(None);
    }
    if is_local(x)? {
        for f in &forward {
            if backward.iter().any(|g| f.then(g).is_iso()) {
                return Ok(Some(f.clone()));
            }
        }
        return Ok(None);
    }
    if is_local(y)? {
        for f in &forward {
            if backward.iter().any(|g| g.then(f).is_iso()) {
                return Ok(Some(f.clone()));
            }
        }
        return Ok(None);
    }
    Ok(grid_search(&forward, x.total_dim()))
}

fn grid_search(basis: &[Morphism], degree: usize) -> Option<Morphism> {
    let r = basis.len();
    let mut coeffs = vec![0usize; r];
    loop {
        // advance odometer
        let mut i = 0;
        loop {
            if i == r {
                return None;
            }
            coeffs[i] += 1;
            if coeffs[i] <= degree {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        let mut phi = basis[0].scale(&q(coeffs[0] as i64));
        for (f, &c) in basis.iter().zip(&coeffs).skip(1) {
            if c != 0 {
                phi = phi.add(&f.scale(&q(c as i64)));
            }
        }
        if phi.is_iso() {
            return Some(phi);
        }
    }
}

pub fn iso(x: &Representation, y: &Representation) -> Result<bool> {
    Ok(iso_certificate(x, y)?.is_some())
}

/// Splits `m` as `ker ψ ⊕ im ψ` for the first basis endomorphism whose
/// Fitting power `ψ = φ^N` is neither zero nor invertible.
fn fitting_split(m: &Representation, basis: &[Morphism]) -> Result<Option<(Representation, Representation)>> {
    let exponent = m.total_dim() as u32;
    for phi in basis {
        let psi = phi.pow(exponent);
        if psi.is_zero() || psi.is_iso() {
            continue;
        }
        let (k, _) = psi.kernel(m)?;
        let (i, _) = psi.image(m)?;
        return Ok(Some((k, i)));
    }
    Ok(None)
}

/// Splits off a catalog entry `X` through an idempotent `f (g f)⁻¹ g` with
/// `g ∘ f ∈ Aut(X)`.
fn split_off_entry(m: &Representation, catalog: &Catalog) -> Result<Option<(usize, Representation)>> {
    for (idx, entry) in catalog.entries.iter().enumerate() {
        let x = &entry.rep;
        if x.dims().iter().zip(m.dims()).any(|(a, b)| a > b) {
            continue;
        }
        let forward = hom_basis(x, m)?;
        if forward.is_empty() {
            continue;
        }
        let backward = hom_basis(m, x)?;
        for f in &forward {
            for g in &backward {
                let gf = f.then(g);
                let Some(inv) = gf.inverse() else { continue };
                let e = g.then(&inv).then(f);
                let complement_proj = Morphism::identity(m).add(&e.scale(&q(-1)));
                let bases = complement_proj.blocks.iter().map(QMatrix::column_space).collect();
                let (rest, _) = subrepresentation(m, bases)?;
                return Ok(Some((idx, rest)));
            }
        }
    }
    Ok(None)
}

/// Decomposes `m` into catalog entries.
pub fn decompose(catalog: &Catalog, m: &Representation) -> Result<ModuleRef> {
    if !same_algebra(catalog.algebra(), m.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let mut found = Vec::new();
    let mut work = vec![m.clone()];
    while let Some(piece) = work.pop() {
        if piece.is_zero() {
            continue;
        }
        let basis = endomorphism_basis(&piece)?;
        let rank = trace_form_rank(&basis);
        if rank == 1 {
            let idx = catalog.lookup(&piece)?.ok_or_else(|| Error::CatalogIncomplete(piece.dims().to_vec()))?;
            found.push(idx);
            continue;
        }
        if let Some((a, b)) = fitting_split(&piece, &basis)? {
            work.push(a);
            work.push(b);
            continue;
        }
        match split_off_entry(&piece, catalog)? {
            Some((idx, rest)) => {
                found.push(idx);
                work.push(rest);
            }
            None => return Err(Error::NonLocalSummand(piece.dims().to_vec(), rank)),
        }
    }
    let out = ModuleRef::new(found);
    let mut total = vec![0usize; m.dims().len()];
    for &i in out.indices() {
        for (t, d) in total.iter_mut().zip(catalog.entries[i].rep.dims()) {
            *t += d;
        }
    }
    debug_assert_eq!(total, m.dims());
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub rep: Representation,
    pub name: String,
    /// `τ` of the entry; zero for projectives.
    pub tau: Representation,
    /// Catalog index of `τ` of the entry, when nonzero.
    pub tau_index: Option<usize>,
    pub g_vector: Vec<i64>,
    pub projective_at: Option<usize>,
    pub simple_at: Option<usize>,
    pub injective: bool,
}

impl CatalogEntry {
    pub fn dims(&self) -> &[usize] {
        self.rep.dims()
    }
}

/// All indecomposables, up to isomorphism, of a representation-directed
/// algebra: the `τ⁻¹`-closure of the indecomposable projectives.
#[derive(Clone, Debug)]
pub struct Catalog {
    algebra: Arc<Algebra>,
    entries: Vec<CatalogEntry>,
    by_dims: HashMap<Vec<usize>, Vec<usize>>,
    projectives: Vec<usize>,
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl Catalog {
    pub fn default_cap(algebra: &Algebra) -> usize {
        10 * algebra.num_vertices() * algebra.num_vertices()
    }

    pub fn build(algebra: Arc<Algebra>) -> Result<Self> {
        let cap = Self::default_cap(&algebra);
        Self::build_with_cap(algebra, cap)
    }

    pub fn build_with_cap(algebra: Arc<Algebra>, cap: usize) -> Result<Self> {
        let n = algebra.num_vertices();
        let mut found: Vec<Representation> = Vec::new();
        let mut queue: VecDeque<Representation> =
            (0..n).map(|v| Representation::projective(algebra.clone(), v)).collect::<Result<_>>()?;
        let mut iterations = 0;
        while let Some(x) = queue.pop_front() {
            iterations += 1;
            if iterations > cap {
                return Err(Error::CatalogCap(cap));
            }
            let mut duplicate = false;
            for y in found.iter().filter(|y| y.dims() == x.dims()) {
                if iso(&x, y)? {
                    duplicate = true;
                    break;
                }
            }
            if duplicate {
                continue;
            }
            let rank = endomorphism_local_rank(&x)?;
            if rank != 1 {
                return Err(Error::NonLocalSummand(x.dims().to_vec(), rank));
            }
            let next = tau_inverse(&x)?;
            found.push(x);
            if !next.is_zero() {
                queue.push_back(next);
            }
        }

        let mut order: Vec<usize> = (0..found.len()).collect();
        order.sort_by(|&a, &b| {
            let (x, y) = (&found[a], &found[b]);
            (x.total_dim(), x.dims(), a).cmp(&(y.total_dim(), y.dims(), b))
        });
        let reps: Vec<Representation> = order.iter().map(|&i| found[i].clone()).collect();

        let mut by_dims: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (i, r) in reps.iter().enumerate() {
            by_dims.entry(r.dims().to_vec()).or_default().push(i);
        }

        let mut projectives = vec![usize::MAX; n];
        let mut entries = Vec::with_capacity(reps.len());
        for (idx, rep) in reps.iter().enumerate() {
            let p = min_presentation(rep)?;
            let projective_at = if p.p1.is_empty() && p.p0.len() == 1 { Some(p.p0[0]) } else { None };
            if let Some(v) = projective_at {
                projectives[v] = idx;
            }
            let simple_at = if rep.total_dim() == 1 { rep.dims().iter().position(|&d| d == 1) } else { None };
            let injective = tau_inverse(rep)?.is_zero();
            let t = tau(rep)?;
            entries.push(CatalogEntry {
                rep: rep.clone(),
                name: String::new(),
                tau: t,
                tau_index: None,
                g_vector: p.g_vector(n),
                projective_at,
                simple_at,
                injective,
            });
        }
        let mut catalog = Catalog { algebra, entries, by_dims, projectives };
        for idx in 0..catalog.entries.len() {
            catalog.entries[idx].name = catalog.default_name(idx);
            let t = catalog.entries[idx].tau.clone();
            if !t.is_zero() {
                let ti = catalog.lookup(&t)?.ok_or_else(|| Error::CatalogIncomplete(t.dims().to_vec()))?;
                catalog.entries[idx].tau_index = Some(ti);
            }
        }
        Ok(catalog)
    }

    fn default_name(&self, idx: usize) -> String {
        let e = &self.entries[idx];
        let alg = &self.algebra;
        if let Some(v) = e.projective_at {
            return format!("P{}", alg.vertex_id(v));
        }
        if let Some(v) = e.simple_at {
            return format!("S{}", alg.vertex_id(v));
        }
        if e.injective {
            if let Some(v) = (0..alg.num_vertices())
                .find(|&v| Representation::injective(alg.clone(), v).is_ok_and(|i| i.dims() == e.rep.dims()))
            {
                return format!("I{}", alg.vertex_id(v));
            }
        }
        format!("M{idx}")
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize) -> &CatalogEntry {
        &self.entries[i]
    }

    /// Catalog index of `P_v`.
    pub fn projective(&self, v: usize) -> usize {
        self.projectives[v]
    }

    /// Catalog index of `S_v`.
    pub fn simple(&self, v: usize) -> Option<usize> {
        self.entries.iter().position(|e| e.simple_at == Some(v))
    }

    /// Position of the entry isomorphic to an indecomposable `m`.
    pub fn lookup(&self, m: &Representation) -> Result<Option<usize>> {
        let Some(candidates) = self.by_dims.get(m.dims()) else {
            return Ok(None);
        };
        for &i in candidates {
            if iso(&self.entries[i].rep, m)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// The module `⊕ entries[i]` for `i` in `m`.
    pub fn assemble(&self, m: &ModuleRef) -> Result<Representation> {
        if m.is_empty() {
            return Ok(Representation::zero(self.algebra.clone()));
        }
        let parts: Vec<&Representation> = m.indices().iter().map(|&i| &self.entries[i].rep).collect();
        Representation::direct_sum(&parts)
    }

    pub fn name_of(&self, m: &ModuleRef) -> String {
        if m.is_empty() {
            return "0".into();
        }
        m.indices().iter().map(|&i| self.entries[i].name.as_str()).collect::<Vec<_>>().join("⊕")
    }

    /// Total dimension vector of a catalog multiset.
    pub fn dims_of(&self, m: &ModuleRef) -> Vec<usize> {
        let mut d = vec![0; self.algebra.num_vertices()];
        for &i in m.indices() {
            for (t, x) in d.iter_mut().zip(self.entries[i].dims()) {
                *t += x;
            }
        }
        d
    }

    /// `τ(m)` decomposed into catalog entries.
    pub fn tau_ref(&self, m: &ModuleRef) -> ModuleRef {
        m.indices().iter().filter_map(|&i| self.entries[i].tau_index).collect()
    }

    /// One line per entry: index, name and dimension vector.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, e) in self.entries.iter().enumerate() {
            let dims: Vec<String> = e.dims().iter().map(ToString::to_string).collect();
            out.push_str(&format!("{i}\t{}\t[{}]\n", e.name, dims.join(",")));
        }
        out
    }
}
