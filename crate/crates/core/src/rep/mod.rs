//! Finite-dimensional representations of a bound quiver algebra.
//!
//! A representation stores one vector space dimension per vertex and, for
//! every arrow `α: s → t`, a `dims[t] × dims[s]` matrix. A path
//! `(α₁, …, α_k)` acts by `M_{α_k} ⋯ M_{α₁}`.

mod catalog;
mod hom;
mod tau;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, QMatrix, Rational};

pub use catalog::{decompose, endomorphism_local_rank, iso, iso_certificate, Catalog, CatalogEntry, ModuleRef};
pub use hom::{ext1, hom_basis, hom_dim, pd_at_most_one};
pub use tau::{min_presentation, nakayama, projective_cover, tau, tau_inverse, Presentation, ProjectiveCover};

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<QMatrix>,
}

/// Serialized representation: dimensions and row-major `"p/q"` matrices keyed by id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub dims: BTreeMap<String, usize>,
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
}

impl Representation {
    /// Checked constructor: shapes must match and every relation must act as zero.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<QMatrix>) -> Result<Self> {
        if dims.len() != algebra.num_vertices() {
            return Err(Error::InvalidRepresentation(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                algebra.num_vertices()
            )));
        }
        if maps.len() != algebra.arrows().len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} maps for {} arrows",
                maps.len(),
                algebra.arrows().len()
            )));
        }
        for (a, m) in algebra.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow {} has a {}x{} matrix, expected {}x{}",
                    a.id,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
        }
        let rep = Representation { algebra, dims, maps };
        rep.check_relations()?;
        Ok(rep)
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let dims = vec![0; algebra.num_vertices()];
        let maps = vec![QMatrix::zeros(0, 0); algebra.arrows().len()];
        Representation { algebra, dims, maps }
    }

    pub fn simple(algebra: Arc<Algebra>, v: usize) -> Result<Self> {
        check_vertex(&algebra, v)?;
        let mut dims = vec![0; algebra.num_vertices()];
        dims[v] = 1;
        let maps = algebra.arrows().iter().map(|a| QMatrix::zeros(dims[a.target], dims[a.source])).collect();
        Representation::new(algebra, dims, maps)
    }

    /// `P_v`: the span of basis paths starting at `v`, arrows acting by right composition.
    pub fn projective(algebra: Arc<Algebra>, v: usize) -> Result<Self> {
        check_vertex(&algebra, v)?;
        let n = algebra.num_vertices();
        let dims: Vec<usize> = (0..n).map(|w| algebra.paths_between(v, w).len()).collect();
        let mut maps = Vec::with_capacity(algebra.arrows().len());
        for (ai, a) in algebra.arrows().iter().enumerate() {
            let arrow_path = algebra.path_lookup(a.source, &[ai]).expect("arrows are basis paths");
            let mut m = QMatrix::zeros(dims[a.target], dims[a.source]);
            let targets = algebra.paths_between(v, a.target);
            for (col, &p) in algebra.paths_between(v, a.source).iter().enumerate() {
                if let Some(pa) = algebra.compose(p, arrow_path) {
                    let row = targets.iter().position(|&t| t == pa).expect("composite ends at target");
                    m.set(row, col, Rational::one());
                }
            }
            maps.push(m);
        }
        Representation::new(algebra, dims, maps)
    }

    /// `I_v`: dual basis of the paths ending at `v`; an arrow strips itself off the front.
    pub fn injective(algebra: Arc<Algebra>, v: usize) -> Result<Self> {
        check_vertex(&algebra, v)?;
        let n = algebra.num_vertices();
        let dims: Vec<usize> = (0..n).map(|w| algebra.paths_between(w, v).len()).collect();
        let mut maps = Vec::with_capacity(algebra.arrows().len());
        for (ai, a) in algebra.arrows().iter().enumerate() {
            let mut m = QMatrix::zeros(dims[a.target], dims[a.source]);
            let targets = algebra.paths_between(a.target, v);
            for (col, &p) in algebra.paths_between(a.source, v).iter().enumerate() {
                let path = &algebra.paths()[p];
                if path.arrows.first() == Some(&ai) {
                    let rest = algebra.path_lookup(a.target, &path.arrows[1..]).expect("subpaths are basis paths");
                    let row = targets.iter().position(|&t| t == rest).expect("rest ends at v");
                    m.set(row, col, Rational::one());
                }
            }
            maps.push(m);
        }
        Representation::new(algebra, dims, maps)
    }

    pub fn direct_sum(parts: &[&Representation]) -> Result<Self> {
        let Some(first) = parts.first() else {
            return Err(Error::InvalidRepresentation("empty direct sum needs an algebra".into()));
        };
        let algebra = first.algebra.clone();
        if parts.iter().any(|p| !same_algebra(&p.algebra, &algebra)) {
            return Err(Error::AlgebraMismatch);
        }
        let dims = (0..algebra.num_vertices()).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..algebra.arrows().len())
            .map(|a| QMatrix::block_diag(&parts.iter().map(|p| &p.maps[a]).collect::<Vec<_>>()))
            .collect();
        Ok(Representation { algebra, dims, maps })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[QMatrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &QMatrix {
        &self.maps[arrow]
    }

    /// Action of a path given by its arrow sequence, starting at `start`.
    pub fn path_matrix(&self, start: usize, arrows: &[usize]) -> QMatrix {
        let mut m = QMatrix::identity(self.dims[start]);
        for &a in arrows {
            m = &self.maps[a] * &m;
        }
        m
    }

    pub fn check_relations(&self) -> Result<()> {
        for r in self.algebra.relations() {
            let start = self.algebra.arrows()[r[0]].source;
            if !self.path_matrix(start, r).is_zero() {
                return Err(Error::InvalidRepresentation(format!(
                    "relation {:?} does not act as zero",
                    r.iter().map(|&a| &self.algebra.arrows()[a].id).collect::<Vec<_>>()
                )));
            }
        }
        Ok(())
    }

    /// Transports `self` onto another algebra by matching vertex and arrow ids.
    /// Vertices absent from `self`'s algebra get dimension zero; arrows absent
    /// from it act as zero.
    pub fn transport(&self, target: Arc<Algebra>) -> Result<Self> {
        let mut dims = vec![0; target.num_vertices()];
        for v in 0..self.algebra.num_vertices() {
            dims[target.vertex(self.algebra.vertex_id(v))?] = self.dims[v];
        }
        let mut maps: Vec<QMatrix> =
            target.arrows().iter().map(|a| QMatrix::zeros(dims[a.target], dims[a.source])).collect();
        for (ai, a) in self.algebra.arrows().iter().enumerate() {
            let ti = target.quiver().arrow_index(&a.id).ok_or_else(|| Error::UnknownArrow(a.id.clone()))?;
            let ta = &target.arrows()[ti];
            if target.vertex_id(ta.source) != self.algebra.vertex_id(a.source)
                || target.vertex_id(ta.target) != self.algebra.vertex_id(a.target)
            {
                return Err(Error::ContextMismatch(format!("arrow {} changes endpoints", a.id)));
            }
            maps[ti] = self.maps[ai].clone();
        }
        Representation::new(target, dims, maps)
    }

    /// The vector-space dual, a representation of the opposite algebra.
    pub fn dual(&self) -> Representation {
        self.dual_over(self.algebra.opposite())
    }

    pub(crate) fn dual_over(&self, algebra: Arc<Algebra>) -> Representation {
        Representation { algebra, dims: self.dims.clone(), maps: self.maps.iter().map(QMatrix::transpose).collect() }
    }

    pub fn to_file(&self) -> RepresentationFile {
        let dims = (0..self.dims.len()).map(|v| (self.algebra.vertex_id(v).to_string(), self.dims[v])).collect();
        let maps = self
            .algebra
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| {
                let rows =
                    (0..m.rows()).map(|r| (0..m.cols()).map(|c| format_rational(m.get(r, c))).collect()).collect();
                (a.id.clone(), rows)
            })
            .collect();
        RepresentationFile { dims, maps }
    }

    pub fn from_file(algebra: Arc<Algebra>, file: &RepresentationFile) -> Result<Self> {
        let mut dims = vec![0; algebra.num_vertices()];
        for (id, &d) in &file.dims {
            dims[algebra.vertex(id)?] = d;
        }
        let mut maps = Vec::with_capacity(algebra.arrows().len());
        for a in algebra.arrows() {
            let (rows, cols) = (dims[a.target], dims[a.source]);
            let m = match file.maps.get(&a.id) {
                None => QMatrix::zeros(rows, cols),
                Some(data) => {
                    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
                        return Err(Error::InvalidRepresentation(format!("matrix for {} has the wrong shape", a.id)));
                    }
                    let entries = data.iter().flatten().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
                    QMatrix::from_entries(rows, cols, entries)?
                }
            };
            maps.push(m);
        }
        for id in file.maps.keys() {
            if algebra.quiver().arrow_index(id).is_none() {
                return Err(Error::UnknownArrow(id.clone()));
            }
        }
        Representation::new(algebra, dims, maps)
    }
}

fn check_vertex(algebra: &Algebra, v: usize) -> Result<()> {
    if v < algebra.num_vertices() {
        Ok(())
    } else {
        Err(Error::UnknownVertex(format!("#{v}")))
    }
}

/// A module homomorphism, one block per vertex (`dims_target[v] × dims_source[v]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub blocks: Vec<QMatrix>,
}

impl Morphism {
    pub fn zero(source: &Representation, target: &Representation) -> Self {
        Morphism { blocks: (0..source.dims.len()).map(|v| QMatrix::zeros(target.dims[v], source.dims[v])).collect() }
    }

    pub fn identity(m: &Representation) -> Self {
        Morphism { blocks: m.dims.iter().map(|&d| QMatrix::identity(d)).collect() }
    }

    /// Checks shapes and the commuting squares `Y_α f_s = f_t X_α`.
    pub fn check(&self, source: &Representation, target: &Representation) -> Result<()> {
        if !same_algebra(&source.algebra, &target.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if self.blocks.len() != source.dims.len() {
            return Err(Error::NotAMorphism("wrong number of blocks".into()));
        }
        for (v, b) in self.blocks.iter().enumerate() {
            if b.rows() != target.dims[v] || b.cols() != source.dims[v] {
                return Err(Error::NotAMorphism(format!("block at vertex {v} has the wrong shape")));
            }
        }
        for (ai, a) in source.algebra.arrows().iter().enumerate() {
            let lhs = &target.maps[ai] * &self.blocks[a.source];
            let rhs = &self.blocks[a.target] * &source.maps[ai];
            if lhs != rhs {
                return Err(Error::NotAMorphism(format!("square at arrow {} does not commute", a.id)));
            }
        }
        Ok(())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Morphism) -> Morphism {
        Morphism { blocks: self.blocks.iter().zip(&other.blocks).map(|(f, g)| g * f).collect() }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism { blocks: self.blocks.iter().zip(&other.blocks).map(|(f, g)| f + g).collect() }
    }

    pub fn scale(&self, k: &Rational) -> Morphism {
        Morphism { blocks: self.blocks.iter().map(|b| b.scale(k)).collect() }
    }

    pub fn pow(&self, k: u32) -> Morphism {
        Morphism { blocks: self.blocks.iter().map(|b| b.pow(k)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(QMatrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(QMatrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<Morphism> {
        let blocks = self.blocks.iter().map(QMatrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(Morphism { blocks })
    }

    pub fn trace(&self) -> Rational {
        self.blocks.iter().fold(Rational::zero(), |acc, b| acc + b.trace())
    }

    /// All entries in block order, for rank computations over a family of morphisms.
    pub fn flatten(&self) -> Vec<Rational> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    /// Kernel as a subrepresentation of `source`, with its inclusion.
    pub fn kernel(&self, source: &Representation) -> Result<(Representation, Morphism)> {
        let bases = self.blocks.iter().map(QMatrix::kernel_basis).collect();
        subrepresentation(source, bases)
    }

    /// Image as a subrepresentation of `target`, with its inclusion.
    pub fn image(&self, target: &Representation) -> Result<(Representation, Morphism)> {
        let bases = self.blocks.iter().map(QMatrix::column_space).collect();
        subrepresentation(target, bases)
    }

    /// Cokernel of `self: source → target`, with the projection from `target`.
    pub fn cokernel(&self, _source: &Representation, target: &Representation) -> Result<(Representation, Morphism)> {
        let dual = Morphism { blocks: self.blocks.iter().map(QMatrix::transpose).collect() };
        let (k, inc) = dual.kernel(&target.dual())?;
        let coker = k.dual_over(target.algebra.clone());
        coker.check_relations()?;
        let proj = Morphism { blocks: inc.blocks.iter().map(QMatrix::transpose).collect() };
        Ok((coker, proj))
    }
}

/// The subrepresentation spanned at each vertex by the columns of `bases[v]`
/// (which must be linearly independent), with its inclusion.
pub fn subrepresentation(m: &Representation, bases: Vec<QMatrix>) -> Result<(Representation, Morphism)> {
    let dims: Vec<usize> = bases.iter().map(QMatrix::cols).collect();
    let mut maps = Vec::with_capacity(m.maps.len());
    for (ai, a) in m.algebra.arrows().iter().enumerate() {
        let pushed = &m.maps[ai] * &bases[a.source];
        let coords = bases[a.target]
            .solve_matrix(&pushed)?
            .ok_or_else(|| Error::InvalidRepresentation(format!("subspace is not stable under arrow {}", a.id)))?;
        maps.push(coords);
    }
    let sub = Representation::new(m.algebra.clone(), dims, maps)?;
    Ok((sub, Morphism { blocks: bases }))
}

/// `rad M = Σ_α im M_α`.
pub fn radical(m: &Representation) -> Result<(Representation, Morphism)> {
    let n = m.algebra.num_vertices();
    let mut spans: Vec<QMatrix> = (0..n).map(|v| QMatrix::zeros(m.dims[v], 0)).collect();
    for (ai, a) in m.algebra.arrows().iter().enumerate() {
        spans[a.target] = spans[a.target].hstack(&m.maps[ai]);
    }
    subrepresentation(m, spans.iter().map(QMatrix::column_space).collect())
}

/// `M / rad M`, with the projection.
pub fn top(m: &Representation) -> Result<(Representation, Morphism)> {
    let (r, inc) = radical(m)?;
    inc.cokernel(&r, m)
}

/// Vectors killed by every arrow.
pub fn socle(m: &Representation) -> Result<(Representation, Morphism)> {
    let n = m.algebra.num_vertices();
    let mut stacks: Vec<QMatrix> = (0..n).map(|v| QMatrix::zeros(0, m.dims[v])).collect();
    for (ai, a) in m.algebra.arrows().iter().enumerate() {
        stacks[a.source] = stacks[a.source].vstack(&m.maps[ai]);
    }
    subrepresentation(m, stacks.iter().map(QMatrix::kernel_basis).collect())
}

/// The morphism `⊕ P_{tops[k]} → m` sending the generator `e_{tops[k]}` of the
/// `k`-th summand to `generators[k] ∈ m(tops[k])`.
pub(crate) fn morphism_from_projectives(m: &Representation, tops: &[usize], generators: &[Vec<Rational>]) -> Morphism {
    let alg = &m.algebra;
    let n = alg.num_vertices();
    let mut blocks: Vec<QMatrix> = Vec::with_capacity(n);
    for w in 0..n {
        let mut columns = Vec::new();
        for (&v, g) in tops.iter().zip(generators) {
            for &p in alg.paths_between(v, w) {
                let path = &alg.paths()[p];
                columns.push(m.path_matrix(v, &path.arrows).mul_vec(g));
            }
        }
        blocks.push(QMatrix::from_columns(m.dims[w], &columns));
    }
    Morphism { blocks }
}
