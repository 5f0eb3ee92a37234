//! Verifiers for the extension theorems, the family generators, closed forms
//! and the count tables.

mod families;
mod report;
mod surd;
mod tables;
mod verify;

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::rep::ModuleRef;
use crate::tilting::{HasseQuiver, Limits, STauPair, TauContext};

pub use families::{family, FamilyKind};
pub use report::{hard_failures, Report, Status};
pub use surd::{closed_form, Formula, SurdInt};
pub use tables::{
    count_table, printed_value, reproduce_tables, verify_closed_forms, Column, CountTable, Discrepancy, Row, Severity,
    Tables,
};
pub use verify::{
    recurrence_check, verify_counts, verify_lemma_2_2, verify_prop_2_6, verify_theorem_2_3, verify_tilting, Claim,
};

/// `A`, its source `i`, and the algebras built from them: `B = A[S_i]`,
/// `A/⟨e_i⟩` and `A × k`.
#[derive(Clone, Debug)]
pub struct ExtensionContext {
    pub name: String,
    pub base: Arc<Algebra>,
    pub source: String,
    pub extended: Arc<Algebra>,
    pub new_vertex: String,
    pub quotient: Arc<Algebra>,
    pub doubled: Arc<Algebra>,
    /// The isolated vertex of `A × k`.
    pub doubled_vertex: String,
}

impl ExtensionContext {
    pub fn new(name: impl Into<String>, base: Algebra, source: &str) -> Result<Self> {
        let (extended, new_vertex) = base.one_point_extension(source)?;
        Self::assemble(name.into(), base, source, extended, new_vertex)
    }

    /// As [`ExtensionContext::new`] with chosen ids for the new vertex and arrow.
    pub fn named(
        name: impl Into<String>,
        base: Algebra,
        source: &str,
        new_vertex: &str,
        new_arrow: &str,
    ) -> Result<Self> {
        let extended = base.one_point_extension_named(source, new_vertex, new_arrow)?;
        Self::assemble(name.into(), base, source, extended, new_vertex.to_string())
    }

    fn assemble(name: String, base: Algebra, source: &str, extended: Algebra, new_vertex: String) -> Result<Self> {
        let quotient = base.delete_vertex(source)?;
        let (doubled, doubled_vertex) = base.add_isolated_vertex();
        Ok(ExtensionContext {
            name,
            base: Arc::new(base),
            source: source.to_string(),
            extended: Arc::new(extended),
            new_vertex,
            quotient: Arc::new(quotient),
            doubled: Arc::new(doubled),
            doubled_vertex,
        })
    }

    /// `A_n² = A_{n−1}²[S_{n−1}]` (resp. `D_n²`), `n` at least one above the family minimum.
    pub fn family_step(kind: FamilyKind, n: usize) -> Result<Self> {
        if n <= kind.min_n() {
            return Err(Error::OutOfRange(format!("{kind} extension step needs n > {}", kind.min_n())));
        }
        let base = family(kind, n - 1)?;
        Self::new(format!("{kind}_{} at {}", n - 1, n - 1), base, &(n - 1).to_string())
    }
}

/// A catalog together with the full list of support τ-tilting pairs.
#[derive(Debug)]
pub struct Enumerated {
    pub tau: TauContext,
    pub pairs: Vec<STauPair>,
}

/// `|τ-tilt|`, `|sτ-tilt|` and `|tilt|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counts {
    pub tau: usize,
    pub stau: usize,
    pub tilt: usize,
}

impl Enumerated {
    pub fn new(algebra: Arc<Algebra>, limits: &Limits) -> Result<Self> {
        let tau = TauContext::with_limits(algebra, limits)?;
        let pairs = tau.enumerate_with_cap(limits.clique_cap)?;
        Ok(Enumerated { tau, pairs })
    }

    /// τ-tilting modules, in g-vector order.
    pub fn tau_tilting(&self) -> Vec<&ModuleRef> {
        self.pairs.iter().filter(|p| p.is_tau_tilting()).map(|p| &p.module).collect()
    }

    pub fn tilting(&self) -> Result<Vec<&ModuleRef>> {
        let mut out = Vec::new();
        for m in self.tau_tilting() {
            if self.tau.is_tilting(m)? {
                out.push(m);
            }
        }
        Ok(out)
    }

    pub fn counts(&self) -> Result<Counts> {
        Ok(Counts { tau: self.tau_tilting().len(), stau: self.pairs.len(), tilt: self.tilting()?.len() })
    }

    pub fn hasse(&self) -> Result<HasseQuiver> {
        self.tau.hasse(&self.pairs)
    }
}

/// Enumerations of every algebra in an [`ExtensionContext`].
#[derive(Debug)]
pub struct ExtensionLab {
    pub ctx: ExtensionContext,
    pub base: Enumerated,
    pub quotient: Enumerated,
    pub extended: Enumerated,
    pub doubled: Enumerated,
}

impl ExtensionLab {
    pub fn new(ctx: ExtensionContext, limits: &Limits) -> Result<Self> {
        let base = Enumerated::new(ctx.base.clone(), limits)?;
        let quotient = Enumerated::new(ctx.quotient.clone(), limits)?;
        let extended = Enumerated::new(ctx.extended.clone(), limits)?;
        let doubled = Enumerated::new(ctx.doubled.clone(), limits)?;
        Ok(ExtensionLab { ctx, base, quotient, extended, doubled })
    }

    fn new_vertex_index(&self) -> usize {
        self.ctx.extended.vertex(&self.ctx.new_vertex).expect("context vertex")
    }

    /// Catalog index of `P_{a★}` over `B`.
    pub fn p_new(&self) -> usize {
        self.extended.tau.catalog().projective(self.new_vertex_index())
    }

    /// Catalog index of `S_{a★}` over `B`.
    pub fn s_new(&self) -> usize {
        self.extended.tau.catalog().simple(self.new_vertex_index()).expect("the new vertex is a source")
    }

    fn transport(&self, from: &Enumerated, m: &ModuleRef) -> Result<Vec<usize>> {
        let target = self.extended.tau.catalog();
        m.indices()
            .iter()
            .map(|&i| {
                let rep = from.tau.catalog().entry(i).rep.transport(self.ctx.extended.clone())?;
                target.lookup(&rep)?.ok_or_else(|| Error::CatalogIncomplete(rep.dims().to_vec()))
            })
            .collect()
    }

    /// `Φ₁(M₁) = M₁ ⊕ P_{a★}` for an `A`-module `M₁`.
    pub fn phi1(&self, m: &ModuleRef) -> Result<ModuleRef> {
        let mut idx = self.transport(&self.base, m)?;
        idx.push(self.p_new());
        Ok(ModuleRef::new(idx))
    }

    /// `Φ₂(M₂) = M₂ ⊕ P_{a★} ⊕ S_{a★}` for an `A/⟨e_i⟩`-module `M₂`.
    pub fn phi2(&self, m: &ModuleRef) -> Result<ModuleRef> {
        let mut idx = self.transport(&self.quotient, m)?;
        idx.push(self.p_new());
        idx.push(self.s_new());
        Ok(ModuleRef::new(idx))
    }
}
