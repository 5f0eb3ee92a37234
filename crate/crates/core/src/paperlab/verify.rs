use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hasse::{dag_iso, glue, select_n, to_dot};
use crate::rep::ModuleRef;
use crate::tilting::Limits;

use super::{family, Enumerated, ExtensionLab, FamilyKind, Report};

/// Claims checked per extension context.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    /// Theorem 2.3 with the partition of Corollary a1.
    Theorem23,
    /// Corollaries 2.4 and 2.7.
    Counts,
    /// Corollary a2.
    Tilting,
    /// Proposition 2.6.
    Prop26,
    /// Lemma 2.2.
    Lemma22,
}

impl Claim {
    pub const ALL: [Claim; 5] = [Claim::Theorem23, Claim::Counts, Claim::Tilting, Claim::Prop26, Claim::Lemma22];

    pub fn run(self, lab: &ExtensionLab) -> Result<Vec<Report>> {
        Ok(match self {
            Claim::Theorem23 => vec![verify_theorem_2_3(lab)?],
            Claim::Counts => verify_counts(lab)?,
            Claim::Tilting => vec![verify_tilting(lab)?],
            Claim::Prop26 => vec![verify_prop_2_6(lab)?],
            Claim::Lemma22 => vec![verify_lemma_2_2(lab, Limits::default().clique_cap)?],
        })
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::Theorem23 => "theorem-2.3",
            Claim::Counts => "counts",
            Claim::Tilting => "tilting",
            Claim::Prop26 => "prop-2.6",
            Claim::Lemma22 => "lemma-2.2",
        })
    }
}

impl FromStr for Claim {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL.into_iter().find(|c| c.to_string() == s).ok_or_else(|| Error::Parse(format!("unknown claim `{s}`")))
    }
}

fn names(lab: &ExtensionLab, modules: impl IntoIterator<Item = ModuleRef>) -> Vec<String> {
    modules.into_iter().map(|m| lab.extended.tau.catalog().name_of(&m)).collect()
}

/// `τ-tilt B = Φ₁(τ-tilt A) ⊔ Φ₂(τ-tilt A/⟨e_i⟩)`.
pub fn verify_theorem_2_3(lab: &ExtensionLab) -> Result<Report> {
    let mut r = Report::new("theorem-2.3", &lab.ctx.name);
    let b = &lab.extended.tau;
    let mut images = [BTreeSet::new(), BTreeSet::new()];
    let sources = [lab.base.tau_tilting(), lab.quotient.tau_tilting()];
    for (k, modules) in sources.iter().enumerate() {
        for &m in modules {
            let image = if k == 0 { lab.phi1(m)? } else { lab.phi2(m)? };
            if !b.is_tau_rigid(&image) {
                r.fail(format!("Φ{} image is not τ-rigid", k + 1), names(lab, [image.clone()]));
            } else if !b.is_tau_tilting(&image) {
                r.fail(format!("Φ{} image is not τ-tilting", k + 1), names(lab, [image.clone()]));
            }
            images[k].insert(image);
        }
    }
    let overlap: Vec<ModuleRef> = images[0].intersection(&images[1]).cloned().collect();
    if !overlap.is_empty() {
        r.fail("Φ₁ and Φ₂ images overlap", names(lab, overlap));
    }
    let union: BTreeSet<ModuleRef> = images[0].union(&images[1]).cloned().collect();
    let enumerated: BTreeSet<ModuleRef> = lab.extended.tau_tilting().into_iter().cloned().collect();
    let missing: Vec<ModuleRef> = enumerated.difference(&union).cloned().collect();
    if !missing.is_empty() {
        r.fail("τ-tilting B-modules outside both images", names(lab, missing));
    }
    let extra: Vec<ModuleRef> = union.difference(&enumerated).cloned().collect();
    if !extra.is_empty() {
        r.fail("images not found by enumeration of B", names(lab, extra));
    }
    // Corollary a1: each τ-tilting B-module has exactly one of the two shapes.
    let (p, s) = (lab.p_new(), lab.s_new());
    for m in &enumerated {
        let shape2 = m.contains(s);
        if !m.contains(p) || (shape2 != images[1].contains(m)) || (!shape2 != images[0].contains(m)) {
            r.fail("module has neither or both shapes of Corollary a1", names(lab, [m.clone()]));
        }
    }
    r.count("tau_tilt_A", sources[0].len())
        .count("tau_tilt_quotient", sources[1].len())
        .count("tau_tilt_B", enumerated.len())
        .count("phi1_images", images[0].len())
        .count("phi2_images", images[1].len());
    Ok(r)
}

/// Corollaries 2.4 and 2.7 by independent enumeration.
pub fn verify_counts(lab: &ExtensionLab) -> Result<Vec<Report>> {
    let (a, q, b) = (&lab.base, &lab.quotient, &lab.extended);
    let (ta, tq, tb) = (a.tau_tilting().len(), q.tau_tilting().len(), b.tau_tilting().len());
    let (sa, sq, sb) = (a.pairs.len(), q.pairs.len(), b.pairs.len());

    let mut c24 = Report::new("corollary-2.4", &lab.ctx.name);
    c24.count("tau_tilt_A", ta).count("tau_tilt_quotient", tq).count("tau_tilt_B", tb);
    c24.expect_eq("|τ-tilt B| vs |τ-tilt A| + |τ-tilt A/⟨e_i⟩|", tb, ta + tq);

    let mut c27 = Report::new("corollary-2.7", &lab.ctx.name);
    c27.count("stau_tilt_A", sa).count("stau_tilt_quotient", sq).count("stau_tilt_B", sb);
    c27.expect_eq("|sτ-tilt B| vs 2|sτ-tilt A| + |sτ-tilt A/⟨e_i⟩|", sb, 2 * sa + sq);
    Ok(vec![c24, c27])
}

/// Corollary a2: `tilt B = Φ₁(tilt A)` when the source is not a sink.
pub fn verify_tilting(lab: &ExtensionLab) -> Result<Report> {
    let base = &lab.ctx.base;
    let i = base.vertex(&lab.ctx.source)?;
    if base.is_sink(i) {
        return Err(Error::Precondition(format!("vertex `{}` is a sink of A", lab.ctx.source)));
    }
    let mut r = Report::new("corollary-a2", &lab.ctx.name);
    let tilt_a = lab.base.tilting()?;
    let expected: BTreeSet<ModuleRef> = tilt_a.iter().map(|m| lab.phi1(m)).collect::<Result<_>>()?;
    let tilt_b: BTreeSet<ModuleRef> = lab.extended.tilting()?.into_iter().cloned().collect();
    if expected != tilt_b {
        let diff: Vec<ModuleRef> = expected.symmetric_difference(&tilt_b).cloned().collect();
        r.fail("tilt B differs from Φ₁(tilt A)", names(lab, diff));
    }
    for m in lab.quotient.tau_tilting() {
        let image = lab.phi2(m)?;
        if lab.extended.tau.is_tilting(&image)? {
            r.fail("a Φ₂ image is tilting", names(lab, [image]));
        }
    }
    r.count("tilt_A", tilt_a.len()).count("tilt_B", tilt_b.len());
    Ok(r)
}

/// Proposition 2.6: `H(B) ≅ H(A × k)^𝒩`.
pub fn verify_prop_2_6(lab: &ExtensionLab) -> Result<Report> {
    let mut r = Report::new("prop-2.6", &lab.ctx.name);
    let h_b = lab.extended.hasse()?;
    let h_d = lab.doubled.hasse()?;
    let d_alg = &lab.ctx.doubled;
    let subset =
        select_n(&h_d, &lab.doubled.tau, d_alg.vertex(&lab.ctx.doubled_vertex)?, d_alg.vertex(&lab.ctx.source)?)?;
    let glued = glue(h_d.dag(), &subset)?;
    let (sa, sq) = (lab.base.pairs.len(), lab.quotient.pairs.len());
    r.count("H_B", h_b.len())
        .count("H_Axk", h_d.len())
        .count("N", subset.len())
        .count("glued", glued.len())
        .count("stau_tilt_A", sa)
        .count("stau_tilt_quotient", sq);
    r.expect_eq("|sτ-tilt(A × k)| vs 2|sτ-tilt A|", h_d.len(), 2 * sa);
    r.expect_eq("|𝒩| vs |sτ-tilt A/⟨e_i⟩|", subset.len(), sq);
    r.expect_eq("|H(A × k)^𝒩| vs 2|sτ-tilt A| + |sτ-tilt A/⟨e_i⟩|", glued.len(), 2 * sa + sq);
    if !dag_iso(h_b.dag(), &glued) {
        r.fail("H(B) is not isomorphic to H(A × k)^𝒩", vec![]);
        r.attachments.push(("hasse_B.dot".into(), to_dot(h_b.dag())));
        r.attachments.push(("hasse_glued.dot".into(), to_dot(&glued)));
    }
    Ok(r)
}

/// Lemma 2.2: `M ⊕ P_{a★}` is τ-rigid for every τ-rigid `M`, and every
/// τ-tilting `B`-module contains `P_{a★}`. Also checks that τ-tilting modules
/// are maximal τ-rigid.
pub fn verify_lemma_2_2(lab: &ExtensionLab, cap: usize) -> Result<Report> {
    let mut r = Report::new("lemma-2.2", &lab.ctx.name);
    let b = &lab.extended.tau;
    let p = lab.p_new();
    let rigid = b.tau_rigid_modules(cap)?;
    for m in &rigid {
        let with_p = if m.contains(p) { m.clone() } else { m.with(p) };
        if !b.is_tau_rigid(&with_p) {
            r.fail("M ⊕ P_a is not τ-rigid", names(lab, [m.clone()]));
        }
    }
    let tilting = lab.extended.tau_tilting();
    for &t in &tilting {
        if !t.contains(p) {
            r.fail("τ-tilting module without P_a", names(lab, [t.clone()]));
        }
        for x in (0..b.catalog().len()).filter(|&x| !t.contains(x)) {
            if b.is_tau_rigid(&t.with(x)) {
                r.fail("τ-tilting module is not maximal τ-rigid", names(lab, [t.with(x)]));
            }
        }
    }
    r.count("tau_rigid_B", rigid.len()).count("tau_tilt_B", tilting.len());
    Ok(r)
}

/// The recurrences `τ_n = τ_{n−1} + τ_{n−2}` and `sτ_n = 2 sτ_{n−1} + sτ_{n−2}`.
/// For `D`, the first step `n = 5` uses the actual quotient `D₄²/⟨e₄⟩`.
pub fn recurrence_check(kind: FamilyKind, n_max: usize, limits: &Limits) -> Result<Report> {
    let n_min = kind.min_n();
    if n_max < n_min {
        return Err(Error::OutOfRange(format!("{kind} needs n ≥ {n_min}")));
    }
    let mut r = Report::new("recurrence", format!("{kind}, n ≤ {n_max}"));
    let mut tau = Vec::new();
    let mut stau = Vec::new();
    for n in n_min..=n_max {
        let e = Enumerated::new(Arc::new(family(kind, n)?), limits)?;
        tau.push(e.tau_tilting().len());
        stau.push(e.pairs.len());
        r.count(format!("tau[{n}]"), tau[tau.len() - 1]).count(format!("stau[{n}]"), stau[stau.len() - 1]);
    }
    let at = |v: &Vec<usize>, n: usize| v[n - n_min];
    let mut check = |n: usize, t1: usize, t2: usize, s1: usize, s2: usize, how: &str| {
        let (t, s) = (at(&tau, n), at(&stau, n));
        if t != t1 + t2 {
            r.fail(format!("τ recurrence fails at n={n} ({how})"), vec![format!("{t} ≠ {t1} + {t2}")]);
        }
        if s != 2 * s1 + s2 {
            r.fail(format!("sτ recurrence fails at n={n} ({how})"), vec![format!("{s} ≠ 2·{s1} + {s2}")]);
        }
    };
    let recur_from = match kind {
        FamilyKind::A2 => 3,
        FamilyKind::D2 => 6,
    };
    if kind == FamilyKind::D2 && n_max >= 5 {
        let q = Enumerated::new(Arc::new(family(kind, 4)?.delete_vertex("4")?), limits)?;
        let (tq, sq) = (q.tau_tilting().len(), q.pairs.len());
        check(5, at(&tau, 4), tq, at(&stau, 4), sq, "deletion quotient D₄²/⟨e₄⟩");
    }
    for n in recur_from.max(n_min)..=n_max {
        check(n, at(&tau, n - 1), at(&tau, n - 2), at(&stau, n - 1), at(&stau, n - 2), "recurrence");
    }
    Ok(r)
}
