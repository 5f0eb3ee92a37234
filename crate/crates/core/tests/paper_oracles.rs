//! Values stated in the paper, checked through the public API.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::*;
use tautilt::hasse::{dag_iso, glue, select_n};
use tautilt::paperlab::{
    closed_form, recurrence_check, verify_counts, verify_prop_2_6, verify_theorem_2_3, verify_tilting,
    ExtensionContext, ExtensionLab, FamilyKind, Formula,
};
use tautilt::rep::{pd_at_most_one, tau, Catalog, ModuleRef, Representation};
use tautilt::tilting::{enumerate_stau, Limits, TauContext};

/// Summands of `m` as dimension vectors.
fn shape(catalog: &Catalog, m: &ModuleRef) -> BTreeSet<Vec<usize>> {
    m.indices().iter().map(|&i| catalog.entry(i).dims().to_vec()).collect()
}

fn shapes(rows: &[&[&[usize]]]) -> BTreeSet<BTreeSet<Vec<usize>>> {
    rows.iter().map(|m| m.iter().map(|d| d.to_vec()).collect()).collect()
}

#[test]
fn example_a_has_five_tau_tilting_modules() {
    // vertex order 2, 3, 4: S3, P2 = 2/34, S4, 2/4, 2/3, S2
    let [s3, p2, s4, i4, i3, s2]: [&[usize]; 6] =
        [&[0, 1, 0], &[1, 1, 1], &[0, 0, 1], &[1, 0, 1], &[1, 1, 0], &[1, 0, 0]];
    // The printed list has `2/4 ⊕ 2/34 ⊕ 2` and `2 ⊕ 2/34 ⊕ 2/3` in the last two
    // places; both contain P2 ⊕ S2 with τS2 = P2, so the tilting modules there
    // are `2/4 ⊕ 2/3 ⊕ 2` and `2/4 ⊕ 2/34 ⊕ 2/3`.
    let listed = shapes(&[&[s3, p2, s4], &[i4, p2, s4], &[s3, p2, i3], &[i4, i3, s2], &[i4, p2, i3]]);

    let (ctx, pairs) = enumerate_stau(Arc::new(example_a())).unwrap();
    let found: BTreeSet<_> =
        pairs.iter().filter(|p| p.is_tau_tilting()).map(|p| shape(ctx.catalog(), &p.module)).collect();
    assert_eq!(found, listed);

    let catalog = ctx.catalog();
    let find = |d: &[usize]| (0..catalog.len()).find(|&i| catalog.entry(i).dims() == d).unwrap();
    for printed in [[i4, p2, s2], [s2, p2, i3]] {
        let m = ModuleRef::new(printed.iter().map(|d| find(d)).collect());
        assert!(!ctx.is_tau_rigid(&m));
    }
    for p in pairs.iter().filter(|p| p.is_tau_tilting()) {
        assert!(ctx.is_tilting(&p.module).unwrap(), "A is hereditary");
    }
}

#[test]
fn example_b_tau_tilting_and_tilting_modules() {
    // vertex order 1, 2, 3, 4
    let p1: &[usize] = &[1, 1, 0, 0];
    let [s3, p2, s4]: [&[usize]; 3] = [&[0, 0, 1, 0], &[0, 1, 1, 1], &[0, 0, 0, 1]];
    let [i4, i3, s2, s1]: [&[usize]; 4] = [&[0, 1, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]];
    let tilting =
        shapes(&[&[p1, s3, p2, s4], &[p1, i4, p2, s4], &[p1, s3, p2, i3], &[p1, i4, i3, s2], &[p1, i4, p2, i3]]);
    let mut all = tilting.clone();
    all.insert([p1, s1, s3, s4].iter().map(|d| d.to_vec()).collect());

    let (ctx, pairs) = enumerate_stau(Arc::new(example_b())).unwrap();
    let tau_tilt: Vec<&ModuleRef> = pairs.iter().filter(|p| p.is_tau_tilting()).map(|p| &p.module).collect();
    let found: BTreeSet<_> = tau_tilt.iter().map(|m| shape(ctx.catalog(), m)).collect();
    assert_eq!(found, all);
    let tilt: BTreeSet<_> =
        tau_tilt.iter().filter(|m| ctx.is_tilting(m).unwrap()).map(|m| shape(ctx.catalog(), m)).collect();
    assert_eq!(tilt, tilting);
}

#[test]
fn example_extension_is_b() {
    let ctx = example_context();
    let ids = |xs: &[&str]| xs.iter().map(|x| (x.to_string(), x.to_string())).collect();
    let same = ctx.extended.equal_upto_relabel(&example_b(), &ids(&["1", "2", "3", "4"]), &ids(&["a", "c", "d"]));
    assert!(same.unwrap());
    assert_eq!(ctx.quotient.num_vertices(), 2);
    assert_eq!(ctx.quotient.arrows().len(), 0);
}

#[test]
fn example_theorem_and_corollaries() {
    let lab = ExtensionLab::new(example_context(), &Limits::default()).unwrap();
    let r = verify_theorem_2_3(&lab).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!((r.counts["tau_tilt_A"], r.counts["tau_tilt_quotient"], r.counts["tau_tilt_B"]), (5, 1, 6));
    for r in verify_counts(&lab).unwrap() {
        assert!(r.passed(), "{r:?}");
    }
    let t = verify_tilting(&lab).unwrap();
    assert!(t.passed());
    assert_eq!(t.counts["tilt_B"], 5);
    assert!(verify_prop_2_6(&lab).unwrap().passed());
}

#[test]
fn hasse_of_a2_matches_the_figure() {
    let (ctx, pairs) = enumerate_stau(Arc::new(a2())).unwrap();
    let h = ctx.hasse(&pairs).unwrap();
    let d = h.dag();
    let arrows: BTreeSet<(&str, &str)> = d.arrows().iter().map(|&(u, v)| (d.label(u), d.label(v))).collect();
    let figure: BTreeSet<(&str, &str)> = [
        ("(P1⊕P2, 0)", "(S2⊕P2, 0)"),
        ("(P1⊕P2, 0)", "(P1, P2)"),
        ("(S2⊕P2, 0)", "(S2, P1)"),
        ("(P1, P2)", "(0, P1⊕P2)"),
        ("(S2, P1)", "(0, P1⊕P2)"),
    ]
    .into_iter()
    .collect();
    assert_eq!(arrows, figure);
    assert_eq!(d.label(h.source()), "(P1⊕P2, 0)");
    assert_eq!(d.label(h.sink()), "(0, P1⊕P2)");
}

#[test]
fn n_for_a2_is_the_two_red_vertices() {
    let lab = ExtensionLab::new(ExtensionContext::new("k(2→1)", a2(), "2").unwrap(), &Limits::default()).unwrap();
    let h = lab.doubled.hasse().unwrap();
    let d = &lab.ctx.doubled;
    let new = d.vertex(&lab.ctx.doubled_vertex).unwrap();
    let subset = select_n(&h, &lab.doubled.tau, new, d.vertex("2").unwrap()).unwrap();
    let catalog = lab.doubled.tau.catalog();
    let s_new = catalog.simple(new).unwrap();
    let s1 = catalog.simple(d.vertex("1").unwrap()).unwrap();
    let modules: BTreeSet<ModuleRef> = subset.iter().map(|&v| h.pairs()[v].module.clone()).collect();
    let expected: BTreeSet<ModuleRef> =
        [ModuleRef::new(vec![s_new, s1]), ModuleRef::new(vec![s_new])].into_iter().collect();
    assert_eq!(modules, expected);

    let h_b = lab.extended.hasse().unwrap();
    let glued = glue(h.dag(), &subset).unwrap();
    assert_eq!((h_b.len(), glued.len()), (12, 12));
    assert!(dag_iso(h_b.dag(), &glued));
}

#[test]
fn single_vertex_gluing() {
    let lab = ExtensionLab::new(ExtensionContext::new("k", single_vertex(), "1").unwrap(), &Limits::default()).unwrap();
    let r = verify_prop_2_6(&lab).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!((r.counts["H_B"], r.counts["H_Axk"], r.counts["N"]), (5, 4, 1));
}

#[test]
fn a2_family_step_at_4_gives_70() {
    let lab = ExtensionLab::new(ExtensionContext::family_step(FamilyKind::A2, 5).unwrap(), &Limits::default()).unwrap();
    let r = verify_prop_2_6(&lab).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.counts["H_B"], 70);
}

#[test]
fn pell_step_at_a9() {
    let lab =
        ExtensionLab::new(ExtensionContext::family_step(FamilyKind::A2, 10).unwrap(), &Limits::default()).unwrap();
    let c = verify_counts(&lab).unwrap();
    assert!(c.iter().all(|r| r.passed()));
    assert_eq!(
        (c[1].counts["stau_tilt_B"], c[1].counts["stau_tilt_A"], c[1].counts["stau_tilt_quotient"]),
        (5741, 2378, 985)
    );
}

#[test]
fn d5_tau_step() {
    let lab = ExtensionLab::new(ExtensionContext::family_step(FamilyKind::D2, 6).unwrap(), &Limits::default()).unwrap();
    let c = verify_counts(&lab).unwrap();
    assert_eq!((c[0].counts["tau_tilt_B"], c[0].counts["tau_tilt_A"], c[0].counts["tau_tilt_quotient"]), (17, 11, 6));
}

#[test]
fn d5_base_case_uses_the_hereditary_quotient() {
    let q = fam(FamilyKind::D2, 5).delete_vertex("5").unwrap().delete_vertex("4").unwrap();
    let (_, pairs) = enumerate_stau(Arc::new(q)).unwrap();
    assert_eq!(pairs.iter().filter(|p| p.is_tau_tilting()).count(), 5);
    assert!(recurrence_check(FamilyKind::D2, 6, &Limits::default()).unwrap().passed());
}

#[test]
fn tilting_counts_of_the_families() {
    for n in 2..=8 {
        let tau = TauContext::new(fam(FamilyKind::A2, n)).unwrap();
        let pairs = tau.enumerate().unwrap();
        let tilt = pairs.iter().filter(|p| p.is_tau_tilting() && tau.is_tilting(&p.module).unwrap()).count();
        assert_eq!(tilt, 2, "A_{n}²");
    }
    for n in 5..=8 {
        let tau = TauContext::new(fam(FamilyKind::D2, n)).unwrap();
        let pairs = tau.enumerate().unwrap();
        let tilt = pairs.iter().filter(|p| p.is_tau_tilting() && tau.is_tilting(&p.module).unwrap()).count();
        assert_eq!(tilt, 5, "D_{n}²");
    }
}

#[test]
fn iterated_tilting_contexts() {
    for n in 3..=8 {
        let lab =
            ExtensionLab::new(ExtensionContext::family_step(FamilyKind::A2, n).unwrap(), &Limits::default()).unwrap();
        let r = verify_tilting(&lab).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.counts["tilt_B"], 2);
    }
}

#[test]
fn simple_at_new_vertex() {
    // τ S_a = S_i, and pd S_a ≥ 2 when i is not a sink
    let ctx = example_context();
    let b = ctx.extended.clone();
    let a = b.vertex("1").unwrap();
    let s_a = Representation::simple(b.clone(), a).unwrap();
    let s_i = Representation::simple(b.clone(), b.vertex("2").unwrap()).unwrap();
    assert!(tautilt::rep::iso(&tau(&s_a).unwrap(), &s_i).unwrap());
    assert!(!pd_at_most_one(&s_a).unwrap());

    let ctx = ExtensionContext::new("k", single_vertex(), "1").unwrap();
    let b = ctx.extended.clone();
    let s_a = Representation::simple(b.clone(), b.vertex(&ctx.new_vertex).unwrap()).unwrap();
    assert!(pd_at_most_one(&s_a).unwrap());
}

#[test]
fn closed_form_values() {
    assert_eq!(closed_form(Formula::TauTiltA, 4).unwrap(), 5.into());
    assert_eq!(closed_form(Formula::TauTiltD, 4).unwrap(), 6.into());
    assert_eq!(closed_form(Formula::STauTiltD, 5).unwrap(), 78.into());
    assert_eq!(closed_form(Formula::STauTiltA, 2).unwrap(), 2.into());
    assert_eq!(closed_form(Formula::STauTiltD, 6).unwrap(), 188.into());
}

#[test]
fn regular_module_of_lambda3_decomposes_into_projectives() {
    let alg = Arc::new(lambda3());
    let catalog = Catalog::build(alg.clone()).unwrap();
    assert_eq!(catalog.len(), 5);
    let projectives: Vec<Representation> =
        (0..3).map(|v| Representation::projective(alg.clone(), v).unwrap()).collect();
    let regular = Representation::direct_sum(&projectives.iter().collect::<Vec<_>>()).unwrap();
    let m = tautilt::rep::decompose(&catalog, &regular).unwrap();
    let expected = ModuleRef::new((0..3).map(|v| catalog.projective(v)).collect());
    assert_eq!(m, expected);
}
