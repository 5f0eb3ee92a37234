//! Invariant suites: Lemma 2.2, exchange-graph regularity, the AR formula,
//! g-vector injectivity and relation satisfaction, over the fixed test set
//! and over random monomial tree algebras.

mod common;

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use common::*;
use proptest::prelude::*;
use tautilt::algebra::Algebra;
use tautilt::paperlab::{
    verify_counts, verify_lemma_2_2, verify_prop_2_6, verify_theorem_2_3, ExtensionContext, ExtensionLab, FamilyKind,
};
use tautilt::rep::{decompose, ext1, hom_dim, tau, tau_inverse, ModuleRef, Representation};
use tautilt::tilting::{Limits, STauPair, TauContext};

/// Every vertex of the undirected exchange graph has degree `n`.
fn assert_regular(ctx: &TauContext, pairs: &[STauPair]) {
    let h = ctx.hasse(pairs).unwrap();
    let n = ctx.num_vertices();
    for v in 0..h.len() {
        let d = h.dag();
        assert_eq!(d.in_degree(v) + d.out_degree(v), n, "vertex {} of an algebra with {n} vertices", d.label(v));
    }
    assert_eq!(h.arrows().len() * 2, n * h.len());
}

fn assert_g_injective(pairs: &[STauPair]) {
    let distinct: HashSet<&Vec<i64>> = pairs.iter().map(|p| &p.g).collect();
    assert_eq!(distinct.len(), pairs.len());
}

/// `τ`, `τ⁻¹` and `decompose` outputs satisfy the relations, and decompose
/// recovers the summands of every pairwise direct sum.
fn assert_relations_hold(ctx: &TauContext) {
    let catalog = ctx.catalog();
    for (i, e) in catalog.entries().iter().enumerate() {
        e.rep.check_relations().unwrap();
        let t = tau(&e.rep).unwrap();
        t.check_relations().unwrap();
        let ti = tau_inverse(&e.rep).unwrap();
        ti.check_relations().unwrap();
        if !t.is_zero() {
            let m = decompose(catalog, &t).unwrap();
            catalog.assemble(&m).unwrap().check_relations().unwrap();
            assert_eq!(catalog.dims_of(&m), t.dims());
        }
        for j in i..catalog.len() {
            let sum = Representation::direct_sum(&[&e.rep, &catalog.entry(j).rep]).unwrap();
            sum.check_relations().unwrap();
            assert_eq!(decompose(catalog, &sum).unwrap(), ModuleRef::new(vec![i, j]));
        }
    }
}

fn assert_ar_formula(alg: Arc<Algebra>) {
    let ctx = TauContext::new(alg).unwrap();
    let catalog = ctx.catalog();
    let mut checked = 0;
    for n in 0..catalog.len() {
        if !ctx.is_projective_dimension_at_most_one(n).unwrap() {
            continue;
        }
        let tau_n = &catalog.entry(n).tau;
        for m in 0..catalog.len() {
            let m_rep = &catalog.entry(m).rep;
            assert_eq!(
                ext1(&catalog.entry(n).rep, m_rep).unwrap(),
                hom_dim(m_rep, tau_n).unwrap(),
                "Ext¹({}, {}) vs Hom({1}, τ{0})",
                catalog.entry(n).name,
                catalog.entry(m).name
            );
            checked += 1;
        }
    }
    assert!(checked > 0);
}

fn check_algebra(alg: Arc<Algebra>) {
    let ctx = TauContext::new(alg).unwrap();
    let pairs = ctx.enumerate().unwrap();
    assert_regular(&ctx, &pairs);
    assert_g_injective(&pairs);
    assert_relations_hold(&ctx);
}

#[test]
fn lemma_2_2_on_the_test_set() {
    for ctx in counting_contexts(8, 8) {
        let lab = ExtensionLab::new(ctx, &Limits::default()).unwrap();
        let r = verify_lemma_2_2(&lab, Limits::default().clique_cap).unwrap();
        assert!(r.passed(), "{}", r.summary());
    }
}

#[test]
fn enumerations_of_the_test_set() {
    for ctx in counting_contexts(8, 8) {
        for alg in [&ctx.base, &ctx.quotient, &ctx.extended, &ctx.doubled] {
            let tau = TauContext::new(alg.clone()).unwrap();
            let pairs = tau.enumerate().unwrap();
            assert_regular(&tau, &pairs);
            assert_g_injective(&pairs);
        }
    }
}

#[test]
fn relations_hold_on_the_fixed_algebras() {
    for alg in [single_vertex(), a2(), lambda3(), example_a(), example_b()] {
        assert_relations_hold(&TauContext::new(Arc::new(alg)).unwrap());
    }
    for n in 4..=8 {
        assert_relations_hold(&TauContext::new(fam(FamilyKind::D2, n)).unwrap());
        assert_relations_hold(&TauContext::new(fam(FamilyKind::A2, n)).unwrap());
    }
}

#[test]
fn ar_formula() {
    assert_ar_formula(Arc::new(lambda3()));
    assert_ar_formula(Arc::new(example_b()));
    assert_ar_formula(fam(FamilyKind::D2, 4));
}

/// A tree on `n ≤ 5` vertices with maximal degree ≤ 3 (so of Dynkin type A or D),
/// random orientation, and a random set of length-two relations.
fn tree_algebra() -> impl Strategy<Value = Algebra> {
    (1usize..=5)
        .prop_flat_map(|n| {
            let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
            (Just(n), parents, prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<bool>(), 16))
        })
        .prop_filter("Dynkin tree", |(n, parents, _, _)| {
            let mut degree = vec![0; *n];
            for (i, &p) in parents.iter().enumerate() {
                degree[i + 1] += 1;
                degree[p] += 1;
            }
            degree.iter().all(|&d| d <= 3)
        })
        .prop_map(|(n, parents, flips, keep)| {
            let vertices: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
            let mut arrows: Vec<(String, String, String)> = Vec::new();
            for (i, &p) in parents.iter().enumerate() {
                let (from, to) = if flips[i] { (p, i + 1) } else { (i + 1, p) };
                arrows.push((format!("x{}", i + 1), vertices[from].clone(), vertices[to].clone()));
            }
            let mut relations: Vec<Vec<String>> = Vec::new();
            let mut k = 0;
            for a in &arrows {
                for b in &arrows {
                    if a.2 == b.1 && a.0 != b.0 {
                        if keep[k % keep.len()] {
                            relations.push(vec![a.0.clone(), b.0.clone()]);
                        }
                        k += 1;
                    }
                }
            }
            let v: Vec<&str> = vertices.iter().map(String::as_str).collect();
            let a: Vec<(&str, &str, &str)> =
                arrows.iter().map(|(i, f, t)| (i.as_str(), f.as_str(), t.as_str())).collect();
            let r: Vec<Vec<&str>> = relations.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
            let r: Vec<&[&str]> = r.iter().map(Vec::as_slice).collect();
            algebra(&v, &a, &r)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_tree_algebras(alg in tree_algebra()) {
        let alg = Arc::new(alg);
        check_algebra(alg.clone());
        assert_ar_formula(alg);
    }

    #[test]
    fn extension_claims_at_every_source(alg in tree_algebra()) {
        let sources: Vec<String> =
            (0..alg.num_vertices()).filter(|&v| alg.is_source(v)).map(|v| alg.vertex_id(v).to_string()).collect();
        for s in sources {
            let lab = ExtensionLab::new(ExtensionContext::new(s.clone(), alg.clone(), &s).unwrap(), &Limits::default()).unwrap();
            let mut reports = vec![verify_theorem_2_3(&lab).unwrap(), verify_prop_2_6(&lab).unwrap()];
            reports.extend(verify_counts(&lab).unwrap());
            reports.push(verify_lemma_2_2(&lab, Limits::default().clique_cap).unwrap());
            for r in reports {
                prop_assert!(r.passed(), "{}", r.summary());
            }
        }
    }

    #[test]
    fn json_round_trip(alg in tree_algebra()) {
        let back = Algebra::from_json(&alg.to_json()).unwrap();
        let ids = |xs: Vec<String>| xs.into_iter().map(|x| (x.clone(), x)).collect::<BTreeMap<_, _>>();
        let vertices = ids(alg.quiver().vertices().to_vec());
        let arrows = ids(alg.arrows().iter().map(|a| a.id.clone()).collect());
        prop_assert!(alg.equal_upto_relabel(&back, &vertices, &arrows).unwrap());
        prop_assert_eq!(back.dimension(), alg.dimension());
    }
}
