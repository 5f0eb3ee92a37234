//! Algebras and extension contexts shared by the integration suites.
#![allow(dead_code)]

use std::sync::Arc;

use tautilt::algebra::{Algebra, ArrowSpec, Quiver};
use tautilt::paperlab::{family, ExtensionContext, FamilyKind};

pub fn arrow(id: &str, from: &str, to: &str) -> ArrowSpec {
    ArrowSpec { id: id.into(), from: from.into(), to: to.into() }
}

pub fn algebra(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[&[&str]]) -> Algebra {
    let quiver = Quiver::new(
        vertices.iter().map(|v| v.to_string()).collect(),
        arrows.iter().map(|(id, from, to)| arrow(id, from, to)).collect(),
    )
    .unwrap();
    Algebra::new(quiver, relations.iter().map(|r| r.iter().map(|a| a.to_string()).collect()).collect()).unwrap()
}

/// `k`.
pub fn single_vertex() -> Algebra {
    algebra(&["1"], &[], &[])
}

/// `k(2 → 1)`.
pub fn a2() -> Algebra {
    algebra(&["1", "2"], &[("b", "2", "1")], &[])
}

/// `Λ₃²`: `3 → 2 → 1` with the composite zero.
pub fn lambda3() -> Algebra {
    algebra(&["1", "2", "3"], &[("b", "2", "1"), ("a", "3", "2")], &[&["a", "b"]])
}

/// The Example's `A = k(3 ← 2 → 4)`.
pub fn example_a() -> Algebra {
    algebra(&["2", "3", "4"], &[("c", "2", "3"), ("d", "2", "4")], &[])
}

/// The Example's `B`: `1 → 2 → {3, 4}` with `rad² = 0`.
pub fn example_b() -> Algebra {
    algebra(&["1", "2", "3", "4"], &[("a", "1", "2"), ("c", "2", "3"), ("d", "2", "4")], &[&["a", "c"], &["a", "d"]])
}

pub fn example_context() -> ExtensionContext {
    ExtensionContext::named("Example", example_a(), "2", "1", "a").unwrap()
}

pub fn fam(kind: FamilyKind, n: usize) -> Arc<Algebra> {
    Arc::new(family(kind, n).unwrap())
}

/// The extension contexts of the counting test set: `A_n²` steps for
/// `n = 2..=a_max`, `D_n²` steps for `n = 5..=d_max`, the Example and `k(2 → 1)` at 2.
pub fn counting_contexts(a_max: usize, d_max: usize) -> Vec<ExtensionContext> {
    let mut out: Vec<ExtensionContext> =
        (2..=a_max).map(|n| ExtensionContext::family_step(FamilyKind::A2, n).unwrap()).collect();
    out.extend((5..=d_max).map(|n| ExtensionContext::family_step(FamilyKind::D2, n).unwrap()));
    out.push(example_context());
    out.push(ExtensionContext::new("k(2→1) at 2", a2(), "2").unwrap());
    out
}
