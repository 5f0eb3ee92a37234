//! The one-point extension of `3 ← 2 → 4` at the source `2`.
//!
//! Builds `B = A[S₂]` on `1 → 2 → {3, 4}` with `rad² = 0`, lists its six
//! τ-tilting modules split into the images of `Φ₁` and `Φ₂`, and runs every
//! extension claim on the context.
//!
//! ```text
//! cargo run --example worked_example
//! ```

use std::collections::BTreeSet;

use tautilt::algebra::{Algebra, ArrowSpec, Quiver};
use tautilt::paperlab::{Claim, ExtensionContext, ExtensionLab};
use tautilt::rep::ModuleRef;
use tautilt::tilting::Limits;

fn arrow(id: &str, from: &str, to: &str) -> ArrowSpec {
    ArrowSpec { id: id.into(), from: from.into(), to: to.into() }
}

fn main() -> tautilt::Result<()> {
    let quiver =
        Quiver::new(vec!["2".into(), "3".into(), "4".into()], vec![arrow("c", "2", "3"), arrow("d", "2", "4")])?;
    let a = Algebra::new(quiver, vec![])?;
    let ctx = ExtensionContext::named("Example", a, "2", "1", "a")?;
    let lab = ExtensionLab::new(ctx, &Limits::default())?;

    let catalog = lab.extended.tau.catalog();
    let phi1: BTreeSet<ModuleRef> =
        lab.base.tau_tilting().into_iter().map(|m| lab.phi1(m)).collect::<Result<_, _>>()?;
    println!("τ-tilting B-modules:");
    for m in lab.extended.tau_tilting() {
        let tilting = if lab.extended.tau.is_tilting(m)? { "tilting" } else { "" };
        let from = if phi1.contains(m) { "Φ₁" } else { "Φ₂" };
        println!("  {from}  {:<20} {tilting}", catalog.name_of(m));
    }

    let mut failures = 0;
    for claim in Claim::ALL {
        for report in claim.run(&lab)? {
            println!("{}", report.summary());
            failures += usize::from(report.is_hard_failure());
        }
    }
    println!("hard failures: {failures}");
    Ok(())
}
