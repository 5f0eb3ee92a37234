//! Support τ-tilting pairs of `A_n²` or `D_n²` with their g-vectors.
//!
//! ```text
//! cargo run --example family_enumeration -- D2 4
//! ```

use std::sync::Arc;

use tautilt::paperlab::{family, FamilyKind};
use tautilt::tilting::enumerate_stau;

fn main() -> tautilt::Result<()> {
    let mut args = std::env::args().skip(1);
    let kind: FamilyKind = args.next().as_deref().unwrap_or("A2").parse()?;
    let n: usize = args.next().map_or(3, |s| s.parse().expect("n must be an integer"));

    let (ctx, pairs) = enumerate_stau(Arc::new(family(kind, n)?))?;
    for p in &pairs {
        let mark = if p.is_tau_tilting() { "τ-tilting" } else { "" };
        println!("{:<40} g={:?} {mark}", ctx.pair_label(p), p.g);
    }
    let tau = pairs.iter().filter(|p| p.is_tau_tilting()).count();
    println!("{kind}_{n}: |τ-tilt| = {tau}, |sτ-tilt| = {}", pairs.len());
    Ok(())
}
