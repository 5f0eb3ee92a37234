//! Auslander–Reiten translates and the catalog of indecomposables over `Λ₃²`
//! (`3 → 2 → 1`, composite zero).
//!
//! ```text
//! cargo run --example ar_translate
//! ```

use std::sync::Arc;

use tautilt::algebra::{Algebra, ArrowSpec, Quiver};
use tautilt::rep::{hom_dim, tau, tau_inverse, Catalog, ModuleRef};
use tautilt::tilting::TauContext;

fn arrow(id: &str, from: &str, to: &str) -> ArrowSpec {
    ArrowSpec { id: id.into(), from: from.into(), to: to.into() }
}

fn main() -> tautilt::Result<()> {
    let quiver =
        Quiver::new(vec!["1".into(), "2".into(), "3".into()], vec![arrow("b", "2", "1"), arrow("a", "3", "2")])?;
    let alg = Arc::new(Algebra::new(quiver, vec![vec!["a".into(), "b".into()]])?);
    let catalog = Arc::new(Catalog::build(alg)?);

    println!("{:<4} {:<8} {:<10} {:<8} {:<8}", "idx", "name", "dims", "τ", "τ⁻¹");
    for (i, e) in catalog.entries().iter().enumerate() {
        let t = tau(&e.rep)?;
        let ti = tau_inverse(&e.rep)?;
        let name = |m: &tautilt::Representation| -> tautilt::Result<String> {
            if m.is_zero() {
                return Ok("0".into());
            }
            Ok(catalog.lookup(m)?.map_or("?".into(), |j| catalog.entry(j).name.clone()))
        };
        println!("{i:<4} {:<8} {:<10} {:<8} {:<8}", e.name, format!("{:?}", e.dims()), name(&t)?, name(&ti)?);
    }

    let ctx = TauContext::from_catalog(catalog.clone())?;
    println!("\nHom(x, τy) ≠ 0:");
    for x in 0..catalog.len() {
        for y in 0..catalog.len() {
            if ctx.hom_to_tau(x, y) {
                let d = hom_dim(&catalog.entry(x).rep, &catalog.entry(y).tau)?;
                println!("  Hom({}, τ{}) = {d}", catalog.entry(x).name, catalog.entry(y).name);
            }
        }
    }
    let rigid: Vec<String> = (0..catalog.len())
        .filter(|&i| ctx.is_tau_rigid(&ModuleRef::new(vec![i])))
        .map(|i| catalog.entry(i).name.clone())
        .collect();
    println!("τ-rigid indecomposables: {}", rigid.join(", "));
    Ok(())
}
