//! `H(B)` against the glued quiver `H(A × k)^𝒩` for `A = k(2 → 1)` at `2`.
//!
//! Prints both quivers in DOT and the isomorphism found between them.
//!
//! ```text
//! cargo run --example hasse_gluing
//! ```

use tautilt::algebra::{Algebra, ArrowSpec, Quiver};
use tautilt::hasse::{dag_isomorphism, glue, select_n, to_dot};
use tautilt::paperlab::{ExtensionContext, ExtensionLab};
use tautilt::tilting::Limits;

fn main() -> tautilt::Result<()> {
    let quiver = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![ArrowSpec { id: "b".into(), from: "2".into(), to: "1".into() }],
    )?;
    let lab = ExtensionLab::new(
        ExtensionContext::new("k(2→1) at 2", Algebra::new(quiver, vec![])?, "2")?,
        &Limits::default(),
    )?;

    let h_b = lab.extended.hasse()?;
    let h_d = lab.doubled.hasse()?;
    let d = &lab.ctx.doubled;
    let subset = select_n(&h_d, &lab.doubled.tau, d.vertex(&lab.ctx.doubled_vertex)?, d.vertex(&lab.ctx.source)?)?;
    let glued = glue(h_d.dag(), &subset)?;

    println!("// H(B): {} vertices, {} arrows", h_b.len(), h_b.arrows().len());
    print!("{}", to_dot(h_b.dag()));
    println!("// 𝒩 ⊂ H(A × k): {:?}", subset.iter().map(|&v| h_d.dag().label(v)).collect::<Vec<_>>());
    println!("// H(A × k)^𝒩: {} vertices, {} arrows", glued.len(), glued.arrows().len());
    print!("{}", to_dot(&glued));

    match dag_isomorphism(h_b.dag(), &glued) {
        Some(map) => {
            println!("// isomorphism H(B) → H(A × k)^𝒩");
            for (v, w) in map.iter().enumerate() {
                println!("//   {:<24} ↦ {}", h_b.dag().label(v), glued.label(*w));
            }
        }
        None => println!("// not isomorphic"),
    }
    Ok(())
}
