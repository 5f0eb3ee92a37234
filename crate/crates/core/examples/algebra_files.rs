//! Round trip through the JSON algebra format: load, extend at a source,
//! save atomically, reload and compare.
//!
//! ```text
//! cargo run --example algebra_files -- crates/core/data/a2.json 2
//! ```

use std::path::PathBuf;

use tautilt::cli::write_atomic;
use tautilt::Algebra;

fn main() -> tautilt::Result<()> {
    let mut args = std::env::args().skip(1);
    let path =
        args.next().map_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/a2.json"), PathBuf::from);
    let source = args.next().unwrap_or_else(|| "2".into());

    let alg = Algebra::from_json(&std::fs::read_to_string(&path)?)?;
    println!(
        "{}: {} vertices, {} arrows, dim {}",
        path.display(),
        alg.num_vertices(),
        alg.arrows().len(),
        alg.dimension()
    );

    let (ext, v) = alg.one_point_extension(&source)?;
    println!("extension at {source}: new vertex {v}, dim {}, relations {:?}", ext.dimension(), ext.relation_ids());

    let dir = tempfile::tempdir()?;
    let out = dir.path().join("extended.json");
    write_atomic(&out, &ext.to_json())?;
    let back = Algebra::from_json(&std::fs::read_to_string(&out)?)?;
    println!("reloaded {}: identical = {}", out.display(), back.to_json() == ext.to_json());
    Ok(())
}
