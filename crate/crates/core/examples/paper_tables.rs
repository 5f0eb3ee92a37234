//! Enumerates the `A_n²` and `D_n²` count tables and diffs them against the
//! printed values, with the closed forms and recurrences as cross-checks.
//!
//! ```text
//! cargo run --release --example paper_tables -- 10 10
//! ```

use tautilt::paperlab::{recurrence_check, reproduce_tables, verify_closed_forms, FamilyKind};
use tautilt::tilting::Limits;

fn main() -> tautilt::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("n must be an integer"));
    let n_a = args.next().unwrap_or(8);
    let n_d = args.next().unwrap_or(8);
    let limits = Limits::default();

    let tables = reproduce_tables(n_a, n_d, &limits)?;
    print!("{}", tables.render());
    println!("{}", verify_closed_forms(&tables).summary());
    for kind in [FamilyKind::A2, FamilyKind::D2] {
        let n = if kind == FamilyKind::A2 { n_a } else { n_d };
        if n >= kind.min_n() {
            println!("{}", recurrence_check(kind, n, &limits)?.summary());
        }
    }
    Ok(())
}
