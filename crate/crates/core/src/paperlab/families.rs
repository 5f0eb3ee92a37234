//! The radical-square-zero families `A_n²` and `D_n²`.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Algebra, ArrowSpec, Quiver};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyKind {
    /// `n → n−1 → ⋯ → 1`.
    A2,
    /// `n → ⋯ → 4 → 3` with `3 → 1` and `3 → 2`.
    D2,
}

impl FamilyKind {
    pub fn min_n(self) -> usize {
        match self {
            FamilyKind::A2 => 1,
            FamilyKind::D2 => 4,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::A2 => "A2",
            FamilyKind::D2 => "D2",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" | "A2" => Ok(FamilyKind::A2),
            "D" | "D2" => Ok(FamilyKind::D2),
            _ => Err(Error::Parse(format!("unknown family `{s}` (expected A2 or D2)"))),
        }
    }
}

fn arrow(id: String, from: usize, to: usize) -> ArrowSpec {
    ArrowSpec { id, from: from.to_string(), to: to.to_string() }
}

/// `kQ/rad²` for the linear `A_n` or the `D_n` quiver; vertices are `"1"…"n"`,
/// the arrow out of `k ≥ 4` (`k ≥ 2` for `A_n`) is `a{k}`, and the `D_n`
/// fork is `b1: 3 → 1`, `b2: 3 → 2`.
pub fn family(kind: FamilyKind, n: usize) -> Result<Algebra> {
    if n < kind.min_n() {
        return Err(Error::OutOfRange(format!("{kind} needs n ≥ {}, got {n}", kind.min_n())));
    }
    let vertices = (1..=n).map(|k| k.to_string()).collect();
    let mut arrows = Vec::new();
    let first_chain = match kind {
        FamilyKind::A2 => 2,
        FamilyKind::D2 => {
            arrows.push(arrow("b1".into(), 3, 1));
            arrows.push(arrow("b2".into(), 3, 2));
            4
        }
    };
    arrows.extend((first_chain..=n).map(|k| arrow(format!("a{k}"), k, k - 1)));
    let quiver = Quiver::new(vertices, arrows)?;
    let relations = rad_square_relations(&quiver);
    Algebra::new(quiver, relations)
}

/// Every composable pair of arrows.
fn rad_square_relations(q: &Quiver) -> Vec<Vec<String>> {
    let mut rels = Vec::new();
    for x in q.arrows() {
        for y in q.arrows().iter().filter(|y| y.source == x.target) {
            rels.push(vec![x.id.clone(), y.id.clone()]);
        }
    }
    rels
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_members() {
        let a3 = family(FamilyKind::A2, 3).unwrap();
        assert_eq!(a3.dimension(), 5);
        assert_eq!(a3.relation_ids(), vec![vec!["a3".to_string(), "a2".to_string()]]);
        let d4 = family(FamilyKind::D2, 4).unwrap();
        assert_eq!(d4.dimension(), 4 + 3);
        assert_eq!(d4.relations().len(), 2);
        assert!(family(FamilyKind::D2, 3).is_err());
        assert!(family(FamilyKind::A2, 0).is_err());
    }

    #[test]
    fn members_are_iterated_extensions() {
        for kind in [FamilyKind::A2, FamilyKind::D2] {
            for n in kind.min_n() + 1..=9 {
                let prev = family(kind, n - 1).unwrap();
                let (ext, id) = prev.one_point_extension(&(n - 1).to_string()).unwrap();
                assert_eq!(id, n.to_string());
                assert_eq!(ext, family(kind, n).unwrap(), "{kind} n={n}");
            }
        }
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("a2".parse::<FamilyKind>().unwrap(), FamilyKind::A2);
        assert_eq!("D".parse::<FamilyKind>().unwrap(), FamilyKind::D2);
        assert!("E6".parse::<FamilyKind>().is_err());
    }
}
