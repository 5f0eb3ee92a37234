//! Support τ-tilting theory for monomial bound quiver algebras over ℚ.
//!
//! Algebras are quivers with monomial relations; modules are representations
//! with exact rational matrices. The catalog of indecomposables is the
//! `τ⁻¹`-closure of the projectives, support τ-tilting pairs are the maximal
//! cliques of the τ-compatibility graph, and [`paperlab`] checks the
//! one-point extension theorems on concrete algebras.
//!
//! ```
//! use std::sync::Arc;
//! use tautilt::paperlab::{family, FamilyKind};
//! use tautilt::tilting::enumerate_stau;
//!
//! let (ctx, pairs) = enumerate_stau(Arc::new(family(FamilyKind::A2, 3)?))?;
//! assert_eq!(pairs.len(), 12);
//! assert_eq!(pairs.iter().filter(|p| p.is_tau_tilting()).count(), 3);
//! let hasse = ctx.hasse(&pairs)?;
//! assert_eq!(hasse.arrows().len(), 18);
//! # Ok::<(), tautilt::Error>(())
//! ```

pub mod algebra;
pub mod cli;
pub mod error;
pub mod hasse;
pub mod linalg;
pub mod paperlab;
pub mod rep;
pub mod tilting;

pub use algebra::Algebra;
pub use error::{Error, Result};
pub use rep::{Morphism, Representation};
