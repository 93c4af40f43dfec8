//! Inclusion ideal graphs of finite semigroups.
//!
//! The vertices of `In(S)` are the nontrivial left ideals of a finite
//! semigroup `S`, and two ideals are adjacent when one strictly contains the
//! other. This crate enumerates left-ideal lattices from Cayley tables,
//! builds the graph (or the Boolean-lattice model for completely simple
//! semigroups), computes exact graph invariants and automorphism groups, and
//! runs a battery of structural checks against the closed forms.

pub mod bitset;
pub mod cli;
pub mod combinat;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod semigroup;
pub mod suite;
pub mod symmetry;

pub use bitset::ElementSet;
pub use error::{Error, Result};
pub use graph::{ExportFormat, GraphMode, InclusionGraph, SimpleGraph};
pub use semigroup::{enumerate_left_ideals, CayleyTable, IdealFamily, LClass, LeftIdeal};
