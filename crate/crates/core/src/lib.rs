//! Finite unital rings and the clean-type ring classes built from tripotent
//! and Δ-summand decompositions.
//!
//! Rings are built through [`Caps`] (or parsed from the expression language
//! in [`parser`]) and then queried through [`invariants`], [`classify`],
//! [`decompose`] and [`triangular`].

pub mod catalog;
pub mod classify;
pub mod decompose;
pub mod error;
pub mod invariants;
pub mod parser;
pub mod ring;
pub mod search;
pub mod subset;
pub mod suite;
pub mod tables;
pub mod triangular;

pub use error::{Error, Result};
pub use ring::{gf4, Caps, Coordinates, Elem, FiniteRing, StructureTag};
pub use subset::{ElementSubset, SubsetLabel};
