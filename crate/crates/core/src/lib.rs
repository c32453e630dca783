//! Finite-scale workbench for the Priestley-style duality between algebras
//! of filter-distributive finitary congruential logics and ordered spaces
//! carrying an algebra of up-sets.
//!
//! Everything here is computed over finite carriers, where the topology is
//! discrete and all the definitional quantifiers ("for every finite subset",
//! "dense", "compact") become literal finite enumerations. The point of the
//! crate is not efficiency but total, oracle-grade checkability: every
//! structural theorem the library relies on is re-verified instance by
//! instance on the structures at hand, and every checker reports concrete
//! witnesses on failure.

// index loops over parallel carrier-sized structures are the norm here
#![allow(clippy::needless_range_loop)]

pub mod limits;
pub mod subset;
pub mod poset;
pub mod semilattice;
pub mod genspace;
pub mod logic;
pub mod filters;
pub mod representation;
pub mod space;
pub mod properties;
pub mod fixtures;
pub mod report;

pub use poset::FinitePoset;
pub use subset::{SetFamily, Subset};
