//! Algebra of finite modules over `Z` and `Z/N`, the Zariski topology on
//! their maximal spectra, the graphs attached to both, and a catalog of
//! checkable structural claims about those graphs.
//!
//! The crate is `no_std` (with `alloc`) and has no dependencies; all IO
//! lives in the companion CLI crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod num;
pub mod ring;
pub mod module;
pub mod submodule;
pub mod lattice;
pub mod quotient;
pub mod spectrum;
pub mod topology;
pub mod graph;
pub mod analyze;
pub mod claims;
pub mod corpus;
pub mod iso;
pub mod suite;

pub use error::{Error, Result};
pub use graph::{GraphKind, SpecGraph};
pub use lattice::{Lattice, DEFAULT_MAX_ORDER};
pub use module::FinModule;
pub use quotient::QuotientMap;
pub use ring::Ring;
pub use submodule::Submodule;
