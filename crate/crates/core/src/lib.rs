//! Exact computation and classification of ideal lattices of
//! finite-dimensional Lie algebras over the rationals.
//!
//! The crate is organized around the pipeline
//! structure constants -> structural invariants -> ideal enumeration ->
//! abstract finite lattice, with constructors for the classified
//! trivial-Frattini families serving as independent oracles, and exhaustive
//! enumeration of small distributive lattices for cross-checking.

pub mod error;
pub mod rat;
pub mod matrix;
pub mod subspace;
pub mod poly;
pub mod lie;
pub mod ideals;
pub mod lattice;
pub mod distributive;
pub mod families;
pub mod io;
pub mod verify;

pub use error::{Error, Result};
pub use families::{CatalogEntry, FamilySpec, Prediction, SimpleKind};
pub use ideals::{enumerate_ideals, IdealSet, PencilWitness, SocleReport, Status};
pub use lattice::{lattice_of, FiniteLattice, Forbidden, ForbiddenKind};
pub use lie::{analyze, GeneralType, LieAlgebra, Quotient, StructureReport};
pub use matrix::Matrix;
pub use rat::Rat;
pub use subspace::Subspace;
