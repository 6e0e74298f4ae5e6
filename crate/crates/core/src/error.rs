//! Crate-wide error type.

use crate::lie::Violation;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid Lie algebra structure constants ({} violations)", .0.len())]
    InvalidAlgebra(Vec<Violation>),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("relation is not a partial order: {0}")]
    NotAPoset(String),
    #[error("no unique {kind} for elements {a} and {b}")]
    NotALattice { a: usize, b: usize, kind: &'static str },
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("enumeration cap exceeded: requested {0}, cap is {1}")]
    CapExceeded(usize, usize),
    #[error("ideal enumeration did not complete: {0}")]
    NotComplete(String),
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
