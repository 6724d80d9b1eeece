//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while parsing inputs, building algebras or
/// constructing derivation bases.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Input document could not be parsed.
    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// An edge `u u` was given; graphs here are simple and loop-free.
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    /// A vertex label outside `1..=n`.
    #[error("vertex label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },

    /// Matrix or vector dimensions do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The operation needs a connected graph.
    #[error("graph is not connected")]
    ConnectivityError,

    /// Twin-class blocks need at least three vertices.
    #[error("twin class of size {0} is too small (need >= 3)")]
    SizeTooSmall(usize),

    /// Graph-family parameters outside the family's domain.
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),

    /// The vertex set handed to a class-level check is not a twin class.
    #[error("not a twin class: {0}")]
    InvalidClass(String),

    /// A constructed basis element failed its own validation. This is a bug,
    /// never an input problem.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
