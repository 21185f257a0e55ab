use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix dimensions must be at least 1")]
    EmptyMatrix,
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("subspace is not contained in the ambient space")]
    NotSubspace,
    #[error("power series with zero constant term is not invertible")]
    ZeroConstantTerm,
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("partition has {parts} parts but only {d} variables")]
    TooManyParts { parts: usize, d: usize },
    #[error("generator {0} is not invertible")]
    SingularGenerator(usize),
    #[error("group not finite or above cap ({cap} elements)")]
    GroupNotFinite { cap: usize },
    #[error("a group needs at least one generator")]
    NoGenerators,
    #[error("invalid Jordan block list {0:?}")]
    InvalidBlocks(Vec<usize>),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
