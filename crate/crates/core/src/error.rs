use thiserror::Error;

/// Errors reported by tableau and enumeration operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("entry {0} already present in tableau")]
    DuplicateEntry(u32),
    #[error("entry {0} not present in tableau")]
    EntryNotFound(u32),
    #[error("cell ({0}, {1}) is not a corner of the tableau")]
    NotACorner(usize, usize),
    #[error("cell ({0}, {1}) is not an addable corner")]
    InvalidCorner(usize, usize),
    #[error("size bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("invalid vacillating tableau: {0}")]
    InvalidVacillating(String),
    #[error("sequence entry {0} out of range [1, {1}]")]
    EntryOutOfRange(u32, u32),
    #[error("tableau/vacillating-tableau pair is not in the image of the delete-insert map: {0}")]
    InconsistentPair(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invalid set partition: {0}")]
    InvalidSetPartition(String),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
}
