//! Left, right and two-sided cells, cell modules and their specializations.

mod family;
mod module;
mod partition;

pub use family::{inverse_intersection, w0_duality_failures, CellCharacters, FamilyAssignment};
pub use module::CellModule;
pub use partition::CellPartition;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CellError {
    #[error("cell module relation fails: {0}")]
    Relation(String),
    #[error("character appears in two families: {0}")]
    FamilyClash(String),
}

#[cfg(test)]
mod tests;
