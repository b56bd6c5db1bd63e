//! Combinatorics of the classical types: partitions, bipartitions and
//! symbols, the labelling of character tables, and the checks of the
//! multiplicity formulas for `ρ`.

mod checks;
mod labels;
mod partition;
mod symbol;
mod type_d;

pub use checks::*;
pub use labels::{label_type_a, label_type_b};
pub use partition::{cycle_type, signed_cycle_type, sn_character, Partition};
pub use symbol::{
    bn_character, cuspidality_b, kottwitz_multiplicity_a, kottwitz_multiplicity_b, BSymbol, Bipartition, Cuspidality,
    SymbolInvariants,
};
pub use type_d::{
    branching_failures, embedding_failures, pm_pairs, sigma_zero, sign_theorem_failures, theta, theta_character,
    young_mask, PmPair,
};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ClassicalError {
    #[error("expected type {0}")]
    WrongType(&'static str),
    #[error("labelling: {0}")]
    Labelling(String),
    #[error("{0}")]
    Engine(String),
}

#[cfg(test)]
mod tests;
