//! Finite Coxeter groups: exact root systems, element tables, Bruhat order,
//! conjugacy classes and parabolic subgroups.

mod classical_reps;
mod group;
mod types;

pub use classical_reps::{involution_class_reps_classical, signed_permutation, ClassicalRep};
pub use group::{ConjClass, CoxeterGroup, ParabolicSubgroup, BRUHAT_TABLE_LIMIT};
pub use types::{CoxeterSystem, IrreducibleType};

/// Default enumeration budget.
pub const DEFAULT_BUDGET: usize = 2000;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("unknown group label `{0}`")]
    BadLabel(String),
    #[error("invalid Coxeter matrix: {0}")]
    BadMatrix(String),
    #[error("the Coxeter system is not finite")]
    NotFinite,
    #[error("group exceeds the budget of {budget} elements{}", required.map(|r| format!(" (needs {r})")).unwrap_or_default())]
    BudgetExceeded { budget: usize, required: Option<u128> },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

#[cfg(test)]
mod tests;
