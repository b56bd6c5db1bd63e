//! The involution modules `ρ_𝒞` and the verification battery relating
//! involutions, cells and leading coefficients.

mod all;
mod induced;
mod module;
mod report;
mod verify;

pub use all::verify_all;
pub use induced::{central_longest_realization, rho_via_induction, Realization};
pub use module::{rho_character, InvolutionModule};
pub use report::{Check, Status, VerificationReport, MAX_WITNESSES};
pub use verify::*;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum KottwitzError {
    #[error("class {0} is not a class of involutions")]
    NotInvolutionClass(usize),
    #[error("involution module: {0}")]
    Relation(String),
    #[error("representative: {0}")]
    Realization(String),
}

#[cfg(test)]
mod tests;
