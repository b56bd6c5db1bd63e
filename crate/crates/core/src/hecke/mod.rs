//! The Hecke algebra `H(W, S, φ)` over `ℤ[v, v⁻¹]`: standard basis
//! arithmetic, the bar involution, the Kazhdan–Lusztig basis for arbitrary
//! positive weights, structure constants and the `a`-function.

mod element;
mod kl;
mod weights;

pub use element::{HeckeAlgebra, HeckeElement};
pub use kl::{Expansion, KLTable, DIRECT_BAR_CHECK_LIMIT};
pub use weights::{generator_names, WeightFunction};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum HeckeError {
    #[error("invalid weight function: {0}")]
    BadWeights(String),
    #[error("class {0} does not consist of involutions")]
    NotInvolutionClass(usize),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

#[cfg(test)]
mod tests;
