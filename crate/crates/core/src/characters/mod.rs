//! Ordinary and Hecke characters, leading coefficients and the invariants
//! `a`, `b`, `f` of irreducible characters.

mod classpoly;
mod hecke_values;
mod induction;
mod leading;
pub(crate) mod modp;
mod smooth;
mod table;

pub use classpoly::ClassPolynomials;
pub use hecke_values::HeckeCharacters;
pub use induction::{induce, j_induce, restrict, Parabolic};
pub use leading::{b_invariants, special_flags, twisted_characters, LeadingData};
pub use smooth::{smoothness, Smoothness};
pub use table::{int_class_function, CharacterTable, ClassFunction};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CharacterError {
    #[error("prime {0} is unsuitable for the modular character table")]
    PrimeFailure(u64),
    #[error("non-integral multiplicity: {0}")]
    NonIntegral(String),
    #[error("cannot separate characters: {0}")]
    RankDeficient(String),
    #[error("inconsistent character data: {0}")]
    Inconsistent(String),
}

#[cfg(test)]
mod tests;
