//! Kazhdan–Lusztig cells, leading coefficients of character values and
//! involution modules for finite Coxeter groups with weight functions.

pub mod analysis;
pub mod bitset;
pub mod characters;
pub mod classical;
pub mod coxeter;
pub mod cells;
pub mod hecke;
pub mod kottwitz;
pub mod linalg;
pub mod numfield;

pub use analysis::{Analysis, AnalysisError};
pub use characters::{CharacterTable, LeadingData};
pub use coxeter::{CoxeterGroup, CoxeterSystem, IrreducibleType};
pub use hecke::{KLTable, WeightFunction};
pub use kottwitz::{verify_all, Check, Status, VerificationReport};
