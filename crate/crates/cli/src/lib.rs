//! Library side of the `involcells` command: run configuration, the
//! persistent KL cache, check selection, the acceptance manifest and
//! JSON/table rendering.

pub mod cache;
pub mod export;
pub mod manifest;
pub mod render;
pub mod run;

pub use run::{select_checks, RunConfig};
