//! The full pipeline for one `(W, φ)`: KL basis, cells, characters and
//! leading data, computed once and shared by all checks.

use crate::cells::{CellCharacters, CellError, CellPartition, FamilyAssignment};
use crate::characters::{
    b_invariants, smoothness, special_flags, CharacterError, CharacterTable, ClassPolynomials, HeckeCharacters,
    LeadingData, Smoothness,
};
use crate::coxeter::{CoxeterError, CoxeterGroup};
use crate::hecke::{HeckeError, KLTable, WeightFunction};
use std::sync::Arc;
use std::time::{Duration, Instant};

#[derive(Debug, thiserror::Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Cells(#[from] CellError),
    #[error(transparent)]
    Characters(#[from] CharacterError),
}

pub struct Analysis {
    pub group: Arc<CoxeterGroup>,
    pub phi: WeightFunction,
    pub kl: KLTable,
    pub table: CharacterTable,
    pub cells: CellPartition,
    pub cell_chars: CellCharacters,
    pub families: FamilyAssignment,
    pub class_polys: ClassPolynomials,
    pub hecke_chars: HeckeCharacters,
    pub leading: LeadingData,
    pub b: Vec<i64>,
    pub special: Vec<bool>,
    pub smooth: Vec<Smoothness>,
    pub timings: Vec<(&'static str, Duration)>,
}

impl Analysis {
    pub fn from_label(label: &str, weights: &str, budget: usize) -> Result<Self, AnalysisError> {
        let g = Arc::new(CoxeterGroup::from_label(label, budget)?);
        let phi = WeightFunction::parse(g.system(), weights)?;
        Self::run(g, phi)
    }

    pub fn run(group: Arc<CoxeterGroup>, phi: WeightFunction) -> Result<Self, AnalysisError> {
        let mut clock = Instant::now();
        let kl = KLTable::build(group.clone(), phi.clone())?;
        Self::with_kl(kl, &mut clock)
    }

    /// Continue from an already computed (for instance cached) KL table.
    pub fn from_kl(kl: KLTable) -> Result<Self, AnalysisError> {
        Self::with_kl(kl, &mut Instant::now())
    }

    fn with_kl(kl: KLTable, clock: &mut Instant) -> Result<Self, AnalysisError> {
        let mut timings = Vec::new();
        let mut lap = |name: &'static str| {
            timings.push((name, clock.elapsed()));
            *clock = Instant::now();
        };
        lap("kl");
        let group = kl.group().clone();
        let phi = kl.weights().clone();
        let table = CharacterTable::compute(&group)?;
        lap("character_table");
        let cells = CellPartition::compute(&kl);
        let cell_chars = CellCharacters::compute(&kl, &cells, &table)?;
        let families = FamilyAssignment::assign(&cells, &cell_chars)?;
        lap("cells");
        let class_polys = ClassPolynomials::compute(&group, &phi)?;
        let hecke_chars = HeckeCharacters::compute(&kl, &cells, &cell_chars, &table, &class_polys)?;
        lap("hecke_characters");
        let leading = LeadingData::compute(&group, &table, &hecke_chars, &class_polys)?;
        let b = b_invariants(&group, &table)?;
        let special = special_flags(&leading.a, &b);
        let smooth = smoothness(&group, &cells, &families, &cell_chars, &leading);
        lap("leading");
        Ok(Analysis {
            group,
            phi,
            kl,
            table,
            cells,
            cell_chars,
            families,
            class_polys,
            hecke_chars,
            leading,
            b,
            special,
            smooth,
            timings,
        })
    }

    pub fn g(&self) -> &CoxeterGroup {
        &self.group
    }

    pub fn equal_parameters(&self) -> bool {
        self.phi.is_constant()
    }

    /// `⟨[C], χ⟩`.
    pub fn multiplicity(&self, cell: usize, chi: usize) -> i64 {
        self.cell_chars.multiplicities[cell][chi]
    }

    /// The special characters of the family of two-sided cell `t`.
    pub fn special_in(&self, t: usize) -> Vec<usize> {
        self.families.members[t].iter().copied().filter(|&x| self.special[x]).collect()
    }
}
