use super::LeadingData;
use crate::cells::{CellCharacters, CellPartition, FamilyAssignment};
use crate::coxeter::CoxeterGroup;
use serde::Serialize;

/// The six characterizations of a smooth two-sided cell `𝒢`, evaluated
/// independently:
/// 1. `|Irr_𝒢| = 1`;
/// 2. `[C]` is irreducible for some left cell `C ⊆ 𝒢`;
/// 3. `f_χ = 1` for some `χ ∈ Irr_𝒢`;
/// 4. `[C]` is irreducible for every left cell `C ⊆ 𝒢`;
/// 5. `|𝒢| = |𝒢₍₂₎|²`;
/// 6. every involution of `𝒢` lies in `𝒟`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Smoothness {
    pub cell: usize,
    pub conditions: [bool; 6],
}

impl Smoothness {
    pub fn consistent(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0])
    }

    pub fn smooth(&self) -> bool {
        self.conditions[0]
    }
}

pub fn smoothness(
    g: &CoxeterGroup,
    partition: &CellPartition,
    families: &FamilyAssignment,
    cc: &CellCharacters,
    leading: &LeadingData,
) -> Vec<Smoothness> {
    let irreducible = |c: usize| cc.multiplicities[c].iter().sum::<i64>() == 1;
    partition
        .two_sided_cells()
        .iter()
        .enumerate()
        .map(|(t, cell)| {
            let lefts = partition.left_cells_in(t);
            let invols: Vec<usize> = cell.iter().copied().filter(|&w| g.is_involution(w)).collect();
            let conditions = [
                families.members[t].len() == 1,
                lefts.iter().any(|&c| irreducible(c)),
                families.members[t].iter().any(|&chi| leading.f_is_one(chi)),
                lefts.iter().all(|&c| irreducible(c)),
                cell.len() == invols.len() * invols.len(),
                invols.iter().all(|w| leading.distinguished.binary_search(w).is_ok()),
            ];
            Smoothness { cell: t, conditions }
        })
        .collect()
}
