use super::{CellError, CellModule, CellPartition};
use crate::characters::CharacterTable;
use crate::coxeter::CoxeterGroup;
use crate::hecke::KLTable;
use serde::Serialize;
use std::collections::BTreeSet;

/// The characters `[C]` of all left cells and their decompositions.
#[derive(Clone, Debug, Serialize)]
pub struct CellCharacters {
    /// `values[C][k]` = `[C]` at the `k`-th class representative
    pub values: Vec<Vec<i64>>,
    /// `multiplicities[C][χ]` = `⟨[C], χ⟩`
    pub multiplicities: Vec<Vec<i64>>,
}

impl CellCharacters {
    pub fn compute(
        kl: &KLTable,
        partition: &CellPartition,
        table: &CharacterTable,
    ) -> Result<Self, CellError> {
        let g = kl.group();
        let mut values = Vec::new();
        let mut multiplicities = Vec::new();
        for cell in partition.left_cells() {
            let module = CellModule::new(kl, cell);
            let v = module.specialized_character(g, table.class_reps());
            let m = table
                .decompose_int(&v)
                .map_err(|e| CellError::Relation(format!("cell {cell:?}: {e}")))?;
            if m.iter().any(|&x| x < 0) {
                return Err(CellError::Relation(format!("cell {cell:?} has a negative multiplicity")));
            }
            values.push(v);
            multiplicities.push(m);
        }
        Ok(CellCharacters { values, multiplicities })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `⟨[C], [C′]⟩`.
    pub fn pairing(&self, c: usize, c2: usize) -> i64 {
        self.multiplicities[c].iter().zip(&self.multiplicities[c2]).map(|(a, b)| a * b).sum()
    }

    /// Characters occurring in `[C]`.
    pub fn constituents(&self, c: usize) -> Vec<usize> {
        (0..self.multiplicities[c].len()).filter(|&x| self.multiplicities[c][x] > 0).collect()
    }
}

/// `Irr(W)` split along the two-sided cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyAssignment {
    pub family_of_char: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

impl FamilyAssignment {
    pub fn assign(partition: &CellPartition, chars: &CellCharacters) -> Result<Self, CellError> {
        let nchars = chars.multiplicities.first().map_or(0, |m| m.len());
        let mut family_of_char = vec![usize::MAX; nchars];
        let mut members = vec![Vec::new(); partition.two_sided_cells().len()];
        for c in 0..chars.len() {
            let t = partition.two_sided_of_left(c);
            for chi in chars.constituents(c) {
                if family_of_char[chi] == usize::MAX {
                    family_of_char[chi] = t;
                    members[t].push(chi);
                } else if family_of_char[chi] != t {
                    return Err(CellError::FamilyClash(format!(
                        "character {chi} in two-sided cells {} and {t}",
                        family_of_char[chi]
                    )));
                }
            }
        }
        if let Some(chi) = family_of_char.iter().position(|&f| f == usize::MAX) {
            return Err(CellError::FamilyClash(format!("character {chi} lies in no cell")));
        }
        for m in &mut members {
            m.sort_unstable();
        }
        Ok(FamilyAssignment { family_of_char, members })
    }

    /// Families as connected components of the graph on `Irr(W)` joining
    /// characters that share a left cell.
    pub fn graph_components(chars: &CellCharacters) -> Vec<Vec<usize>> {
        let n = chars.multiplicities.first().map_or(0, |m| m.len());
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for c in 0..chars.len() {
            let cs = chars.constituents(c);
            for w in cs.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut comps: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..n {
            let r = find(&mut parent, x);
            comps.entry(r).or_default().push(x);
        }
        comps.into_values().collect()
    }

    /// Families in the same form as [`FamilyAssignment::graph_components`].
    pub fn as_sets(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = self.members.iter().filter(|m| !m.is_empty()).cloned().collect();
        v.sort();
        v
    }
}

/// `|C′ ∩ C⁻¹|`.
pub fn inverse_intersection(g: &CoxeterGroup, c: &[usize], c2: &[usize]) -> usize {
    let inv: BTreeSet<usize> = c.iter().map(|&w| g.inverse(w)).collect();
    c2.iter().filter(|w| inv.contains(w)).count()
}

/// Failures of `Cw₀` being a left cell with `[Cw₀] = [C] ⊗ ε`, and of
/// `Irr_{𝒢w₀} = Irr_𝒢 ⊗ ε`.
pub fn w0_duality_failures(
    g: &CoxeterGroup,
    partition: &CellPartition,
    chars: &CellCharacters,
    families: &FamilyAssignment,
    table: &CharacterTable,
) -> Vec<String> {
    let w0 = g.longest();
    let eps: Vec<i64> = table.class_reps().iter().map(|&w| if g.length(w) % 2 == 0 { 1 } else { -1 }).collect();
    let mut out = Vec::new();
    for (c, cell) in partition.left_cells().iter().enumerate() {
        let mut dual: Vec<usize> = cell.iter().map(|&w| g.mul(w, w0)).collect();
        dual.sort_unstable();
        let d = partition.left_cell_of(dual[0]);
        if partition.left_cells()[d] != dual {
            out.push(format!("C·w0 is not a left cell for C ∋ {}", g.word_string(cell[0])));
            continue;
        }
        let twisted: Vec<i64> = chars.values[c].iter().zip(&eps).map(|(a, b)| a * b).collect();
        if twisted != chars.values[d] {
            out.push(format!("[C·w0] ≠ [C] ⊗ ε for C ∋ {}", g.word_string(cell[0])));
        }
    }
    for (t, cell) in partition.two_sided_cells().iter().enumerate() {
        let d = partition.two_sided_cell_of(g.mul(cell[0], w0));
        let mut twisted: Vec<usize> = families.members[t].iter().map(|&x| table.tensor_sign(g, x)).collect();
        twisted.sort_unstable();
        if twisted != families.members[d] {
            out.push(format!("family of two-sided cell {t} is not dual to that of {d}"));
        }
    }
    out
}
