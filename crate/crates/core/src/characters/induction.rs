use super::{CharacterError, CharacterTable, ClassFunction};
use crate::coxeter::CoxeterGroup;
use crate::numfield::{AlgebraicNumber, Scalar};
use num_rational::BigRational;

/// A standard parabolic subgroup with its own character table.
#[derive(Debug)]
pub struct Parabolic {
    pub mask: u32,
    pub group: CoxeterGroup,
    /// ids of the subgroup elements inside `W`
    pub embed: Vec<usize>,
    pub table: CharacterTable,
}

impl Parabolic {
    pub fn new(g: &CoxeterGroup, mask: u32) -> Result<Self, CharacterError> {
        let (group, embed) =
            g.parabolic_group(mask).map_err(|e| CharacterError::Inconsistent(format!("parabolic {mask:#b}: {e}")))?;
        let table = CharacterTable::compute(&group)?;
        Ok(Parabolic { mask, group, embed, table })
    }

    /// The longest element of the subgroup, as an element of `W`.
    pub fn longest_in_parent(&self) -> usize {
        self.embed[self.group.longest()]
    }
}

/// `Ind_{W′}^W χ′` at the class representatives of `W`:
/// `|W| / (|W′|·|𝒞|) · Σ_{y ∈ W′ ∩ 𝒞} χ′(y)`.
pub fn induce(g: &CoxeterGroup, table: &CharacterTable, sub: &Parabolic, chi: &[AlgebraicNumber]) -> ClassFunction {
    let k = table.num_classes();
    let mut sums = vec![AlgebraicNumber::zero_elem(); k];
    for (y, &x) in sub.embed.iter().enumerate() {
        sums[g.class_of(x)].add_assign_ref(&chi[sub.group.class_of(y)]);
    }
    sums.iter()
        .enumerate()
        .map(|(c, s)| {
            let den = (sub.group.order() * table.class_sizes()[c]) as i64;
            s.scale(&BigRational::new((g.order() as i64).into(), den.into()))
        })
        .collect()
}

/// `Res_{W′} χ` at the class representatives of `W′`.
pub fn restrict(g: &CoxeterGroup, table: &CharacterTable, sub: &Parabolic, chi: usize) -> ClassFunction {
    sub.table.class_reps().iter().map(|&y| table.value(chi, g.class_of(sub.embed[y])).clone()).collect()
}

/// Truncated induction: the constituents `ψ` of `Ind χ′` with `b_ψ = b_{χ′}`,
/// with their multiplicities.
pub fn j_induce(
    g: &CoxeterGroup,
    table: &CharacterTable,
    b: &[i64],
    sub: &Parabolic,
    b_sub: &[i64],
    chi: usize,
) -> Result<Vec<i64>, CharacterError> {
    let ind = induce(g, table, sub, sub.table.row(chi));
    let mut m = table.decompose(&ind)?;
    for (psi, x) in m.iter_mut().enumerate() {
        if b[psi] != b_sub[chi] {
            *x = 0;
        }
    }
    if m.iter().all(|&x| x == 0) {
        return Err(CharacterError::Inconsistent(format!("truncated induction of {chi} from {:#b} is empty", sub.mask)));
    }
    Ok(m)
}
