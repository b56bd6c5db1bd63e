use super::{bn_character, cycle_type, signed_cycle_type, sn_character, Bipartition, ClassicalError, Partition};
use crate::characters::{int_class_function, CharacterTable};
use crate::coxeter::{signed_permutation, CoxeterGroup, IrreducibleType};

fn match_rows<L: Clone + std::fmt::Display>(
    table: &CharacterTable,
    labels: Vec<L>,
    row: impl Fn(&L) -> Vec<i64>,
) -> Result<Vec<L>, ClassicalError> {
    let mut out: Vec<Option<L>> = vec![None; table.len()];
    for l in labels {
        let chi = table
            .index_of(&int_class_function(&row(&l)))
            .ok_or_else(|| ClassicalError::Labelling(format!("{l} is not a row of the table")))?;
        if out[chi].replace(l.clone()).is_some() {
            return Err(ClassicalError::Labelling(format!("two labels for character {chi}")));
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(chi, l)| l.ok_or_else(|| ClassicalError::Labelling(format!("character {chi} has no label"))))
        .collect()
}

fn perms(g: &CoxeterGroup, table: &CharacterTable) -> Vec<Vec<i32>> {
    table.class_reps().iter().map(|&w| signed_permutation(g, w).expect("classical type")).collect()
}

/// `χ^α` for each character of a type `A_{n−1}` table, by cycle type.
pub fn label_type_a(g: &CoxeterGroup, table: &CharacterTable) -> Result<Vec<Partition>, ClassicalError> {
    let Some(IrreducibleType::A(r)) = g.system().irreducible_type() else {
        return Err(ClassicalError::WrongType("A"));
    };
    let types: Vec<Vec<usize>> = perms(g, table).iter().map(|p| cycle_type(p)).collect();
    match_rows(table, Partition::all(r + 1), |a| types.iter().map(|mu| sn_character(a, mu)).collect())
}

/// `χ^{(α,β)}` for each character of a type `B_n` table, by signed cycle
/// type.
pub fn label_type_b(g: &CoxeterGroup, table: &CharacterTable) -> Result<Vec<Bipartition>, ClassicalError> {
    let Some(IrreducibleType::B(n)) = g.system().irreducible_type() else {
        return Err(ClassicalError::WrongType("B"));
    };
    let types: Vec<Vec<(usize, bool)>> = perms(g, table).iter().map(|p| signed_cycle_type(p)).collect();
    match_rows(table, Bipartition::all(n), |bp| types.iter().map(|c| bn_character(bp, c)).collect())
}
