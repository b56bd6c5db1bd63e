use super::*;
use crate::characters::CharacterTable;
use crate::coxeter::CoxeterGroup;
use crate::hecke::{KLTable, WeightFunction};
use crate::numfield::ZPoly;
use crate::numfield::AlgebraicNumber;
use std::sync::Arc;

fn table(label: &str, w: &str) -> KLTable {
    let g = Arc::new(CoxeterGroup::from_label(label, 5000).unwrap());
    let phi = WeightFunction::parse(g.system(), w).unwrap();
    KLTable::build(g, phi).unwrap()
}

struct Setup {
    kl: KLTable,
    cells: CellPartition,
    chars: CharacterTable,
    cc: CellCharacters,
}

fn setup(label: &str, w: &str) -> Setup {
    let kl = table(label, w);
    let cells = CellPartition::compute(&kl);
    let chars = CharacterTable::compute(kl.group()).unwrap();
    let cc = CellCharacters::compute(&kl, &cells, &chars).unwrap();
    Setup { kl, cells, chars, cc }
}

#[test]
fn rank_one() {
    let kl = table("A1", "1");
    let p = CellPartition::compute(&kl);
    assert_eq!(p.left_cells(), &[vec![0], vec![1]]);
    assert_eq!(p.two_sided_cells(), &[vec![0], vec![1]]);
}

#[test]
fn dihedral_two_sided_cells() {
    for m in 5..=9 {
        let kl = table(&format!("I2({m})"), "1");
        let p = CellPartition::compute(&kl);
        let g = kl.group();
        assert_eq!(p.two_sided_cells().len(), 3);
        assert_eq!(p.two_sided_cells()[0], vec![0]);
        assert_eq!(p.two_sided_cells()[2], vec![g.longest()]);
        assert_eq!(p.left_cells().len(), 4);
    }
}

#[test]
fn b2_equal_parameters() {
    let kl = table("B2", "1");
    let p = CellPartition::compute(&kl);
    assert_eq!(p.two_sided_cells().len(), 3);
    assert_eq!(p.two_sided_cells()[1].len(), 6);
    assert_eq!(p.left_cells().len(), 4);
    assert_eq!(p.left_cells_in(1).len(), 2);
}

#[test]
fn b2_unequal_parameters() {
    let kl = table("B2", "2,1");
    let p = CellPartition::compute(&kl);
    let sizes: Vec<usize> = p.two_sided_cells().iter().map(|c| c.len()).collect();
    assert_eq!(sizes, vec![1, 4, 1, 1, 1]);
    assert_eq!(p.left_cells().len(), 6);
    let g = kl.group();
    let words: Vec<Vec<String>> =
        p.two_sided_cells().iter().map(|c| c.iter().map(|&w| g.word_string(w)).collect()).collect();
    assert_eq!(words[1], vec!["1", "1.2", "2.1", "2.1.2"]);
    assert_eq!(words[2], vec!["2"]);
    assert_eq!(words[3], vec!["1.2.1"]);
}

#[test]
fn generator_edges_match_full_sweep() {
    for (l, w) in [("A3", "1"), ("B2", "2,1"), ("B3", "1"), ("B3", "3,1"), ("I2(6)", "3,2"), ("I2(7)", "1")] {
        let kl = table(l, w);
        assert_eq!(CellPartition::compute(&kl), CellPartition::compute_full_sweep(&kl), "{l} {w}");
    }
}

#[test]
fn partition_invariants() {
    for (l, w) in [("A4", "1"), ("B3", "2,1"), ("D4", "1"), ("H3", "1")] {
        let kl = table(l, w);
        let g = kl.group();
        let p = CellPartition::compute(&kl);
        let mut seen = vec![false; g.order()];
        for c in p.left_cells() {
            for &x in c {
                assert!(!seen[x]);
                seen[x] = true;
            }
        }
        assert!(seen.iter().all(|&b| b));
        for x in 0..g.order() {
            for y in 0..g.order() {
                let r = p.right_cell_of(x) == p.right_cell_of(y);
                let l = p.left_cell_of(g.inverse(x)) == p.left_cell_of(g.inverse(y));
                assert_eq!(r, l);
                if p.left_cell_of(x) == p.left_cell_of(y) || r {
                    assert_eq!(p.two_sided_cell_of(x), p.two_sided_cell_of(y));
                }
            }
        }
    }
}

#[test]
fn modules_satisfy_relations() {
    for (l, w) in [("A3", "1"), ("B3", "2,1"), ("I2(7)", "1"), ("I2(8)", "3,2"), ("H3", "1")] {
        let kl = table(l, w);
        let p = CellPartition::compute(&kl);
        for c in p.left_cells() {
            CellModule::new(&kl, c).check_relations(kl.group()).unwrap();
        }
    }
}

#[test]
fn extreme_cells() {
    let kl = table("B3", "2,1");
    let g = kl.group();
    let w0 = g.longest();
    let m = CellModule::new(&kl, &[w0]);
    for s in 0..3 {
        let l = kl.weights().get(s);
        assert_eq!(m.t_matrix_generator(s), vec![vec![ZPoly::v_pow(-l).neg()]]);
        assert_eq!(m.c_dagger_matrix(s), vec![vec![ZPoly::v_pow(l).add(&ZPoly::v_pow(-l))]]);
    }
    let e = CellModule::new(&kl, &[0]);
    for s in 0..3 {
        assert_eq!(e.t_matrix_generator(s), vec![vec![ZPoly::v_pow(kl.weights().get(s))]]);
    }
    let chars = CharacterTable::compute(g).unwrap();
    let reps = chars.class_reps();
    let triv = e.specialized_character(g, reps);
    assert_eq!(chars.decompose_int(&triv).unwrap()[chars.trivial()], 1);
    let sign = m.specialized_character(g, reps);
    let eps: Vec<i64> = reps.iter().map(|&w| if g.length(w) % 2 == 0 { 1 } else { -1 }).collect();
    assert_eq!(sign, eps);
}

#[test]
fn s3_middle_cell_is_reflection() {
    let s = setup("A2", "1");
    let g = s.kl.group();
    let refl = s.chars.reflection_character(g);
    let middle = s.cells.left_cell_of(1);
    assert_eq!(s.cells.left_cells()[middle].len(), 2);
    let v: Vec<AlgebraicNumber> = s.cc.values[middle].iter().map(|&x| AlgebraicNumber::from_int(x)).collect();
    assert_eq!(v, refl);
    let fam = FamilyAssignment::assign(&s.cells, &s.cc).unwrap();
    let r = s.chars.index_of(&refl).unwrap();
    assert_eq!(s.cells.two_sided_cells()[fam.family_of_char[r]].len(), 4);
    assert_eq!(fam.family_of_char[s.chars.trivial()], 0);
    assert_eq!(fam.family_of_char[s.chars.sign_index(g)], s.cells.two_sided_cell_of(g.longest()));
}

#[test]
fn cells_sum_to_regular_character() {
    for (l, w) in [("A3", "1"), ("B3", "2,1"), ("I2(8)", "1")] {
        let s = setup(l, w);
        let n = s.kl.group().order() as i64;
        let k = s.chars.num_classes();
        let mut total = vec![0i64; k];
        for v in &s.cc.values {
            for (t, x) in total.iter_mut().zip(v) {
                *t += x;
            }
        }
        let mut regular = vec![0i64; k];
        regular[0] = n;
        assert_eq!(total, regular, "{l}");
    }
}

#[test]
fn families_and_pairings() {
    for (l, w) in [("A3", "1"), ("B3", "1"), ("B3", "2,1"), ("D4", "1"), ("H3", "1"), ("I2(10)", "1")] {
        let s = setup(l, w);
        let g = s.kl.group();
        let fam = FamilyAssignment::assign(&s.cells, &s.cc).unwrap();
        for (t, cell) in s.cells.two_sided_cells().iter().enumerate() {
            let sq: u64 = fam.members[t].iter().map(|&x| s.chars.degree(x).pow(2)).sum();
            assert_eq!(sq as usize, cell.len(), "{l} cell {t}");
        }
        if w == "1" {
            assert_eq!(fam.as_sets(), FamilyAssignment::graph_components(&s.cc), "{l}");
        }
        let cells = s.cells.left_cells();
        for a in 0..cells.len() {
            let inv = cells[a].iter().filter(|&&x| g.is_involution(x)).count() as i64;
            assert_eq!(inv, s.cc.multiplicities[a].iter().sum::<i64>(), "{l} involutions");
            for b in 0..cells.len() {
                assert_eq!(s.cc.pairing(a, b), inverse_intersection(g, &cells[a], &cells[b]) as i64);
            }
        }
        assert!(w0_duality_failures(g, &s.cells, &s.cc, &fam, &s.chars).is_empty(), "{l}");
    }
}

#[test]
fn w0_duality_is_an_involution_on_s4_cells() {
    let s = setup("A3", "1");
    let g = s.kl.group();
    let w0 = g.longest();
    let dual = |c: usize| s.cells.left_cell_of(g.mul(s.cells.left_cells()[c][0], w0));
    for c in 0..s.cells.left_cells().len() {
        assert_eq!(dual(dual(c)), c);
    }
    assert_eq!(s.cc.pairing(0, 0), 1);
    let top = s.cells.left_cell_of(w0);
    assert_eq!(s.cc.pairing(0, top), 0);
}
