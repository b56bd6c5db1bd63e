use super::*;
use crate::analysis::Analysis;
use crate::coxeter::CoxeterGroup;
use crate::numfield::AlgebraicNumber;
use proptest::prelude::*;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec())
}

fn bp(a: &[usize], b: &[usize]) -> Bipartition {
    Bipartition::new(p(a), p(b))
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..10).map(|n| Partition::all(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    assert_eq!(Bipartition::all(4).len(), 20);
}

#[test]
fn conjugate_and_n() {
    assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    assert_eq!(p(&[2, 2]).n_statistic(), 2);
    assert_eq!(p(&[3, 2, 1]).conjugate().odd_parts(), 2);
}

#[test]
fn sn_character_values() {
    // χ^(2,1) of S3: degree 2, 0 on transpositions, −1 on 3-cycles
    let l = p(&[2, 1]);
    assert_eq!([sn_character(&l, &[1, 1, 1]), sn_character(&l, &[2, 1]), sn_character(&l, &[3])], [2, 0, -1]);
    // degrees of S5
    let degrees: Vec<i64> = Partition::all(5).iter().map(|l| sn_character(l, &[1; 5])).collect();
    assert_eq!(degrees.iter().map(|d| d * d).sum::<i64>(), 120);
}

#[test]
fn small_symbol() {
    let x = bp(&[1], &[1]);
    let s = x.symbol(1);
    assert_eq!((s.top.clone(), s.bottom.clone()), (vec![0, 2], vec![1]));
    assert_eq!(x.invariants(), SymbolInvariants { d: 1, j0: 1, special: true });
    assert_eq!(s.bipartition(), x);
}

#[test]
fn symbols_special_in_b2() {
    let special: Vec<String> =
        Bipartition::all(2).into_iter().filter(|x| x.invariants().special).map(|x| x.to_string()).collect();
    assert_eq!(special, ["(2|-)", "(1|1)", "(-|1,1)"]);
}

#[test]
fn b_values() {
    assert_eq!(bp(&[2], &[]).b_value(), 0);
    assert_eq!(bp(&[], &[1, 1]).b_value(), 4);
    assert_eq!(bp(&[1], &[1]).b_value(), 1);
}

#[test]
fn multiplicity_examples() {
    // ((1),(1)): d = 1, j₀ = 1, so ρ_{0,1} ∋ it once and ρ_{1,0} once
    let x = bp(&[1], &[1]);
    assert_eq!(kottwitz_multiplicity_b(&x, 0, 1), 1);
    assert_eq!(kottwitz_multiplicity_b(&x, 1, 0), 1);
    assert_eq!(kottwitz_multiplicity_b(&x, 2, 0), 0);
    assert_eq!(kottwitz_multiplicity_b(&bp(&[1, 1], &[]), 0, 0), 0);
    assert_eq!(kottwitz_multiplicity_a(&p(&[2, 1]), 1), 1);
    assert_eq!(kottwitz_multiplicity_a(&p(&[2, 1]), 0), 0);
    assert_eq!(kottwitz_multiplicity_a(&p(&[3]), 0), 1);
}

#[test]
fn cuspidal_in_b2_and_b6() {
    assert_eq!(cuspidality_b(&bp(&[1], &[1])), Cuspidality::Cuspidal);
    // d = 2: rows (0,2,4 / 1,3), n = 6
    let x = bp(&[2, 1], &[2, 1]);
    assert_eq!(x.symbol(2).entries(), vec![0, 1, 2, 3, 4]);
    assert_eq!(cuspidality_b(&x), Cuspidality::Cuspidal);
    assert!(matches!(cuspidality_b(&bp(&[2], &[])), Cuspidality::StronglyNonCuspidal { .. }));
}

#[test]
fn type_b_labels_match_table() {
    let a = Analysis::from_label("B3", "1", 10_000).unwrap();
    let labels = label_type_b(a.g(), &a.table).unwrap();
    let triv = labels.iter().position(|x| *x == bp(&[3], &[])).unwrap();
    assert_eq!(triv, a.table.trivial());
    let sign = labels.iter().position(|x| *x == bp(&[], &[1, 1, 1])).unwrap();
    assert_eq!(sign, a.table.sign_index(a.g()));
    for (chi, x) in labels.iter().enumerate() {
        assert_eq!(a.table.degree(chi), bn_character(x, &[(1, false); 3]) as u64);
    }
}

#[test]
fn type_a_labels_match_table() {
    let a = Analysis::from_label("A3", "1", 10_000).unwrap();
    let labels = label_type_a(a.g(), &a.table).unwrap();
    assert_eq!(labels[a.table.trivial()], p(&[4]));
    assert_eq!(labels[a.table.sign_index(a.g())], p(&[1, 1, 1, 1]));
}

#[test]
fn d2_plus_character() {
    let a = Analysis::from_label("D2", "1", 100).unwrap();
    let g = a.g();
    let pairs = pm_pairs(&a).unwrap();
    assert_eq!(pairs.len(), 1);
    let at = |w: &[usize]| a.table.value(pairs[0].plus, g.class_of(g.element_from_word(w))).clone();
    let one = AlgebraicNumber::from_int(1);
    let minus = AlgebraicNumber::from_int(-1);
    assert_eq!([at(&[]), at(&[1]), at(&[0]), at(&[1, 0])], [one.clone(), minus.clone(), one, minus]);
}

#[test]
fn theta_is_conjugation_by_t() {
    for n in [2, 4, 5] {
        let g = CoxeterGroup::from_label(&format!("D{n}"), 10_000).unwrap();
        assert_eq!(embedding_failures(&g, 10_000).unwrap(), Vec::<String>::new());
    }
}

#[test]
fn young_masks() {
    assert_eq!(young_mask(&[2, 2], 0), 0b1010);
    assert_eq!(young_mask(&[3, 1], 0), 0b0110);
    assert_eq!(young_mask(&[2], 1), 0b100);
}

proptest! {
    #[test]
    fn symbol_round_trip(n in 0usize..9, k in 0usize..1000, extra in 0usize..3) {
        let all = Bipartition::all(n);
        let x = &all[k % all.len()];
        let m = x.min_m() + extra;
        prop_assert_eq!(&x.symbol(m).bipartition(), x);
        // shifting the symbol keeps d, j₀ and specialness
        prop_assert_eq!(x.invariants_at(m), x.invariants());
    }

    #[test]
    fn tensor_sign_is_involutive_and_keeps_size(n in 0usize..9, k in 0usize..1000) {
        let all = Bipartition::all(n);
        let x = &all[k % all.len()];
        prop_assert_eq!(&x.tensor_sign().tensor_sign(), x);
        prop_assert_eq!(x.tensor_sign().size(), n);
    }

    #[test]
    fn column_orthogonality_sn(n in 1usize..8) {
        let parts = Partition::all(n);
        let sq: i64 = parts.iter().map(|l| sn_character(l, &vec![1; n]).pow(2)).sum();
        let fact: i64 = (1..=n as i64).product();
        prop_assert_eq!(sq, fact);
    }

    #[test]
    fn b_degrees_square_sum(n in 1usize..7) {
        let sq: i64 = Bipartition::all(n).iter().map(|x| bn_character(x, &vec![(1, false); n]).pow(2)).sum();
        let order: i64 = (1..=n as i64).product::<i64>() << n;
        prop_assert_eq!(sq, order);
    }
}
