use super::*;
use crate::analysis::Analysis;
use crate::coxeter::CoxeterGroup;

fn report(label: &str, weights: &str) -> VerificationReport {
    let a = Analysis::from_label(label, weights, 20_000).unwrap();
    verify_all(&a, 20_000)
}

fn assert_all_pass(label: &str, weights: &str) {
    let r = report(label, weights);
    let bad: Vec<String> = r.checks.iter().filter(|c| !c.passed()).map(|c| format!("{}: {}", c.name, c.details)).collect();
    assert!(bad.is_empty(), "{label} [{weights}]:\n{}", bad.join("\n"));
}

#[test]
fn battery_small_groups() {
    for label in ["A1", "A2", "A3", "B2", "B3", "D4", "H3", "I2(5)", "I2(6)", "G2"] {
        assert_all_pass(label, "1");
    }
}

#[test]
fn battery_unequal() {
    for (label, w) in [("B2", "2,1"), ("B3", "2,1"), ("B3", "3,1"), ("G2", "2,1"), ("I2(6)", "3,1")] {
        assert_all_pass(label, w);
    }
}

#[test]
fn rho_of_identity_is_trivial() {
    let g = CoxeterGroup::from_label("H3", 1000).unwrap();
    assert_eq!(rho_character(&g, &[g.class_of(0)]).unwrap(), vec![1; g.classes().len()]);
}

#[test]
fn s3_transpositions() {
    let a = Analysis::from_label("A2", "1", 100).unwrap();
    let g = a.g();
    let k = g.class_of(g.element_from_word(&[0]));
    let m = a.table.decompose_int(&rho_character(g, &[k]).unwrap()).unwrap();
    let mut expected = vec![0; 3];
    expected[a.table.sign_index(g)] = 1;
    expected[(0..3).find(|&x| a.table.degree(x) == 2).unwrap()] = 1;
    assert_eq!(m, expected);
}

#[test]
fn module_relations_hold() {
    for label in ["A3", "B3", "D4", "H3", "I2(7)"] {
        let g = CoxeterGroup::from_label(label, 1000).unwrap();
        let m = InvolutionModule::new(&g, &g.involution_classes()).unwrap();
        assert_eq!(m.dim(), (0..g.order()).filter(|&w| g.is_involution(w)).count());
        m.check_relations(&g).unwrap();
    }
}

#[test]
fn non_involution_class_is_rejected() {
    let g = CoxeterGroup::from_label("A2", 100).unwrap();
    let k = g.class_of(g.element_from_word(&[0, 1]));
    assert_eq!(rho_character(&g, &[k]), Err(KottwitzError::NotInvolutionClass(k)));
}

#[test]
fn constructions_agree() {
    for label in ["A3", "B3", "D4", "H3", "A4"] {
        let g = CoxeterGroup::from_label(label, 1000).unwrap();
        for k in g.involution_classes() {
            assert_eq!(rho_via_induction(&g, k).unwrap(), rho_character(&g, &[k]).unwrap(), "{label} class {k}");
        }
    }
}

mod props {
    use super::*;
    use proptest::prelude::*;

    const GROUPS: [&str; 6] = ["A3", "B3", "D4", "H3", "I2(8)", "A2xA1"];

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// `ρ` of a union is the sum over its classes, has degree the number
        /// of involutions, and is a genuine character.
        #[test]
        fn union_is_additive(gi in 0usize..GROUPS.len(), bits in any::<u32>()) {
            let a = Analysis::from_label(GROUPS[gi], "1", 1000).unwrap();
            let g = a.g();
            let classes: Vec<usize> = g
                .involution_classes()
                .into_iter()
                .enumerate()
                .filter(|(i, _)| bits >> (i % 32) & 1 == 1)
                .map(|(_, k)| k)
                .collect();
            prop_assume!(!classes.is_empty());
            let rho = rho_character(g, &classes).unwrap();
            let mut sum = vec![0; rho.len()];
            for &k in &classes {
                for (s, x) in sum.iter_mut().zip(rho_character(g, &[k]).unwrap()) {
                    *s += x;
                }
            }
            prop_assert_eq!(&rho, &sum);
            let size: usize = classes.iter().map(|&k| g.classes()[k].members.len()).sum();
            prop_assert_eq!(rho[g.class_of(0)], size as i64);
            prop_assert!(a.table.decompose_int(&rho).unwrap().iter().all(|&m| m >= 0));
        }
    }
}
