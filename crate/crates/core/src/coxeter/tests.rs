use super::*;
use std::collections::{BTreeSet, HashSet};

fn grp(label: &str) -> CoxeterGroup {
    CoxeterGroup::from_label(label, 20_000).unwrap()
}

#[test]
fn orders_and_longest_lengths() {
    for (label, order, l0) in [
        ("A1", 2, 1),
        ("A2", 6, 3),
        ("B2", 8, 4),
        ("A3", 24, 6),
        ("B3", 48, 9),
        ("D4", 192, 12),
        ("H3", 120, 15),
        ("I2(7)", 14, 7),
        ("I2(12)", 24, 12),
        ("F4", 1152, 24),
        ("B2xA1", 16, 5),
        ("D3", 24, 6),
        ("D2", 4, 2),
    ] {
        let g = grp(label);
        assert_eq!(g.order(), order, "{label}");
        assert_eq!(g.length(g.longest()), l0, "{label}");
        assert_eq!(g.num_positive_roots(), l0, "{label}");
    }
}

#[test]
fn h3_field_is_quadratic() {
    let g = grp("H3");
    assert_eq!(g.field().unwrap().degree(), 2);
    assert!(grp("B3").field().is_none());
    assert_eq!(grp("I2(7)").field().unwrap().degree(), 3);
}

#[test]
fn budget_is_enforced() {
    let e = CoxeterGroup::from_label("E8", DEFAULT_BUDGET).unwrap_err();
    assert!(matches!(e, CoxeterError::BudgetExceeded { required: Some(696_729_600), .. }));
    let m = vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]];
    let affine = CoxeterSystem::from_matrix(m).unwrap();
    assert_eq!(CoxeterGroup::build(affine, 1000).unwrap_err(), CoxeterError::NotFinite);
}

#[test]
fn length_identities() {
    for label in ["A3", "B3", "H3", "I2(5)", "D4"] {
        let g = grp(label);
        let w0 = g.longest();
        for w in 0..g.order() {
            assert_eq!(g.length(g.inverse(w)), g.length(w));
            assert_eq!(g.length(g.mul(w, w0)), g.length(w0) - g.length(w));
            for s in 0..g.rank() {
                let a = g.length(g.lmul(s, w)) as i64 - g.length(w) as i64;
                assert!(a == 1 || a == -1);
                assert_eq!(g.is_right_descent(w, s), g.length(g.rmul(w, s)) < g.length(w));
                assert_eq!(g.is_left_descent(s, w), g.length(g.lmul(s, w)) < g.length(w));
            }
        }
        let conj: BTreeSet<usize> = (0..g.rank()).map(|s| g.conjugate(w0, g.element_from_word(&[s]))).collect();
        let gens: BTreeSet<usize> = (0..g.rank()).map(|s| g.element_from_word(&[s])).collect();
        assert_eq!(conj, gens, "{label}");
    }
}

#[test]
fn involution_descents_are_symmetric() {
    for label in ["A4", "B3", "H3", "D4", "I2(8)"] {
        let g = grp(label);
        for w in (0..g.order()).filter(|&w| g.is_involution(w)) {
            for s in 0..g.rank() {
                assert_eq!(g.is_left_descent(s, w), g.is_right_descent(w, s));
            }
        }
    }
}

fn subword_ideal(g: &CoxeterGroup, w: usize) -> HashSet<usize> {
    let word = g.word(w);
    let mut out = HashSet::new();
    for mask in 0u32..1 << word.len() {
        let sub: Vec<usize> = (0..word.len()).filter(|&i| mask >> i & 1 == 1).map(|i| word[i] as usize).collect();
        out.insert(g.element_from_word(&sub));
    }
    out
}

#[test]
fn bruhat_matches_subwords() {
    for label in ["A3", "B3", "I2(5)", "D4"] {
        let g = grp(label);
        for w in 0..g.order() {
            if g.length(w) > 12 {
                continue;
            }
            let ideal = subword_ideal(&g, w);
            for x in 0..g.order() {
                assert_eq!(g.bruhat_leq(x, w), ideal.contains(&x), "{label}: {x} <= {w}");
            }
        }
    }
}

#[test]
fn bruhat_matches_reflection_covers() {
    for label in ["B3", "H3", "A4"] {
        let g = grp(label);
        let n = g.order();
        let reflections: BTreeSet<usize> = (0..g.rank())
            .flat_map(|s| {
                let s = g.element_from_word(&[s]);
                (0..n).map(move |x| (x, s))
            })
            .map(|(x, s)| g.conjugate(x, s))
            .collect();
        assert_eq!(reflections.len(), g.num_positive_roots());
        // up-closure along x → xt with ℓ(xt) > ℓ(x)
        for x in 0..n {
            let mut above = vec![false; n];
            above[x] = true;
            for y in x..n {
                if !above[y] {
                    continue;
                }
                for &t in &reflections {
                    let yt = g.mul(y, t);
                    if g.length(yt) > g.length(y) {
                        above[yt] = true;
                    }
                }
            }
            for (w, &a) in above.iter().enumerate() {
                assert_eq!(a, g.bruhat_leq(x, w));
            }
        }
    }
}

#[test]
fn bruhat_on_demand_agrees_with_table() {
    let g = grp("B3");
    let t = g.bruhat_ideal(g.longest()).unwrap();
    assert_eq!(t.count(), g.order());
    for w in 0..g.order() {
        for x in 0..g.order() {
            let table = g.bruhat_ideal(w).unwrap().contains(x);
            // the descent recursion used above the table limit
            let (mut xx, mut ww) = (x, w);
            while ww != 0 {
                let s = g.right_descents(ww).trailing_zeros() as usize;
                xx = xx.min(g.rmul(xx, s));
                ww = g.rmul(ww, s);
            }
            assert_eq!(table, xx == 0);
        }
    }
}

#[test]
fn bruhat_examples_b2() {
    let g = grp("B2");
    let t = g.element_from_word(&[0]);
    // t is a subword of s1·t·s1
    assert!(g.bruhat_leq(t, g.element_from_word(&[1, 0, 1])));
    assert!(!g.bruhat_leq(t, g.element_from_word(&[1])));
    assert!(!g.bruhat_leq(g.element_from_word(&[0, 1]), g.element_from_word(&[1, 0])));
    assert!(g.bruhat_leq(t, g.element_from_word(&[0, 1, 0])));
    assert!(g.bruhat_leq(0, g.longest()));
}

#[test]
fn class_examples() {
    let s3 = grp("A2");
    let sizes: Vec<usize> = s3.classes().iter().map(|c| c.size()).collect();
    assert_eq!(sizes, vec![1, 3, 2]);

    let s4 = grp("A3");
    let mut inv: Vec<usize> = s4.involution_classes().iter().map(|&c| s4.classes()[c].size()).collect();
    inv.sort();
    assert_eq!(inv, vec![1, 3, 6]);

    let b2 = grp("B2");
    assert_eq!(b2.classes().len(), 5);
    assert_eq!(b2.involution_classes().len(), 4);
    let w0 = b2.longest();
    assert_eq!(b2.classes()[b2.class_of(w0)].members, vec![w0]);
}

#[test]
fn class_sums() {
    for label in ["A4", "B3", "H3", "D4", "I2(9)", "B2xA1"] {
        let g = grp(label);
        assert_eq!(g.classes().iter().map(|c| c.size()).sum::<usize>(), g.order());
        let invs = (0..g.order()).filter(|&w| g.mul(w, w) == 0).count();
        let via: usize = g.involution_classes().iter().map(|&c| g.classes()[c].size()).sum();
        assert_eq!(invs, via);
        for c in g.classes() {
            let minlen = c.members.iter().map(|&w| g.length(w)).min().unwrap();
            assert_eq!(g.length(c.rep), minlen);
        }
    }
}

#[test]
fn involution_reps_are_central_longest_elements() {
    for label in ["A5", "B4", "D4", "H3", "F4", "I2(10)"] {
        let g = grp(label);
        for c in g.involution_classes() {
            let sigma = g.classes()[c].rep;
            let j = g.support(sigma);
            let p = g.parabolic(j);
            assert_eq!(p.longest, sigma, "{label}");
            for s in (0..g.rank()).filter(|s| j >> s & 1 == 1) {
                assert_eq!(g.lmul(s, sigma), g.rmul(sigma, s));
            }
        }
    }
}

#[test]
fn centralizers_and_epsilon() {
    let b2 = grp("B2");
    assert_eq!(b2.centralizer(0).len(), 8);
    assert_eq!(b2.centralizer(b2.longest()).len(), 8);
    let s3 = grp("A2");
    let s1 = s3.element_from_word(&[0]);
    assert_eq!(s3.centralizer(s1), vec![0, s1]);
    assert_eq!(s3.epsilon_sigma(s1, 0b01, 0).unwrap(), 1);
    assert_eq!(s3.epsilon_sigma(s1, 0b01, s1).unwrap(), -1);
    let w0 = b2.longest();
    assert_eq!(b2.epsilon_sigma(w0, 0b11, w0).unwrap(), 1);
    assert!(s3.epsilon_sigma(s1, 0b11, 0).is_err());
}

#[test]
fn parabolic_group_embeds() {
    let g = grp("B3");
    let (sub, emb) = g.parabolic_group(0b011).unwrap();
    assert_eq!(sub.order(), 8);
    let p = g.parabolic(0b011);
    let mut e = emb.clone();
    e.sort();
    assert_eq!(e, p.elements);
    assert_eq!(emb[sub.longest()], p.longest);
    for x in 0..sub.order() {
        for y in 0..sub.order() {
            assert_eq!(emb[sub.mul(x, y)], g.mul(emb[x], emb[y]));
        }
    }
}

#[test]
fn classical_representatives() {
    let a2 = grp("A2");
    let r = involution_class_reps_classical(&a2).unwrap();
    assert_eq!(r.iter().map(|x| (x.j, x.element)).collect::<Vec<_>>(), vec![(0, 0), (1, a2.element_from_word(&[0]))]);

    let b2 = grp("B2");
    let r = involution_class_reps_classical(&b2).unwrap();
    let got: Vec<(usize, usize, usize)> = r.iter().map(|x| (x.l, x.j, x.element)).collect();
    assert_eq!(
        got,
        vec![(0, 0, 0), (0, 1, b2.element_from_word(&[1])), (1, 0, b2.element_from_word(&[0])), (2, 0, b2.longest())]
    );

    let d2 = grp("D2");
    let r = involution_class_reps_classical(&d2).unwrap();
    let split: Vec<&ClassicalRep> = r.iter().filter(|x| x.sign != 0).collect();
    assert_eq!(split.len(), 2);
    assert_eq!(split[0].element, d2.element_from_word(&[1]));
    assert_eq!(split[1].element, d2.element_from_word(&[0]));
    assert_ne!(d2.class_of(split[0].element), d2.class_of(split[1].element));

    for label in ["A5", "B4", "D4", "B3", "D3"] {
        let g = grp(label);
        let reps = involution_class_reps_classical(&g).unwrap();
        let classes: BTreeSet<usize> = reps.iter().map(|r| g.class_of(r.element)).collect();
        assert_eq!(classes.len(), reps.len(), "{label}");
        assert_eq!(classes.len(), g.involution_classes().len(), "{label}");
        for r in &reps {
            assert_eq!(g.length(r.element), g.length(g.classes()[g.class_of(r.element)].rep), "{label}");
        }
    }
}

#[test]
fn signed_permutations_are_homomorphic() {
    for label in ["B3", "D4", "A3"] {
        let g = grp(label);
        let sp = |w| signed_permutation(&g, w).unwrap();
        for x in (0..g.order()).step_by(7) {
            for y in (0..g.order()).step_by(5) {
                let (a, b) = (sp(x), sp(y));
                let comp: Vec<i32> = b.iter().map(|&k| a[k.unsigned_abs() as usize - 1] * k.signum()).collect();
                assert_eq!(comp, sp(g.mul(x, y)));
            }
        }
    }
}

#[test]
fn reflection_matrices_multiply() {
    let g = grp("H3");
    let w = g.element_from_word(&[0, 1, 2, 1]);
    let m = g.reflection_matrix(w);
    let r = g.act_on_root(w, 2);
    let col: Vec<_> = (0..3).map(|i| m[i][2].clone()).collect();
    assert_eq!(col, g.roots()[r]);
}
