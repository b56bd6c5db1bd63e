use super::*;
use crate::coxeter::CoxeterGroup;
use crate::numfield::AlgebraicNumber;

fn table(label: &str) -> (CoxeterGroup, CharacterTable) {
    let g = CoxeterGroup::from_label(label, 5000).unwrap();
    let t = CharacterTable::compute(&g).unwrap();
    (g, t)
}

#[test]
fn small_tables() {
    let (_, t) = table("A2");
    assert_eq!(t.degrees(), &[1, 1, 2]);
    let (_, t) = table("B2");
    assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
    let (g, t) = table("H3");
    assert_eq!(t.len(), 10);
    assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), 120);
    assert!(t.rows().iter().flatten().any(|x| !x.is_rational()));
    assert_eq!(t.sign_index(&g), 1);
}

#[test]
fn class_counts() {
    for (label, k) in [("A3", 5), ("A4", 7), ("B3", 10), ("B4", 20), ("D4", 13), ("I2(7)", 5), ("I2(12)", 9), ("A1xA2", 6)] {
        let (_, t) = table(label);
        assert_eq!(t.len(), k, "{label}");
    }
}

#[test]
fn reflection_character_is_irreducible() {
    for label in ["A3", "B3", "H3", "I2(8)", "D4"] {
        let (g, t) = table(label);
        let r = t.reflection_character(&g);
        let m = t.decompose(&r).unwrap();
        assert_eq!(m.iter().sum::<i64>(), 1, "{label}");
        assert_eq!(r[0], AlgebraicNumber::from_int(g.rank() as i64));
    }
}

pub(super) mod hecke_chars {
    use super::super::*;
    use crate::cells::{CellCharacters, CellModule, CellPartition};
    use crate::coxeter::CoxeterGroup;
    use crate::hecke::{KLTable, WeightFunction};
    use crate::numfield::{KPoly, ZPoly};
    use num_bigint::BigInt;
    use std::sync::Arc;

    pub(super) struct Run {
        pub kl: KLTable,
        pub table: CharacterTable,
        pub cp: ClassPolynomials,
        pub hc: HeckeCharacters,
        pub cells: CellPartition,
        pub cc: CellCharacters,
    }

    pub(super) fn run(label: &str, w: &str) -> Run {
        let g = Arc::new(CoxeterGroup::from_label(label, 5000).unwrap());
        let phi = WeightFunction::parse(g.system(), w).unwrap();
        let kl = KLTable::build(g.clone(), phi.clone()).unwrap();
        let table = CharacterTable::compute(&g).unwrap();
        let cells = CellPartition::compute(&kl);
        let cc = CellCharacters::compute(&kl, &cells, &table).unwrap();
        let cp = ClassPolynomials::compute(&g, &phi).unwrap();
        let hc = HeckeCharacters::compute(&kl, &cells, &cc, &table, &cp).unwrap();
        Run { kl, table, cp, hc, cells, cc }
    }

    #[test]
    fn class_polynomials_reproduce_cell_traces() {
        for (l, w) in [("A3", "1"), ("B3", "2,1"), ("I2(7)", "1"), ("I2(6)", "3,2"), ("H3", "1")] {
            let g = Arc::new(CoxeterGroup::from_label(l, 5000).unwrap());
            let phi = WeightFunction::parse(g.system(), w).unwrap();
            let kl = KLTable::build(g.clone(), phi.clone()).unwrap();
            let cp = ClassPolynomials::compute(&g, &phi).unwrap();
            let reps: Vec<usize> = g.classes().iter().map(|c| c.rep).collect();
            for x in 0..g.order() {
                let at_one: Vec<(u32, BigInt)> =
                    cp.row(x).iter().map(|(k, f)| (*k, f.eval_one())).filter(|(_, c)| *c != BigInt::from(0)).collect();
                assert_eq!(at_one, vec![(g.class_of(x) as u32, BigInt::from(1))], "{l}");
            }
            let cells = CellPartition::compute(&kl);
            for c in cells.left_cells() {
                let m = CellModule::new(&kl, c);
                let all = m.all_t_matrices(&g);
                let at_reps: Vec<ZPoly> = reps.iter().map(|&r| crate::linalg::trace(&all[r])).collect();
                for x in 0..g.order() {
                    assert_eq!(cp.evaluate(x, &at_reps, |f| f.clone()), crate::linalg::trace(&all[x]), "{l} {x}");
                }
            }
        }
    }

    fn linear_values(r: &Run, signs: &[i64]) -> Vec<KPoly> {
        // T_s ↦ v^{φ(s)} or −v^{−φ(s)} according to signs[s]
        let g = r.kl.group();
        r.table
            .class_reps()
            .iter()
            .map(|&w| {
                let mut p = KPoly::one();
                for &s in g.word(w) {
                    let l = r.kl.weights().get(s as usize);
                    let f = if signs[s as usize] > 0 { KPoly::v_pow(l) } else { KPoly::v_pow(-l).neg() };
                    p = p.mul(&f);
                }
                p
            })
            .collect()
    }

    #[test]
    fn one_dimensional_characters() {
        for (l, w) in [("A3", "1"), ("B2", "1"), ("B2", "2,1"), ("B3", "3,1"), ("I2(8)", "1"), ("I2(10)", "3,2")] {
            let r = run(l, w);
            let g = r.kl.group();
            let classes = g.system().generator_classes();
            let rank = g.rank();
            let n = classes.len();
            for mask in 0..(1u32 << n) {
                let mut signs = vec![1; rank];
                for (i, cl) in classes.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        for &s in cl {
                            signs[s] = -1;
                        }
                    }
                }
                let vals = linear_values(&r, &signs);
                assert!((0..r.hc.len()).any(|chi| r.hc.row_at_reps(chi) == vals.as_slice()), "{l} {w} {signs:?}");
            }
            assert_eq!(r.hc.row_at_reps(r.table.trivial()), linear_values(&r, &vec![1; rank]).as_slice());
            let sign = r.table.sign_index(g);
            assert_eq!(r.hc.row_at_reps(sign), linear_values(&r, &vec![-1; rank]).as_slice());
        }
    }

    #[test]
    fn dihedral_two_dimensional_characters() {
        for m in [5u32, 6, 8, 9, 12] {
            let r = run(&format!("I2({m})"), "1");
            let g = r.kl.group();
            let st = g.element_from_word(&[0, 1]);
            let k_st = g.class_of(st);
            let k_s = g.class_of(g.element_from_word(&[0]));
            let mut seen = Vec::new();
            for chi in 0..r.hc.len() {
                if r.table.degree(chi) != 2 {
                    continue;
                }
                assert_eq!(*r.hc.at_rep(chi, k_s), KPoly::v_pow(1).sub(&KPoly::v_pow(-1)));
                let v = r.hc.at_rep(chi, k_st);
                assert!(v.terms().all(|(e, _)| e == 0));
                let c = v.coeff(0);
                let x = c.to_f64();
                let j = (1..m as i64)
                    .find(|&j| (x - 2.0 * (2.0 * std::f64::consts::PI * j as f64 / m as f64).cos()).abs() < 1e-9)
                    .expect("2cos(2πj/m)");
                seen.push(j.min(m as i64 - j));
            }
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), ((m - 1) / 2) as usize, "I2({m})");
        }
    }

    #[test]
    fn values_are_inverse_symmetric_and_specialize() {
        for (l, w) in [("B3", "1"), ("B3", "3,1"), ("D4", "1"), ("H3", "1"), ("I2(7)", "1")] {
            let r = run(l, w);
            let g = r.kl.group();
            for chi in 0..r.hc.len() {
                let vals = r.hc.values(&r.cp, chi, g.order());
                for x in 0..g.order() {
                    assert_eq!(vals[x], vals[g.inverse(x)], "{l}");
                    assert_eq!(vals[x].eval_one(), *r.table.value(chi, g.class_of(x)));
                }
            }
        }
    }

    #[test]
    fn reflection_character_of_s3() {
        let r = run("A2", "1");
        let g = r.kl.group();
        let w0 = g.longest();
        let refl = r.table.index_of(&r.table.reflection_character(g)).unwrap();
        let middle = &r.cells.left_cells()[r.cells.left_cell_of(1)];
        let direct = CellModule::new(&r.kl, middle).trace_t(g, w0).to_algebraic();
        assert_eq!(r.hc.value(&r.cp, refl, w0), direct);
        assert!(r.hc.split_cells().is_empty());
        assert!(!r.cc.values.is_empty());
    }

    #[test]
    fn splitting_is_needed_for_b2() {
        let r = run("B2", "1");
        assert!(!r.hc.split_cells().is_empty());
    }
}

mod leading_data {
    use super::super::*;
    use super::hecke_chars::{run, Run};
    use crate::cells::FamilyAssignment;
    use crate::numfield::{AlgebraicNumber, Scalar};

    fn leading(r: &Run) -> LeadingData {
        LeadingData::compute(r.kl.group(), &r.table, &r.hc, &r.cp).unwrap()
    }

    /// Multiplicity of `χ` in `S^j V`, from `j·h_j = Σ p_i h_{j−i}` with
    /// `p_i(g) = tr(g^i)` on the reflection representation.
    fn symmetric_power_b(r: &Run) -> Vec<i64> {
        let g = r.kl.group();
        let n = g.num_positive_roots();
        let reps = r.table.class_reps();
        let h: Vec<Vec<AlgebraicNumber>> = reps
            .iter()
            .map(|&w| {
                let mut p = vec![AlgebraicNumber::zero_elem()];
                let mut x = w;
                for _ in 1..=n {
                    let m = g.reflection_matrix(x);
                    let mut t = AlgebraicNumber::zero_elem();
                    for (i, row) in m.iter().enumerate() {
                        t.add_assign_ref(&row[i]);
                    }
                    p.push(t);
                    x = g.mul(x, w);
                }
                let mut h = vec![AlgebraicNumber::from_int(1)];
                for j in 1..=n {
                    let mut s = AlgebraicNumber::zero_elem();
                    for i in 1..=j {
                        s.add_assign_ref(&p[i].mul_ref(&h[j - i]));
                    }
                    h.push(s.scale(&num_rational::BigRational::new(1.into(), (j as i64).into())));
                }
                h
            })
            .collect();
        (0..r.table.len())
            .map(|chi| {
                (0..=n)
                    .find(|&j| {
                        let f: Vec<AlgebraicNumber> = h.iter().map(|hk| hk[j].clone()).collect();
                        r.table.inner(&f, r.table.row(chi)) != AlgebraicNumber::zero_elem()
                    })
                    .unwrap() as i64
            })
            .collect()
    }

    #[test]
    fn b_matches_symmetric_powers() {
        for l in ["A3", "B3", "D4", "H3", "I2(7)", "I2(8)"] {
            let r = run(l, "1");
            let g = r.kl.group();
            let b = b_invariants(g, &r.table).unwrap();
            assert_eq!(b, symmetric_power_b(&r), "{l}");
            assert_eq!(b[r.table.trivial()], 0);
            assert_eq!(b[r.table.sign_index(g)], g.num_positive_roots() as i64);
            let refl = r.table.index_of(&r.table.reflection_character(g)).unwrap();
            assert_eq!(b[refl], 1);
        }
    }

    #[test]
    fn basic_leading_values() {
        let r = run("A4", "1");
        let ld = leading(&r);
        assert!(ld.f.iter().all(|f| *f == AlgebraicNumber::from_int(1)));
        assert_eq!(ld.a[0], 0);
        assert_eq!(ld.c[0][0], AlgebraicNumber::from_int(1));
        assert!(ld.exceptional(r.kl.group()).iter().all(|&e| !e));

        let r = run("B2", "1");
        let ld = leading(&r);
        let fam = FamilyAssignment::assign(&r.cells, &r.cc).unwrap();
        let middle = fam.family_of_char[r.table.index_of(&r.table.reflection_character(r.kl.group())).unwrap()];
        assert_eq!(fam.members[middle].len(), 3);
        for &chi in &fam.members[middle] {
            assert_eq!(ld.f[chi], AlgebraicNumber::from_int(2));
            assert_eq!(ld.a[chi], 1);
        }
    }

    #[test]
    fn special_characters_and_positivity() {
        for l in ["B3", "D4", "H3", "I2(8)", "I2(9)"] {
            let r = run(l, "1");
            let g = r.kl.group();
            let ld = leading(&r);
            let b = b_invariants(g, &r.table).unwrap();
            let special = special_flags(&ld.a, &b);
            let fam = FamilyAssignment::assign(&r.cells, &r.cc).unwrap();
            for (t, m) in fam.members.iter().enumerate() {
                let sp: Vec<usize> = m.iter().copied().filter(|&x| special[x]).collect();
                assert_eq!(sp.len(), 1, "{l} cell {t}");
                let chi = sp[0];
                for c in r.cells.left_cells_in(t) {
                    for &w in &r.cells.left_cells()[c] {
                        if r.cells.left_cell_of(g.inverse(w)) == c {
                            let x = &ld.c[chi][w];
                            let x = if (ld.a[chi] + g.length(w) as i64) % 2 == 1 { x.neg_ref() } else { x.clone() };
                            assert_eq!(x.sign(), std::cmp::Ordering::Greater, "{l}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn exceptional_characters_of_h3() {
        let r = run("H3", "1");
        let g = r.kl.group();
        let ld = leading(&r);
        let ex = ld.exceptional(g);
        let tw = twisted_characters(g, &r.table, &r.hc).unwrap();
        assert!(ex.iter().any(|&e| e));
        for chi in 0..ex.len() {
            assert_eq!(ex[chi], tw[chi] != chi);
            assert_eq!(ld.a[tw[chi]], ld.a[chi]);
            if ex[chi] {
                assert!(r.table.degree(chi).is_power_of_two());
            }
        }
        for l in ["B3", "D4"] {
            let r = run(l, "1");
            let ld = leading(&r);
            assert!(ld.exceptional(r.kl.group()).iter().all(|&e| !e), "{l}");
        }
    }

    #[test]
    fn smooth_cell_counts() {
        for (l, total, smooth) in [("B3", 6, 4), ("D4", 11, 10), ("H3", 7, 4), ("I2(7)", 3, 2), ("A4", 7, 7)] {
            let r = run(l, "1");
            let g = r.kl.group();
            let ld = leading(&r);
            let fam = FamilyAssignment::assign(&r.cells, &r.cc).unwrap();
            let rows = smoothness(g, &r.cells, &fam, &r.cc, &ld);
            assert_eq!(rows.len(), total, "{l}");
            assert!(rows.iter().all(Smoothness::consistent), "{l}");
            assert_eq!(rows.iter().filter(|s| s.smooth()).count(), smooth, "{l}");
        }
    }

    #[test]
    fn induction_and_truncation() {
        let r = run("B3", "1");
        let g = r.kl.group();
        let b = b_invariants(g, &r.table).unwrap();
        let full = Parabolic::new(g, 0b111).unwrap();
        let bf = b_invariants(&full.group, &full.table).unwrap();
        for chi in 0..full.table.len() {
            let j = j_induce(g, &r.table, &b, &full, &bf, chi).unwrap();
            assert_eq!(j.iter().sum::<i64>(), 1);
        }
        let a1 = Parabolic::new(g, 0b001).unwrap();
        let b1 = b_invariants(&a1.group, &a1.table).unwrap();
        let j = j_induce(g, &r.table, &b, &a1, &b1, a1.table.trivial()).unwrap();
        let mut triv = vec![0; r.table.len()];
        triv[r.table.trivial()] = 1;
        assert_eq!(j, triv);
        for chi in 0..r.table.len() {
            let res = restrict(g, &r.table, &a1, chi);
            let m = a1.table.decompose(&res).unwrap();
            assert_eq!(m.iter().zip(a1.table.degrees()).map(|(x, d)| x * *d as i64).sum::<i64>(), r.table.degree(chi) as i64);
        }
    }
}
