use super::{rho_character, rho_via_induction, Check, KottwitzError};
use crate::analysis::Analysis;
use crate::cells::{inverse_intersection, w0_duality_failures};
use crate::characters::{induce, int_class_function, Parabolic};
use crate::coxeter::{CoxeterGroup, IrreducibleType};
use crate::numfield::{AlgebraicNumber, FieldScalar, Scalar};
use std::cmp::Ordering;
use std::collections::BTreeSet;

type An = AlgebraicNumber;

/// `ρ_𝒞` for every involution class, with its decomposition into `Irr(W)`.
#[derive(Clone, Debug)]
pub struct RhoData {
    /// involution class indices into `g.classes()`
    pub classes: Vec<usize>,
    pub rho: Vec<Vec<i64>>,
    /// `mult[k][χ] = ⟨ρ_{𝒞_k}, χ⟩`
    pub mult: Vec<Vec<i64>>,
    /// `ρ_I` for the set `I` of all involutions
    pub total: Vec<i64>,
    pub total_mult: Vec<i64>,
}

impl RhoData {
    pub fn compute(a: &Analysis) -> Result<Self, KottwitzError> {
        let g = a.g();
        let classes = g.involution_classes();
        let rho: Vec<Vec<i64>> = classes.iter().map(|&k| rho_character(g, &[k])).collect::<Result<_, _>>()?;
        let total = rho_character(g, &classes)?;
        let sum: Vec<i64> = (0..total.len()).map(|j| rho.iter().map(|r| r[j]).sum()).collect();
        if sum != total {
            return Err(KottwitzError::Relation("ρ_I is not the sum of the ρ_𝒞".into()));
        }
        let decompose = |f: &[i64]| {
            a.table.decompose_int(f).map_err(|e| KottwitzError::Relation(format!("ρ does not decompose: {e}")))
        };
        let mult = rho.iter().map(|r| decompose(r)).collect::<Result<Vec<_>, _>>()?;
        let total_mult = decompose(&total)?;
        if mult.iter().flatten().chain(&total_mult).any(|&m| m < 0) {
            return Err(KottwitzError::Relation("negative multiplicity in ρ".into()));
        }
        Ok(RhoData { classes, rho, mult, total, total_mult })
    }

    /// `⟨ρ, [C]⟩` for a decomposition `m` of `ρ`.
    pub fn cell_pairing(a: &Analysis, m: &[i64], cell: usize) -> i64 {
        m.iter().zip(&a.cell_chars.multiplicities[cell]).map(|(x, y)| x * y).sum()
    }
}

fn exceeds(x: &An, y: &An) -> bool {
    let mut d = x.clone();
    d.sub_assign_ref(y);
    d.sign() == Ordering::Greater
}

fn class_count(g: &CoxeterGroup, elements: &[usize], class: usize) -> usize {
    elements.iter().filter(|&&w| g.class_of(w) == class).count()
}

fn involution_classes_in(g: &CoxeterGroup, elements: &[usize]) -> BTreeSet<usize> {
    elements.iter().filter(|&&w| g.is_involution(w)).map(|&w| g.class_of(w)).collect()
}

fn class_label(g: &CoxeterGroup, class: usize) -> String {
    g.word_string(g.classes()[class].rep)
}

const EQUAL_ONLY: &str = "stated for equal parameters";

/// `T_𝒞 = Σ_{w∈𝒞} T_w` and `Σ_{w∈𝒞} (−1)^{ℓ(w)} T_w` commute with every
/// `T_s`, for every union `𝒞` of involution classes (all unions when there
/// are at most [`MAX_UNION_CLASSES`] involution classes, single classes and
/// the full union otherwise).
pub fn check_centrality(a: &Analysis) -> Check {
    let g = a.g();
    let alg = a.kl.algebra();
    let classes = g.involution_classes();
    let unions: Vec<Vec<usize>> = if classes.len() <= MAX_UNION_CLASSES {
        (1u32..1 << classes.len())
            .map(|m| (0..classes.len()).filter(|&i| m >> i & 1 == 1).map(|i| classes[i]).collect())
            .collect()
    } else {
        classes.iter().map(|&k| vec![k]).chain(std::iter::once(classes.clone())).collect()
    };
    let mut failures = Vec::new();
    let mut cases = 0;
    for u in &unions {
        for signed in [false, true] {
            cases += 1;
            let h = alg
                .central_involution_sum(u, |w| if signed && g.length(w) % 2 == 1 { -1 } else { 1 })
                .expect("involution classes");
            let bad = alg.non_commuting_generators(&h);
            if !bad.is_empty() {
                let names: Vec<String> = u.iter().map(|&k| class_label(g, k)).collect();
                failures.push(format!("{{{}}} signed={signed} fails for s{:?}", names.join(","), bad));
            }
        }
    }
    Check::from_failures("lemma.centrality", cases, failures)
}

pub const MAX_UNION_CLASSES: usize = 12;

/// `(|Cell_LR|, |smooth cells|)` for the equal-parameter rows of the
/// published table, keyed by type label.
pub fn table1_expected(t: IrreducibleType) -> Option<(usize, usize)> {
    use IrreducibleType::*;
    Some(match t {
        I2(m) if m >= 5 => (3, 2),
        B(3) => (6, 4),
        B(4) => (10, 5),
        B(5) => (16, 6),
        B(6) => (26, 10),
        B(7) => (40, 12),
        B(8) => (60, 15),
        D(4) => (11, 10),
        D(5) => (14, 12),
        D(6) => (27, 22),
        D(7) => (35, 25),
        D(8) => (60, 40),
        E(6) => (17, 14),
        E(7) => (35, 24),
        E(8) => (46, 23),
        F4 => (11, 8),
        H(3) => (7, 4),
        H(4) => (13, 6),
        _ => return None,
    })
}

pub fn check_table1(a: &Analysis) -> Check {
    const NAME: &str = "table1.smooth_counts";
    if !a.equal_parameters() {
        return Check::skipped(NAME, EQUAL_ONLY);
    }
    let Some(expected) = a.g().system().irreducible_type().and_then(table1_expected) else {
        return Check::skipped(NAME, "group is not a row of the table");
    };
    let got = (a.cells.two_sided_cells().len(), a.smooth.iter().filter(|s| s.smooth()).count());
    let inconsistent: Vec<usize> = a.smooth.iter().filter(|s| !s.consistent()).map(|s| s.cell).collect();
    let mut failures = Vec::new();
    if got != expected {
        failures.push(format!("got {got:?}, expected {expected:?}"));
    }
    if !inconsistent.is_empty() {
        failures.push(format!("smoothness characterizations disagree on cells {inconsistent:?}"));
    }
    let mut c = Check::from_failures(NAME, 1, failures);
    if c.passed() {
        c.details = format!("{got:?}");
    }
    c
}

/// `⟨ρ_𝒞, [C]⟩ = |𝒞 ∩ C|` for every involution class and left cell.
pub fn check_kottwitz(a: &Analysis, rho: &RhoData) -> Check {
    const NAME: &str = "kottwitz.conjecture";
    if !a.equal_parameters() {
        return Check::skipped(NAME, EQUAL_ONLY);
    }
    let g = a.g();
    let mut failures = Vec::new();
    let mut cases = 0;
    for (i, &k) in rho.classes.iter().enumerate() {
        for (c, cell) in a.cells.left_cells().iter().enumerate() {
            cases += 1;
            let lhs = RhoData::cell_pairing(a, &rho.mult[i], c);
            let rhs = class_count(g, cell, k) as i64;
            if lhs != rhs {
                failures.push(format!("class {} cell ∋ {}: {lhs} ≠ {rhs}", class_label(g, k), g.word_string(cell[0])));
            }
        }
    }
    Check::from_failures(NAME, cases, failures)
}

/// `⟨ρ_I, [C]⟩ = |I ∩ C|`.
pub fn check_marberg(a: &Analysis, rho: &RhoData) -> Check {
    const NAME: &str = "marberg.total";
    if !a.equal_parameters() {
        return Check::skipped(NAME, EQUAL_ONLY);
    }
    let g = a.g();
    let failures = a
        .cells
        .left_cells()
        .iter()
        .enumerate()
        .filter_map(|(c, cell)| {
            let lhs = RhoData::cell_pairing(a, &rho.total_mult, c);
            let rhs = cell.iter().filter(|&&w| g.is_involution(w)).count() as i64;
            (lhs != rhs).then(|| format!("cell ∋ {}: {lhs} ≠ {rhs}", g.word_string(cell[0])))
        })
        .collect();
    Check::from_failures(NAME, a.cells.left_cells().len(), failures)
}

fn same_touched_classes(a: &Analysis, name: &str) -> Check {
    let g = a.g();
    let mut failures = Vec::new();
    for t in 0..a.cells.two_sided_cells().len() {
        let lefts = a.cells.left_cells_in(t);
        let sets: Vec<BTreeSet<usize>> =
            lefts.iter().map(|&c| involution_classes_in(g, &a.cells.left_cells()[c])).collect();
        if sets.iter().any(|s| *s != sets[0]) {
            failures.push(format!(
                "two-sided cell ∋ {}: involution classes per left cell {:?}",
                g.word_string(a.cells.two_sided_cells()[t][0]),
                sets
            ));
        }
    }
    Check::from_failures(name, a.cells.two_sided_cells().len(), failures)
}

/// The set of involution classes meeting a left cell depends only on the
/// two-sided cell.
pub fn check_theorem_a(a: &Analysis) -> Check {
    if !a.equal_parameters() {
        return Check::skipped("thm.a", EQUAL_ONLY);
    }
    same_touched_classes(a, "thm.a")
}

/// The same statement for a non-constant weight function.
pub fn check_unequal_conjecture(a: &Analysis) -> Check {
    if a.equal_parameters() {
        return Check::skipped("conj.unequal", "weight function is constant");
    }
    same_touched_classes(a, "conj.unequal")
}

/// The involutions of a smooth two-sided cell are conjugate.
pub fn check_theorem_b(a: &Analysis) -> Check {
    let g = a.g();
    let mut failures = Vec::new();
    let mut cases = 0;
    for s in a.smooth.iter().filter(|s| s.smooth()) {
        cases += 1;
        let cell = &a.cells.two_sided_cells()[s.cell];
        let classes = involution_classes_in(g, cell);
        if classes.len() != 1 {
            failures.push(format!("smooth cell ∋ {} meets {} involution classes", g.word_string(cell[0]), classes.len()));
        }
    }
    Check::from_failures("thm.b", cases, failures)
}

pub fn is_classical(g: &CoxeterGroup) -> bool {
    matches!(
        g.system().irreducible_type(),
        Some(IrreducibleType::A(_) | IrreducibleType::B(_) | IrreducibleType::D(_))
    )
}

/// `|𝒞 ∩ C| = |𝒞 ∩ C′|` for left cells in one two-sided cell (classical types).
pub fn check_theorem_c(a: &Analysis) -> Check {
    const NAME: &str = "thm.c";
    if !a.equal_parameters() {
        return Check::skipped(NAME, EQUAL_ONLY);
    }
    let g = a.g();
    if !is_classical(g) {
        return Check::skipped(NAME, "stated for types A, B, D");
    }
    let mut failures = Vec::new();
    let mut cases = 0;
    for t in 0..a.cells.two_sided_cells().len() {
        let lefts = a.cells.left_cells_in(t);
        for &k in &g.involution_classes() {
            cases += 1;
            let counts: Vec<usize> = lefts.iter().map(|&c| class_count(g, &a.cells.left_cells()[c], k)).collect();
            if counts.iter().any(|&x| x != counts[0]) {
                failures.push(format!("class {} counts {counts:?}", class_label(g, k)));
            }
        }
    }
    Check::from_failures(NAME, cases, failures)
}

/// `n_d = ±1`, `d² = 1` and exactly one distinguished element per left cell.
pub fn p_spot_failures(a: &Analysis) -> Vec<String> {
    let g = a.g();
    let one = An::from_int(1);
    let mut failures = Vec::new();
    for &d in &a.leading.distinguished {
        let n = &a.leading.n[d];
        if *n != one && *n != one.neg_ref() {
            failures.push(format!("n_{} = {n}", g.word_string(d)));
        }
        if !g.is_involution(d) {
            failures.push(format!("{} is distinguished but not an involution", g.word_string(d)));
        }
    }
    for cell in a.cells.left_cells() {
        let k = cell.iter().filter(|w| a.leading.distinguished.binary_search(w).is_ok()).count();
        if k != 1 {
            failures.push(format!("left cell ∋ {} has {k} distinguished elements", g.word_string(cell[0])));
        }
    }
    failures
}

pub fn check_p_spot(a: &Analysis) -> Check {
    Check::from_failures(
        "structure.p_spot",
        a.leading.distinguished.len() + a.cells.left_cells().len(),
        p_spot_failures(a),
    )
}

/// The distinguished element of each left cell (requires the spot checks).
fn distinguished_of(a: &Analysis) -> Vec<usize> {
    a.cells
        .left_cells()
        .iter()
        .map(|cell| *cell.iter().find(|w| a.leading.distinguished.binary_search(w).is_ok()).expect("one per cell"))
        .collect()
}

/// Sums of `c_{w,χ}` over `𝒞 ∩ C`, indexed `[C][class][χ]`, for the
/// involution classes.
fn cell_class_sums(a: &Analysis, classes: &[usize]) -> Vec<Vec<Vec<An>>> {
    let g = a.g();
    let nchars = a.table.len();
    let mut pos = vec![usize::MAX; g.classes().len()];
    for (i, &k) in classes.iter().enumerate() {
        pos[k] = i;
    }
    let mut out = vec![vec![vec![An::zero_elem(); nchars]; classes.len()]; a.cells.left_cells().len()];
    for (chi, row) in a.leading.c.iter().enumerate() {
        for (w, x) in row.iter().enumerate() {
            if g.is_involution(w) && !x.is_zero_elem() {
                out[a.cells.left_cell_of(w)][pos[g.class_of(w)]][chi].add_assign_ref(x);
            }
        }
    }
    out
}

/// `⟨[C],χ⟩ Σ_{𝒞∩𝒢} c_{w,χ} = χ(1) Σ_{𝒞∩C} c_{w,χ}` for every two-sided
/// cell `𝒢`, left cell `C ⊆ 𝒢`, involution class `𝒞` and `χ ∈ Irr(W)`;
/// the identity is additive in `𝒞`, so the full union is covered too.
pub fn check_gcc(a: &Analysis) -> Check {
    const NAME: &str = "identity.GCC";
    if !a.equal_parameters() && !p_spot_failures(a).is_empty() {
        return Check::skipped(NAME, "unequal parameters and the P spot checks fail");
    }
    let g = a.g();
    let classes = g.involution_classes();
    let sums = cell_class_sums(a, &classes);
    let mut failures = Vec::new();
    let mut cases = 0;
    for t in 0..a.cells.two_sided_cells().len() {
        let lefts = a.cells.left_cells_in(t);
        for k in 0..classes.len() {
            for chi in 0..a.table.len() {
                let mut big = An::zero_elem();
                for &c in &lefts {
                    big.add_assign_ref(&sums[c][k][chi]);
                }
                for &c in &lefts {
                    cases += 1;
                    let lhs = big.mul_ref(&An::from_int(a.multiplicity(c, chi)));
                    let rhs = sums[c][k][chi].mul_ref(&An::from_int(a.table.degree(chi) as i64));
                    if lhs != rhs {
                        failures.push(format!(
                            "cell ∋ {}, class {}, χ{chi}: {lhs} ≠ {rhs}",
                            g.word_string(a.cells.left_cells()[c][0]),
                            class_label(g, classes[k])
                        ));
                    }
                }
            }
        }
    }
    Check::from_failures(NAME, cases, failures)
}

/// For smooth `𝒢 = Irr_𝒢 {χ}` and `d ∈ 𝒢 ∩ 𝒟`:
/// `Σ_{𝒞∩𝒢} c_{w,χ}` is `χ(1) n_d` if `d ∈ 𝒞` and `0` otherwise.
pub fn check_gcc_smooth(a: &Analysis) -> Check {
    const NAME: &str = "identity.smooth";
    if !p_spot_failures(a).is_empty() {
        return Check::skipped(NAME, "the P spot checks fail");
    }
    let g = a.g();
    let classes = g.involution_classes();
    let sums = cell_class_sums(a, &classes);
    let dist = distinguished_of(a);
    let mut failures = Vec::new();
    let mut cases = 0;
    for s in a.smooth.iter().filter(|s| s.smooth()) {
        let chi = a.families.members[s.cell][0];
        let lefts = a.cells.left_cells_in(s.cell);
        for (k, &class) in classes.iter().enumerate() {
            let mut big = An::zero_elem();
            for &c in &lefts {
                big.add_assign_ref(&sums[c][k][chi]);
            }
            for &c in &lefts {
                cases += 1;
                let d = dist[c];
                let expected = if g.class_of(d) == class {
                    a.leading.n[d].mul_ref(&An::from_int(a.table.degree(chi) as i64))
                } else {
                    An::zero_elem()
                };
                if big != expected {
                    failures.push(format!("d = {}, class {}: {big} ≠ {expected}", g.word_string(d), class_label(g, class)));
                }
            }
        }
    }
    Check::from_failures(NAME, cases, failures)
}

/// `|𝒞 ∩ 𝒢| = χ(1) |𝒞 ∩ C|` for the special `χ` of `𝒢` (classical types).
pub fn check_gcc_classical(a: &Analysis) -> Check {
    const NAME: &str = "identity.classical";
    if !a.equal_parameters() {
        return Check::skipped(NAME, EQUAL_ONLY);
    }
    let g = a.g();
    if !is_classical(g) {
        return Check::skipped(NAME, "stated for types A, B, D");
    }
    let mut failures = Vec::new();
    let mut cases = 0;
    for (t, cell) in a.cells.two_sided_cells().iter().enumerate() {
        let sp = a.special_in(t);
        if sp.len() != 1 {
            failures.push(format!("two-sided cell ∋ {} has {} special characters", g.word_string(cell[0]), sp.len()));
            continue;
        }
        let deg = a.table.degree(sp[0]) as usize;
        for &k in &g.involution_classes() {
            let big = class_count(g, cell, k);
            for c in a.cells.left_cells_in(t) {
                cases += 1;
                let small = class_count(g, &a.cells.left_cells()[c], k);
                if big != deg * small {
                    failures.push(format!("class {}: {big} ≠ {deg}·{small}", class_label(g, k)));
                }
            }
        }
    }
    Check::from_failures(NAME, cases, failures)
}

/// `Σ_W c_{w,χ} c_{w,χ′} = δ f_χ χ(1)` and, per left cell,
/// `Σ_C c_{w,χ} c_{w,χ′} = δ f_χ ⟨[C],χ⟩`.
pub fn check_orthogonality(a: &Analysis) -> Check {
    let g = a.g();
    let c = &a.leading.c;
    let nchars = a.table.len();
    let ncells = a.cells.left_cells().len();
    // per[C][χ][χ′] for χ′ ≤ χ
    let mut per = vec![vec![Vec::new(); nchars]; ncells];
    for (cell, block) in a.cells.left_cells().iter().zip(per.iter_mut()) {
        for (chi, row) in block.iter_mut().enumerate() {
            *row = (0..=chi)
                .map(|chi2| {
                    let mut s = An::zero_elem();
                    for &w in cell {
                        if !c[chi][w].is_zero_elem() && !c[chi2][w].is_zero_elem() {
                            s.add_assign_ref(&c[chi][w].mul_ref(&c[chi2][w]));
                        }
                    }
                    s
                })
                .collect();
        }
    }
    let mut failures = Vec::new();
    let mut cases = 0;
    for chi in 0..nchars {
        for chi2 in 0..=chi {
            cases += 1;
            let mut total = An::zero_elem();
            for block in &per {
                total.add_assign_ref(&block[chi][chi2]);
            }
            let expected = if chi == chi2 {
                a.leading.f[chi].mul_ref(&An::from_int(a.table.degree(chi) as i64))
            } else {
                An::zero_elem()
            };
            if total != expected {
                failures.push(format!("global (χ{chi}, χ{chi2}): {total} ≠ {expected}"));
            }
            for (cell, block) in per.iter().enumerate() {
                cases += 1;
                let expected = if chi == chi2 {
                    a.leading.f[chi].mul_ref(&An::from_int(a.multiplicity(cell, chi)))
                } else {
                    An::zero_elem()
                };
                if block[chi][chi2] != expected {
                    failures.push(format!(
                        "cell ∋ {} (χ{chi}, χ{chi2}): {} ≠ {expected}",
                        g.word_string(a.cells.left_cells()[cell][0]),
                        block[chi][chi2]
                    ));
                }
            }
        }
    }
    Check::from_failures("leading.orthogonality", cases, failures)
}

/// `c_{d,χ} = n_d ⟨[C],χ⟩` and `Σ_χ f_χ⁻¹ ⟨[C],χ⟩ = 1` at the distinguished
/// element `d` of every left cell `C`.
pub fn check_distinguished(a: &Analysis) -> Check {
    const NAME: &str = "leading.distinguished";
    if !p_spot_failures(a).is_empty() {
        return Check::skipped(NAME, "the P spot checks fail");
    }
    let g = a.g();
    let dist = distinguished_of(a);
    let mut failures = Vec::new();
    let mut cases = 0;
    for (c, &d) in dist.iter().enumerate() {
        let mut s = An::zero_elem();
        for chi in 0..a.table.len() {
            cases += 1;
            let m = An::from_int(a.multiplicity(c, chi));
            let expected = a.leading.n[d].mul_ref(&m);
            if a.leading.c[chi][d] != expected {
                failures.push(format!("c_({},χ{chi}) = {} ≠ {expected}", g.word_string(d), a.leading.c[chi][d]));
            }
            if !m.is_zero_elem() {
                s.add_assign_ref(&m.mul_ref(&a.leading.f[chi].inv().expect("f > 0")));
            }
        }
        cases += 1;
        if s != An::from_int(1) {
            failures.push(format!("Σ f⁻¹⟨[C],χ⟩ = {s} at d = {}", g.word_string(d)));
        }
    }
    Check::from_failures(NAME, cases, failures)
}

/// Exactly one special character per family, and
/// `(−1)^{a_χ+ℓ(w)} c_{w,χ} > 0` for the special `χ` of `𝒢` and all
/// `w ∈ C ∩ C⁻¹`, `C ⊆ 𝒢`.
pub fn check_diamonds(a: &Analysis) -> Check {
    const NAME: &str = "leading.diamond";
    if !a.equal_parameters() {
        return Check::skipped(NAME, EQUAL_ONLY);
    }
    let g = a.g();
    let mut failures = Vec::new();
    let mut cases = 0;
    for t in 0..a.cells.two_sided_cells().len() {
        cases += 1;
        let sp = a.special_in(t);
        if sp.len() != 1 {
            failures.push(format!("family {t} has {} special characters", sp.len()));
            continue;
        }
        let chi = sp[0];
        for c in a.cells.left_cells_in(t) {
            for &w in &a.cells.left_cells()[c] {
                if a.cells.left_cell_of(g.inverse(w)) != c {
                    continue;
                }
                cases += 1;
                let x = &a.leading.c[chi][w];
                let x = if (a.leading.a[chi] + g.length(w) as i64) % 2 == 1 { x.neg_ref() } else { x.clone() };
                if x.sign() != Ordering::Greater {
                    failures.push(format!("signed c_({},χ{chi}) = {x}", g.word_string(w)));
                }
            }
        }
    }
    Check::from_failures(NAME, cases, failures)
}

/// `⟨[C],[C′]⟩ = |C′ ∩ C⁻¹|` for all pairs, and the number of involutions
/// in `C` equals the number of constituents of `[C]`.
pub fn check_cell_pairings(a: &Analysis) -> Check {
    let g = a.g();
    let cells = a.cells.left_cells();
    let mut failures = Vec::new();
    for (c, cell) in cells.iter().enumerate() {
        for (c2, cell2) in cells.iter().enumerate() {
            let lhs = a.cell_chars.pairing(c, c2);
            let rhs = inverse_intersection(g, cell, cell2) as i64;
            if lhs != rhs {
                failures.push(format!("cells ∋ {}, {}: {lhs} ≠ {rhs}", g.word_string(cell[0]), g.word_string(cell2[0])));
            }
        }
    }
    Check::from_failures("structure.pairing", cells.len() * cells.len(), failures)
}

pub fn check_involution_counts(a: &Analysis) -> Check {
    let g = a.g();
    let cells = a.cells.left_cells();
    let failures = cells
        .iter()
        .enumerate()
        .filter_map(|(c, cell)| {
            let inv = cell.iter().filter(|&&w| g.is_involution(w)).count() as i64;
            let constituents: i64 = a.cell_chars.multiplicities[c].iter().sum();
            (inv != constituents).then(|| format!("cell ∋ {}: {inv} ≠ {constituents}", g.word_string(cell[0])))
        })
        .collect();
    Check::from_failures("structure.involution_count", cells.len(), failures)
}

/// `Cw₀` is a left cell with `[Cw₀] = [C] ⊗ ε`, families are dual, and,
/// when `w₀` is central, `ρ_{𝒞w₀} = ρ_𝒞 ⊗ ε`.
pub fn check_w0_duality(a: &Analysis, rho: &RhoData) -> Check {
    let g = a.g();
    let w0 = g.longest();
    let mut failures = w0_duality_failures(g, &a.cells, &a.cell_chars, &a.families, &a.table);
    let mut cases = a.cells.left_cells().len() + a.cells.two_sided_cells().len();
    let central = (0..g.rank()).all(|s| g.lmul(s, w0) == g.rmul(w0, s));
    if central {
        let eps: Vec<i64> = a.table.class_reps().iter().map(|&w| if g.length(w) % 2 == 0 { 1 } else { -1 }).collect();
        for (i, &k) in rho.classes.iter().enumerate() {
            cases += 1;
            let dual = g.class_of(g.mul(g.classes()[k].rep, w0));
            let j = rho.classes.iter().position(|&x| x == dual);
            let twisted: Vec<i64> = rho.rho[i].iter().zip(&eps).map(|(x, e)| x * e).collect();
            if j.map(|j| &rho.rho[j]) != Some(&twisted) {
                failures.push(format!("ρ of class {}·w0 ≠ ρ ⊗ ε", class_label(g, k)));
            }
        }
    }
    let mut c = Check::from_failures("duality.w0", cases, failures);
    if c.passed() && !central {
        c.details.push_str(" (w0 not central: ρ twist not applicable)");
    }
    c
}

/// For every standard parabolic `W′`:
/// `⟨ρ_{𝒞∩W′}, χ′⟩ ≤ ⟨ρ_𝒞, Ind χ′⟩` for all `χ′ ∈ Irr(W′)`, and
/// `⟨ρ_𝒞, χ⟩ ≤ ⟨Ind ρ_{𝒞′}, χ⟩` for every involution class `𝒞′` of `W′`
/// with `𝒞′ ⊆ 𝒞`.
pub fn check_restriction_inequalities(a: &Analysis, rho: &RhoData) -> Check {
    let g = a.g();
    let mut failures = Vec::new();
    let mut cases = 0;
    let rho_f: Vec<Vec<An>> = rho.rho.iter().map(|r| int_class_function(r)).collect();
    for mask in 1u32..1 << g.rank() {
        let sub = match Parabolic::new(g, mask) {
            Ok(s) => s,
            Err(e) => {
                failures.push(format!("parabolic {mask:#b}: {e}"));
                continue;
            }
        };
        let h = &sub.group;
        let sub_inv = h.involution_classes();
        for (i, &k) in rho.classes.iter().enumerate() {
            let inside: Vec<usize> = sub_inv.iter().copied().filter(|&k2| g.class_of(sub.embed[h.classes()[k2].rep]) == k).collect();
            if inside.is_empty() {
                continue;
            }
            let rho_sub = match rho_character(h, &inside) {
                Ok(r) => int_class_function(&r),
                Err(e) => {
                    failures.push(format!("parabolic {mask:#b}: {e}"));
                    continue;
                }
            };
            for chi2 in 0..sub.table.len() {
                cases += 1;
                let lhs = sub.table.inner(&rho_sub, sub.table.row(chi2));
                let rhs = a.table.inner(&rho_f[i], &induce(g, &a.table, &sub, sub.table.row(chi2)));
                if exceeds(&lhs, &rhs) {
                    failures.push(format!("W′ = {mask:#b}, class {}, χ′{chi2}: {lhs} > {rhs}", class_label(g, k)));
                }
            }
            for &k2 in &inside {
                let r2 = match rho_character(h, &[k2]) {
                    Ok(r) => int_class_function(&r),
                    Err(e) => {
                        failures.push(format!("parabolic {mask:#b}: {e}"));
                        continue;
                    }
                };
                let ind = induce(g, &a.table, &sub, &r2);
                for chi in 0..a.table.len() {
                    cases += 1;
                    let lhs = a.table.inner(&rho_f[i], a.table.row(chi));
                    let rhs = a.table.inner(&ind, a.table.row(chi));
                    if exceeds(&lhs, &rhs) {
                        failures.push(format!("W′ = {mask:#b}, class {}, χ{chi}: {lhs} > {rhs}", class_label(g, k)));
                    }
                }
            }
        }
    }
    Check::from_failures("ineq.restriction", cases, failures)
}

/// The case-split construction agrees with `Ind_{C_W(σ)}(ε_σ)` on every
/// involution class.
pub fn check_rho_constructions(a: &Analysis, rho: &RhoData) -> Check {
    let g = a.g();
    let failures = rho
        .classes
        .iter()
        .zip(&rho.rho)
        .filter_map(|(&k, r)| match rho_via_induction(g, k) {
            Ok(ind) if ind == *r => None,
            Ok(ind) => Some(format!("class {}: {r:?} ≠ {ind:?}", class_label(g, k))),
            Err(e) => Some(format!("class {}: {e}", class_label(g, k))),
        })
        .collect();
    Check::from_failures("rho.constructions", rho.classes.len(), failures)
}

/// For `B_n` with `φ(t) = b`, `φ(sᵢ) = a`: all cells are smooth, and all
/// `f_χ = 1`, exactly when `b ∉ {a, 2a, …, (n−1)a}`.
pub fn check_typeb_smoothness(a: &Analysis) -> Check {
    const NAME: &str = "unequal.smoothness";
    let g = a.g();
    let Some(IrreducibleType::B(n)) = g.system().irreducible_type() else {
        return Check::skipped(NAME, "stated for type B");
    };
    let (b, w) = (a.phi.get(0), a.phi.get(1));
    let predicted = !(1..n as i64).any(|k| b == k * w);
    let all_smooth = a.smooth.iter().all(|s| s.smooth());
    let all_f_one = (0..a.table.len()).all(|chi| a.leading.f_is_one(chi));
    let mut failures = Vec::new();
    if all_smooth != predicted {
        failures.push(format!("all cells smooth = {all_smooth}, predicted {predicted}"));
    }
    if all_f_one != predicted {
        failures.push(format!("all f = 1 is {all_f_one}, predicted {predicted}"));
    }
    let mut c = Check::from_failures(NAME, 2, failures);
    if c.passed() {
        c.details = format!("b = {b}, a = {w}: all smooth = {all_smooth}");
    }
    c
}
