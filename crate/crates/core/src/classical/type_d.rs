use super::{ClassicalError, Partition};
use crate::analysis::Analysis;
use crate::characters::{b_invariants, induce, CharacterTable, Parabolic};
use crate::coxeter::{signed_permutation, CoxeterGroup, IrreducibleType};
use crate::kottwitz::rho_character;
use crate::numfield::AlgebraicNumber;
use serde::Serialize;

/// The pair `χ^{α,±1}` of a type `D_n` table (`n` even, `α ⊢ n/2`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PmPair {
    pub alpha: Partition,
    pub plus: usize,
    pub minus: usize,
    /// `ℓ(w_{2α*})`
    pub length: usize,
}

fn rank_d(g: &CoxeterGroup) -> Result<usize, ClassicalError> {
    match g.system().irreducible_type() {
        Some(IrreducibleType::D(n)) => Ok(n),
        _ => Err(ClassicalError::WrongType("D")),
    }
}

/// The graph automorphism swapping `u` and `s₁`.
pub fn theta(g: &CoxeterGroup, w: usize) -> usize {
    let word: Vec<usize> = g
        .word(w)
        .iter()
        .map(|&s| match s {
            0 => 1,
            1 => 0,
            s => s as usize,
        })
        .collect();
    g.element_from_word(&word)
}

/// `χ ∘ θ` as a character index.
pub fn theta_character(g: &CoxeterGroup, table: &CharacterTable, chi: usize) -> usize {
    let f: Vec<AlgebraicNumber> =
        table.class_reps().iter().map(|&w| table.value(chi, g.class_of(theta(g, w))).clone()).collect();
    table.index_of(&f).expect("θ permutes Irr(W)")
}

/// Generators of the Young subgroup with the given block sizes, placed on
/// the points `offset+1, offset+2, …` (`sᵢ` has index `i`).
pub fn young_mask(blocks: &[usize], offset: usize) -> u32 {
    let mut mask = 0;
    let mut q = offset + 1;
    for &p in blocks {
        for i in q..q + p - 1 {
            mask |= 1 << i;
        }
        q += p;
    }
    mask
}

/// `2α*`.
fn doubled_conjugate(alpha: &Partition) -> Vec<usize> {
    alpha.conjugate().parts().iter().map(|p| 2 * p).collect()
}

/// The unique constituent `ψ` of `Ind_{W_J}^W ε` with `b_ψ = ℓ(w_J)`.
fn truncated_sign_induction(
    g: &CoxeterGroup,
    table: &CharacterTable,
    b: &[i64],
    mask: u32,
) -> Result<(usize, usize), ClassicalError> {
    let sub = Parabolic::new(g, mask).map_err(|e| ClassicalError::Engine(e.to_string()))?;
    let sign = sub.table.sign_values(&sub.group);
    let m = table.decompose(&induce(g, table, &sub, &sign)).map_err(|e| ClassicalError::Engine(e.to_string()))?;
    let len = g.length(sub.longest_in_parent());
    let hits: Vec<usize> = (0..m.len()).filter(|&x| m[x] > 0 && b[x] == len as i64).collect();
    match hits.as_slice() {
        [x] => Ok((*x, len)),
        _ => Err(ClassicalError::Labelling(format!("{} constituents of b = {len} for J = {mask:#b}", hits.len()))),
    }
}

/// `χ^{α,+1}` as the truncated induction of the sign character from
/// `H_{2α*}`, and `χ^{α,−1}` as its `θ`-conjugate; `f = 1` and
/// `a = b = ℓ(w_{2α*})` are verified for both.
pub fn pm_pairs(a: &Analysis) -> Result<Vec<PmPair>, ClassicalError> {
    let g = a.g();
    let n = rank_d(g)?;
    if n % 2 == 1 {
        return Err(ClassicalError::WrongType("D_n with n even"));
    }
    let mut out = Vec::new();
    for alpha in Partition::all(n / 2) {
        let mask = young_mask(&doubled_conjugate(&alpha), 0);
        let (plus, length) = truncated_sign_induction(g, &a.table, &a.b, mask)?;
        let minus = theta_character(g, &a.table, plus);
        if minus == plus {
            return Err(ClassicalError::Labelling(format!("χ^({alpha},+) is θ-stable")));
        }
        for chi in [plus, minus] {
            if !a.leading.f_is_one(chi) || a.leading.a[chi] != length as i64 || a.b[chi] != length as i64 {
                return Err(ClassicalError::Labelling(format!("χ{chi} for {alpha}: f, a or b is off")));
            }
        }
        out.push(PmPair { alpha, plus, minus, length });
    }
    let mut paired: Vec<usize> = out.iter().flat_map(|p| [p.plus, p.minus]).collect();
    paired.sort_unstable();
    let unstable: Vec<usize> = (0..a.table.len()).filter(|&x| theta_character(g, &a.table, x) != x).collect();
    if paired != unstable {
        return Err(ClassicalError::Labelling("± characters are not the θ-unstable ones".into()));
    }
    Ok(out)
}

/// `σ = s₁s₃⋯s_{n−1}`, a representative of `𝒞₀′`.
pub fn sigma_zero(g: &CoxeterGroup) -> Result<usize, ClassicalError> {
    let n = rank_d(g)?;
    Ok(g.element_from_word(&(1..n).step_by(2).collect::<Vec<_>>()))
}

/// Failures of `ρ_{𝒞₀′} = Σ_α χ^{α,+1}` and `ρ_{θ(𝒞₀′)} = Σ_α χ^{α,−1}`.
pub fn sign_theorem_failures(a: &Analysis, pairs: &[PmPair]) -> Result<Vec<String>, ClassicalError> {
    let g = a.g();
    let sigma = sigma_zero(g)?;
    let mut failures = Vec::new();
    for (name, rep, pick) in [("𝒞₀′", sigma, true), ("θ(𝒞₀′)", theta(g, sigma), false)] {
        let rho = rho_character(g, &[g.class_of(rep)]).map_err(|e| ClassicalError::Engine(e.to_string()))?;
        let m = a.table.decompose_int(&rho).map_err(|e| ClassicalError::Engine(e.to_string()))?;
        let mut expected = vec![0; a.table.len()];
        for p in pairs {
            expected[if pick { p.plus } else { p.minus }] += 1;
        }
        if m != expected {
            failures.push(format!("ρ_{name} = {m:?}, expected {expected:?}"));
        }
    }
    if g.class_of(sigma) == g.class_of(theta(g, sigma)) {
        failures.push("𝒞₀′ is θ-stable".into());
    }
    Ok(failures)
}

/// For `W′ = W_{n−2}′ × ⟨s_{n−1}⟩` and `α′ ⊢ (n−2)/2`: the induced character
/// `Ind(χ^{α′,+1} ⊠ ε)` contains `χ^{α,+1}` exactly for `α = α′ + □`, never
/// `χ^{α,−1}`, and otherwise only `θ`-stable characters.
pub fn branching_failures(a: &Analysis, pairs: &[PmPair]) -> Result<(usize, Vec<String>), ClassicalError> {
    let g = a.g();
    let n = rank_d(g)?;
    if n < 4 {
        return Ok((0, Vec::new()));
    }
    let wmask = ((1u32 << (n - 2)) - 1) | 1 << (n - 1);
    let sub = Parabolic::new(g, wmask).map_err(|e| ClassicalError::Engine(e.to_string()))?;
    let b_sub = b_invariants(&sub.group, &sub.table).map_err(|e| ClassicalError::Engine(e.to_string()))?;
    let mut failures = Vec::new();
    let mut cases = 0;
    for alpha1 in Partition::all((n - 2) / 2) {
        // inside W′ the generator s_{n−1} has index n−2
        let hmask = young_mask(&doubled_conjugate(&alpha1), 0) | 1 << (n - 2);
        let (chi1, _) = truncated_sign_induction(&sub.group, &sub.table, &b_sub, hmask)?;
        let ind = induce(g, &a.table, &sub, sub.table.row(chi1));
        let m = a.table.decompose(&ind).map_err(|e| ClassicalError::Engine(e.to_string()))?;
        let grown = alpha1.add_box();
        for p in pairs {
            cases += 1;
            let want = grown.contains(&p.alpha) as i64;
            if m[p.plus] != want {
                failures.push(format!("⟨Ind χ^({alpha1},+)⊠ε, χ^({},+)⟩ = {}, expected {want}", p.alpha, m[p.plus]));
            }
            if m[p.minus] != 0 {
                failures.push(format!("⟨Ind χ^({alpha1},+)⊠ε, χ^({},−)⟩ = {}", p.alpha, m[p.minus]));
            }
        }
        for (chi, &x) in m.iter().enumerate() {
            let in_pair = pairs.iter().any(|p| p.plus == chi || p.minus == chi);
            if x > 0 && !in_pair && theta_character(g, &a.table, chi) != chi {
                failures.push(format!("non-extendable χ{chi} among the further terms"));
            }
        }
    }
    Ok((cases, failures))
}

/// `D_n` inside `B_n` via `u = t s₁ t`: the map is an injective homomorphism
/// onto the even signed permutations and `θ` is conjugation by `t`.
pub fn embedding_failures(g: &CoxeterGroup, budget: usize) -> Result<Vec<String>, ClassicalError> {
    let n = rank_d(g)?;
    let bn = CoxeterGroup::from_label(&format!("B{n}"), budget).map_err(|e| ClassicalError::Engine(e.to_string()))?;
    let image = |w: usize| -> usize {
        let word: Vec<usize> = g.word(w).iter().flat_map(|&s| if s == 0 { vec![0, 1, 0] } else { vec![s as usize] }).collect();
        bn.element_from_word(&word)
    };
    let mut failures = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for w in 0..g.order() {
        let x = image(w);
        seen.insert(x);
        if signed_permutation(&bn, x) != signed_permutation(g, w) {
            failures.push(format!("{} has a different signed permutation in B{n}", g.word_string(w)));
        }
        let t_conj = bn.mul(bn.mul(bn.element_from_word(&[0]), x), bn.element_from_word(&[0]));
        if t_conj != image(theta(g, w)) {
            failures.push(format!("θ({}) is not t-conjugation", g.word_string(w)));
        }
    }
    let even = (0..bn.order())
        .filter(|&x| signed_permutation(&bn, x).unwrap().iter().filter(|&&v| v < 0).count() % 2 == 0)
        .count();
    if seen.len() != g.order() || even != g.order() {
        failures.push(format!("image has {} elements, {even} even signed permutations", seen.len()));
    }
    Ok(failures)
}
