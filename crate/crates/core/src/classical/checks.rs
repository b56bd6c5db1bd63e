use super::*;
use crate::analysis::Analysis;
use crate::characters::{b_invariants, int_class_function, j_induce, Parabolic};
use crate::coxeter::{involution_class_reps_classical, signed_permutation, CoxeterGroup, IrreducibleType};
use crate::kottwitz::{Check, RhoData};
use crate::numfield::AlgebraicNumber;

fn rho_index(rho: &RhoData, g: &CoxeterGroup, w: usize) -> usize {
    let k = g.class_of(w);
    rho.classes.iter().position(|&c| c == k).expect("involution class")
}

/// Type `A`: `⟨ρ_j, χ^α⟩ = 1` iff `n − 2j` is the number of odd parts of
/// `α*`, equivalently iff `w_{α*}` lies in the class; `ρ_I = Σ_α χ^α`.
pub fn check_typea_multiplicity(a: &Analysis, rho: &RhoData) -> Check {
    const NAME: &str = "typeA.multiplicity";
    let g = a.g();
    let Some(IrreducibleType::A(_)) = g.system().irreducible_type() else {
        return Check::skipped(NAME, "stated for type A");
    };
    let labels = match label_type_a(g, &a.table) {
        Ok(l) => l,
        Err(e) => return Check::from_failures(NAME, 1, vec![e.to_string()]),
    };
    let reps = involution_class_reps_classical(g).expect("type A");
    let mut failures = Vec::new();
    let mut cases = 0;
    for rep in &reps {
        let m = &rho.mult[rho_index(rho, g, rep.element)];
        for (chi, alpha) in labels.iter().enumerate() {
            cases += 1;
            let want = kottwitz_multiplicity_a(alpha, rep.j) as i64;
            if m[chi] != want {
                failures.push(format!("⟨ρ_{}, χ^{alpha}⟩ = {}, expected {want}", rep.j, m[chi]));
            }
            let longest = g.parabolic(young_mask(alpha.conjugate().parts(), 0) >> 1).longest;
            if (g.class_of(longest) == g.class_of(rep.element)) != (want == 1) {
                failures.push(format!("w_(α*) for α = {alpha} against class σ_{}", rep.j));
            }
        }
    }
    if rho.total_mult.iter().any(|&x| x != 1) {
        failures.push(format!("ρ_I = {:?}", rho.total_mult));
    }
    Check::from_failures(NAME, cases + 1, failures)
}

/// Type `B`: `⟨ρ_{l,j}, χ^{(α,β)}⟩ = binom(d, j₀ − j)` when `χ` is special
/// and `j + l = |β|`, zero otherwise; also `b_χ = 2n(α) + 2n(β) + |β|` and
/// `χ ⊗ ε = χ^{(β*,α*)}`.
pub fn check_typeb_multiplicity(a: &Analysis, rho: &RhoData) -> Check {
    const NAME: &str = "typeB.multiplicity";
    let g = a.g();
    let Some(IrreducibleType::B(_)) = g.system().irreducible_type() else {
        return Check::skipped(NAME, "stated for type B");
    };
    let labels = match label_type_b(g, &a.table) {
        Ok(l) => l,
        Err(e) => return Check::from_failures(NAME, 1, vec![e.to_string()]),
    };
    let reps = involution_class_reps_classical(g).expect("type B");
    let mut failures = Vec::new();
    let mut cases = 0;
    for rep in &reps {
        let m = &rho.mult[rho_index(rho, g, rep.element)];
        for (chi, bp) in labels.iter().enumerate() {
            cases += 1;
            let want = kottwitz_multiplicity_b(bp, rep.l, rep.j) as i64;
            if m[chi] != want {
                failures.push(format!("⟨ρ_({},{}), χ^{bp}⟩ = {}, expected {want}", rep.l, rep.j, m[chi]));
            }
        }
    }
    for (chi, bp) in labels.iter().enumerate() {
        cases += 2;
        if a.b[chi] != bp.b_value() as i64 {
            failures.push(format!("b of {bp} is {}, formula gives {}", a.b[chi], bp.b_value()));
        }
        let twin = a.table.tensor_sign(g, chi);
        if labels[twin] != bp.tensor_sign() {
            failures.push(format!("{bp} ⊗ ε = {}, expected {}", labels[twin], bp.tensor_sign()));
        }
    }
    Check::from_failures(NAME, cases, failures)
}

/// Number of entries of a symbol occurring once, `2d + 1` for the symbols of
/// a family with `2d + 1` singles.
fn family_d(bp: &Bipartition) -> usize {
    let e = bp.symbol(bp.min_m()).entries();
    let singles = e.iter().filter(|x| e.iter().filter(|y| y == x).count() == 1).count();
    (singles - 1) / 2
}

/// Type `B`, equal parameters: `χ` special iff its symbol satisfies
/// `λ_i ≤ μ_i ≤ λ_{i+1}`, and `f_χ = 2^d`.
pub fn check_typeb_f(a: &Analysis) -> Check {
    const NAME: &str = "typeB.f";
    let g = a.g();
    let Some(IrreducibleType::B(_)) = g.system().irreducible_type() else {
        return Check::skipped(NAME, "stated for type B");
    };
    if !a.equal_parameters() {
        return Check::skipped(NAME, "stated for equal parameters");
    }
    let labels = match label_type_b(g, &a.table) {
        Ok(l) => l,
        Err(e) => return Check::from_failures(NAME, 1, vec![e.to_string()]),
    };
    let mut failures = Vec::new();
    for (chi, bp) in labels.iter().enumerate() {
        let inv = bp.invariants();
        if inv.special != a.special[chi] {
            failures.push(format!("{bp}: symbol special = {}, a = b is {}", inv.special, a.special[chi]));
        }
        let d = family_d(bp);
        if inv.special && inv.d != d {
            failures.push(format!("{bp}: d = {} but {} singles", inv.d, 2 * d + 1));
        }
        if a.leading.f[chi] != AlgebraicNumber::from_int(1 << d) {
            failures.push(format!("f of {bp} is {}, expected 2^{d}", a.leading.f[chi]));
        }
    }
    Check::from_failures(NAME, 2 * labels.len(), failures)
}

/// `ψ ⊠ ε_r` on `W_{B_{n−r}} × S_r`, as a row of the parabolic table.
fn product_with_sign(g: &CoxeterGroup, sub: &Parabolic, psi: &Bipartition, r: usize) -> Option<usize> {
    let n = g.rank();
    let values: Vec<i64> = sub
        .table
        .class_reps()
        .iter()
        .map(|&y| {
            let p = signed_permutation(g, sub.embed[y]).expect("type B");
            let head = signed_cycle_type(&p[..n - r]);
            let odd = sub.group.word(y).len() - sub.group.word(y).iter().filter(|&&s| (s as usize) < n - r).count();
            let sign = if odd % 2 == 0 { 1 } else { -1 };
            sign * bn_character(psi, &head)
        })
        .collect();
    sub.table.index_of(&int_class_function(&values))
}

/// Type `B`: every special character is cuspidal (`n = d² + d`, entries
/// `0, 1, …, 2m`), strongly non-cuspidal with a witness `(r, ψ₀)` such that
/// `χ₀` is the truncated induction of `ψ₀ ⊠ ε` from `B_{n−r} × S_r`, or the
/// `ε`-twist of a strongly non-cuspidal one.
pub fn check_typeb_cuspidal(a: &Analysis) -> Check {
    const NAME: &str = "typeB.cuspidal";
    let g = a.g();
    let Some(IrreducibleType::B(n)) = g.system().irreducible_type() else {
        return Check::skipped(NAME, "stated for type B");
    };
    let labels = match label_type_b(g, &a.table) {
        Ok(l) => l,
        Err(e) => return Check::from_failures(NAME, 1, vec![e.to_string()]),
    };
    let mut failures = Vec::new();
    let mut cases = 0;
    for (chi, bp) in labels.iter().enumerate().filter(|(_, bp)| bp.invariants().special) {
        cases += 1;
        let inv = bp.invariants();
        match cuspidality_b(bp) {
            Cuspidality::Cuspidal => {
                if n != inv.d * inv.d + inv.d {
                    failures.push(format!("{bp} cuspidal with d = {}", inv.d));
                }
            }
            Cuspidality::StronglyNonCuspidal { r, psi0 } => {
                let pinv = psi0.invariants();
                if !pinv.special
                    || pinv.d != inv.d
                    || inv.j0 != pinv.j0 + r / 2
                    || bp.beta.size() != psi0.beta.size() + r / 2
                {
                    failures.push(format!("{bp} from {psi0}, r = {r}: invariants do not match"));
                    continue;
                }
                let mask = ((1u32 << (n - r)) - 1) | (((1u32 << n) - 1) & !((1u32 << (n - r + 1)) - 1));
                let found = Parabolic::new(g, mask).ok().and_then(|sub| {
                    let psi = product_with_sign(g, &sub, &psi0, r)?;
                    let b_sub = b_invariants(&sub.group, &sub.table).ok()?;
                    j_induce(g, &a.table, &a.b, &sub, &b_sub, psi).ok()
                });
                let mut want = vec![0; a.table.len()];
                want[chi] = 1;
                if found.as_ref() != Some(&want) {
                    failures.push(format!("{bp} is not j-induced from {psi0} ⊠ ε_{r}"));
                }
            }
            Cuspidality::NonCuspidalViaW0 => {
                if !bp.tensor_sign().invariants().special {
                    failures.push(format!("{bp} ⊗ ε is not special"));
                }
            }
            Cuspidality::Unclassified => failures.push(format!("{bp} is unclassified")),
        }
    }
    Check::from_failures(NAME, cases, failures)
}

/// Type `D_n`, `n` even: `ρ_{𝒞₀′} = Σ_α χ^{α,+1}` and its `θ`-twist, with the
/// `±` pairs built by truncated induction; the `θ` used is the one coming
/// from `B_n`.
pub fn check_typed_signs(a: &Analysis, budget: usize) -> Check {
    const NAME: &str = "typeD.signs";
    let g = a.g();
    let Some(IrreducibleType::D(n)) = g.system().irreducible_type() else {
        return Check::skipped(NAME, "stated for type D");
    };
    if n % 2 == 1 {
        return Check::skipped(NAME, "stated for n even");
    }
    let run = || -> Result<(usize, Vec<String>), ClassicalError> {
        let pairs = pm_pairs(a)?;
        let mut failures = embedding_failures(g, budget)?;
        failures.extend(sign_theorem_failures(a, &pairs)?);
        Ok((2 * pairs.len() + g.order() + 1, failures))
    };
    match run() {
        Ok((cases, failures)) => Check::from_failures(NAME, cases, failures),
        Err(e) => Check::from_failures(NAME, 1, vec![e.to_string()]),
    }
}

pub fn check_typed_branching(a: &Analysis) -> Check {
    const NAME: &str = "typeD.branching";
    let g = a.g();
    let Some(IrreducibleType::D(n)) = g.system().irreducible_type() else {
        return Check::skipped(NAME, "stated for type D");
    };
    if n % 2 == 1 || n < 4 {
        return Check::skipped(NAME, "stated for n even, n ≥ 4");
    }
    match pm_pairs(a).and_then(|p| branching_failures(a, &p)) {
        Ok((cases, failures)) => Check::from_failures(NAME, cases, failures),
        Err(e) => Check::from_failures(NAME, 1, vec![e.to_string()]),
    }
}
