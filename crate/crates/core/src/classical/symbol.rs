use super::Partition;
use serde::Serialize;
use std::fmt;

/// `(α, β)` with `|α| + |β| = n`, labelling `χ^{(α,β)}` of type `B_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Bipartition {
    pub alpha: Partition,
    pub beta: Partition,
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.alpha, self.beta)
    }
}

/// A symbol: rows `λ₁ < … < λ_{m+1}` and `μ₁ < … < μ_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BSymbol {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

impl fmt::Display for BSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[usize]| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "[{} / {}]", row(&self.top), row(&self.bottom))
    }
}

/// `d(χ)`, `j₀(χ)` and whether `χ` is special.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolInvariants {
    pub d: usize,
    pub j0: usize,
    pub special: bool,
}

impl Bipartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        Bipartition { alpha, beta }
    }

    pub fn size(&self) -> usize {
        self.alpha.size() + self.beta.size()
    }

    pub fn all(n: usize) -> Vec<Bipartition> {
        (0..=n)
            .rev()
            .flat_map(|k| {
                Partition::all(k).into_iter().flat_map(move |a| {
                    Partition::all(n - k).into_iter().map(move |b| Bipartition::new(a.clone(), b))
                })
            })
            .collect()
    }

    /// Smallest `m` with `α` fitting `m+1` rows and `β` fitting `m` rows;
    /// then `0` is never in both rows.
    pub fn min_m(&self) -> usize {
        self.alpha.len().saturating_sub(1).max(self.beta.len())
    }

    /// `α`, `β` padded with zeros to `m+1` and `m` parts, increasing.
    fn padded(&self, m: usize) -> (Vec<usize>, Vec<usize>) {
        let pad = |p: &Partition, k: usize| {
            let mut v: Vec<usize> = p.parts().iter().rev().copied().collect();
            let mut out = vec![0; k - v.len()];
            out.append(&mut v);
            out
        };
        (pad(&self.alpha, m + 1), pad(&self.beta, m))
    }

    /// `Λ_m`: `λ_i = α_i + i − 1`, `μ_i = β_i + i − 1`.
    pub fn symbol(&self, m: usize) -> BSymbol {
        assert!(m >= self.min_m(), "m too small for {self}");
        let (a, b) = self.padded(m);
        BSymbol {
            top: a.iter().enumerate().map(|(i, x)| x + i).collect(),
            bottom: b.iter().enumerate().map(|(i, x)| x + i).collect(),
        }
    }

    pub fn invariants_at(&self, m: usize) -> SymbolInvariants {
        let s = self.symbol(m);
        let (a, b) = self.padded(m);
        let d = s.bottom.iter().filter(|x| !s.top.contains(x)).count();
        let j0 = (0..m).map(|i| a[i + 1].min(b[i])).sum();
        let special = (0..m).all(|i| s.top[i] <= s.bottom[i] && s.bottom[i] <= s.top[i + 1]);
        SymbolInvariants { d, j0, special }
    }

    pub fn invariants(&self) -> SymbolInvariants {
        self.invariants_at(self.min_m())
    }

    /// `b_χ = 2n(α) + 2n(β) + |β|`.
    pub fn b_value(&self) -> usize {
        2 * self.alpha.n_statistic() + 2 * self.beta.n_statistic() + self.beta.size()
    }

    /// Label of `χ ⊗ ε`.
    pub fn tensor_sign(&self) -> Bipartition {
        Bipartition::new(self.beta.conjugate(), self.alpha.conjugate())
    }
}

impl BSymbol {
    pub fn entries(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.top.iter().chain(&self.bottom).copied().collect();
        v.sort_unstable();
        v
    }

    /// Inverse of [`Bipartition::symbol`].
    pub fn bipartition(&self) -> Bipartition {
        let un = |r: &[usize]| Partition::new(r.iter().enumerate().map(|(i, x)| x - i).collect());
        Bipartition::new(un(&self.top), un(&self.bottom))
    }
}

/// `χ^{(α,β)}` of `B_n` at the class of signed cycle type `cycles`
/// (`(length, negative)`), by the hyperoctahedral Murnaghan–Nakayama rule:
/// a cycle is removed as a rim hook from `α` or from `β`, the latter with an
/// extra sign for negative cycles. With this rule `χ^{((n),∅)}` is trivial and
/// `χ^{(∅,(n))}` is `−1` on `t`, `1` on the `sᵢ`.
pub fn bn_character(bp: &Bipartition, cycles: &[(usize, bool)]) -> i64 {
    let Some((&(r, neg), rest)) = cycles.split_first() else {
        return (bp.size() == 0) as i64;
    };
    let mut total = 0;
    for (a, s) in bp.alpha.remove_rim_hooks(r) {
        total += s * bn_character(&Bipartition::new(a, bp.beta.clone()), rest);
    }
    for (b, s) in bp.beta.remove_rim_hooks(r) {
        let s = if neg { -s } else { s };
        total += s * bn_character(&Bipartition::new(bp.alpha.clone(), b), rest);
    }
    total
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// `⟨ρ_{l,j}, χ^{(α,β)}⟩`: zero unless `χ` is special and `j + l = |β|`, and
/// then `binom(d, j₀ − j)`.
pub fn kottwitz_multiplicity_b(bp: &Bipartition, l: usize, j: usize) -> u64 {
    let inv = bp.invariants();
    if !inv.special || j + l != bp.beta.size() || j > inv.j0 {
        return 0;
    }
    binomial(inv.d, inv.j0 - j)
}

/// `⟨ρ_j, χ^α⟩` in `S_n`: `1` iff `n − 2j` is the number of odd parts of `α*`.
pub fn kottwitz_multiplicity_a(alpha: &Partition, j: usize) -> u64 {
    (alpha.size() == 2 * j + alpha.conjugate().odd_parts()) as u64
}

/// Where the two-sided cell of a special character sits in the cuspidal
/// classification of type `B_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Cuspidality {
    Cuspidal,
    /// `Λ(χ₀)` arises from `Λ(ψ₀)` by raising its largest `r` entries by 1.
    StronglyNonCuspidal { r: usize, psi0: Bipartition },
    /// The `w₀`-twisted cell is strongly non-cuspidal.
    NonCuspidalViaW0,
    Unclassified,
}

fn strong_witness(bp: &Bipartition) -> Option<(usize, Bipartition)> {
    let s = bp.symbol(bp.min_m());
    let entries = s.entries();
    let t0 = *entries.last()?;
    let gap = (0..t0).rev().find(|i| !entries.contains(i))?;
    let r = entries.iter().filter(|&&x| x > gap).count();
    let lower = |row: &[usize]| row.iter().map(|&x| if x > gap { x - 1 } else { x }).collect();
    let psi = BSymbol { top: lower(&s.top), bottom: lower(&s.bottom) }.bipartition();
    Some((r, psi))
}

pub fn cuspidality_b(bp: &Bipartition) -> Cuspidality {
    let n = bp.size();
    let m = bp.min_m();
    let d = bp.invariants().d;
    if n == d * d + d && d >= 1 && bp.symbol(m).entries() == (0..=2 * m).collect::<Vec<_>>() {
        return Cuspidality::Cuspidal;
    }
    if let Some((r, psi0)) = strong_witness(bp) {
        return Cuspidality::StronglyNonCuspidal { r, psi0 };
    }
    if strong_witness(&bp.tensor_sign()).is_some() {
        return Cuspidality::NonCuspidalViaW0;
    }
    Cuspidality::Unclassified
}
