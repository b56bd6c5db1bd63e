use serde::Serialize;
use std::fmt;

/// A partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let first = self.parts.first().copied().unwrap_or(0);
        Partition { parts: (1..=first).map(|i| self.parts.iter().filter(|&&p| p >= i).count()).collect() }
    }

    /// `n(λ) = Σ (i−1) λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    pub fn odd_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions obtained by adding 1 to one part (a new part of size 1
    /// included).
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out: Vec<Partition> = (0..=self.parts.len())
            .filter(|&i| i == 0 || self.parts[i - 1] > self.parts.get(i).copied().unwrap_or(0))
            .map(|i| {
                let mut p = self.parts.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                Partition { parts: p }
            })
            .collect();
        out.sort();
        out
    }

    /// β-numbers `λ_i + (k − i)` for `k` rows (`k ≥ len`).
    fn beta(&self, k: usize) -> Vec<usize> {
        (0..k).map(|i| self.parts.get(i).copied().unwrap_or(0) + (k - 1 - i)).collect()
    }

    fn from_beta(beta: &[usize]) -> Self {
        let mut b = beta.to_vec();
        b.sort_unstable_by(|x, y| y.cmp(x));
        let k = b.len();
        Partition::new((0..k).map(|i| b[i] - (k - 1 - i)).collect())
    }

    /// Partitions obtained by removing an `r`-rim hook, with `(−1)^{height}`.
    pub fn remove_rim_hooks(&self, r: usize) -> Vec<(Partition, i64)> {
        let beta = self.beta(self.parts.len());
        let mut out = Vec::new();
        for (i, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
            let mut nb = beta.clone();
            nb[i] = b - r;
            out.push((Partition::from_beta(&nb), if height % 2 == 0 { 1 } else { -1 }));
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

/// `χ^λ` of the symmetric group at cycle type `μ`, by Murnaghan–Nakayama.
pub fn sn_character(lambda: &Partition, mu: &[usize]) -> i64 {
    match mu.split_first() {
        None => lambda.is_empty() as i64,
        Some((&r, rest)) => lambda.remove_rim_hooks(r).iter().map(|(p, s)| s * sn_character(p, rest)).sum(),
    }
}

/// Cycle lengths of a permutation of `{1, …, n}` (entries may carry signs,
/// which are ignored), sorted decreasingly.
pub fn cycle_type(perm: &[i32]) -> Vec<usize> {
    signed_cycle_type(perm).into_iter().map(|(l, _)| l).collect()
}

/// Cycles of a signed permutation as `(length, negative)`, sorted.
pub fn signed_cycle_type(perm: &[i32]) -> Vec<(usize, bool)> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let (mut len, mut neg, mut k) = (0, false, start);
        while !seen[k] {
            seen[k] = true;
            len += 1;
            neg ^= perm[k] < 0;
            k = perm[k].unsigned_abs() as usize - 1;
        }
        out.push((len, neg));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}
