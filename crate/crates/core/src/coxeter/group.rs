use super::{CoxeterError, CoxeterSystem};
use crate::bitset::BitSet;
use crate::numfield::{AlgebraicNumber, MinPolyField, Scalar};
use num_rational::BigRational;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

/// Above this size the Bruhat order is answered on demand instead of from a
/// bitset table.
pub const BRUHAT_TABLE_LIMIT: usize = 20_000;

/// A conjugacy class of `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// Sorted element ids.
    pub members: Vec<usize>,
    /// Minimal-length member (smallest id among those).
    pub rep: usize,
    pub is_involution: bool,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A standard parabolic subgroup `W_J`, embedded by ids.
#[derive(Clone, Debug)]
pub struct ParabolicSubgroup {
    pub mask: u32,
    pub elements: Vec<usize>,
    pub longest: usize,
}

/// A fully enumerated finite Coxeter group.
///
/// Elements are dense ids in breadth-first order from the identity, so ids
/// are sorted by length and `0` is the identity. Every element is stored as
/// the permutation it induces on the root system.
pub struct CoxeterGroup {
    system: CoxeterSystem,
    field: Option<Arc<MinPolyField>>,
    cartan: Vec<Vec<AlgebraicNumber>>,
    roots: Vec<Vec<AlgebraicNumber>>,
    npos: usize,
    gen_perm: Vec<Vec<u16>>,
    perms: Vec<u16>,
    index: HashMap<Vec<u16>, u32>,
    rmul: Vec<u32>,
    lmul: Vec<u32>,
    length: Vec<u16>,
    inverse: Vec<u32>,
    words: Vec<Vec<u8>>,
    rdesc: Vec<u32>,
    ldesc: Vec<u32>,
    support: Vec<u32>,
    bruhat: Option<Vec<BitSet>>,
    classes: Vec<ConjClass>,
    class_of: Vec<u32>,
}

impl std::fmt::Debug for CoxeterGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CoxeterGroup({}, order {})", self.system.label(), self.order())
    }
}

fn positive_definite(system: &CoxeterSystem) -> bool {
    let n = system.rank();
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { 1.0 } else { -(std::f64::consts::PI / system.m(i, j) as f64).cos() })
                .collect()
        })
        .collect();
    // Cholesky
    for k in 0..n {
        let d = a[k][k];
        if d <= 1e-9 {
            return false;
        }
        for i in k + 1..n {
            let f = a[i][k] / d;
            for j in k..n {
                a[i][j] -= f * a[k][j];
            }
        }
    }
    true
}

fn is_forest(system: &CoxeterSystem) -> bool {
    let n = system.rank();
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| system.m(i, j) > 2).count();
    edges + system.graph_components().len() == n
}

/// Cartan matrix `A` with `s_i(α_j) = α_j − A[i][j] α_i`. Odd labels get the
/// symmetric entries `−2cos(π/m)` (conjugate simple roots must have equal
/// length); even labels get `A[i][j] = −1`, `A[j][i] = −4cos²(π/m)` for `i < j`.
fn cartan_matrix(system: &CoxeterSystem, field: &Option<Arc<MinPolyField>>) -> Vec<Vec<AlgebraicNumber>> {
    let n = system.rank();
    let mut a = vec![vec![AlgebraicNumber::from_int(0); n]; n];
    for i in 0..n {
        a[i][i] = AlgebraicNumber::from_int(2);
        for j in i + 1..n {
            let m = system.m(i, j);
            if m == 2 {
                continue;
            }
            let f = || field.as_ref().expect("non-crystallographic label needs a field");
            if m % 2 == 1 {
                let c = if m == 3 { AlgebraicNumber::from_int(1) } else { f().cos_multiple(f().m() as i64 / m as i64) };
                a[i][j] = c.neg_ref();
                a[j][i] = c.neg_ref();
                continue;
            }
            let four_cos_sq = match m {
                4 => AlgebraicNumber::from_int(2),
                6 => AlgebraicNumber::from_int(3),
                _ => {
                    let mut c = f().cos_multiple(2 * f().m() as i64 / m as i64);
                    c.add_assign_ref(&AlgebraicNumber::from_int(2));
                    c
                }
            };
            a[i][j] = AlgebraicNumber::from_int(-1);
            a[j][i] = four_cos_sq.neg_ref();
        }
    }
    a
}

fn is_positive(root: &[AlgebraicNumber]) -> bool {
    root.iter().find(|c| !c.is_zero_elem()).is_some_and(|c| c.sign() == Ordering::Greater)
}

fn root_key(root: &[AlgebraicNumber]) -> Vec<Vec<BigRational>> {
    root.iter().map(|c| c.coeffs().to_vec()).collect()
}

fn reflect(cartan: &[Vec<AlgebraicNumber>], i: usize, x: &[AlgebraicNumber]) -> Vec<AlgebraicNumber> {
    let mut c = AlgebraicNumber::from_int(0);
    for (j, xj) in x.iter().enumerate() {
        if !xj.is_zero_elem() && !cartan[i][j].is_zero_elem() {
            c.add_assign_ref(&cartan[i][j].mul_ref(xj));
        }
    }
    let mut y = x.to_vec();
    y[i].sub_assign_ref(&c);
    y
}

impl CoxeterGroup {
    /// Enumerate the group, refusing to go beyond `budget` elements.
    pub fn build(system: CoxeterSystem, budget: usize) -> Result<Self, CoxeterError> {
        let rank = system.rank();
        if rank == 0 || rank > 32 {
            return Err(CoxeterError::BadMatrix(format!("unsupported rank {rank}")));
        }
        if !positive_definite(&system) || !is_forest(&system) {
            return Err(CoxeterError::NotFinite);
        }
        if let Some(order) = system.known_order() {
            if order > budget as u128 {
                return Err(CoxeterError::BudgetExceeded { budget, required: Some(order) });
            }
        }
        let n = system.field_conductor();
        let field = if n == 1 {
            None
        } else {
            let mp = if n % 2 == 0 { n / 2 } else { n };
            Some(Arc::new(MinPolyField::new(mp).map_err(|_| CoxeterError::NotFinite)?))
        };
        let cartan = cartan_matrix(&system, &field);

        // positive roots by closure from the simple ones
        let simple: Vec<Vec<AlgebraicNumber>> = (0..rank)
            .map(|i| (0..rank).map(|j| AlgebraicNumber::from_int((i == j) as i64)).collect())
            .collect();
        let mut pos = simple.clone();
        let mut seen: HashMap<Vec<Vec<BigRational>>, usize> =
            pos.iter().enumerate().map(|(k, r)| (root_key(r), k)).collect();
        let mut k = 0;
        while k < pos.len() {
            for i in 0..rank {
                let y = reflect(&cartan, i, &pos[k]);
                if is_positive(&y) && !seen.contains_key(&root_key(&y)) {
                    seen.insert(root_key(&y), pos.len());
                    pos.push(y);
                    if pos.len() > 20_000 {
                        return Err(CoxeterError::NotFinite);
                    }
                }
            }
            k += 1;
        }
        let npos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|c| c.neg_ref()).collect::<Vec<_>>()));
        let root_index: HashMap<Vec<Vec<BigRational>>, usize> =
            roots.iter().enumerate().map(|(k, r)| (root_key(r), k)).collect();
        let nroots = roots.len();
        let gen_perm: Vec<Vec<u16>> = (0..rank)
            .map(|i| roots.iter().map(|r| root_index[&root_key(&reflect(&cartan, i, r))] as u16).collect())
            .collect();

        // breadth-first enumeration by right multiplication
        let mut perms: Vec<u16> = (0..nroots as u16).collect();
        let mut index: HashMap<Vec<u16>, u32> = HashMap::new();
        index.insert((0..rank as u16).collect(), 0);
        let mut rmul: Vec<u32> = Vec::new();
        let mut length: Vec<u16> = vec![0];
        let mut words: Vec<Vec<u8>> = vec![vec![]];
        let mut support: Vec<u32> = vec![0];
        let mut w = 0usize;
        while w * nroots < perms.len() {
            for s in 0..rank {
                let base = w * nroots;
                let key: Vec<u16> = (0..rank).map(|i| perms[base + gen_perm[s][i] as usize]).collect();
                let id = match index.get(&key) {
                    Some(&id) => id,
                    None => {
                        let id = length.len() as u32;
                        if id as usize >= budget {
                            return Err(CoxeterError::BudgetExceeded { budget, required: system.known_order() });
                        }
                        let new: Vec<u16> = (0..nroots).map(|r| perms[base + gen_perm[s][r] as usize]).collect();
                        perms.extend_from_slice(&new);
                        index.insert(key, id);
                        length.push(length[w] + 1);
                        let mut word = words[w].clone();
                        word.push(s as u8);
                        words.push(word);
                        support.push(support[w] | 1 << s);
                        id
                    }
                };
                rmul.push(id);
            }
            w += 1;
        }
        let order = length.len();
        let perm = |w: usize| &perms[w * nroots..(w + 1) * nroots];
        let lookup = |key: &[u16]| index[key] as usize;

        let mut lmul = vec![0u32; order * rank];
        let mut inverse = vec![0u32; order];
        let mut rdesc = vec![0u32; order];
        for w in 0..order {
            let p = perm(w);
            for s in 0..rank {
                let key: Vec<u16> = (0..rank).map(|i| gen_perm[s][p[i] as usize]).collect();
                lmul[w * rank + s] = lookup(&key) as u32;
                if (p[s] as usize) >= npos {
                    rdesc[w] |= 1 << s;
                }
            }
            let mut inv_key = vec![0u16; rank];
            for (r, &img) in p.iter().enumerate() {
                if (img as usize) < rank {
                    inv_key[img as usize] = r as u16;
                }
            }
            inverse[w] = lookup(&inv_key) as u32;
        }
        let ldesc: Vec<u32> = (0..order).map(|w| rdesc[inverse[w] as usize]).collect();

        let mut g = CoxeterGroup {
            system,
            field,
            cartan,
            roots,
            npos,
            gen_perm,
            perms,
            index,
            rmul,
            lmul,
            length,
            inverse,
            words,
            rdesc,
            ldesc,
            support,
            bruhat: None,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        if order <= BRUHAT_TABLE_LIMIT {
            g.bruhat = Some(g.bruhat_table());
        }
        g.compute_classes();
        Ok(g)
    }

    /// Build from a type label such as `B3` with the given budget.
    pub fn from_label(label: &str, budget: usize) -> Result<Self, CoxeterError> {
        Self::build(CoxeterSystem::from_label(label)?, budget)
    }

    fn bruhat_table(&self) -> Vec<BitSet> {
        let order = self.order();
        let mut table: Vec<BitSet> = Vec::with_capacity(order);
        let mut id = BitSet::new(order);
        id.insert(0);
        table.push(id);
        for w in 1..order {
            let s = self.rdesc[w].trailing_zeros() as usize;
            let ws = self.rmul(w, s);
            let mut b = table[ws].clone();
            for y in table[ws].iter() {
                b.insert(self.rmul(y, s));
            }
            table.push(b);
        }
        table
    }

    fn compute_classes(&mut self) {
        let order = self.order();
        let rank = self.rank();
        let mut class_of = vec![u32::MAX; order];
        let mut classes = Vec::new();
        for start in 0..order {
            if class_of[start] != u32::MAX {
                continue;
            }
            let c = classes.len() as u32;
            class_of[start] = c;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let w = members[k];
                k += 1;
                for s in 0..rank {
                    let x = self.lmul(s, self.rmul(w, s));
                    if class_of[x] == u32::MAX {
                        class_of[x] = c;
                        members.push(x);
                    }
                }
            }
            members.sort_unstable();
            let is_involution = self.is_involution(start);
            classes.push(ConjClass { rep: members[0], members, is_involution });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn order(&self) -> usize {
        self.length.len()
    }

    /// Base field of the reflection representation (`None` means ℚ).
    pub fn field(&self) -> Option<&Arc<MinPolyField>> {
        self.field.as_ref()
    }

    pub fn cartan(&self) -> &[Vec<AlgebraicNumber>] {
        &self.cartan
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.order() - 1
    }

    pub fn length(&self, w: usize) -> usize {
        self.length[w] as usize
    }

    pub fn word(&self, w: usize) -> &[u8] {
        &self.words[w]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w] as usize
    }

    /// `w·s`
    pub fn rmul(&self, w: usize, s: usize) -> usize {
        self.rmul[w * self.rank() + s] as usize
    }

    /// `s·w`
    pub fn lmul(&self, s: usize, w: usize) -> usize {
        self.lmul[w * self.rank() + s] as usize
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.words[y].iter().fold(x, |acc, &s| self.rmul(acc, s as usize))
    }

    pub fn element_from_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &s| self.rmul(acc, s))
    }

    pub fn right_descents(&self, w: usize) -> u32 {
        self.rdesc[w]
    }

    pub fn left_descents(&self, w: usize) -> u32 {
        self.ldesc[w]
    }

    /// `ℓ(sw) < ℓ(w)`
    pub fn is_left_descent(&self, s: usize, w: usize) -> bool {
        self.ldesc[w] >> s & 1 == 1
    }

    /// `ℓ(ws) < ℓ(w)`
    pub fn is_right_descent(&self, w: usize, s: usize) -> bool {
        self.rdesc[w] >> s & 1 == 1
    }

    /// Generators occurring in a (any) reduced word of `w`, as a bitmask.
    pub fn support(&self, w: usize) -> u32 {
        self.support[w]
    }

    pub fn is_involution(&self, w: usize) -> bool {
        self.inverse(w) == w
    }

    pub fn conjugate(&self, x: usize, w: usize) -> usize {
        self.mul(self.mul(x, w), self.inverse(x))
    }

    pub fn bruhat_leq(&self, x: usize, w: usize) -> bool {
        if let Some(t) = &self.bruhat {
            return t[w].contains(x);
        }
        let (mut x, mut w) = (x, w);
        while w != 0 {
            if self.length(x) > self.length(w) {
                return false;
            }
            let s = self.rdesc[w].trailing_zeros() as usize;
            let xs = self.rmul(x, s);
            x = x.min(xs);
            w = self.rmul(w, s);
        }
        x == 0
    }

    /// `{x : x ≤ w}` when the table is stored.
    pub fn bruhat_ideal(&self, w: usize) -> Option<&BitSet> {
        self.bruhat.as_ref().map(|t| &t[w])
    }

    pub fn num_positive_roots(&self) -> usize {
        self.npos
    }

    /// Roots in simple-root coordinates: positives `0..N`, then negatives.
    pub fn roots(&self) -> &[Vec<AlgebraicNumber>] {
        &self.roots
    }

    /// Index of `w(β_r)`.
    pub fn act_on_root(&self, w: usize, r: usize) -> usize {
        self.perms[w * self.roots.len() + r] as usize
    }

    pub fn generator_root_permutation(&self, s: usize) -> &[u16] {
        &self.gen_perm[s]
    }

    /// Element inducing the given permutation of the simple roots' images.
    pub fn element_from_simple_images(&self, images: &[u16]) -> Option<usize> {
        self.index.get(images).map(|&i| i as usize)
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_of(&self, w: usize) -> usize {
        self.class_of[w] as usize
    }

    pub fn involution_classes(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&c| self.classes[c].is_involution).collect()
    }

    pub fn centralizer(&self, w: usize) -> Vec<usize> {
        (0..self.order()).filter(|&x| self.mul(x, w) == self.mul(w, x)).collect()
    }

    pub fn parabolic(&self, mask: u32) -> ParabolicSubgroup {
        let elements: Vec<usize> = (0..self.order()).filter(|&w| self.support[w] & !mask == 0).collect();
        let longest = *elements.iter().max_by_key(|&&w| (self.length[w], w)).unwrap();
        ParabolicSubgroup { mask, elements, longest }
    }

    /// `W_J` as a Coxeter group in its own right, with the embedding of its
    /// ids into `self`.
    pub fn parabolic_group(&self, mask: u32) -> Result<(CoxeterGroup, Vec<usize>), CoxeterError> {
        let gens: Vec<usize> = (0..self.rank()).filter(|&s| mask >> s & 1 == 1).collect();
        if gens.is_empty() {
            return Err(CoxeterError::BadMatrix("empty parabolic".into()));
        }
        let sub = CoxeterGroup::build(self.system.restrict(&gens), self.order())?;
        let embed = (0..sub.order())
            .map(|w| sub.word(w).iter().fold(0, |acc, &s| self.rmul(acc, gens[s as usize])))
            .collect();
        Ok((sub, embed))
    }

    /// Positive roots whose support lies in `mask`.
    pub fn parabolic_positive_roots(&self, mask: u32) -> Vec<usize> {
        (0..self.npos)
            .filter(|&r| self.roots[r].iter().enumerate().all(|(i, c)| mask >> i & 1 == 1 || c.is_zero_elem()))
            .collect()
    }

    /// `(−1)^k`, `k` the number of positive roots of `W_J` sent to negative
    /// roots by `w`, for `σ` the longest element of `W_J`, central there, and
    /// `w` in the centralizer of `σ`.
    pub fn epsilon_sigma(&self, sigma: usize, mask: u32, w: usize) -> Result<i32, CoxeterError> {
        let par = self.parabolic(mask);
        if par.longest != sigma {
            return Err(CoxeterError::Precondition("sigma is not the longest element of W_J".into()));
        }
        if (0..self.rank()).any(|s| mask >> s & 1 == 1 && self.lmul(s, sigma) != self.rmul(sigma, s)) {
            return Err(CoxeterError::Precondition("sigma is not central in W_J".into()));
        }
        if self.mul(w, sigma) != self.mul(sigma, w) {
            return Err(CoxeterError::Precondition("w does not centralize sigma".into()));
        }
        let k = self.parabolic_positive_roots(mask).into_iter().filter(|&r| self.act_on_root(w, r) >= self.npos).count();
        Ok(if k % 2 == 0 { 1 } else { -1 })
    }

    /// Matrix of `w` on the simple-root basis (columns are images).
    pub fn reflection_matrix(&self, w: usize) -> Vec<Vec<AlgebraicNumber>> {
        let n = self.rank();
        let mut m: Vec<Vec<AlgebraicNumber>> =
            (0..n).map(|i| (0..n).map(|j| AlgebraicNumber::from_int((i == j) as i64)).collect()).collect();
        // m ← m · s for each letter: columns transform as images
        for &s in self.word(w) {
            let s = s as usize;
            for row in m.iter_mut() {
                let mut new_s = row[s].neg_ref();
                for j in 0..n {
                    if j != s && !self.cartan[s][j].is_zero_elem() {
                        let t = row[s].mul_ref(&self.cartan[s][j]);
                        row[j].sub_assign_ref(&t);
                    }
                }
                std::mem::swap(&mut row[s], &mut new_s);
            }
        }
        m
    }

    /// Multiplicative order of `w`.
    pub fn element_order(&self, w: usize) -> usize {
        let mut k = 1;
        let mut x = w;
        while x != 0 {
            x = self.mul(x, w);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        let mut e = 1usize;
        for c in &self.classes {
            let o = self.element_order(c.rep);
            e = e / gcd(e, o) * o;
        }
        e
    }

    /// Reduced word as a string of 1-based generator indices.
    pub fn word_string(&self, w: usize) -> String {
        if w == 0 {
            return "e".into();
        }
        self.word(w).iter().map(|s| (s + 1).to_string()).collect::<Vec<_>>().join(".")
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
