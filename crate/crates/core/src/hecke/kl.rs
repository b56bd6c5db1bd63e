use super::{HeckeAlgebra, HeckeElement, HeckeError, WeightFunction};
use crate::coxeter::CoxeterGroup;
use crate::numfield::ZPoly;
use num_bigint::BigInt;
use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

/// Sparse expansion `Σ coeff·b_id` in some basis, sorted by id.
pub type Expansion = Vec<(u32, ZPoly)>;

/// Groups up to this size get the direct bar-invariance check through
/// `T_{w⁻¹}⁻¹` expansions when the table is built.
pub const DIRECT_BAR_CHECK_LIMIT: usize = 200;

/// Kazhdan–Lusztig basis of `H(W, S, φ)` and the data derived from it.
pub struct KLTable {
    algebra: HeckeAlgebra,
    /// `c_w = Σ_y p_{y,w} T_y`
    basis: Vec<Expansion>,
    /// `c_s c_w` in the `c`-basis, indexed by `w·rank + s`.
    left: Vec<Expansion>,
    /// `c_x c_y` for all `x`, keyed by `y`.
    products: Mutex<HashMap<u32, Arc<Vec<Expansion>>>>,
    a_values: OnceLock<Vec<i64>>,
}

impl std::fmt::Debug for KLTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "KLTable({:?}, φ = {})", self.algebra.group(), self.algebra.weights())
    }
}

/// Split `q` into `m = q_{>0} + q_0 + bar(q_{>0})`, the bar-invariant part
/// to subtract so that the remainder lies in `A_{<0}`.
fn correction(q: &ZPoly) -> Option<ZPoly> {
    if q.in_negative() {
        return None;
    }
    let pos = q.positive_part();
    let mut m = pos.add(&pos.bar());
    m.add_term(0, &q.coeff(0));
    Some(m)
}

impl KLTable {
    /// Compute the KL basis by the bar-invariant triangular lift
    /// `c_s c_{sw} = c_w + Σ m_z c_z`, then verify it.
    pub fn build(group: Arc<CoxeterGroup>, phi: WeightFunction) -> Result<Self, HeckeError> {
        let n = group.order();
        let rank = group.rank();
        let algebra = HeckeAlgebra::new(group.clone(), phi);
        let mut basis: Vec<Expansion> = Vec::with_capacity(n);
        basis.push(vec![(0, ZPoly::one())]);
        let mut left: Vec<Option<Expansion>> = vec![None; n * rank];
        let mut buf: Vec<ZPoly> = vec![ZPoly::zero(); n];

        for w in 1..n {
            let s = group.left_descents(w).trailing_zeros() as usize;
            let ws = group.lmul(s, w);
            let (cw, exp) = Self::lift(&group, &algebra, &basis, &mut buf, s, ws);
            basis.push(cw);
            left[ws * rank + s] = Some(exp);
        }
        for y in 0..n {
            for s in 0..rank {
                if left[y * rank + s].is_some() {
                    continue;
                }
                let exp = if group.is_left_descent(s, y) {
                    let l = algebra.weights().get(s);
                    vec![(y as u32, ZPoly::from_terms([(l, BigInt::from(1)), (-l, BigInt::from(1))]))]
                } else {
                    Self::lift(&group, &algebra, &basis, &mut buf, s, y).1
                };
                left[y * rank + s] = Some(exp);
            }
        }
        let table = KLTable {
            algebra,
            basis,
            left: left.into_iter().map(|e| e.unwrap()).collect(),
            products: Mutex::new(HashMap::new()),
            a_values: OnceLock::new(),
        };
        table.verify()?;
        if n <= DIRECT_BAR_CHECK_LIMIT {
            table.verify_bar_invariance_direct()?;
        }
        Ok(table)
    }

    /// Reassemble a table from stored expansions (as returned by
    /// [`KLTable::basis_expansions`] and [`KLTable::left_expansions`]).
    /// Only shapes are validated; use [`KLTable::recheck`] on a sample.
    pub fn from_parts(
        group: Arc<CoxeterGroup>,
        phi: WeightFunction,
        basis: Vec<Expansion>,
        left: Vec<Expansion>,
    ) -> Result<Self, HeckeError> {
        let n = group.order();
        if basis.len() != n || left.len() != n * group.rank() {
            return Err(HeckeError::Inconsistent(format!(
                "stored table has {} columns and {} products for |W| = {n}",
                basis.len(),
                left.len()
            )));
        }
        if basis.iter().chain(&left).flatten().any(|(x, _)| *x as usize >= n) {
            return Err(HeckeError::Inconsistent("stored element id out of range".into()));
        }
        Ok(KLTable {
            algebra: HeckeAlgebra::new(group, phi),
            basis,
            left,
            products: Mutex::new(HashMap::new()),
            a_values: OnceLock::new(),
        })
    }

    pub fn basis_expansions(&self) -> &[Expansion] {
        &self.basis
    }

    /// `c_s c_y` for all `(y, s)`, indexed by `y·rank + s`.
    pub fn left_expansions(&self) -> &[Expansion] {
        &self.left
    }

    /// Recompute `c_w` and `c_s c_{sw}` for the given `w` from the stored
    /// lower columns and compare.
    pub fn recheck(&self, elements: &[usize]) -> Result<(), HeckeError> {
        let g = self.group();
        let rank = g.rank();
        let mut buf = vec![ZPoly::zero(); g.order()];
        for &w in elements.iter().filter(|&&w| w > 0 && w < g.order()) {
            let s = g.left_descents(w).trailing_zeros() as usize;
            let ws = g.lmul(s, w);
            let (cw, exp) = Self::lift(g, &self.algebra, &self.basis, &mut buf, s, ws);
            if cw != self.basis[w] || exp != self.left[ws * rank + s] {
                return Err(HeckeError::Inconsistent(format!("stored c_{w} differs from its recomputation")));
            }
        }
        Ok(())
    }

    /// For `sy > y`: the `T`-expansion of `c_{sy}` and the `c`-expansion of
    /// `c_s c_y`.
    fn lift(
        g: &CoxeterGroup,
        alg: &HeckeAlgebra,
        basis: &[Expansion],
        buf: &mut [ZPoly],
        s: usize,
        y: usize,
    ) -> (Expansion, Expansion) {
        let w = g.lmul(s, y);
        let l = alg.weights().get(s);
        // X = c_s c_y: coefficient at x is p_{sx,y} + v^{±φ(s)} p_{x,y}
        let mut pending: BTreeSet<usize> = BTreeSet::new();
        for (x, p) in &basis[y] {
            let x = *x as usize;
            let sx = g.lmul(s, x);
            buf[sx].add_assign_ref(p);
            let e = if g.is_left_descent(s, x) { l } else { -l };
            buf[x].add_shifted(p, e);
            pending.insert(x);
            pending.insert(sx);
        }
        let mut exp: Expansion = vec![(w as u32, ZPoly::one())];
        let mut cw: Expansion = Vec::new();
        // peel from the top; c_z only touches ids ≤ z
        while let Some(z) = pending.pop_last() {
            if z != w {
                if let Some(m) = correction(&buf[z]) {
                    for (x, p) in &basis[z] {
                        buf[*x as usize].sub_mul(&m, p);
                        if (*x as usize) < z {
                            pending.insert(*x as usize);
                        }
                    }
                    exp.push((z as u32, m));
                }
            }
            let c = std::mem::take(&mut buf[z]);
            if !c.is_zero() {
                cw.push((z as u32, c));
            }
        }
        cw.reverse();
        exp.sort_by_key(|e| e.0);
        (cw, exp)
    }

    fn verify(&self) -> Result<(), HeckeError> {
        let g = self.group();
        let alg = &self.algebra;
        for w in 0..g.order() {
            let mut top = false;
            for (y, p) in &self.basis[w] {
                let y = *y as usize;
                if y == w {
                    top = p.is_one();
                } else if !p.in_negative() || !g.bruhat_leq(y, w) {
                    return Err(HeckeError::Inconsistent(format!("p_{{{y},{w}}} = {p}")));
                }
            }
            if !top {
                return Err(HeckeError::Inconsistent(format!("p_{{{w},{w}}} ≠ 1")));
            }
        }
        // c_s c_y recomputed with the generic T-basis product; with bar-invariant
        // m_z this gives bar(c_w) = c_w by induction on ℓ(w).
        for y in 0..g.order() {
            for s in 0..g.rank() {
                let cs = self.c_element(g.element_from_word(&[s]));
                let lhs = alg.mul(&cs, &self.c_element(y));
                let mut rhs = HeckeElement::zero();
                for (z, m) in self.left_mul(s, y) {
                    if !m.is_bar_invariant() {
                        return Err(HeckeError::Inconsistent(format!("non bar-invariant m at ({s},{y},{z})")));
                    }
                    for (x, p) in self.c_expansion(*z as usize) {
                        rhs.add_term(*x as usize, &p.mul(m));
                    }
                }
                if lhs != rhs {
                    return Err(HeckeError::Inconsistent(format!("c_s c_y mismatch at s={s}, y={y}")));
                }
            }
        }
        Ok(())
    }

    /// `bar(c_w) = c_w` for every `w`, through `T_{y⁻¹}⁻¹` expansions.
    pub fn verify_bar_invariance_direct(&self) -> Result<(), HeckeError> {
        let g = self.group();
        let alg = &self.algebra;
        // bar(T_y) built by left multiplication with T_s⁻¹
        let mut bars: Vec<HeckeElement> = Vec::with_capacity(g.order());
        bars.push(HeckeElement::t(0));
        for y in 1..g.order() {
            let s = g.left_descents(y).trailing_zeros() as usize;
            let prev = &bars[g.lmul(s, y)];
            let mut b = alg.mul_ts_left(s, prev);
            b = b.sub(&prev.scale(&alg.xi(s)));
            bars.push(b);
        }
        for w in 0..g.order() {
            let mut b = HeckeElement::zero();
            for (y, p) in &self.basis[w] {
                let pb = p.bar();
                for (x, r) in bars[*y as usize].terms() {
                    b.add_term(x, &r.mul(&pb));
                }
            }
            if b != self.c_element(w) {
                return Err(HeckeError::Inconsistent(format!("c_{w} is not bar-invariant")));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.algebra
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        self.algebra.group()
    }

    pub fn weights(&self) -> &WeightFunction {
        self.algebra.weights()
    }

    /// `p_{y,w}`
    pub fn p(&self, y: usize, w: usize) -> ZPoly {
        let b = &self.basis[w];
        match b.binary_search_by_key(&(y as u32), |e| e.0) {
            Ok(i) => b[i].1.clone(),
            Err(_) => ZPoly::zero(),
        }
    }

    /// `c_w` in the `T`-basis, sorted by id.
    pub fn c_expansion(&self, w: usize) -> &Expansion {
        &self.basis[w]
    }

    pub fn c_element(&self, w: usize) -> HeckeElement {
        let mut h = HeckeElement::zero();
        for (y, p) in &self.basis[w] {
            h.add_term(*y as usize, p);
        }
        h
    }

    /// `c_s c_w` in the `c`-basis.
    pub fn left_mul(&self, s: usize, w: usize) -> &Expansion {
        &self.left[w * self.group().rank() + s]
    }

    /// `c_w c_s` in the `c`-basis (through the anti-involution `c_w ↦ c_{w⁻¹}`).
    pub fn right_mul(&self, w: usize, s: usize) -> Expansion {
        let g = self.group();
        let mut e: Expansion =
            self.left_mul(s, g.inverse(w)).iter().map(|(z, m)| (g.inverse(*z as usize) as u32, m.clone())).collect();
        e.sort_by_key(|x| x.0);
        e
    }

    /// `c_x c_y` for every `x`, as `c`-expansions (memoized per `y`).
    pub fn products_with(&self, y: usize) -> Arc<Vec<Expansion>> {
        if let Some(r) = self.products.lock().unwrap().get(&(y as u32)) {
            return r.clone();
        }
        let r = Arc::new(self.compute_products(y));
        self.products.lock().unwrap().entry(y as u32).or_insert(r).clone()
    }

    fn compute_products(&self, y: usize) -> Vec<Expansion> {
        let g = self.group();
        let n = g.order();
        let mut out: Vec<Expansion> = Vec::with_capacity(n);
        out.push(vec![(y as u32, ZPoly::one())]);
        let mut acc: HashMap<u32, ZPoly> = HashMap::new();
        for x in 1..n {
            let s = g.left_descents(x).trailing_zeros() as usize;
            let xs = g.lmul(s, x);
            acc.clear();
            // c_s (c_{sx} c_y)
            for (u, h) in &out[xs] {
                for (z, m) in self.left_mul(s, *u as usize) {
                    acc.entry(*z).or_default().add_mul(h, m);
                }
            }
            // − Σ m_z c_z c_y over the lower terms of c_s c_{sx}
            for (z, m) in self.left_mul(s, xs) {
                if *z as usize == x {
                    continue;
                }
                for (u, h) in &out[*z as usize] {
                    acc.entry(*u).or_default().sub_mul(m, h);
                }
            }
            let mut e: Expansion = acc.drain().filter(|(_, p)| !p.is_zero()).collect();
            e.sort_by_key(|t| t.0);
            out.push(e);
        }
        out
    }

    /// `h_{x,y,·}`
    pub fn structure_constants(&self, x: usize, y: usize) -> Expansion {
        self.products_with(y)[x].clone()
    }

    pub fn h(&self, x: usize, y: usize, z: usize) -> ZPoly {
        let all = self.products_with(y);
        let e = &all[x];
        match e.binary_search_by_key(&(z as u32), |t| t.0) {
            Ok(i) => e[i].1.clone(),
            Err(_) => ZPoly::zero(),
        }
    }

    /// `a(z) = max deg h_{x,y,z}` by a sweep over all `(x, y)`.
    pub fn a_function(&self) -> &[i64] {
        self.a_values.get_or_init(|| {
            let n = self.group().order();
            let mut a = vec![i64::MIN; n];
            for y in 0..n {
                let all = self.compute_products(y);
                for e in &all {
                    for (z, h) in e {
                        let d = h.degree().finite().unwrap();
                        let slot = &mut a[*z as usize];
                        *slot = (*slot).max(d);
                    }
                }
            }
            a
        })
    }

    /// `γ_{x,y,z}`: the coefficient of `v^{a(z⁻¹)}` in `h_{x,y,z⁻¹}` (equal to
    /// the constant term of `v^{a(z⁻¹)} h_{x,y,z⁻¹}` by bar-invariance).
    pub fn gamma(&self, x: usize, y: usize, z: usize) -> BigInt {
        let zi = self.group().inverse(z);
        let a = self.a_function()[zi];
        self.h(x, y, zi).coeff(a)
    }
}
