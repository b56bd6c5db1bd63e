use super::WeightFunction;
use crate::coxeter::CoxeterGroup;
use crate::numfield::ZPoly;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Element of the Hecke algebra in the standard basis `T_w`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct HeckeElement {
    terms: BTreeMap<usize, ZPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        HeckeElement::default()
    }

    /// `a·T_w`
    pub fn term(w: usize, a: ZPoly) -> Self {
        let mut h = Self::zero();
        h.add_term(w, &a);
        h
    }

    pub fn t(w: usize) -> Self {
        Self::term(w, ZPoly::one())
    }

    pub fn add_term(&mut self, w: usize, a: &ZPoly) {
        if a.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        e.add_assign_ref(a);
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn coeff(&self, w: usize) -> ZPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &ZPoly)> {
        self.terms.iter().map(|(&w, a)| (w, a))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (w, a) in other.terms() {
            r.add_term(w, a);
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&ZPoly::from_int(-1)))
    }

    pub fn scale(&self, a: &ZPoly) -> Self {
        let mut r = Self::zero();
        for (w, c) in self.terms() {
            r.add_term(w, &c.mul(a));
        }
        r
    }
}

/// The Hecke algebra `H(W, S, φ)` over `ℤ[v, v⁻¹]`.
#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    group: Arc<CoxeterGroup>,
    phi: WeightFunction,
}

impl HeckeAlgebra {
    pub fn new(group: Arc<CoxeterGroup>, phi: WeightFunction) -> Self {
        HeckeAlgebra { group, phi }
    }

    pub fn group(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    pub fn weights(&self) -> &WeightFunction {
        &self.phi
    }

    /// `v^{φ(s)} − v^{−φ(s)}`
    pub fn xi(&self, s: usize) -> ZPoly {
        let l = self.phi.get(s);
        ZPoly::from_terms([(l, BigInt::from(1)), (-l, BigInt::from(-1))])
    }

    pub fn mul_ts_left(&self, s: usize, h: &HeckeElement) -> HeckeElement {
        let g = &self.group;
        let xi = self.xi(s);
        let mut r = HeckeElement::zero();
        for (w, a) in h.terms() {
            let sw = g.lmul(s, w);
            r.add_term(sw, a);
            if g.is_left_descent(s, w) {
                r.add_term(w, &a.mul(&xi));
            }
        }
        r
    }

    pub fn mul_ts_right(&self, h: &HeckeElement, s: usize) -> HeckeElement {
        let g = &self.group;
        let xi = self.xi(s);
        let mut r = HeckeElement::zero();
        for (w, a) in h.terms() {
            let ws = g.rmul(w, s);
            r.add_term(ws, a);
            if g.is_right_descent(w, s) {
                r.add_term(w, &a.mul(&xi));
            }
        }
        r
    }

    pub fn mul(&self, h1: &HeckeElement, h2: &HeckeElement) -> HeckeElement {
        let mut r = HeckeElement::zero();
        for (y, b) in h2.terms() {
            let mut x = h1.scale(b);
            for &s in self.group.word(y) {
                x = self.mul_ts_right(&x, s as usize);
            }
            r = r.add(&x);
        }
        r
    }

    /// `T_s⁻¹ = T_s − (v^{φ(s)} − v^{−φ(s)})`
    pub fn t_inverse_gen(&self, s: usize) -> HeckeElement {
        let mut h = HeckeElement::t(self.group.element_from_word(&[s]));
        h.add_term(0, &self.xi(s).neg());
        h
    }

    /// `T_{w⁻¹}⁻¹` in the `T`-basis.
    pub fn t_inverse_of_inverse(&self, w: usize) -> HeckeElement {
        // T_{w⁻¹}⁻¹ = T_{s1}⁻¹ ⋯ T_{sk}⁻¹ for w = s1⋯sk reduced
        let mut x = HeckeElement::t(0);
        for &s in self.group.word(w) {
            x = self.mul(&x, &self.t_inverse_gen(s as usize));
        }
        x
    }

    /// `Σ a_w T_w ↦ Σ ā_w T_{w⁻¹}⁻¹`
    pub fn bar(&self, h: &HeckeElement) -> HeckeElement {
        let mut r = HeckeElement::zero();
        for (w, a) in h.terms() {
            r = r.add(&self.t_inverse_of_inverse(w).scale(&a.bar()));
        }
        r
    }

    /// The `A`-linear automorphism with `T_s† = −T_s⁻¹`.
    pub fn dagger(&self, h: &HeckeElement) -> HeckeElement {
        let mut r = HeckeElement::zero();
        for (w, a) in h.terms() {
            let sign = if self.group.length(w) % 2 == 0 { 1 } else { -1 };
            r = r.add(&self.t_inverse_of_inverse(w).scale(&a.scale(&BigInt::from(sign))));
        }
        r
    }

    /// `Σ_{w∈C} f(w) T_w` for a union `C` of involution classes, checked to
    /// consist of involution classes.
    pub fn central_involution_sum(
        &self,
        classes: &[usize],
        f: impl Fn(usize) -> i64,
    ) -> Result<HeckeElement, super::HeckeError> {
        let g = &self.group;
        let mut h = HeckeElement::zero();
        for &c in classes {
            let class = &g.classes()[c];
            if !class.is_involution {
                return Err(super::HeckeError::NotInvolutionClass(c));
            }
            for &w in &class.members {
                h.add_term(w, &ZPoly::from_int(f(w)));
            }
        }
        Ok(h)
    }

    /// Generators `s` for which `T_s h ≠ h T_s`.
    pub fn non_commuting_generators(&self, h: &HeckeElement) -> Vec<usize> {
        (0..self.group.rank()).filter(|&s| self.mul_ts_left(s, h) != self.mul_ts_right(h, s)).collect()
    }
}
