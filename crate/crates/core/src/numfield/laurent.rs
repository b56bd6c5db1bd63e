use super::field::AlgebraicNumber;
use super::scalar::{FieldScalar, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::fmt;

/// Degree of a Laurent polynomial; the zero polynomial has degree −∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// Laurent polynomial in one variable `v` with integer exponents.
///
/// Stored densely between the lowest and highest nonzero exponent; the
/// zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq)]
pub struct Laurent<C> {
    low: i64,
    coeffs: Vec<C>,
}

/// Laurent polynomial over ℚ.
pub type LaurentPoly = Laurent<BigRational>;
/// Laurent polynomial over ℤ (the KL kernel works here).
pub type ZPoly = Laurent<BigInt>;
/// Laurent polynomial over a real cyclotomic field.
pub type KPoly = Laurent<AlgebraicNumber>;

impl<C: Scalar> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> Laurent<C> {
    pub fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one_elem(), 0)
    }

    /// `c · v^e`
    pub fn monomial(c: C, e: i64) -> Self {
        Laurent { low: e, coeffs: vec![c] }.normalized()
    }

    /// `v^e`
    pub fn v_pow(e: i64) -> Self {
        Self::monomial(C::one_elem(), e)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut r = Self::zero();
        for (e, c) in terms {
            r.add_term(e, &c);
        }
        r
    }

    fn normalized(mut self) -> Self {
        let lead = self.coeffs.iter().position(|c| !c.is_zero_elem());
        match lead {
            None => Self::zero(),
            Some(i) => {
                if i > 0 {
                    self.coeffs.drain(..i);
                    self.low += i as i64;
                }
                while self.coeffs.last().is_some_and(|c| c.is_zero_elem()) {
                    self.coeffs.pop();
                }
                self
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one_elem()
    }

    pub fn degree(&self) -> Degree {
        if self.is_zero() {
            Degree::NegInfinity
        } else {
            Degree::Finite(self.low + self.coeffs.len() as i64 - 1)
        }
    }

    /// Lowest exponent with a nonzero coefficient (`None` for zero).
    pub fn low_degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.low)
        }
    }

    pub fn coeff(&self, e: i64) -> C {
        if self.is_zero() || e < self.low {
            return C::zero_elem();
        }
        self.coeffs.get((e - self.low) as usize).cloned().unwrap_or_else(C::zero_elem)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        let low = self.low;
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero_elem()).map(move |(i, c)| (low + i as i64, c))
    }

    fn ensure_range(&mut self, lo: i64, hi: i64) {
        if self.coeffs.is_empty() {
            self.low = lo;
            self.coeffs = vec![C::zero_elem(); (hi - lo + 1) as usize];
            return;
        }
        if lo < self.low {
            let extra = (self.low - lo) as usize;
            let mut v = vec![C::zero_elem(); extra];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = lo;
        }
        let top = self.low + self.coeffs.len() as i64 - 1;
        if hi > top {
            self.coeffs.resize(self.coeffs.len() + (hi - top) as usize, C::zero_elem());
        }
    }

    fn renormalize(&mut self) {
        let s = std::mem::take(self);
        *self = s.normalized();
    }

    pub fn add_term(&mut self, e: i64, c: &C) {
        if c.is_zero_elem() {
            return;
        }
        self.ensure_range(e, e);
        self.coeffs[(e - self.low) as usize].add_assign_ref(c);
        self.renormalize();
    }

    /// `self += other · v^shift`
    pub fn add_shifted(&mut self, other: &Self, shift: i64) {
        if other.is_zero() {
            return;
        }
        let lo = other.low + shift;
        self.ensure_range(lo, lo + other.coeffs.len() as i64 - 1);
        let off = (lo - self.low) as usize;
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[off + i].add_assign_ref(c);
        }
        self.renormalize();
    }

    /// `self -= other · v^shift`
    pub fn sub_shifted(&mut self, other: &Self, shift: i64) {
        if other.is_zero() {
            return;
        }
        let lo = other.low + shift;
        self.ensure_range(lo, lo + other.coeffs.len() as i64 - 1);
        let off = (lo - self.low) as usize;
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[off + i].sub_assign_ref(c);
        }
        self.renormalize();
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        self.add_shifted(other, 0);
    }

    pub fn sub_assign_ref(&mut self, other: &Self) {
        self.sub_shifted(other, 0);
    }

    /// `self += a · b`
    pub fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let lo = a.low + b.low;
        let hi = lo + (a.coeffs.len() + b.coeffs.len() - 2) as i64;
        self.ensure_range(lo, hi);
        let off = (lo - self.low) as usize;
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero_elem() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero_elem() {
                    self.coeffs[off + i + j].add_mul_assign(x, y);
                }
            }
        }
        self.renormalize();
    }

    /// `self -= a · b`
    pub fn sub_mul(&mut self, a: &Self, b: &Self) {
        let na = a.neg();
        self.add_mul(&na, b);
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign_ref(other);
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.sub_assign_ref(other);
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        r.add_mul(self, other);
        r
    }

    pub fn neg(&self) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero_elem() {
            return Self::zero();
        }
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect() }.normalized()
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// The ring involution `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let hi = self.low + self.coeffs.len() as i64 - 1;
        let mut c = self.coeffs.clone();
        c.reverse();
        Laurent { low: -hi, coeffs: c }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// Part with exponents `< 0`.
    pub fn negative_part(&self) -> Self {
        Self::from_terms(self.terms().filter(|(e, _)| *e < 0).map(|(e, c)| (e, c.clone())))
    }

    /// Part with exponents `> 0`.
    pub fn positive_part(&self) -> Self {
        Self::from_terms(self.terms().filter(|(e, _)| *e > 0).map(|(e, c)| (e, c.clone())))
    }

    /// True iff every exponent is `< 0` (membership in A_{<0}).
    pub fn in_negative(&self) -> bool {
        self.degree() < Degree::Finite(0)
    }

    /// True iff every exponent is `>= 0` (membership in A_{>=0}).
    pub fn in_nonnegative(&self) -> bool {
        self.low_degree().is_none_or(|l| l >= 0)
    }

    /// Specialization `v ↦ 1`.
    pub fn eval_one(&self) -> C {
        let mut s = C::zero_elem();
        for c in &self.coeffs {
            s.add_assign_ref(c);
        }
        s
    }

    /// Specialization `v ↦ −1`.
    pub fn eval_minus_one(&self) -> C {
        let mut s = C::zero_elem();
        for (e, c) in self.terms() {
            if e.rem_euclid(2) == 0 {
                s.add_assign_ref(c);
            } else {
                s.sub_assign_ref(c);
            }
        }
        s
    }

    /// The substitution `v ↦ −v`.
    pub fn twist_sign(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, if e.rem_euclid(2) == 0 { c.clone() } else { c.neg_ref() })))
    }

    pub fn map<D: Scalar, F: Fn(&C) -> D>(&self, f: F) -> Laurent<D> {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(f).collect() }.normalized()
    }

    /// Number of stored coefficient slots.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }
}

impl<C: FieldScalar> Laurent<C> {
    /// Exact division; `None` if `other` does not divide `self` in the Laurent ring.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Work with ordinary polynomials after shifting both to start at v^0.
        let num: Vec<C> = self.coeffs.clone();
        let den: &[C] = &other.coeffs;
        if num.len() < den.len() {
            return None;
        }
        let lead_inv = den.last().unwrap().inv()?;
        let mut r = num;
        let dl = den.len() - 1;
        let mut q = vec![C::zero_elem(); r.len() - dl];
        for i in (0..q.len()).rev() {
            let c = r[i + dl].mul_ref(&lead_inv);
            if !c.is_zero_elem() {
                for (j, d) in den.iter().enumerate() {
                    let t = c.mul_ref(d);
                    r[i + j].sub_assign_ref(&t);
                }
            }
            q[i] = c;
        }
        if r.iter().any(|c| !c.is_zero_elem()) {
            return None;
        }
        Some(Laurent { low: self.low - other.low, coeffs: q }.normalized())
    }
}

impl ZPoly {
    pub fn to_rational(&self) -> LaurentPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    pub fn to_algebraic(&self) -> KPoly {
        self.map(|c| AlgebraicNumber::from_rational(BigRational::from_integer(c.clone())))
    }
}

impl LaurentPoly {
    pub fn to_algebraic(&self) -> KPoly {
        self.map(|c| AlgebraicNumber::from_rational(c.clone()))
    }

    /// Integer coefficients, if all coefficients are integral.
    pub fn to_integer(&self) -> Option<ZPoly> {
        if self.terms().all(|(_, c)| c.is_integer()) {
            Some(self.map(|c| c.to_integer()))
        } else {
            None
        }
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})v", c)?,
                _ => write!(f, "({})v^{}", c, e)?,
            }
        }
        Ok(())
    }
}

impl<C: Scalar + fmt::Display> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Canonical form: sorted `[exponent, numerator, denominator]` triples.
impl Serialize for Laurent<BigRational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<_> = self.terms().collect();
        let mut seq = s.serialize_seq(Some(terms.len()))?;
        for (e, c) in terms {
            seq.serialize_element(&(e, c.numer().to_string(), c.denom().to_string()))?;
        }
        seq.end()
    }
}

impl Serialize for Laurent<BigInt> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<_> = self.terms().collect();
        let mut seq = s.serialize_seq(Some(terms.len()))?;
        for (e, c) in terms {
            seq.serialize_element(&(e, c.to_string(), "1"))?;
        }
        seq.end()
    }
}

impl Serialize for Laurent<AlgebraicNumber> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<_> = self.terms().collect();
        let mut seq = s.serialize_seq(Some(terms.len()))?;
        for (e, c) in terms {
            seq.serialize_element(&(e, c))?;
        }
        seq.end()
    }
}

/// Parse the canonical triple form back into a rational Laurent polynomial.
pub fn laurent_from_triples(triples: &[(i64, String, String)]) -> Option<LaurentPoly> {
    let mut r = LaurentPoly::zero();
    for (e, n, d) in triples {
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d == BigInt::from(0) {
            return None;
        }
        r.add_term(*e, &BigRational::new(n, d));
    }
    Some(r)
}
