use super::scalar::{FieldScalar, Scalar};
use super::NumError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// The real field generated by `2cos(π/m)`, stored through the minimal
/// polynomial of that generator.
#[derive(Debug)]
pub struct MinPolyField {
    m: u32,
    /// Monic integer polynomial, coefficients from degree 0 upwards.
    poly: Vec<BigInt>,
    root_lo: BigRational,
    root_hi: BigRational,
}

impl PartialEq for MinPolyField {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

fn poly_divexact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // both low-to-high, den monic
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    if r.len() <= dd {
        return vec![];
    }
    let mut q = vec![BigInt::zero(); r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd].clone();
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                r[i + j] -= &c * dj;
            }
        }
        q[i] = c;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()));
    q
}

/// Cyclotomic polynomial Φ_n, low-to-high coefficients.
pub fn cyclotomic(n: u32) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic(d);
            num = poly_divexact(&num, &phi_d);
        }
    }
    num
}

/// Minimal polynomial of `2cos(π/m)` as low-to-high integer coefficients.
pub fn min_poly_2cos_pi_over(m: u32) -> Vec<BigInt> {
    match m {
        0 => panic!("m must be positive"),
        1 => return vec![BigInt::from(2), BigInt::one()],
        _ => {}
    }
    // Φ_{2m}(z) = z^d Ψ(z + 1/z), expand through Dickson polynomials.
    let phi = cyclotomic(2 * m);
    let d = (phi.len() - 1) / 2;
    let mut dickson: Vec<Vec<BigInt>> = vec![vec![BigInt::from(2)], vec![BigInt::zero(), BigInt::one()]];
    for k in 2..=d {
        let mut next = vec![BigInt::zero(); k + 1];
        for (i, c) in dickson[k - 1].iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in dickson[k - 2].iter().enumerate() {
            next[i] -= c;
        }
        dickson.push(next);
    }
    let mut psi = vec![BigInt::zero(); d + 1];
    psi[0] += &phi[d];
    for k in 1..=d {
        let a = &phi[d + k];
        for (i, c) in dickson[k].iter().enumerate() {
            psi[i] += a * c;
        }
    }
    psi
}

fn eval_rat(poly: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in poly.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

fn dyadic(x: f64) -> BigRational {
    let scale = 1i64 << 40;
    BigRational::new(BigInt::from((x * scale as f64).round() as i64), BigInt::from(scale))
}

impl MinPolyField {
    /// Field generated by `2cos(π/m)`.
    pub fn new(m: u32) -> Result<Self, NumError> {
        if m == 0 {
            return Err(NumError::InvalidField(m));
        }
        let poly = min_poly_2cos_pi_over(m);
        let approx = 2.0 * (std::f64::consts::PI / m as f64).cos();
        let mut eps = 1e-9;
        loop {
            let lo = dyadic(approx - eps);
            let hi = dyadic(approx + eps);
            let (flo, fhi) = (eval_rat(&poly, &lo), eval_rat(&poly, &hi));
            if poly.len() == 2 || flo.signum() * fhi.signum() < BigRational::zero() {
                return Ok(MinPolyField { m, poly, root_lo: lo, root_hi: hi });
            }
            eps *= 4.0;
            if eps > 1e-3 {
                return Err(NumError::RootIsolation(m));
            }
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.poly.len() - 1
    }

    pub fn minimal_polynomial(&self) -> &[BigInt] {
        &self.poly
    }

    pub fn approx_generator(&self) -> f64 {
        2.0 * (std::f64::consts::PI / self.m as f64).cos()
    }

    fn reduce(&self, mut c: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        if c.len() > d {
            for i in (d..c.len()).rev() {
                let top = std::mem::take(&mut c[i]);
                if top.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let t = &top * BigRational::from_integer(self.poly[j].clone());
                    c[i - d + j] -= t;
                }
            }
            c.truncate(d);
        }
        c
    }

    /// Sign of `Σ c_i θ^i` at the distinguished real root θ, by interval refinement.
    fn sign_of(&self, c: &[BigRational]) -> Ordering {
        if c.is_empty() {
            return Ordering::Equal;
        }
        if c.len() == 1 {
            return c[0].cmp(&BigRational::zero());
        }
        let mut lo = self.root_lo.clone();
        let mut hi = self.root_hi.clone();
        let plo = eval_rat(&self.poly, &lo).signum();
        for _ in 0..400 {
            let (a, b) = interval_horner(c, &lo, &hi);
            if a > BigRational::zero() {
                return Ordering::Greater;
            }
            if b < BigRational::zero() {
                return Ordering::Less;
            }
            let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
            let pm = eval_rat(&self.poly, &mid);
            if pm.is_zero() {
                // a rational root would make the polynomial reducible
                lo = mid.clone();
                hi = mid;
            } else if pm.signum() == plo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        panic!("sign refinement did not terminate for a nonzero element");
    }

    /// `2cos(π j / m)` as a field element, through the Dickson recursion.
    pub fn cos_multiple(self: &Arc<Self>, j: i64) -> AlgebraicNumber {
        let period = 2 * self.m as i64;
        let mut j = j.rem_euclid(period);
        if j > self.m as i64 {
            j = period - j;
        }
        let theta = AlgebraicNumber::generator(self);
        let mut prev = AlgebraicNumber::from_int(2);
        if j == 0 {
            return prev;
        }
        let mut cur = theta.clone();
        for _ in 1..j {
            let next = &(&theta * &cur) - &prev;
            prev = cur;
            cur = next;
        }
        cur
    }
}

fn interval_horner(c: &[BigRational], lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut a = c.last().unwrap().clone();
    let mut b = a.clone();
    for ci in c.iter().rev().skip(1) {
        let prods = [&a * lo, &a * hi, &b * lo, &b * hi];
        let mut mn = prods[0].clone();
        let mut mx = prods[0].clone();
        for p in &prods[1..] {
            if *p < mn {
                mn = p.clone();
            }
            if *p > mx {
                mx = p.clone();
            }
        }
        a = mn + ci;
        b = mx + ci;
    }
    (a, b)
}

/// Element of a [`MinPolyField`], in power-basis coordinates.
///
/// Rational elements may omit the field; arithmetic picks up the field from
/// whichever operand carries one.
#[derive(Clone)]
pub struct AlgebraicNumber {
    field: Option<Arc<MinPolyField>>,
    coeffs: Vec<BigRational>,
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}
impl Eq for AlgebraicNumber {}

fn trim(mut c: Vec<BigRational>) -> Vec<BigRational> {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

impl AlgebraicNumber {
    pub fn new(field: &Arc<MinPolyField>, coeffs: Vec<BigRational>) -> Self {
        let coeffs = trim(field.reduce(coeffs));
        AlgebraicNumber { field: Some(field.clone()), coeffs }
    }

    pub fn from_rational(q: BigRational) -> Self {
        AlgebraicNumber { field: None, coeffs: trim(vec![q]) }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn generator(field: &Arc<MinPolyField>) -> Self {
        Self::new(field, vec![BigRational::zero(), BigRational::one()])
    }

    pub fn field(&self) -> Option<&Arc<MinPolyField>> {
        self.field.as_ref()
    }

    pub fn with_field(mut self, field: &Arc<MinPolyField>) -> Self {
        self.field = Some(field.clone());
        self
    }

    /// Coordinates in the power basis (trailing zeros trimmed).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn sign(&self) -> Ordering {
        if self.coeffs.len() <= 1 {
            return self.coeffs.first().map_or(Ordering::Equal, |c| c.cmp(&BigRational::zero()));
        }
        self.field.as_ref().expect("irrational element without field").sign_of(&self.coeffs)
    }

    /// Compare as real numbers (via the distinguished embedding).
    pub fn cmp_real(&self, other: &Self) -> Ordering {
        (self - other).sign()
    }

    pub fn to_f64(&self) -> f64 {
        let x = self.field.as_ref().map_or(0.0, |f| f.approx_generator());
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    fn pick_field(&self, other: &Self) -> Option<Arc<MinPolyField>> {
        self.field.clone().or_else(|| other.field.clone())
    }

    pub fn inverse(&self) -> Result<Self, NumError> {
        if self.coeffs.is_empty() {
            return Err(NumError::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(AlgebraicNumber { field: self.field.clone(), coeffs: vec![self.coeffs[0].recip()] });
        }
        let field = self.field.as_ref().expect("irrational element without field");
        let d = field.degree();
        // columns: self * θ^j
        let mut mat = vec![vec![BigRational::zero(); d + 1]; d];
        let mut col = self.coeffs.clone();
        col.resize(d, BigRational::zero());
        for j in 0..d {
            for i in 0..d {
                mat[i][j] = col.get(i).cloned().unwrap_or_else(BigRational::zero);
            }
            let mut shifted = vec![BigRational::zero()];
            shifted.extend(col.iter().cloned());
            col = field.reduce(shifted);
            col.resize(d, BigRational::zero());
        }
        mat[0][d] = BigRational::one();
        let sol = solve_square(mat).ok_or(NumError::DivisionByZero)?;
        Ok(AlgebraicNumber::new(field, sol))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = AlgebraicNumber::from_int(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Rational multiple.
    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return AlgebraicNumber { field: self.field.clone(), coeffs: vec![] };
        }
        AlgebraicNumber { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }
}

/// Gaussian elimination on an augmented `d × (d+1)` matrix.
pub(crate) fn solve_square(mut mat: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let d = mat.len();
    for col in 0..d {
        let piv = (col..d).find(|&r| !mat[r][col].is_zero())?;
        mat.swap(col, piv);
        let inv = mat[col][col].recip();
        for x in mat[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..d {
            if r != col && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for c in col..=d {
                    let t = &f * &mat[col][c];
                    mat[r][c] -= t;
                }
            }
        }
    }
    Some(mat.into_iter().map(|row| row[d].clone()).collect())
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*z", c)?,
                _ => write!(f, "{}*z^{}", c, i)?,
            }
        }
        Ok(())
    }
}

impl Serialize for AlgebraicNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'a> Add<&'a AlgebraicNumber> for &'a AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn add(self, o: &AlgebraicNumber) -> AlgebraicNumber {
        let mut r = self.clone();
        r.add_assign_ref(o);
        r
    }
}
impl<'a> Sub<&'a AlgebraicNumber> for &'a AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn sub(self, o: &AlgebraicNumber) -> AlgebraicNumber {
        let mut r = self.clone();
        r.sub_assign_ref(o);
        r
    }
}
impl<'a> Mul<&'a AlgebraicNumber> for &'a AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn mul(self, o: &AlgebraicNumber) -> AlgebraicNumber {
        self.mul_ref(o)
    }
}
impl Neg for &AlgebraicNumber {
    type Output = AlgebraicNumber;
    fn neg(self) -> AlgebraicNumber {
        self.neg_ref()
    }
}

impl Scalar for AlgebraicNumber {
    fn zero_elem() -> Self {
        AlgebraicNumber { field: None, coeffs: vec![] }
    }
    fn one_elem() -> Self {
        AlgebraicNumber::from_int(1)
    }
    fn from_i64(n: i64) -> Self {
        AlgebraicNumber::from_int(n)
    }
    fn from_bigint(n: &BigInt) -> Self {
        AlgebraicNumber::from_rational(BigRational::from_integer(n.clone()))
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_assign_ref(&mut self, o: &Self) {
        if self.field.is_none() {
            self.field = o.field.clone();
        }
        if self.coeffs.len() < o.coeffs.len() {
            self.coeffs.resize(o.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            *a += b;
        }
        let c = std::mem::take(&mut self.coeffs);
        self.coeffs = trim(c);
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        if self.field.is_none() {
            self.field = o.field.clone();
        }
        if self.coeffs.len() < o.coeffs.len() {
            self.coeffs.resize(o.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            *a -= b;
        }
        let c = std::mem::take(&mut self.coeffs);
        self.coeffs = trim(c);
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let field = self.pick_field(o);
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return AlgebraicNumber { field, coeffs: vec![] };
        }
        if self.coeffs.len() == 1 {
            let mut r = o.scale(&self.coeffs[0]);
            r.field = field;
            return r;
        }
        if o.coeffs.len() == 1 {
            let mut r = self.scale(&o.coeffs[0]);
            r.field = field;
            return r;
        }
        let mut prod = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        let f = field.expect("irrational product without field");
        let coeffs = trim(f.reduce(prod));
        AlgebraicNumber { field: Some(f), coeffs }
    }
    fn neg_ref(&self) -> Self {
        AlgebraicNumber { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl FieldScalar for AlgebraicNumber {
    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

/// Express an element of `big` lying in the subfield generated by `2cos(π/small.m())`
/// in the power basis of `small`. Requires `small.m()` to divide `big.m()`.
pub fn descend(
    x: &AlgebraicNumber,
    big: &Arc<MinPolyField>,
    small: &Arc<MinPolyField>,
) -> Option<AlgebraicNumber> {
    if x.is_rational() {
        return Some(AlgebraicNumber::from_rational(x.to_rational().unwrap()).with_field(small));
    }
    if big.m() % small.m() != 0 {
        return None;
    }
    let image = big.cos_multiple((big.m() / small.m()) as i64);
    let (db, ds) = (big.degree(), small.degree());
    let mut cols = Vec::with_capacity(ds);
    let mut p = AlgebraicNumber::from_int(1).with_field(big);
    for _ in 0..ds {
        let mut c = p.coeffs().to_vec();
        c.resize(db, BigRational::zero());
        cols.push(c);
        p = &p * &image;
    }
    let mut target = x.coeffs().to_vec();
    target.resize(db, BigRational::zero());
    // least-squares-free: eliminate on the db × ds system, then check consistency
    let mut rows: Vec<Vec<BigRational>> = (0..db)
        .map(|i| {
            let mut r: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let mut rank = 0;
    let mut pivots = vec![];
    for col in 0..ds {
        let Some(piv) = (rank..db).find(|&r| !rows[r][col].is_zero()) else { continue };
        rows.swap(rank, piv);
        let inv = rows[rank][col].recip();
        for v in rows[rank].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..db {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..=ds {
                    let t = &f * &rows[rank][c];
                    rows[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| !r[ds].is_zero()) {
        return None;
    }
    let mut sol = vec![BigRational::zero(); ds];
    for (r, &c) in pivots.iter().enumerate() {
        sol[c] = rows[r][ds].clone();
    }
    Some(AlgebraicNumber::new(small, sol))
}

/// Least common multiple helper for field selection.
pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}
