use super::laurent::Laurent;
use super::scalar::FieldScalar;
use super::NumError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Product of two truncated series, kept up to `t^order`.
pub fn series_mul<C: FieldScalar>(a: &[C], b: &[C], order: usize) -> Vec<C> {
    let mut r = vec![C::zero_elem(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        if x.is_zero_elem() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            r[i + j].add_mul_assign(x, y);
        }
    }
    r
}

/// `q` with `p·q ≡ 1 mod t^{order+1}`.
pub fn series_inverse<C: FieldScalar>(p: &[C], order: usize) -> Result<Vec<C>, NumError> {
    let c0 = p.first().ok_or(NumError::ZeroConstantTerm)?;
    let inv0 = c0.inv().ok_or(NumError::ZeroConstantTerm)?;
    let mut q = vec![C::zero_elem(); order + 1];
    q[0] = inv0.clone();
    for n in 1..=order {
        let mut s = C::zero_elem();
        for k in 1..=n.min(p.len().saturating_sub(1)) {
            s.add_mul_assign(&p[k], &q[n - k]);
        }
        q[n] = s.neg_ref().mul_ref(&inv0);
    }
    Ok(q)
}

/// Rational polynomial inverse as a truncated power series.
pub fn truncated_series_inverse(p: &[BigRational], order: usize) -> Result<Vec<BigRational>, NumError> {
    series_inverse(p, order)
}

/// Generalized binomial coefficient `binom(e, k)` for integer `e`.
pub fn binomial(e: i64, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k as i64 {
        num *= BigInt::from(e - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Taylor expansion of `p(1 + t)` up to `t^order`.
pub fn laurent_at_one<C: FieldScalar>(p: &Laurent<C>, order: usize) -> Vec<C> {
    let mut r = vec![C::zero_elem(); order + 1];
    for (e, c) in p.terms() {
        for (k, slot) in r.iter_mut().enumerate() {
            let b = binomial(e, k);
            if !b.is_zero() {
                slot.add_mul_assign(c, &C::from_bigint(&b));
            }
        }
    }
    r
}

/// Recover a Laurent polynomial supported on exponents `low..=high` from the
/// Taylor expansion of `f(1 + t)` (at least `high - low + 1` terms).
pub fn laurent_from_series_at_one<C: FieldScalar>(s: &[C], low: i64, high: i64) -> Laurent<C> {
    let n = (high - low) as usize;
    // q(v) = v^{-low} f(v)
    let shift: Laurent<C> = Laurent::v_pow(-low);
    let sh = laurent_at_one(&shift, n);
    let qs = series_mul(&sh, s, n);
    let mut terms = Vec::new();
    for j in 0..=n {
        let mut cj = C::zero_elem();
        for (k, b) in qs.iter().enumerate().skip(j) {
            if b.is_zero_elem() {
                continue;
            }
            let mut coef = binomial(k as i64, j);
            if (k - j) % 2 == 1 {
                coef = -coef;
            }
            cj.add_mul_assign(b, &C::from_bigint(&coef));
        }
        terms.push((j as i64 + low, cj));
    }
    Laurent::from_terms(terms)
}

/// Evaluate a polynomial (low-to-high coefficients) at a truncated series.
pub fn series_compose_poly<C: FieldScalar>(poly: &[Vec<C>], x: &[C], order: usize) -> Vec<C> {
    let mut acc = vec![C::zero_elem(); order + 1];
    for c in poly.iter().rev() {
        acc = series_mul(&acc, x, order);
        for (a, b) in acc.iter_mut().zip(c.iter()) {
            a.add_assign_ref(b);
        }
    }
    acc
}
