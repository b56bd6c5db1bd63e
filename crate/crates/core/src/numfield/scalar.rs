use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;

/// Coefficient ring used by [`Laurent`](super::Laurent) and the series helpers.
///
/// All operations take references so big-integer payloads are not cloned
/// more than necessary.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_bigint(n: &BigInt) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn sub_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn is_one_elem(&self) -> bool {
        *self == Self::one_elem()
    }

    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }
}

/// Scalars with exact division.
pub trait FieldScalar: Scalar {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
}

impl Scalar for BigInt {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_one_elem(&self) -> bool {
        One::is_one(self)
    }
}

impl Scalar for BigRational {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_one_elem(&self) -> bool {
        One::is_one(self)
    }
}

impl FieldScalar for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Convenience constructor for rationals.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact conversion of an integer-valued rational, `None` otherwise.
pub fn rat_to_int(q: &BigRational) -> Option<BigInt> {
    if q.is_integer() {
        Some(q.to_integer())
    } else {
        None
    }
}
