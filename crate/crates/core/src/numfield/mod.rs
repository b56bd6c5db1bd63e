//! Exact scalars: real cyclotomic fields, Laurent polynomials in `v`, and
//! truncated power series.

mod field;
mod laurent;
mod scalar;
mod series;

pub use field::{cyclotomic, descend, lcm_u32, min_poly_2cos_pi_over, AlgebraicNumber, MinPolyField};
pub use laurent::{laurent_from_triples, Degree, KPoly, Laurent, LaurentPoly, ZPoly};
pub use scalar::{rat, rat_to_int, FieldScalar, Scalar};
pub use series::{
    binomial, laurent_at_one, laurent_from_series_at_one, series_compose_poly, series_inverse, series_mul,
    truncated_series_inverse,
};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("no field for 2cos(pi/{0})")]
    InvalidField(u32),
    #[error("could not isolate the root 2cos(pi/{0})")]
    RootIsolation(u32),
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use std::sync::Arc;

    fn zp(terms: &[(i64, i64)]) -> ZPoly {
        ZPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn laurent_examples() {
        assert!(zp(&[(1, 1)]).mul(&zp(&[(-1, 1)])).is_one());
        let a = zp(&[(1, 1), (-1, -1)]);
        let b = zp(&[(1, 1), (-1, 1)]);
        assert_eq!(a.mul(&b), zp(&[(2, 1), (-2, -1)]));
        assert_eq!(zp(&[(3, 2), (-1, -1)]).bar(), zp(&[(-3, 2), (1, -1)]));
    }

    #[test]
    fn degrees() {
        assert_eq!(ZPoly::zero().degree(), Degree::NegInfinity);
        assert_eq!(zp(&[(2, 1), (0, 3)]).degree(), Degree::Finite(2));
        assert_eq!(zp(&[(-5, 1)]).degree(), Degree::Finite(-5));
        assert!(Degree::NegInfinity < Degree::Finite(-100));
    }

    #[test]
    fn golden_field() {
        let f = Arc::new(MinPolyField::new(5).unwrap());
        let poly: Vec<i64> = f.minimal_polynomial().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(poly, vec![-1, -1, 1]);
        let c = AlgebraicNumber::generator(&f);
        let one = AlgebraicNumber::from_int(1);
        assert_eq!(&c * &c, &c + &one);
        assert_eq!(c.inverse().unwrap(), &c - &one);
        assert_eq!(&c + &AlgebraicNumber::from_int(0), c);
        assert_eq!(c.sign(), std::cmp::Ordering::Greater);
        assert_eq!((&one - &c).sign(), std::cmp::Ordering::Less);
    }

    #[test]
    fn min_polys() {
        let as_i64 = |m| -> Vec<i64> { min_poly_2cos_pi_over(m).iter().map(|c| c.try_into().unwrap()).collect() };
        assert_eq!(as_i64(2), vec![0, 1]);
        assert_eq!(as_i64(3), vec![-1, 1]);
        assert_eq!(as_i64(4), vec![-2, 0, 1]);
        assert_eq!(as_i64(6), vec![-3, 0, 1]);
        assert_eq!(as_i64(7), vec![1, -2, -1, 1]);
    }

    #[test]
    fn series_examples() {
        let r = |n| BigRational::from_integer(BigInt::from(n));
        assert_eq!(truncated_series_inverse(&[r(1), r(-1)], 3).unwrap(), vec![r(1), r(1), r(1), r(1)]);
        assert_eq!(truncated_series_inverse(&[r(1)], 5).unwrap(), vec![r(1), r(0), r(0), r(0), r(0), r(0)]);
        assert_eq!(truncated_series_inverse(&[r(1), r(-2), r(1)], 2).unwrap(), vec![r(1), r(2), r(3)]);
        assert_eq!(truncated_series_inverse(&[r(0), r(1)], 2), Err(NumError::ZeroConstantTerm));
    }

    #[test]
    fn taylor_round_trip() {
        let p = zp(&[(-3, 2), (0, -1), (2, 5)]).to_rational();
        let s = laurent_at_one(&p, 5);
        assert_eq!(laurent_from_series_at_one(&s, -3, 2), p);
    }

    #[test]
    fn descend_into_subfield() {
        let big = Arc::new(MinPolyField::new(10).unwrap());
        let small = Arc::new(MinPolyField::new(5).unwrap());
        let x = big.cos_multiple(2);
        let y = descend(&x, &big, &small).unwrap();
        assert_eq!(y, AlgebraicNumber::generator(&small));
    }
}
