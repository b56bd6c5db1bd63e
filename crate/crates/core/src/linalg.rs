//! Small dense matrices over Laurent polynomials and exact rationals.

use crate::numfield::{FieldScalar, Laurent, Scalar};

pub type Matrix<C> = Vec<Vec<Laurent<C>>>;

pub fn identity<C: Scalar>(n: usize) -> Matrix<C> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Laurent::one() } else { Laurent::zero() }).collect()).collect()
}

pub fn zero<C: Scalar>(n: usize) -> Matrix<C> {
    vec![vec![Laurent::zero(); n]; n]
}

pub fn mul<C: Scalar>(a: &Matrix<C>, b: &Matrix<C>) -> Matrix<C> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut r = vec![vec![Laurent::zero(); m]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    r[i][j].add_mul(aik, &b[k][j]);
                }
            }
        }
    }
    r
}

pub fn add_scaled<C: Scalar>(acc: &mut Matrix<C>, a: &Matrix<C>, c: &Laurent<C>) {
    for (ra, rb) in acc.iter_mut().zip(a) {
        for (x, y) in ra.iter_mut().zip(rb) {
            if !y.is_zero() {
                x.add_mul(y, c);
            }
        }
    }
}

pub fn trace<C: Scalar>(a: &Matrix<C>) -> Laurent<C> {
    let mut t = Laurent::zero();
    for (i, row) in a.iter().enumerate() {
        t.add_assign_ref(&row[i]);
    }
    t
}

/// `tr(AB)` without forming the product.
pub fn trace_of_product<C: Scalar>(a: &Matrix<C>, b: &Matrix<C>) -> Laurent<C> {
    let mut t = Laurent::zero();
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if !x.is_zero() && !b[k][i].is_zero() {
                t.add_mul(x, &b[k][i]);
            }
        }
    }
    t
}

pub fn map<C: Scalar, D: Scalar>(a: &Matrix<C>, f: impl Fn(&C) -> D) -> Matrix<D> {
    a.iter().map(|r| r.iter().map(|x| x.map(&f)).collect()).collect()
}

/// Reduced row echelon form over a field; returns pivot columns.
pub fn rref<C: FieldScalar>(rows: &mut Vec<Vec<C>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero_elem()) else { continue };
        rows.swap(r, piv);
        let iv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = x.mul_ref(&iv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero_elem() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    if !rows[r][j].is_zero_elem() {
                        let t = f.mul_ref(&rows[r][j]);
                        rows[i][j].sub_assign_ref(&t);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}
