use super::{CharacterError, CharacterTable, ClassPolynomials, HeckeCharacters};
use crate::coxeter::CoxeterGroup;
use crate::numfield::{series_inverse, AlgebraicNumber, FieldScalar, KPoly, Scalar};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::cmp::Ordering;

type An = AlgebraicNumber;

/// Lusztig's `a_χ`, leading coefficients `c_{w,χ}`, `f_χ`, and the
/// numbers `n_w` with the set `𝒟 = {w : n_w ≠ 0}`.
#[derive(Clone, Debug, Serialize)]
pub struct LeadingData {
    pub a: Vec<i64>,
    /// `c[χ][w]`
    pub c: Vec<Vec<An>>,
    pub f: Vec<An>,
    pub n: Vec<An>,
    pub distinguished: Vec<usize>,
}

impl LeadingData {
    pub fn compute(
        g: &CoxeterGroup,
        table: &CharacterTable,
        hc: &HeckeCharacters,
        cp: &ClassPolynomials,
    ) -> Result<Self, CharacterError> {
        let order = g.order();
        let nchars = table.len();
        let mut a = Vec::with_capacity(nchars);
        let mut c = Vec::with_capacity(nchars);
        for chi in 0..nchars {
            let vals: Vec<KPoly> = hc.values(cp, chi, order);
            let ax = vals.iter().filter_map(|p| p.low_degree()).map(|l| -l).max().unwrap_or(0);
            let row: Vec<An> = vals
                .iter()
                .enumerate()
                .map(|(w, p)| {
                    let x = p.coeff(-ax);
                    if g.length(w) % 2 == 1 {
                        x.neg_ref()
                    } else {
                        x
                    }
                })
                .collect();
            if row.iter().all(Scalar::is_zero_elem) {
                return Err(CharacterError::Inconsistent(format!("character {chi} has no leading coefficient")));
            }
            a.push(ax);
            c.push(row);
        }
        for (chi, row) in c.iter().enumerate() {
            if (0..order).any(|w| row[w] != row[g.inverse(w)]) {
                return Err(CharacterError::Inconsistent(format!("c_(w,{chi}) ≠ c_(w⁻¹,{chi})")));
            }
        }
        let mut f = Vec::with_capacity(nchars);
        for chi in 0..nchars {
            for chi2 in 0..=chi {
                let mut s = An::zero_elem();
                for w in 0..order {
                    if !c[chi][w].is_zero_elem() && !c[chi2][w].is_zero_elem() {
                        s.add_assign_ref(&c[chi][w].mul_ref(&c[chi2][w]));
                    }
                }
                if chi2 < chi && !s.is_zero_elem() {
                    return Err(CharacterError::Inconsistent(format!(
                        "leading coefficients of {chi} and {chi2} are not orthogonal"
                    )));
                }
                if chi2 == chi {
                    let fx = s.scale(&BigRational::new(1.into(), table.degree(chi).into()));
                    if fx.sign() != Ordering::Greater {
                        return Err(CharacterError::Inconsistent(format!("f of character {chi} is not positive")));
                    }
                    f.push(fx);
                }
            }
        }
        let finv: Vec<An> = f.iter().map(|x| x.inv().expect("f > 0")).collect();
        let n: Vec<An> = (0..order)
            .map(|w| {
                let mut s = An::zero_elem();
                for chi in 0..nchars {
                    if !c[chi][w].is_zero_elem() {
                        s.add_assign_ref(&finv[chi].mul_ref(&c[chi][w]));
                    }
                }
                s
            })
            .collect();
        let distinguished = (0..order).filter(|&w| !n[w].is_zero_elem()).collect();
        Ok(LeadingData { a, c, f, n, distinguished })
    }

    /// `χ` is exceptional if `c_{w,χ} ≠ 0` for some `w` with `ℓ(w) ≢ a_χ (mod 2)`.
    pub fn exceptional(&self, g: &CoxeterGroup) -> Vec<bool> {
        self.c
            .iter()
            .zip(&self.a)
            .map(|(row, &a)| {
                row.iter()
                    .enumerate()
                    .any(|(w, x)| !x.is_zero_elem() && (g.length(w) as i64 - a).rem_euclid(2) == 1)
            })
            .collect()
    }

    pub fn f_is_one(&self, chi: usize) -> bool {
        self.f[chi] == An::from_int(1)
    }
}

/// `χ̃` with `χ̃_φ(T_w) = (−1)^{ℓ(w)} χ_φ(T_w)|_{v ↦ −v}`.
pub fn twisted_characters(g: &CoxeterGroup, table: &CharacterTable, hc: &HeckeCharacters) -> Option<Vec<usize>> {
    let reps = table.class_reps();
    (0..hc.len())
        .map(|chi| {
            let t: Vec<KPoly> = reps
                .iter()
                .enumerate()
                .map(|(k, &w)| {
                    let p = hc.at_rep(chi, k).twist_sign();
                    if g.length(w) % 2 == 1 {
                        p.neg()
                    } else {
                        p
                    }
                })
                .collect();
            (0..hc.len()).find(|&x| hc.row_at_reps(x) == t.as_slice())
        })
        .collect()
}

/// `det(1 − q·g)` as a polynomial in `q`, low degree first.
fn det_one_minus(m: &[Vec<An>]) -> Vec<An> {
    // Faddeev–LeVerrier: det(x − A) = Σ c_k x^k
    let n = m.len();
    let mut c = vec![An::zero_elem(); n + 1];
    c[n] = An::from_int(1);
    let mut mk: Vec<Vec<An>> = vec![vec![An::zero_elem(); n]; n];
    for k in 1..=n {
        let mut next = vec![vec![An::zero_elem(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = An::zero_elem();
                for (l, x) in m[i].iter().enumerate() {
                    s.add_assign_ref(&x.mul_ref(&mk[l][j]));
                }
                next[i][j] = s;
            }
            next[i][i].add_assign_ref(&c[n - k + 1]);
        }
        let mut tr = An::zero_elem();
        for i in 0..n {
            for l in 0..n {
                tr.add_assign_ref(&m[i][l].mul_ref(&next[l][i]));
            }
        }
        c[n - k] = tr.scale(&BigRational::new((-1).into(), (k as i64).into()));
        mk = next;
    }
    (0..=n).map(|j| c[n - j].clone()).collect()
}

/// `b_χ` from the Molien series `(1/|W|) Σ_w χ(w)/det(1 − q·w)`, which counts
/// the multiplicity of `χ` in each symmetric power of the reflection
/// representation.
pub fn b_invariants(g: &CoxeterGroup, table: &CharacterTable) -> Result<Vec<i64>, CharacterError> {
    let order = g.num_positive_roots();
    let inverses: Vec<Vec<An>> = table
        .class_reps()
        .iter()
        .map(|&w| series_inverse(&det_one_minus(&g.reflection_matrix(w)), order).expect("det(1) = 1"))
        .collect();
    let sizes = table.class_sizes();
    let scale = BigRational::new(1.into(), (g.order() as i64).into());
    (0..table.len())
        .map(|chi| {
            let mut series = vec![An::zero_elem(); order + 1];
            for (k, inv) in inverses.iter().enumerate() {
                let weight = table.value(chi, k).mul_ref(&An::from_int(sizes[k] as i64));
                for (s, x) in series.iter_mut().zip(inv) {
                    s.add_assign_ref(&weight.mul_ref(x));
                }
            }
            let mut b = None;
            for (j, x) in series.iter().enumerate() {
                let q = x.scale(&scale).to_rational().filter(|q| q.is_integer() && !q.is_negative());
                let q = q.ok_or_else(|| CharacterError::NonIntegral(format!("Molien coefficient {j} of {chi}")))?;
                if b.is_none() && !q.is_zero() {
                    b = Some(j as i64);
                }
            }
            b.ok_or_else(|| CharacterError::Inconsistent(format!("character {chi} not in degree ≤ N")))
        })
        .collect()
}

/// `χ` special iff `a_χ = b_χ`.
pub fn special_flags(a: &[i64], b: &[i64]) -> Vec<bool> {
    a.iter().zip(b).map(|(x, y)| x == y).collect()
}
