use super::CharacterError;
use crate::coxeter::CoxeterGroup;
use crate::hecke::WeightFunction;
use crate::numfield::{Laurent, Scalar, ZPoly};
use std::collections::VecDeque;

/// Class polynomials `f_{w,𝒞}`: every trace function `t` on `H` satisfies
/// `t(T_w) = Σ_𝒞 f_{w,𝒞} t(T_{w_𝒞})` with `w_𝒞` the class representatives.
#[derive(Clone, Debug)]
pub struct ClassPolynomials {
    /// sparse rows, sorted by class index
    rows: Vec<Vec<(u32, ZPoly)>>,
}

fn add_row(acc: &mut Vec<(u32, ZPoly)>, row: &[(u32, ZPoly)], c: &ZPoly) {
    for (k, p) in row {
        let t = p.mul(c);
        match acc.binary_search_by_key(k, |e| e.0) {
            Ok(i) => {
                acc[i].1.add_assign_ref(&t);
                if acc[i].1.is_zero() {
                    acc.remove(i);
                }
            }
            Err(i) => {
                if !t.is_zero() {
                    acc.insert(i, (*k, t));
                }
            }
        }
    }
}

impl ClassPolynomials {
    pub fn compute(g: &CoxeterGroup, phi: &WeightFunction) -> Result<Self, CharacterError> {
        let n = g.order();
        let classes = g.classes();
        let min_len: Vec<usize> = classes.iter().map(|c| g.length(c.rep)).collect();
        let mut rows: Vec<Option<Vec<(u32, ZPoly)>>> = vec![None; n];
        for w in 0..n {
            if rows[w].is_some() {
                continue;
            }
            let len = g.length(w);
            // equal-length cyclic shift class of w
            let mut seen = vec![w];
            let mut queue = VecDeque::from([w]);
            let mut drop = None;
            while let Some(u) = queue.pop_front() {
                for s in 0..g.rank() {
                    let c = g.conjugate(g.lmul(s, g.identity()), u);
                    let lc = g.length(c);
                    if lc + 2 == len && drop.is_none() {
                        drop = Some((u, s));
                    }
                    if lc == len && !seen.contains(&c) {
                        seen.push(c);
                        queue.push_back(c);
                    }
                }
            }
            let row = match drop {
                Some((u, s)) => {
                    let sus = g.conjugate(g.lmul(s, g.identity()), u);
                    let us = g.rmul(u, s);
                    let l = phi.get(s);
                    let xi = ZPoly::v_pow(l).sub(&ZPoly::v_pow(-l));
                    let mut r = rows[sus].clone().expect("shorter element done");
                    add_row(&mut r, rows[us].as_ref().expect("shorter element done"), &xi);
                    r
                }
                None => {
                    let k = g.class_of(w);
                    if min_len[k] != len {
                        return Err(CharacterError::Inconsistent(format!(
                            "no length-reducing conjugation from {}",
                            g.word_string(w)
                        )));
                    }
                    vec![(k as u32, ZPoly::one())]
                }
            };
            for u in seen {
                rows[u] = Some(row.clone());
            }
        }
        Ok(ClassPolynomials { rows: rows.into_iter().map(Option::unwrap).collect() })
    }

    pub fn row(&self, w: usize) -> &[(u32, ZPoly)] {
        &self.rows[w]
    }

    /// `Σ_𝒞 f_{w,𝒞} x_𝒞` for values `x_𝒞` at the representatives.
    pub fn evaluate<C: Scalar>(
        &self,
        w: usize,
        at_reps: &[Laurent<C>],
        lift: impl Fn(&ZPoly) -> Laurent<C>,
    ) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (k, f) in &self.rows[w] {
            out.add_mul(&lift(f), &at_reps[*k as usize]);
        }
        out
    }
}
