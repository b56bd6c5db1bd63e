use super::CellError;
use crate::coxeter::CoxeterGroup;
use crate::hecke::KLTable;
use crate::linalg::{self, Matrix};
use crate::numfield::ZPoly;
use num_bigint::BigInt;
use num_traits::ToPrimitive;

/// The left cell module `V_C`: basis `e_y` (`y ∈ C`), with
/// `c_x†.e_y = Σ_{z∈C} h_{x,y,z} e_z`.
///
/// Since `c_s† = v^{φ(s)} − T_s`, the generator `T_s` acts by
/// `v^{φ(s)}·1 − H_s` with `(H_s)_{z,y} = h_{s,y,z}`.
#[derive(Clone, Debug)]
pub struct CellModule {
    members: Vec<usize>,
    weights: Vec<i64>,
    /// `h[s][z]`: the nonzero `(y, h_{s,y,z})` with `y, z` in the cell
    h: Vec<Vec<Vec<(usize, ZPoly)>>>,
}

impl CellModule {
    pub fn new(kl: &KLTable, cell: &[usize]) -> Self {
        let g = kl.group();
        let mut members = cell.to_vec();
        members.sort_unstable();
        let pos = |w: usize| members.binary_search(&w).ok();
        let d = members.len();
        let mut h = vec![vec![Vec::new(); d]; g.rank()];
        for (s, hs) in h.iter_mut().enumerate() {
            for (j, &y) in members.iter().enumerate() {
                for (z, c) in kl.left_mul(s, y) {
                    if let Some(i) = pos(*z as usize) {
                        hs[i].push((j, c.clone()));
                    }
                }
            }
        }
        CellModule { members, weights: kl.weights().values().to_vec(), h }
    }

    pub fn dim(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Matrix of `c_s†`, i.e. `(h_{s,y,z})_{z,y}`.
    pub fn c_dagger_matrix(&self, s: usize) -> Matrix<BigInt> {
        let d = self.dim();
        let mut m = linalg::zero(d);
        for (i, row) in self.h[s].iter().enumerate() {
            for (j, c) in row {
                m[i][*j] = c.clone();
            }
        }
        m
    }

    pub fn t_matrix_generator(&self, s: usize) -> Matrix<BigInt> {
        let mut m = self.c_dagger_matrix(s);
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x = x.neg();
            }
        }
        for (i, row) in m.iter_mut().enumerate() {
            row[i].add_assign_ref(&ZPoly::v_pow(self.weights[s]));
        }
        m
    }

    /// `ρ(T_s)·m`.
    pub fn apply_t(&self, s: usize, m: &Matrix<BigInt>) -> Matrix<BigInt> {
        let vl = ZPoly::v_pow(self.weights[s]);
        let mut out: Matrix<BigInt> = m.iter().map(|row| row.iter().map(|x| x.mul(&vl)).collect()).collect();
        for (i, row) in self.h[s].iter().enumerate() {
            for (j, c) in row {
                for (o, x) in out[i].iter_mut().zip(&m[*j]) {
                    if !x.is_zero() {
                        o.sub_mul(c, x);
                    }
                }
            }
        }
        out
    }

    /// `ρ(T_w)`.
    pub fn t_matrix(&self, g: &CoxeterGroup, w: usize) -> Matrix<BigInt> {
        let mut m = linalg::identity(self.dim());
        for &s in g.word(w).iter().rev() {
            m = self.apply_t(s as usize, &m);
        }
        m
    }

    /// `ρ(T_w)` for every `w`, by `T_w = T_s T_{sw}` along the id order.
    pub fn all_t_matrices(&self, g: &CoxeterGroup) -> Vec<Matrix<BigInt>> {
        let mut out: Vec<Matrix<BigInt>> = Vec::with_capacity(g.order());
        out.push(linalg::identity(self.dim()));
        for w in 1..g.order() {
            let s = g.word(w)[0] as usize;
            let m = self.apply_t(s, &out[g.lmul(s, w)]);
            out.push(m);
        }
        out
    }

    pub fn trace_t(&self, g: &CoxeterGroup, w: usize) -> ZPoly {
        linalg::trace(&self.t_matrix(g, w))
    }

    /// Quadratic and braid relations of `H`, checked exactly.
    pub fn check_relations(&self, g: &CoxeterGroup) -> Result<(), CellError> {
        let d = self.dim();
        let id: Matrix<BigInt> = linalg::identity(d);
        for s in 0..g.rank() {
            let ts = self.t_matrix_generator(s);
            let l = self.weights[s];
            let xi = ZPoly::v_pow(l).sub(&ZPoly::v_pow(-l));
            let mut rhs = id.clone();
            linalg::add_scaled(&mut rhs, &ts, &xi);
            if self.apply_t(s, &ts) != rhs {
                return Err(CellError::Relation(format!("T_{}² on cell {:?}", s + 1, self.members)));
            }
        }
        for s in 0..g.rank() {
            for t in s + 1..g.rank() {
                let m = g.system().m(s, t) as usize;
                let (mut a, mut b) = (id.clone(), id.clone());
                for k in 0..m {
                    a = self.apply_t(if k % 2 == 0 { s } else { t }, &a);
                    b = self.apply_t(if k % 2 == 0 { t } else { s }, &b);
                }
                if a != b {
                    return Err(CellError::Relation(format!("braid ({}, {}) on cell {:?}", s + 1, t + 1, self.members)));
                }
            }
        }
        Ok(())
    }

    /// Integer matrices of the generators after `v ↦ 1`.
    pub fn specialized_generators(&self) -> Vec<Vec<Vec<i64>>> {
        let d = self.dim();
        self.h
            .iter()
            .map(|hs| {
                let mut m = vec![vec![0i64; d]; d];
                for (i, row) in hs.iter().enumerate() {
                    m[i][i] += 1;
                    for (j, c) in row {
                        m[i][*j] -= c.eval_one().to_i64().expect("small cell coefficient");
                    }
                }
                m
            })
            .collect()
    }

    /// The character `[C]` of `W` on the class representatives `reps`.
    pub fn specialized_character(&self, g: &CoxeterGroup, reps: &[usize]) -> Vec<i64> {
        let gens = self.specialized_generators();
        let d = self.dim();
        reps.iter()
            .map(|&w| {
                let mut m: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| (i == j) as i64).collect()).collect();
                for &s in g.word(w).iter().rev() {
                    let gs = &gens[s as usize];
                    m = (0..d)
                        .map(|i| (0..d).map(|j| (0..d).map(|k| gs[i][k] * m[k][j]).sum()).collect())
                        .collect();
                }
                (0..d).map(|i| m[i][i]).sum()
            })
            .collect()
    }
}
