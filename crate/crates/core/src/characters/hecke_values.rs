use super::{CharacterError, CharacterTable, ClassPolynomials};
use crate::cells::{CellCharacters, CellModule, CellPartition};
use crate::hecke::KLTable;
use crate::linalg::{self, Matrix};
use crate::numfield::{
    laurent_at_one, laurent_from_series_at_one, series_mul, AlgebraicNumber, FieldScalar, KPoly, Scalar, ZPoly,
};
use num_bigint::BigInt;
use num_rational::BigRational;

type An = AlgebraicNumber;

/// Values `χ_φ(T_w)` of the irreducible characters of `H`, stored at the
/// class representatives and extended to all `w` by class polynomials.
#[derive(Clone, Debug)]
pub struct HeckeCharacters {
    at_reps: Vec<Vec<KPoly>>,
    split_cells: Vec<usize>,
}

impl HeckeCharacters {
    /// Traces of `T_w` on the left cell modules, decomposed through the
    /// multiplicities `⟨[C], χ⟩`. Characters the linear system leaves
    /// undetermined are separated inside one cell module by the action of a
    /// central element.
    pub fn compute(
        kl: &KLTable,
        partition: &CellPartition,
        cc: &CellCharacters,
        table: &CharacterTable,
        cp: &ClassPolynomials,
    ) -> Result<Self, CharacterError> {
        let g = kl.group();
        let reps = table.class_reps();
        let nchars = table.len();
        let cells = partition.left_cells();
        let modules: Vec<CellModule> = cells.iter().map(|c| CellModule::new(kl, c)).collect();
        let theta: Vec<Vec<ZPoly>> =
            modules.iter().map(|m| reps.iter().map(|&w| m.trace_t(g, w)).collect()).collect();

        let ncells = cells.len();
        let mut rows: Vec<Vec<BigRational>> = (0..ncells)
            .map(|c| {
                let mut r: Vec<BigRational> =
                    cc.multiplicities[c].iter().map(|&m| BigRational::from_integer(m.into())).collect();
                r.extend((0..ncells).map(|j| BigRational::from_integer(((j == c) as i64).into())));
                r
            })
            .collect();
        let pivots = linalg::rref(&mut rows);
        let mut at_reps: Vec<Option<Vec<KPoly>>> = vec![None; nchars];
        for (i, &p) in pivots.iter().enumerate() {
            if p >= nchars || (0..nchars).any(|j| j != p && !rows[i][j].is_zero_elem()) {
                continue;
            }
            let y = &rows[i][nchars..];
            let vals = (0..reps.len())
                .map(|k| {
                    let mut acc = KPoly::zero();
                    for (c, yc) in y.iter().enumerate() {
                        if !yc.is_zero_elem() {
                            acc.add_assign_ref(&theta[c][k].to_rational().scale(yc).to_algebraic());
                        }
                    }
                    acc
                })
                .collect();
            at_reps[p] = Some(vals);
        }

        let mut split_cells = Vec::new();
        while let Some(chi) = at_reps.iter().position(Option::is_none) {
            let c = (0..ncells)
                .filter(|&c| cc.multiplicities[c][chi] > 0)
                .min_by_key(|&c| (cells[c].len(), c))
                .ok_or_else(|| CharacterError::RankDeficient(format!("character {chi} lies in no cell")))?;
            let parts = split_cell(kl, &modules[c], &cc.multiplicities[c], table, cp)?;
            for (psi, vals) in parts {
                match &at_reps[psi] {
                    Some(old) if *old != vals => {
                        return Err(CharacterError::Inconsistent(format!(
                            "character {psi}: linear solve and cell splitting disagree"
                        )))
                    }
                    _ => at_reps[psi] = Some(vals),
                }
            }
            split_cells.push(c);
        }
        let at_reps: Vec<Vec<KPoly>> = at_reps.into_iter().map(Option::unwrap).collect();

        for c in 0..ncells {
            for k in 0..reps.len() {
                let mut s = KPoly::zero();
                for (chi, &m) in cc.multiplicities[c].iter().enumerate() {
                    if m != 0 {
                        s.add_assign_ref(&at_reps[chi][k].scale(&An::from_int(m)));
                    }
                }
                if s != theta[c][k].to_algebraic() {
                    return Err(CharacterError::Inconsistent(format!("trace on cell {c} at class {k}")));
                }
            }
        }
        for chi in 0..nchars {
            for k in 0..reps.len() {
                if at_reps[chi][k].eval_one() != *table.value(chi, k) {
                    return Err(CharacterError::Inconsistent(format!(
                        "character {chi} does not specialize to the ordinary table at class {k}"
                    )));
                }
            }
        }
        Ok(HeckeCharacters { at_reps, split_cells })
    }

    pub fn at_rep(&self, chi: usize, class: usize) -> &KPoly {
        &self.at_reps[chi][class]
    }

    pub fn row_at_reps(&self, chi: usize) -> &[KPoly] {
        &self.at_reps[chi]
    }

    pub fn len(&self) -> usize {
        self.at_reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.at_reps.is_empty()
    }

    /// Left cells whose module had to be split by a central element.
    pub fn split_cells(&self) -> &[usize] {
        &self.split_cells
    }

    pub fn value(&self, cp: &ClassPolynomials, chi: usize, w: usize) -> KPoly {
        cp.evaluate(w, &self.at_reps[chi], ZPoly::to_algebraic)
    }

    /// `χ_φ(T_w)` for every `w`.
    pub fn values(&self, cp: &ClassPolynomials, chi: usize, order: usize) -> Vec<KPoly> {
        (0..order).map(|w| self.value(cp, chi, w)).collect()
    }
}

fn invert(m: &[Vec<An>]) -> Option<Vec<Vec<An>>> {
    let r = m.len();
    let mut rows: Vec<Vec<An>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = row.clone();
            v.extend((0..r).map(|j| An::from_int((i == j) as i64)));
            v
        })
        .collect();
    let piv = linalg::rref(&mut rows);
    if piv.len() < r || piv[r - 1] >= r {
        return None;
    }
    Some(rows.into_iter().map(|row| row[r..].to_vec()).collect())
}

/// Central weights `a_𝒞` such that `Σ a_𝒞 |𝒞| ψ(g_𝒞)/ψ(1)` separates `constituents`.
fn separating_weights(table: &CharacterTable, constituents: &[usize]) -> Vec<i64> {
    let k = table.num_classes();
    let sizes = table.class_sizes();
    let eigen = |a: &[i64], psi: usize| {
        let mut s = An::zero_elem();
        for (j, &aj) in a.iter().enumerate() {
            if aj != 0 {
                s.add_assign_ref(&table.value(psi, j).mul_ref(&An::from_int(aj * sizes[j] as i64)));
            }
        }
        s.scale(&BigRational::new(1.into(), table.degree(psi).into()))
    };
    let separates = |a: &[i64]| {
        let ev: Vec<An> = constituents.iter().map(|&p| eigen(a, p)).collect();
        (0..ev.len()).all(|i| (i + 1..ev.len()).all(|j| ev[i] != ev[j]))
    };
    for j in 1..k {
        let mut a = vec![0; k];
        a[j] = 1;
        if separates(&a) {
            return a;
        }
    }
    // Σ x^j ω(class sum j) is a polynomial in x; distinct characters give
    // distinct polynomials, so some small x works.
    for x in 2i64.. {
        let a: Vec<i64> = (0..k as u32).map(|j| x.pow(j)).collect();
        if separates(&a) {
            return a;
        }
    }
    unreachable!()
}

fn degree_range(m: &Matrix<BigInt>) -> Option<(i64, i64)> {
    let mut out: Option<(i64, i64)> = None;
    for x in m.iter().flatten() {
        if let (Some(lo), Some(hi)) = (x.low_degree(), x.degree().finite()) {
            out = Some(out.map_or((lo, hi), |(a, b)| (a.min(lo), b.max(hi))));
        }
    }
    out
}

/// Values of each constituent of `V_C` at the class representatives.
fn split_cell(
    kl: &KLTable,
    module: &CellModule,
    mult: &[i64],
    table: &CharacterTable,
    cp: &ClassPolynomials,
) -> Result<Vec<(usize, Vec<KPoly>)>, CharacterError> {
    let g = kl.group();
    let reps = table.class_reps();
    let psis: Vec<usize> = (0..mult.len()).filter(|&p| mult[p] > 0).collect();
    let r = psis.len();
    let all_t = module.all_t_matrices(g);
    let err = |s: &str| CharacterError::RankDeficient(format!("cell {:?}: {s}", &module.members()[..1]));

    if r == 1 {
        let m = An::from_int(mult[psis[0]]);
        let inv = m.inv().unwrap();
        let vals = reps.iter().map(|&w| linalg::trace(&all_t[w]).to_algebraic().scale(&inv)).collect();
        return Ok(vec![(psis[0], vals)]);
    }

    let a = separating_weights(table, &psis);
    let d = module.dim();
    let mut z: Matrix<BigInt> = linalg::zero(d);
    for w in 0..g.order() {
        let mut c = ZPoly::zero();
        for (k, f) in cp.row(w) {
            let ak = a[*k as usize];
            if ak != 0 {
                c.add_assign_ref(&f.scale(&BigInt::from(ak)));
            }
        }
        if !c.is_zero() {
            linalg::add_scaled(&mut z, &all_t[g.inverse(w)], &c);
        }
    }
    for s in 0..g.rank() {
        let ts = module.t_matrix_generator(s);
        if linalg::mul(&z, &ts) != linalg::mul(&ts, &z) {
            return Err(CharacterError::Inconsistent("central element does not commute".into()));
        }
    }

    let mut zp = vec![linalg::identity(d)];
    for k in 1..=r {
        zp.push(linalg::mul(&zp[k - 1], &z));
    }
    let power_sums: Vec<KPoly> = (1..=r).map(|k| linalg::trace(&zp[k]).to_algebraic()).collect();
    let (lo, hi) = degree_range(&z).ok_or_else(|| err("zero central element"))?;
    let order = (hi - lo) as usize;

    let n: Vec<An> = psis.iter().map(|&p| An::from_int(mult[p] * table.degree(p) as i64)).collect();
    let sizes = table.class_sizes();
    let mu: Vec<An> = psis
        .iter()
        .map(|&p| {
            let mut s = An::zero_elem();
            for (j, &aj) in a.iter().enumerate() {
                if aj != 0 {
                    s.add_assign_ref(&table.value(p, j).mul_ref(&An::from_int(aj * sizes[j] as i64)));
                }
            }
            s.scale(&BigRational::new(1.into(), table.degree(p).into()))
        })
        .collect();

    // Newton iteration for λ_ψ(1 + x) against the power sums of Z
    let jac: Vec<Vec<An>> = (1..=r)
        .map(|k| (0..r).map(|i| n[i].mul_ref(&mu[i].pow(k as u32 - 1)).mul_ref(&An::from_int(k as i64))).collect())
        .collect();
    let jinv = invert(&jac).ok_or_else(|| err("singular Jacobian"))?;
    let targets: Vec<Vec<An>> = power_sums.iter().map(|p| laurent_at_one(p, order)).collect();
    let mut lam: Vec<Vec<An>> = mu
        .iter()
        .map(|m| {
            let mut v = vec![An::zero_elem(); order + 1];
            v[0] = m.clone();
            v
        })
        .collect();
    for j in 0..=order {
        let mut b = Vec::with_capacity(r);
        let mut pows: Vec<Vec<An>> = lam.clone();
        for k in 1..=r {
            let mut acc = targets[k - 1][j].clone();
            for i in 0..r {
                acc.sub_assign_ref(&n[i].mul_ref(&pows[i][j]));
            }
            b.push(acc);
            for i in 0..r {
                pows[i] = series_mul(&pows[i], &lam[i], order);
            }
        }
        if j == 0 {
            if b.iter().any(|x| !x.is_zero_elem()) {
                return Err(err("eigenvalues at v = 1 do not match the trace of Z"));
            }
            continue;
        }
        for i in 0..r {
            let mut y = An::zero_elem();
            for k in 0..r {
                y.add_assign_ref(&jinv[i][k].mul_ref(&b[k]));
            }
            lam[i][j] = y;
        }
    }
    let lambda: Vec<KPoly> = lam.iter().map(|s| laurent_from_series_at_one(s, lo, hi)).collect();
    for (k, p) in power_sums.iter().enumerate() {
        let mut s = KPoly::zero();
        for i in 0..r {
            s.add_assign_ref(&lambda[i].pow(k as u32 + 1).scale(&n[i]));
        }
        if s != *p {
            return Err(err("eigenvalues do not reproduce the power sums"));
        }
    }

    let ztraces: Vec<Vec<KPoly>> = reps
        .iter()
        .map(|&w| (0..r).map(|k| linalg::trace_of_product(&zp[k], &all_t[w]).to_algebraic()).collect())
        .collect();
    let mut out = Vec::new();
    for i in 0..r {
        // Π_{j≠i} (X − λ_j), low degree first
        let mut e: Vec<KPoly> = vec![KPoly::one()];
        let mut denom = KPoly::constant(An::from_int(mult[psis[i]]));
        for (j, lj) in lambda.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![KPoly::zero(); e.len() + 1];
            for (t, c) in e.iter().enumerate() {
                next[t + 1].add_assign_ref(c);
                next[t].sub_mul(c, lj);
            }
            e = next;
            denom = denom.mul(&lambda[i].sub(lj));
        }
        let mut vals = Vec::with_capacity(reps.len());
        for tr in &ztraces {
            let mut num = KPoly::zero();
            for (c, t) in e.iter().zip(tr) {
                num.add_mul(c, t);
            }
            vals.push(num.div_exact(&denom).ok_or_else(|| err("projection is not exact"))?);
        }
        out.push((psis[i], vals));
    }
    Ok(out)
}
