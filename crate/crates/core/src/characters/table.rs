use super::modp;
use super::CharacterError;
use crate::coxeter::CoxeterGroup;
use crate::numfield::{AlgebraicNumber, MinPolyField, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;
use std::cmp::Ordering;
use std::sync::Arc;

/// Ordinary character table of `W`, rows sorted by degree and then by the
/// value vector (decreasing), so the trivial character comes first.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterTable {
    order: usize,
    #[serde(skip)]
    field: Option<Arc<MinPolyField>>,
    reps: Vec<usize>,
    sizes: Vec<usize>,
    degrees: Vec<u64>,
    values: Vec<Vec<AlgebraicNumber>>,
    prime: u64,
}

/// Class function on `W` given by its values on the class representatives.
pub type ClassFunction = Vec<AlgebraicNumber>;

impl CharacterTable {
    /// Dixon–Schneider over `F_p`, lifted to the real cyclotomic base field.
    pub fn compute(g: &CoxeterGroup) -> Result<Self, CharacterError> {
        let n = g.order();
        let twice_m = g.field().map_or(1, |f| 2 * f.m() as u64);
        let modulus = (g.exponent() as u64).lcm(&twice_m);
        let mut lower = 2 * n as u64;
        for _ in 0..8 {
            let p = modp::prime_one_mod(modulus, lower);
            match Self::compute_mod(g, p, modulus) {
                Ok(t) => return Ok(t),
                Err(CharacterError::PrimeFailure(_)) => lower = p,
                Err(e) => return Err(e),
            }
        }
        Err(CharacterError::PrimeFailure(lower))
    }

    fn compute_mod(g: &CoxeterGroup, p: u64, modulus: u64) -> Result<Self, CharacterError> {
        let n = g.order();
        let classes = g.classes();
        let c = classes.len();
        if g.class_of(0) != 0 {
            return Err(CharacterError::Inconsistent("identity class is not first".into()));
        }
        let reps: Vec<usize> = classes.iter().map(|k| k.rep).collect();
        let sizes: Vec<usize> = classes.iter().map(|k| k.size()).collect();

        // a[j][i][k] = #{x ∈ C_i : x⁻¹ z_k ∈ C_j}
        let mut a = vec![vec![vec![0u64; c]; c]; c];
        for (k, &z) in reps.iter().enumerate() {
            for x in 0..n {
                let i = g.class_of(x);
                let j = g.class_of(g.mul(g.inverse(x), z));
                a[j][i][k] += 1;
            }
        }

        let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..c).map(|i| (0..c).map(|j| (i == j) as u64).collect()).collect()];
        for mj in a.iter().skip(1) {
            if spaces.iter().all(|s| s.len() == 1) {
                break;
            }
            let mut next = Vec::new();
            for space in spaces {
                if space.len() == 1 {
                    next.push(space);
                    continue;
                }
                let pivots: Vec<usize> = space.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect();
                let images: Vec<Vec<u64>> = space
                    .iter()
                    .map(|b| {
                        (0..c)
                            .map(|i| (0..c).fold(0, |acc, k| (acc + (mj[i][k] % p) * b[k]) % p))
                            .collect()
                    })
                    .collect();
                let dim = space.len();
                let amat: Vec<Vec<u64>> = (0..dim).map(|i| (0..dim).map(|l| images[l][pivots[i]]).collect()).collect();
                let eig = modp::roots(&modp::char_poly(&amat, p), p);
                if eig.len() == 1 {
                    next.push(space);
                    continue;
                }
                let mut total = 0;
                for lam in eig {
                    let shifted: Vec<Vec<u64>> = (0..dim)
                        .map(|i| (0..dim).map(|l| if i == l { (amat[i][l] + p - lam) % p } else { amat[i][l] }).collect())
                        .collect();
                    let ker = modp::kernel(&shifted, dim, p);
                    total += ker.len();
                    let mut sub: Vec<Vec<u64>> = ker
                        .iter()
                        .map(|x| {
                            (0..c).map(|col| (0..dim).fold(0, |acc, l| (acc + x[l] * space[l][col]) % p)).collect()
                        })
                        .collect();
                    modp::rref(&mut sub, p);
                    next.push(sub);
                }
                if total != dim {
                    return Err(CharacterError::PrimeFailure(p));
                }
            }
            spaces = next;
        }
        if spaces.len() != c || spaces.iter().any(|s| s.len() != 1) {
            return Err(CharacterError::PrimeFailure(p));
        }

        // central characters ω, normalized at the identity class
        let mut rows_modp = Vec::with_capacity(c);
        for s in &spaces {
            let u = &s[0];
            if u[0] == 0 {
                return Err(CharacterError::PrimeFailure(p));
            }
            let u0 = modp::inv(u[0], p);
            let omega: Vec<u64> = u.iter().map(|&x| x * u0 % p).collect();
            let sum = (0..c).fold(0, |acc, j| (acc + omega[j] * omega[j] % p * modp::inv(sizes[j] as u64, p)) % p);
            if sum == 0 {
                return Err(CharacterError::PrimeFailure(p));
            }
            let d2 = (n as u64 % p) * modp::inv(sum, p) % p;
            let d = (1..=(n as f64).sqrt() as u64 + 1)
                .find(|&d| d * d % p == d2)
                .ok_or(CharacterError::PrimeFailure(p))?;
            let row: Vec<u64> = (0..c).map(|j| omega[j] * d % p * modp::inv(sizes[j] as u64, p) % p).collect();
            rows_modp.push((d, row));
        }

        let values = lift_rows(g, &rows_modp, &reps, p, modulus)?;
        let mut table: Vec<(u64, Vec<AlgebraicNumber>)> =
            rows_modp.iter().map(|(d, _)| *d).zip(values).collect();
        table.sort_by(|(da, va), (db, vb)| da.cmp(db).then_with(|| cmp_rows(vb, va)));
        let (degrees, values): (Vec<u64>, Vec<_>) = table.into_iter().unzip();
        let t = CharacterTable { order: n, field: g.field().cloned(), reps, sizes, degrees, values, prime: p };
        t.verify_orthogonality().map_err(|_| CharacterError::PrimeFailure(p))?;
        Ok(t)
    }

    fn verify_orthogonality(&self) -> Result<(), CharacterError> {
        let k = self.values.len();
        let deg2: u64 = self.degrees.iter().map(|d| d * d).sum();
        if deg2 != self.order as u64 {
            return Err(CharacterError::Inconsistent(format!("Σχ(1)² = {deg2} ≠ |W|")));
        }
        for i in 0..k {
            for j in i..k {
                let ip = self.inner(&self.values[i], &self.values[j]);
                let want = AlgebraicNumber::from_int((i == j) as i64);
                if ip != want {
                    return Err(CharacterError::Inconsistent(format!("⟨χ{i}, χ{j}⟩ = {ip}")));
                }
            }
        }
        Ok(())
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn field(&self) -> Option<&Arc<MinPolyField>> {
        self.field.as_ref()
    }

    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn class_reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn degree(&self, chi: usize) -> u64 {
        self.degrees[chi]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn row(&self, chi: usize) -> &[AlgebraicNumber] {
        &self.values[chi]
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.values
    }

    pub fn value(&self, chi: usize, class: usize) -> &AlgebraicNumber {
        &self.values[chi][class]
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// `⟨f, g⟩_W` for real-valued class functions.
    pub fn inner(&self, f: &[AlgebraicNumber], g: &[AlgebraicNumber]) -> AlgebraicNumber {
        let mut acc = AlgebraicNumber::zero_elem();
        for j in 0..self.reps.len() {
            let t = f[j].mul_ref(&g[j]).mul_ref(&AlgebraicNumber::from_int(self.sizes[j] as i64));
            acc.add_assign_ref(&t);
        }
        acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(self.order)))
    }

    /// Multiplicities of the irreducible characters in `f`, which must be a
    /// virtual character.
    pub fn decompose(&self, f: &[AlgebraicNumber]) -> Result<Vec<i64>, CharacterError> {
        let mut out = Vec::with_capacity(self.len());
        for (chi, row) in self.values.iter().enumerate() {
            let m = self.inner(f, row);
            let m = m
                .to_integer()
                .and_then(|x| i64::try_from(x).ok())
                .ok_or_else(|| CharacterError::NonIntegral(format!("multiplicity of χ{chi} is {m}")))?;
            out.push(m);
        }
        let mut back = vec![AlgebraicNumber::zero_elem(); self.num_classes()];
        for (chi, &m) in out.iter().enumerate() {
            for (b, x) in back.iter_mut().zip(&self.values[chi]) {
                b.add_assign_ref(&x.mul_ref(&AlgebraicNumber::from_int(m)));
            }
        }
        if back.as_slice() != f {
            return Err(CharacterError::NonIntegral("not in the span of Irr(W)".into()));
        }
        Ok(out)
    }

    pub fn decompose_int(&self, f: &[i64]) -> Result<Vec<i64>, CharacterError> {
        self.decompose(&int_class_function(f))
    }

    pub fn trivial(&self) -> usize {
        0
    }

    /// Index of `ε`, given `ε(w) = (−1)^{ℓ(w)}` at the representatives.
    pub fn sign_index(&self, g: &CoxeterGroup) -> usize {
        let eps = self.sign_values(g);
        self.index_of(&eps).expect("sign character is irreducible")
    }

    pub fn sign_values(&self, g: &CoxeterGroup) -> ClassFunction {
        self.reps.iter().map(|&w| AlgebraicNumber::from_int(if g.length(w) % 2 == 0 { 1 } else { -1 })).collect()
    }

    pub fn index_of(&self, f: &[AlgebraicNumber]) -> Option<usize> {
        self.values.iter().position(|r| r.as_slice() == f)
    }

    /// `χ ⊗ ε`.
    pub fn tensor_sign(&self, g: &CoxeterGroup, chi: usize) -> usize {
        let eps = self.sign_values(g);
        let f: Vec<AlgebraicNumber> = self.values[chi].iter().zip(&eps).map(|(a, b)| a.mul_ref(b)).collect();
        self.index_of(&f).expect("χ ⊗ ε is irreducible")
    }

    /// Character of the reflection representation.
    pub fn reflection_character(&self, g: &CoxeterGroup) -> ClassFunction {
        self.reps
            .iter()
            .map(|&w| {
                let m = g.reflection_matrix(w);
                let mut t = AlgebraicNumber::zero_elem();
                for (i, row) in m.iter().enumerate() {
                    t.add_assign_ref(&row[i]);
                }
                t
            })
            .collect()
    }
}

pub fn int_class_function(f: &[i64]) -> ClassFunction {
    f.iter().map(|&x| AlgebraicNumber::from_int(x)).collect()
}

fn cmp_rows(a: &[AlgebraicNumber], b: &[AlgebraicNumber]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp_real(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Lift `F_p` rows into `ℤ[2cos(π/m)]` using the Galois action on power
/// classes: `σ_k(χ(g)) = χ(g^k)`.
fn lift_rows(
    g: &CoxeterGroup,
    rows: &[(u64, Vec<u64>)],
    reps: &[usize],
    p: u64,
    modulus: u64,
) -> Result<Vec<Vec<AlgebraicNumber>>, CharacterError> {
    let c = reps.len();
    let Some(field) = g.field().filter(|f| f.degree() > 1) else {
        return Ok(rows
            .iter()
            .map(|(_, r)| r.iter().map(|&x| AlgebraicNumber::from_int(modp::lift(x, p))).collect())
            .collect());
    };
    let deg = field.degree();
    let zeta = modp::primitive_root_of_unity(modulus, p);
    let step = modulus / (2 * field.m() as u64);
    let mut ks: Vec<(u64, u64)> = Vec::new();
    for k in 1..modulus {
        if k.gcd(&modulus) != 1 {
            continue;
        }
        let e = k * step % modulus;
        let theta = (modp::pow(zeta, e, p) + modp::pow(zeta, (modulus - e) % modulus, p)) % p;
        if ks.iter().all(|&(_, t)| t != theta) {
            ks.push((k, theta));
        }
        if ks.len() == deg {
            break;
        }
    }
    if ks.len() < deg {
        return Err(CharacterError::PrimeFailure(p));
    }
    let power_class: Vec<Vec<usize>> = ks
        .iter()
        .map(|&(k, _)| {
            reps.iter()
                .map(|&w| {
                    let mut x = 0;
                    for _ in 0..k % g.element_order(w) as u64 {
                        x = g.mul(x, w);
                    }
                    g.class_of(x)
                })
                .collect()
        })
        .collect();
    let vander: Vec<Vec<u64>> = ks.iter().map(|&(_, t)| (0..deg).map(|i| modp::pow(t, i as u64, p)).collect()).collect();
    let mut out = Vec::with_capacity(rows.len());
    for (_, r) in rows {
        let mut row = Vec::with_capacity(c);
        for j in 0..c {
            let rhs: Vec<u64> = power_class.iter().map(|pc| r[pc[j]]).collect();
            let a = modp::solve(&vander, &rhs, p).ok_or(CharacterError::PrimeFailure(p))?;
            let coeffs = a.iter().map(|&x| BigRational::from_integer(BigInt::from(modp::lift(x, p)))).collect();
            row.push(AlgebraicNumber::new(field, coeffs));
        }
        out.push(row);
    }
    Ok(out)
}
