use super::KottwitzError;
use crate::coxeter::CoxeterGroup;

/// The space `V_𝒞` with basis `a_w`, `w ∈ 𝒞`, on which each generator acts
/// by a signed permutation:
/// `s·a_w = −a_w` if `sw = ws` and `ℓ(sw) < ℓ(w)`, and `s·a_w = a_{sws}`
/// otherwise.
#[derive(Clone, Debug)]
pub struct InvolutionModule {
    basis: Vec<usize>,
    /// `action[s][i] = (j, σ)` means `s·a_{basis[i]} = σ·a_{basis[j]}`
    action: Vec<Vec<(u32, i8)>>,
}

impl InvolutionModule {
    /// `classes` are indices into `g.classes()`.
    pub fn new(g: &CoxeterGroup, classes: &[usize]) -> Result<Self, KottwitzError> {
        let mut basis = Vec::new();
        for &c in classes {
            let class = g.classes().get(c).ok_or(KottwitzError::NotInvolutionClass(c))?;
            if !class.is_involution {
                return Err(KottwitzError::NotInvolutionClass(c));
            }
            basis.extend_from_slice(&class.members);
        }
        basis.sort_unstable();
        basis.dedup();
        let mut pos = vec![u32::MAX; g.order()];
        for (i, &w) in basis.iter().enumerate() {
            pos[w] = i as u32;
        }
        let action = (0..g.rank())
            .map(|s| {
                basis
                    .iter()
                    .enumerate()
                    .map(|(i, &w)| {
                        let sw = g.lmul(s, w);
                        if sw == g.rmul(w, s) && g.length(sw) < g.length(w) {
                            (i as u32, -1)
                        } else {
                            (pos[g.rmul(sw, s)], 1)
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(InvolutionModule { basis, action })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    /// `x·a_{basis[i]}` for `x` given by a word, rightmost letter first.
    pub fn act(&self, word: &[u8], i: usize) -> (usize, i8) {
        let mut cur = (i as u32, 1i8);
        for &s in word.iter().rev() {
            let (j, sg) = self.action[s as usize][cur.0 as usize];
            cur = (j, cur.1 * sg);
        }
        (cur.0 as usize, cur.1)
    }

    /// `s² = 1` and `(st)^{m_st} = 1` on every basis vector.
    pub fn check_relations(&self, g: &CoxeterGroup) -> Result<(), KottwitzError> {
        let n = g.rank();
        for s in 0..n {
            for t in s..n {
                let m = if s == t { 1 } else { g.system().m(s, t) as usize };
                let word: Vec<u8> = std::iter::repeat([s as u8, t as u8]).take(m).flatten().collect();
                for i in 0..self.dim() {
                    if self.act(&word, i) != (i, 1) {
                        return Err(KottwitzError::Relation(format!(
                            "(s{} s{})^{m} moves a_{}",
                            s + 1,
                            t + 1,
                            g.word_string(self.basis[i])
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The character at the given elements: the signed count of basis
    /// vectors fixed up to sign.
    pub fn character(&self, g: &CoxeterGroup, at: &[usize]) -> Vec<i64> {
        at.iter()
            .map(|&x| {
                let word = g.word(x);
                (0..self.dim())
                    .filter(|&i| g.mul(x, self.basis[i]) == g.mul(self.basis[i], x))
                    .map(|i| {
                        let (j, sg) = self.act(word, i);
                        debug_assert_eq!(j, i);
                        sg as i64
                    })
                    .sum()
            })
            .collect()
    }
}

/// `ρ_𝒞` at the class representatives of `g`, for a union of involution
/// classes.
pub fn rho_character(g: &CoxeterGroup, classes: &[usize]) -> Result<Vec<i64>, KottwitzError> {
    let m = InvolutionModule::new(g, classes)?;
    m.check_relations(g)?;
    let reps: Vec<usize> = g.classes().iter().map(|c| c.rep).collect();
    Ok(m.character(g, &reps))
}
