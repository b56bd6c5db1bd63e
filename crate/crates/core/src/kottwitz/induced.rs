use super::KottwitzError;
use crate::coxeter::CoxeterGroup;

/// An involution `σ` that is the longest element of the standard parabolic
/// `W_J` (`J` = `mask`) and central in it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Realization {
    pub sigma: usize,
    pub mask: u32,
}

/// Smallest `J` (by size, then bitmask) whose longest element lies in the
/// involution class `class` and is central in `W_J`.
pub fn central_longest_realization(g: &CoxeterGroup, class: usize) -> Result<Realization, KottwitzError> {
    let mut masks: Vec<u32> = (0..1u32 << g.rank()).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let sigma = g.parabolic(mask).longest;
        let central = (0..g.rank()).all(|s| mask >> s & 1 == 0 || g.lmul(s, sigma) == g.rmul(sigma, s));
        if central && g.class_of(sigma) == class {
            return Ok(Realization { sigma, mask });
        }
    }
    Err(KottwitzError::Realization(format!("class {class} has no central longest element of a parabolic")))
}

/// `Ind_{C_W(σ)}^W ε_σ` at the class representatives, where `ε_σ(w)` is the
/// parity of the positive roots of `W_J` made negative by `w`.
pub fn rho_via_induction(g: &CoxeterGroup, class: usize) -> Result<Vec<i64>, KottwitzError> {
    let Realization { sigma, mask } = central_longest_realization(g, class)?;
    let cent = g.centralizer(sigma);
    g.epsilon_sigma(sigma, mask, cent[0]).map_err(|e| KottwitzError::Realization(e.to_string()))?;
    let roots = g.parabolic_positive_roots(mask);
    let npos = g.num_positive_roots();
    let mut sums = vec![0i64; g.classes().len()];
    for &w in &cent {
        let k = roots.iter().filter(|&&r| g.act_on_root(w, r) >= npos).count();
        sums[g.class_of(w)] += if k % 2 == 0 { 1 } else { -1 };
    }
    g.classes()
        .iter()
        .zip(&sums)
        .map(|(c, &s)| {
            let num = g.order() as i64 * s;
            let den = (cent.len() * c.members.len()) as i64;
            if num % den != 0 {
                return Err(KottwitzError::Realization("induced value is not an integer".into()));
            }
            Ok(num / den)
        })
        .collect()
}
