use super::{CoxeterError, CoxeterGroup, IrreducibleType};
use std::collections::HashMap;

/// Involution representative of types A, B, D: `l` negated coordinates
/// followed by `j` disjoint adjacent transpositions.
///
/// `sign` is `±1` for the two classes of type `D_n` (n even, `l = 0`,
/// `2j = n`) that are swapped by the graph automorphism, and `0` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalRep {
    pub l: usize,
    pub j: usize,
    pub sign: i8,
    pub element: usize,
}

/// Signed permutation of `{±1, …, ±n}` attached to `w` in types A, B, D;
/// entry `k−1` is the signed image of `k`.
///
/// Generators act as: `s_i` swaps `i, i+1`; in type B, `t` negates `1`; in type
/// D, `u` sends `1 ↦ −2, 2 ↦ −1`. Type `A_{n−1}` acts on `n` letters.
pub fn signed_permutation(g: &CoxeterGroup, w: usize) -> Option<Vec<i32>> {
    let t = g.system().irreducible_type()?;
    let n = match t {
        IrreducibleType::A(r) => r + 1,
        IrreducibleType::B(r) | IrreducibleType::D(r) => r,
        _ => return None,
    };
    let mut cur: Vec<i32> = (1..=n as i32).collect();
    for &s in g.word(w) {
        let s = s as usize;
        // cur ← cur ∘ gen(s)
        let gen = |k: i32| -> i32 {
            let (a, sg) = (k.unsigned_abs() as usize, k.signum());
            let img = match (t, s) {
                (IrreducibleType::A(_), _) => swap(a, s + 1),
                (IrreducibleType::B(_), 0) => {
                    if a == 1 {
                        -1
                    } else {
                        a as i32
                    }
                }
                (IrreducibleType::D(_), 0) => match a {
                    1 => -2,
                    2 => -1,
                    _ => a as i32,
                },
                _ => swap(a, s),
            };
            img * sg
        };
        let old = cur.clone();
        for k in 1..=n as i32 {
            let g_k = gen(k);
            let v = old[g_k.unsigned_abs() as usize - 1];
            cur[k as usize - 1] = v * g_k.signum();
        }
    }
    Some(cur)
}

fn swap(a: usize, i: usize) -> i32 {
    if a == i {
        (i + 1) as i32
    } else if a == i + 1 {
        i as i32
    } else {
        a as i32
    }
}

fn target(n: usize, l: usize, j: usize, d_minus: bool) -> Vec<i32> {
    let mut p: Vec<i32> = (1..=n as i32).collect();
    for x in p.iter_mut().take(l) {
        *x = -*x;
    }
    for k in 0..j {
        let a = l + 2 * k;
        p.swap(a, a + 1);
    }
    if d_minus {
        p[0] = -p[0];
        p[1] = -p[1];
    }
    p
}

/// Representatives `σ_j` (type A), `σ_{l,j}` (type B) or their type-D
/// analogues, looked up among the elements of `g`.
pub fn involution_class_reps_classical(g: &CoxeterGroup) -> Result<Vec<ClassicalRep>, CoxeterError> {
    let t = g.system().irreducible_type().ok_or_else(|| CoxeterError::NotApplicable("not a classical type".into()))?;
    let (n, kind) = match t {
        IrreducibleType::A(r) => (r + 1, 'A'),
        IrreducibleType::B(r) => (r, 'B'),
        IrreducibleType::D(r) => (r, 'D'),
        _ => return Err(CoxeterError::NotApplicable(format!("type {t} is not classical"))),
    };
    let lookup: HashMap<Vec<i32>, usize> =
        (0..g.order()).map(|w| (signed_permutation(g, w).unwrap(), w)).collect();
    let mut out = Vec::new();
    for l in 0..=n {
        if kind == 'A' && l > 0 || kind == 'D' && l % 2 == 1 {
            continue;
        }
        for j in 0..=(n - l) / 2 {
            let split = kind == 'D' && l == 0 && 2 * j == n;
            let signs: &[i8] = if split { &[1, -1] } else { &[0] };
            for &sign in signs {
                let p = target(n, l, j, sign == -1);
                let element = *lookup.get(&p).ok_or_else(|| CoxeterError::NotApplicable("missing signed permutation".into()))?;
                out.push(ClassicalRep { l, j, sign, element });
            }
        }
    }
    Ok(out)
}
