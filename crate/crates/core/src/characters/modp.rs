//! Arithmetic in a prime field `F_p` with `p < 2³¹`.

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow(a, p - 2, p)
}

pub fn neg(a: u64, p: u64) -> u64 {
    (p - a % p) % p
}

/// Symmetric lift to `(−p/2, p/2]`.
pub fn lift(a: u64, p: u64) -> i64 {
    if a > p / 2 {
        a as i64 - p as i64
    } else {
        a as i64
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p ≡ 1 (mod n)` with `p > lower`.
pub fn prime_one_mod(n: u64, lower: u64) -> u64 {
    let mut p = (lower / n + 1) * n + 1;
    while !is_prime(p) {
        p += n;
    }
    p
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut f = vec![];
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            f.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        f.push(n);
    }
    f
}

/// A primitive `n`-th root of unity mod `p` (requires `n | p − 1`).
pub fn primitive_root_of_unity(n: u64, p: u64) -> u64 {
    assert_eq!((p - 1) % n, 0);
    let fac = prime_factors(n);
    for g in 2..p {
        let z = pow(g, (p - 1) / n, p);
        if fac.iter().all(|&q| pow(z, n / q, p) != 1) {
            return z;
        }
    }
    unreachable!("F_p^* is cyclic")
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let iv = inv(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * iv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    let t = f * rows[r][j] % p;
                    rows[i][j] = (rows[i][j] + p - t) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of the kernel of a square or rectangular matrix (`rows × n`).
pub fn kernel(m: &[Vec<u64>], n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let pivots = rref(&mut a, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = neg(a[r][f], p);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(xI − A)` (low-to-high), by the
/// Faddeev–LeVerrier recursion (`n < p`).
pub fn char_poly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut coeffs = vec![0u64; n + 1];
    coeffs[n] = 1;
    let mut m = vec![vec![0u64; n]; n];
    for k in 1..=n {
        // M_k = A M_{k−1} + c_{n−k+1} I
        let mut next = vec![vec![0u64; n]; n];
        for i in 0..n {
            for l in 0..n {
                if a[i][l] == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] = (next[i][j] + a[i][l] * m[l][j]) % p;
                }
            }
            next[i][i] = (next[i][i] + coeffs[n - k + 1]) % p;
        }
        m = next;
        // c_{n−k} = −tr(A M_k)/k
        let mut tr = 0;
        for i in 0..n {
            for l in 0..n {
                tr = (tr + a[i][l] * m[l][i]) % p;
            }
        }
        coeffs[n - k] = neg(tr * inv(k as u64 % p, p) % p, p);
    }
    coeffs
}

pub fn eval_poly(c: &[u64], x: u64, p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &a| (acc * x + a) % p)
}

/// All roots in `F_p` of a monic polynomial, with multiplicity ignored.
pub fn roots(c: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| eval_poly(c, x, p) == 0).collect()
}

/// Solve `A x = b` for square invertible `A`.
pub fn solve(a: &[Vec<u64>], b: &[u64], p: u64) -> Option<Vec<u64>> {
    let n = a.len();
    let mut aug: Vec<Vec<u64>> = a.iter().zip(b).map(|(r, &x)| r.iter().copied().chain([x]).collect()).collect();
    let pivots = rref(&mut aug, p);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.iter().map(|r| r[n]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        assert_eq!(prime_one_mod(12, 100), 109);
        let p = 109;
        let z = primitive_root_of_unity(12, p);
        assert_eq!(pow(z, 12, p), 1);
        assert_ne!(pow(z, 6, p), 1);
        assert_ne!(pow(z, 4, p), 1);
        assert_eq!(inv(7, p) * 7 % p, 1);
        // [[2,1],[0,3]] has char poly x² − 5x + 6
        assert_eq!(char_poly(&[vec![2, 1], vec![0, 3]], p), vec![6, p - 5, 1]);
        assert_eq!(roots(&[6, p - 5, 1], p), vec![2, 3]);
        let k = kernel(&[vec![1, 1, 0], vec![0, 0, 1]], 3, p);
        assert_eq!(k, vec![vec![p - 1, 1, 0]]);
        assert_eq!(lift(p - 3, p), -3);
    }
}
