use super::CoxeterError;
use std::fmt;

/// Irreducible finite Coxeter types.
///
/// Generator conventions (0-based):
/// - `B_n`: `[t, s_1, …, s_{n−1}]` with `m(t, s_1) = 4`;
/// - `D_n`: `[u, s_1, …, s_{n−1}]` with `u` and `s_1` both joined to `s_2`;
/// - `E_n`: Bourbaki labelling;
/// - `F_4`: `m(s_2, s_3) = 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IrreducibleType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl IrreducibleType {
    pub fn rank(&self) -> usize {
        match *self {
            IrreducibleType::A(n) | IrreducibleType::B(n) | IrreducibleType::D(n) | IrreducibleType::E(n) => n,
            IrreducibleType::H(n) => n,
            IrreducibleType::F4 => 4,
            IrreducibleType::I2(_) => 2,
        }
    }

    /// Group order, when it fits in a `u128`.
    pub fn order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match *self {
            IrreducibleType::A(n) => fact(n + 1),
            IrreducibleType::B(n) => (1u128 << n) * fact(n),
            IrreducibleType::D(n) => (1u128 << (n - 1)) * fact(n),
            IrreducibleType::E(6) => 51_840,
            IrreducibleType::E(7) => 2_903_040,
            IrreducibleType::E(_) => 696_729_600,
            IrreducibleType::F4 => 1152,
            IrreducibleType::H(3) => 120,
            IrreducibleType::H(_) => 14_400,
            IrreducibleType::I2(m) => 2 * m as u128,
        }
    }

    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.rank();
        let mut m = vec![vec![2u32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut join = |i: usize, j: usize, v: u32| {
            m[i][j] = v;
            m[j][i] = v;
        };
        match *self {
            IrreducibleType::A(n) => (1..n).for_each(|i| join(i - 1, i, 3)),
            IrreducibleType::B(n) => {
                if n >= 2 {
                    join(0, 1, 4);
                }
                (2..n).for_each(|i| join(i - 1, i, 3));
            }
            IrreducibleType::D(n) => {
                if n >= 3 {
                    join(0, 2, 3);
                }
                (2..n).for_each(|i| join(i - 1, i, 3));
            }
            IrreducibleType::E(n) => {
                join(0, 2, 3);
                join(1, 3, 3);
                (3..n).for_each(|i| join(i - 1, i, 3));
            }
            IrreducibleType::F4 => {
                join(0, 1, 3);
                join(1, 2, 4);
                join(2, 3, 3);
            }
            IrreducibleType::H(n) => {
                join(0, 1, 5);
                (2..n).for_each(|i| join(i - 1, i, 3));
            }
            IrreducibleType::I2(k) => join(0, 1, k),
        }
        m
    }

    fn parse(s: &str) -> Result<Self, CoxeterError> {
        let bad = || CoxeterError::BadLabel(s.to_string());
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m: u32 = rest.parse().map_err(|_| bad())?;
            if m < 2 {
                return Err(bad());
            }
            return Ok(IrreducibleType::I2(m));
        }
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let t = match (letter, n) {
            ('A', n) if n >= 1 => IrreducibleType::A(n),
            ('B' | 'C', 1) => IrreducibleType::A(1),
            ('B' | 'C', n) if n >= 2 => IrreducibleType::B(n),
            ('D', n) if n >= 2 => IrreducibleType::D(n),
            ('E', 6..=8) => IrreducibleType::E(n),
            ('F', 4) => IrreducibleType::F4,
            ('G', 2) => IrreducibleType::I2(6),
            ('H', 2) => IrreducibleType::I2(5),
            ('H', 3 | 4) => IrreducibleType::H(n),
            _ => return Err(bad()),
        };
        Ok(t)
    }
}

impl fmt::Display for IrreducibleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrreducibleType::A(n) => write!(f, "A{n}"),
            IrreducibleType::B(n) => write!(f, "B{n}"),
            IrreducibleType::D(n) => write!(f, "D{n}"),
            IrreducibleType::E(n) => write!(f, "E{n}"),
            IrreducibleType::F4 => write!(f, "F4"),
            IrreducibleType::H(n) => write!(f, "H{n}"),
            IrreducibleType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// A finite Coxeter system given by its Coxeter matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSystem {
    matrix: Vec<Vec<u32>>,
    /// Irreducible factors with their generator offsets, when known.
    components: Option<Vec<(IrreducibleType, usize)>>,
}

impl CoxeterSystem {
    /// Parse a label such as `B3`, `I2(7)` or `B2xA1`.
    pub fn from_label(label: &str) -> Result<Self, CoxeterError> {
        let mut comps = Vec::new();
        let mut offset = 0;
        for part in label.split(['x', '×', '*']) {
            let t = IrreducibleType::parse(part)?;
            comps.push((t, offset));
            offset += t.rank();
        }
        let mut matrix = vec![vec![2u32; offset]; offset];
        for &(t, off) in &comps {
            let m = t.coxeter_matrix();
            for (i, row) in m.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    matrix[off + i][off + j] = v;
                }
            }
        }
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        Ok(CoxeterSystem { matrix, components: Some(comps) })
    }

    pub fn irreducible(t: IrreducibleType) -> Self {
        CoxeterSystem { matrix: t.coxeter_matrix(), components: Some(vec![(t, 0)]) }
    }

    /// Build from an explicit Coxeter matrix (symmetric, 1 on the diagonal,
    /// off-diagonal entries ≥ 2; `0` stands for ∞ and is rejected).
    pub fn from_matrix(matrix: Vec<Vec<u32>>) -> Result<Self, CoxeterError> {
        let n = matrix.len();
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(CoxeterError::BadMatrix("matrix is not square".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                if v != matrix[j][i] {
                    return Err(CoxeterError::BadMatrix("matrix is not symmetric".into()));
                }
                if (i == j) != (v == 1) || (i != j && v < 2) {
                    return Err(CoxeterError::BadMatrix(format!("invalid entry m({i},{j}) = {v}")));
                }
            }
        }
        Ok(CoxeterSystem { matrix, components: None })
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn m(&self, i: usize, j: usize) -> u32 {
        self.matrix[i][j]
    }

    pub fn components(&self) -> Option<&[(IrreducibleType, usize)]> {
        self.components.as_deref()
    }

    /// The single irreducible type, if the system is labelled and irreducible.
    pub fn irreducible_type(&self) -> Option<IrreducibleType> {
        match self.components.as_deref() {
            Some([(t, 0)]) => Some(*t),
            _ => None,
        }
    }

    /// Human-readable label; falls back to the matrix rows.
    pub fn label(&self) -> String {
        match &self.components {
            Some(c) => c.iter().map(|(t, _)| t.to_string()).collect::<Vec<_>>().join("x"),
            None => format!("{:?}", self.matrix),
        }
    }

    /// Order of the group if known from the type label.
    pub fn known_order(&self) -> Option<u128> {
        self.components.as_ref().map(|c| c.iter().map(|(t, _)| t.order()).product())
    }

    /// Connected components of the Coxeter graph, as generator lists.
    pub fn graph_components(&self) -> Vec<Vec<usize>> {
        self.partition_by(|m| m > 2)
    }

    /// Generator conjugacy classes: `s ~ t` iff joined by a path of odd labels.
    pub fn generator_classes(&self) -> Vec<Vec<usize>> {
        self.partition_by(|m| m % 2 == 1 && m > 1)
    }

    fn partition_by(&self, edge: impl Fn(u32) -> bool) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                k += 1;
                for j in 0..n {
                    if !seen[j] && i != j && edge(self.matrix[i][j]) {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Restriction to the generators in `subset` (kept in increasing order).
    pub fn restrict(&self, subset: &[usize]) -> CoxeterSystem {
        let matrix = subset.iter().map(|&i| subset.iter().map(|&j| self.matrix[i][j]).collect()).collect();
        CoxeterSystem { matrix, components: None }
    }

    /// Least common multiple of the non-crystallographic labels (1 for Weyl
    /// groups); the reflection representation is defined over `ℚ(2cos(2π/n))`.
    pub fn field_conductor(&self) -> u32 {
        let mut n = 1;
        for row in &self.matrix {
            for &m in row {
                if !matches!(m, 1..=4 | 6) {
                    n = crate::numfield::lcm_u32(n, m);
                }
            }
        }
        n
    }
}
