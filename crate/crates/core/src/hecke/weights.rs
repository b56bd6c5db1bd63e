use super::HeckeError;
use crate::coxeter::{CoxeterSystem, IrreducibleType};
use serde::Serialize;
use std::fmt;

/// Positive integer weights on the generators, constant on conjugacy
/// classes of generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightFunction {
    values: Vec<i64>,
}

/// Names of the generators: `t, s1, …` in type B, `u, s1, …` in type D and
/// `s1, …, sn` otherwise (numbered globally for reducible systems).
pub fn generator_names(system: &CoxeterSystem) -> Vec<String> {
    let plain = || (1..=system.rank()).map(|i| format!("s{i}")).collect();
    match system.irreducible_type() {
        Some(IrreducibleType::B(n)) => std::iter::once("t".to_string()).chain((1..n).map(|i| format!("s{i}"))).collect(),
        Some(IrreducibleType::D(n)) => std::iter::once("u".to_string()).chain((1..n).map(|i| format!("s{i}"))).collect(),
        _ => plain(),
    }
}

impl WeightFunction {
    pub fn new(system: &CoxeterSystem, values: Vec<i64>) -> Result<Self, HeckeError> {
        if values.len() != system.rank() {
            return Err(HeckeError::BadWeights(format!("expected {} values, got {}", system.rank(), values.len())));
        }
        if let Some(v) = values.iter().find(|&&v| v <= 0) {
            return Err(HeckeError::BadWeights(format!("weight {v} is not positive")));
        }
        for class in system.generator_classes() {
            if class.iter().any(|&s| values[s] != values[class[0]]) {
                return Err(HeckeError::BadWeights(format!(
                    "weights differ on conjugate generators {:?}",
                    class.iter().map(|s| s + 1).collect::<Vec<_>>()
                )));
            }
        }
        Ok(WeightFunction { values })
    }

    pub fn constant(system: &CoxeterSystem, c: i64) -> Result<Self, HeckeError> {
        Self::new(system, vec![c; system.rank()])
    }

    /// Parse `"1"`, a list `"2,1"` (one value per generator class, or per
    /// generator), or named assignments `"t=2,s=1"` where the name `s`
    /// matches every `s_i`.
    pub fn parse(system: &CoxeterSystem, spec: &str) -> Result<Self, HeckeError> {
        let bad = |m: String| HeckeError::BadWeights(m);
        let spec = spec.trim();
        let rank = system.rank();
        if spec.contains('=') {
            let names = generator_names(system);
            let mut vals: Vec<Option<i64>> = vec![None; rank];
            for item in spec.split(',') {
                let (k, v) = item.split_once('=').ok_or_else(|| bad(format!("bad item `{item}`")))?;
                let v: i64 = v.trim().parse().map_err(|_| bad(format!("bad value in `{item}`")))?;
                let k = k.trim();
                let mut hit = false;
                for (i, n) in names.iter().enumerate() {
                    let generic = k == "s" && n.starts_with('s');
                    if n == k || generic {
                        vals[i] = Some(v);
                        hit = true;
                    }
                }
                if !hit {
                    return Err(bad(format!("unknown generator `{k}` (known: {})", names.join(","))));
                }
            }
            let values = vals
                .into_iter()
                .enumerate()
                .map(|(i, v)| v.ok_or_else(|| bad(format!("no weight for generator {}", names[i]))))
                .collect::<Result<Vec<_>, _>>()?;
            return Self::new(system, values);
        }
        let list: Vec<i64> = spec
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| bad(format!("bad weight list `{spec}`"))))
            .collect::<Result<_, _>>()?;
        if list.len() == 1 {
            return Self::new(system, vec![list[0]; rank]);
        }
        let classes = system.generator_classes();
        if list.len() == classes.len() {
            let mut values = vec![0; rank];
            for (c, v) in classes.iter().zip(&list) {
                for &s in c {
                    values[s] = *v;
                }
            }
            return Self::new(system, values);
        }
        Self::new(system, list)
    }

    pub fn get(&self, s: usize) -> i64 {
        self.values[s]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn is_constant(&self) -> bool {
        self.values.iter().all(|&v| v == self.values[0])
    }

    /// `φ(w)` along a reduced word.
    pub fn of_word(&self, word: &[u8]) -> i64 {
        word.iter().map(|&s| self.values[s as usize]).sum()
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", v.join(","))
    }
}
