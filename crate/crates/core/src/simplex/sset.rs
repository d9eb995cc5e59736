//! Truncated simplicial sets: simplex lists per level with face and
//! degeneracy tables, the simplicial identities checked exhaustively
//! within the truncation, and the unique epi/nondegenerate decomposition
//! of every simplex.

use crate::error::{EngineError, Result};
use crate::fincat::OrdMap;
use crate::monadkit::monad::{generator_chain, OrdGenerator};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TruncatedSSet {
    pub name: String,
    /// levels 0..=dim are materialized
    pub dim: usize,
    /// simplex identifiers per level
    pub levels: Vec<Vec<String>>,
    /// `face[n][i][s]`: index of `d_i` of simplex `s` at level `n` (n ≥ 1)
    pub face: Vec<Vec<Vec<usize>>>,
    /// `deg[n][i][s]`: index of `s_i` of simplex `s` at level `n` (n < dim)
    pub deg: Vec<Vec<Vec<usize>>>,
}

impl TruncatedSSet {
    pub fn level(&self, n: usize) -> &[String] {
        &self.levels[n]
    }

    pub fn simplex_index(&self, n: usize, id: &str) -> Option<usize> {
        self.levels[n].iter().position(|s| s == id)
    }

    pub fn face(&self, n: usize, i: usize, s: usize) -> usize {
        self.face[n][i][s]
    }

    pub fn degeneracy(&self, n: usize, i: usize, s: usize) -> usize {
        self.deg[n][i][s]
    }

    /// Structural well-formedness: table shapes and index ranges.
    pub fn check_shape(&self) -> Result<()> {
        if self.levels.len() != self.dim + 1 {
            return Err(EngineError::structural(
                "level list does not match the dimension bound",
            ));
        }
        if self.face.len() != self.dim + 1 || self.deg.len() != self.dim + 1 {
            return Err(EngineError::structural(
                "face/degeneracy tables do not match the dimension bound",
            ));
        }
        for n in 0..=self.dim {
            let fcount = if n == 0 { 0 } else { n + 1 };
            if self.face[n].len() != fcount {
                return Err(EngineError::structural(format!(
                    "level {n} needs {fcount} face tables"
                )));
            }
            for (i, t) in self.face[n].iter().enumerate() {
                if t.len() != self.levels[n].len() {
                    return Err(EngineError::structural(format!(
                        "face table d_{i} at level {n} has wrong length"
                    )));
                }
                if t.iter().any(|&v| v >= self.levels[n - 1].len()) {
                    return Err(EngineError::structural(format!(
                        "face table d_{i} at level {n} out of range"
                    )));
                }
            }
            let dcount = if n == self.dim { 0 } else { n + 1 };
            if self.deg[n].len() != dcount {
                return Err(EngineError::structural(format!(
                    "level {n} needs {dcount} degeneracy tables"
                )));
            }
            for (i, t) in self.deg[n].iter().enumerate() {
                if t.len() != self.levels[n].len() {
                    return Err(EngineError::structural(format!(
                        "degeneracy table s_{i} at level {n} has wrong length"
                    )));
                }
                if t.iter().any(|&v| v >= self.levels[n + 1].len()) {
                    return Err(EngineError::structural(format!(
                        "degeneracy table s_{i} at level {n} out of range"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Every simplicial identity within the truncation, exhaustively.
    pub fn check_identities(&self) -> Result<()> {
        self.check_shape()?;
        let fail = |msg: String| Err(EngineError::structural(format!("{}: {msg}", self.name)));
        for n in 2..=self.dim {
            for j in 0..=n {
                for i in 0..j {
                    // d_i d_j = d_{j-1} d_i
                    for s in 0..self.levels[n].len() {
                        if self.face(n - 1, i, self.face(n, j, s))
                            != self.face(n - 1, j - 1, self.face(n, i, s))
                        {
                            return fail(format!("d_{i} d_{j} ≠ d_{} d_{i} at level {n}", j - 1));
                        }
                    }
                }
            }
        }
        for n in 0..self.dim.saturating_sub(1) {
            for i in 0..=n {
                for j in i..=n {
                    // s_i s_j = s_{j+1} s_i
                    for s in 0..self.levels[n].len() {
                        if self.degeneracy(n + 1, i, self.degeneracy(n, j, s))
                            != self.degeneracy(n + 1, j + 1, self.degeneracy(n, i, s))
                        {
                            return fail(format!("s_{i} s_{j} ≠ s_{} s_{i} at level {n}", j + 1));
                        }
                    }
                }
            }
        }
        for n in 0..self.dim {
            for i in 0..=n + 1 {
                for j in 0..=n {
                    for s in 0..self.levels[n].len() {
                        let sj = self.degeneracy(n, j, s);
                        let got = self.face(n + 1, i, sj);
                        let expect = if i < j {
                            // d_i s_j = s_{j-1} d_i
                            if n == 0 {
                                unreachable!("i < j needs n ≥ 1");
                            }
                            self.degeneracy(n - 1, j - 1, self.face(n, i, s))
                        } else if i == j || i == j + 1 {
                            s
                        } else {
                            // d_i s_j = s_j d_{i-1}
                            self.degeneracy(n - 1, j, self.face(n, i - 1, s))
                        };
                        if got != expect {
                            return fail(format!("d_{i} s_{j} identity fails at level {n}"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Is the simplex in the image of some degeneracy map?
    pub fn is_degenerate(&self, n: usize, s: usize) -> bool {
        n >= 1 && (0..n).any(|i| self.deg[n - 1][i].iter().any(|&t| t == s))
    }

    /// Applies a simplicial operator `α : [a] -> [b]` (given on ordinal
    /// cardinalities `a+1 -> b+1`) to a level-`b` simplex, producing a
    /// level-`a` simplex: cofaces act through face tables, codegeneracies
    /// through degeneracy tables.
    pub fn apply_operator(&self, alpha: &OrdMap, s: usize) -> Result<usize> {
        if alpha.cod() == 0 || alpha.dom() == 0 {
            return Err(EngineError::structural(
                "simplicial operators act on nonempty ordinals",
            ));
        }
        let b = alpha.cod() - 1;
        let a = alpha.dom() - 1;
        if b > self.dim || a > self.dim {
            return Err(EngineError::structural("operator exceeds the truncation"));
        }
        // α = g_p ∘ … ∘ g_1 ⇒ α* = g_1* ∘ … ∘ g_p*
        let mut level = b;
        let mut cur = s;
        for g in generator_chain(alpha).into_iter().rev() {
            match g {
                OrdGenerator::Coface { cod_card, index } => {
                    // (δ^i)* = d_i : level (cod_card-1) -> level (cod_card-2)
                    let n = cod_card - 1;
                    debug_assert_eq!(level, n);
                    cur = self.face(n, index, cur);
                    level = n - 1;
                }
                OrdGenerator::Codegeneracy { cod_card, index } => {
                    // (σ^i)* = s_i : level (cod_card-1) -> level cod_card
                    let n = cod_card - 1;
                    debug_assert_eq!(level, n);
                    cur = self.degeneracy(n, index, cur);
                    level = n + 1;
                }
            }
        }
        debug_assert_eq!(level, a);
        Ok(cur)
    }

    /// The unique presentation `x = σ*(y)` with `σ` a surjection and `y`
    /// nondegenerate: peel degeneracies greedily; uniqueness is a separate
    /// exhaustive check in the verification suite.
    pub fn ez_decompose(&self, n: usize, s: usize) -> (OrdMap, usize, usize) {
        let mut epi = OrdMap::identity(n + 1);
        let mut level = n;
        let mut cur = s;
        #[allow(clippy::mut_range_bound)] // the peel restarts the outer loop
        'peel: while level >= 1 {
            for i in 0..level {
                if let Some(y) = self.deg[level - 1][i].iter().position(|&t| t == cur) {
                    // cur = (σ^i)*(y), so the accumulated epi picks up σ^i
                    // on the outside: x = epi*(cur) = (σ^i ∘ epi)*(y)
                    epi = OrdMap::codegeneracy(level, i)
                        .compose(&epi)
                        .expect("codegeneracy composes with the accumulated epi");
                    cur = y;
                    level -= 1;
                    continue 'peel;
                }
            }
            break;
        }
        (epi, level, cur)
    }
}

/// JSON round-trip for truncated simplicial set files.
impl TruncatedSSet {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("sset serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let x: TruncatedSSet =
            serde_json::from_str(s).map_err(|e| EngineError::Parse(e.to_string()))?;
        x.check_shape()?;
        Ok(x)
    }

    /// Builds tables from id-level maps; convenient for tests and file
    /// construction.
    pub fn from_maps(
        name: &str,
        levels: Vec<Vec<String>>,
        face_maps: &BTreeMap<(usize, usize), BTreeMap<String, String>>,
        deg_maps: &BTreeMap<(usize, usize), BTreeMap<String, String>>,
    ) -> Result<Self> {
        let dim = levels.len() - 1;
        let index: Vec<BTreeMap<&str, usize>> = levels
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect())
            .collect();
        let mut face = vec![Vec::new(); dim + 1];
        let mut deg = vec![Vec::new(); dim + 1];
        for n in 1..=dim {
            for i in 0..=n {
                let m = face_maps.get(&(n, i)).ok_or_else(|| {
                    EngineError::structural(format!("missing face table d_{i} at level {n}"))
                })?;
                let mut t = Vec::with_capacity(levels[n].len());
                for s in &levels[n] {
                    let target = m.get(s).ok_or_else(|| {
                        EngineError::structural(format!("face d_{i} misses simplex {s}"))
                    })?;
                    t.push(*index[n - 1].get(target.as_str()).ok_or_else(|| {
                        EngineError::structural(format!("face d_{i} hits unknown simplex {target}"))
                    })?);
                }
                face[n].push(t);
            }
        }
        for n in 0..dim {
            for i in 0..=n {
                let m = deg_maps.get(&(n, i)).ok_or_else(|| {
                    EngineError::structural(format!("missing degeneracy table s_{i} at level {n}"))
                })?;
                let mut t = Vec::with_capacity(levels[n].len());
                for s in &levels[n] {
                    let target = m.get(s).ok_or_else(|| {
                        EngineError::structural(format!("degeneracy s_{i} misses simplex {s}"))
                    })?;
                    t.push(*index[n + 1].get(target.as_str()).ok_or_else(|| {
                        EngineError::structural(format!(
                            "degeneracy s_{i} hits unknown simplex {target}"
                        ))
                    })?);
                }
                deg[n].push(t);
            }
        }
        let out = TruncatedSSet {
            name: name.to_string(),
            dim,
            levels,
            face,
            deg,
        };
        out.check_shape()?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::builders;
    use crate::simplex::nerve::nerve;
    use std::sync::Arc;

    #[test]
    fn nerve_satisfies_identities_and_shape() {
        let c = Arc::new(builders::poset_chain("p", 3));
        let n = nerve(&c, 3).unwrap();
        n.check_identities().unwrap();
    }

    #[test]
    fn ez_decomposition_round_trips_on_a_nerve() {
        let c = Arc::new(builders::arrow());
        let n = nerve(&c, 3).unwrap();
        for lvl in 0..=3usize {
            for s in 0..n.levels[lvl].len() {
                let (epi, k, y) = n.ez_decompose(lvl, s);
                assert!(
                    !n.is_degenerate(k, y),
                    "decomposition target must be nondegenerate"
                );
                assert!(epi.is_surjective());
                let back = n.apply_operator(&epi, y).unwrap();
                assert_eq!(back, s, "round trip at level {lvl}");
            }
        }
    }

    #[test]
    fn ez_uniqueness_exhaustive_on_small_nerve() {
        let c = Arc::new(builders::arrow());
        let n = nerve(&c, 3).unwrap();
        for lvl in 0..=3usize {
            for s in 0..n.levels[lvl].len() {
                let mut presentations = 0;
                for k in 0..=lvl {
                    for epi in OrdMap::enumerate_surjective(lvl + 1, k + 1) {
                        for y in 0..n.levels[k].len() {
                            if n.is_degenerate(k, y) {
                                continue;
                            }
                            if n.apply_operator(&epi, y).unwrap() == s {
                                presentations += 1;
                            }
                        }
                    }
                }
                assert_eq!(presentations, 1, "level {lvl} simplex {s}");
            }
        }
    }
}
