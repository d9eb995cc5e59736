//! Brute-force lifting checks against horn inclusions: for a simplicial
//! map `p : E -> B` and a horn class, every horn in `E` lying over a
//! simplex of `B` must admit a filler. Horns are handled through their
//! face tuples; nothing is sampled.

use super::sset::TruncatedSSet;
use crate::error::{EngineError, Result};
use crate::report::{Claim, Report};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HornClass {
    Kan,
    Inner,
    Left,
    Right,
}

impl HornClass {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "kan" => Ok(HornClass::Kan),
            "inner" => Ok(HornClass::Inner),
            "left" => Ok(HornClass::Left),
            "right" => Ok(HornClass::Right),
            _ => Err(EngineError::Parse(format!("unknown horn class `{s}`"))),
        }
    }

    /// Admissible omitted indices at dimension `n`.
    pub fn indices(self, n: usize) -> Vec<usize> {
        match self {
            HornClass::Kan => (0..=n).collect(),
            HornClass::Inner => (1..n).collect(),
            HornClass::Left => (0..n).collect(),
            HornClass::Right => (1..=n).collect(),
        }
    }
}

/// A levelwise simplicial map, validated to commute with faces and
/// degeneracies.
#[derive(Debug, Clone)]
pub struct SimplicialMap {
    pub dom: TruncatedSSet,
    pub cod: TruncatedSSet,
    /// per level: index map
    pub maps: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn new(dom: TruncatedSSet, cod: TruncatedSSet, maps: Vec<Vec<usize>>) -> Result<Self> {
        let m = SimplicialMap { dom, cod, maps };
        m.check()?;
        Ok(m)
    }

    pub fn identity(x: &TruncatedSSet) -> Self {
        SimplicialMap {
            dom: x.clone(),
            cod: x.clone(),
            maps: x.levels.iter().map(|l| (0..l.len()).collect()).collect(),
        }
    }

    /// The unique map to the point nerve.
    pub fn to_point(x: &TruncatedSSet) -> Self {
        let p = super::nerve::point(x.dim);
        SimplicialMap {
            maps: x.levels.iter().map(|l| vec![0; l.len()]).collect(),
            dom: x.clone(),
            cod: p,
        }
    }

    fn check(&self) -> Result<()> {
        if self.dom.dim != self.cod.dim {
            return Err(EngineError::structural(
                "simplicial map between different truncations",
            ));
        }
        if self.maps.len() != self.dom.dim + 1 {
            return Err(EngineError::structural(
                "level maps do not match the truncation",
            ));
        }
        for n in 0..=self.dom.dim {
            if self.maps[n].len() != self.dom.levels[n].len() {
                return Err(EngineError::structural(format!(
                    "level {n} map has wrong length"
                )));
            }
            if self.maps[n].iter().any(|&v| v >= self.cod.levels[n].len()) {
                return Err(EngineError::structural(format!(
                    "level {n} map out of range"
                )));
            }
        }
        for n in 1..=self.dom.dim {
            for i in 0..=n {
                for s in 0..self.dom.levels[n].len() {
                    if self.maps[n - 1][self.dom.face(n, i, s)]
                        != self.cod.face(n, i, self.maps[n][s])
                    {
                        return Err(EngineError::structural(format!(
                            "map does not commute with face d_{i} at level {n}"
                        )));
                    }
                }
            }
        }
        for n in 0..self.dom.dim {
            for i in 0..=n {
                for s in 0..self.dom.levels[n].len() {
                    if self.maps[n + 1][self.dom.degeneracy(n, i, s)]
                        != self.cod.degeneracy(n, i, self.maps[n][s])
                    {
                        return Err(EngineError::structural(format!(
                            "map does not commute with degeneracy s_{i} at level {n}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// One unfillable horn, for the report.
#[derive(Debug, Clone)]
pub struct HornWitness {
    pub dim: usize,
    pub omitted: usize,
    /// face simplex ids of the horn, in face order (the omitted one blank)
    pub faces: Vec<Option<String>>,
    pub over: String,
}

/// Checks the right lifting property of `p` against all horn inclusions of
/// the class up to `max_dim`: every compatible face tuple over a codomain
/// simplex must extend to a filler mapping onto it.
pub fn horn_lifting_check(p: &SimplicialMap, class: HornClass, max_dim: usize) -> Result<Report> {
    if max_dim > p.dom.dim {
        return Err(EngineError::structural(format!(
            "lifting check to dimension {max_dim} needs a truncation of at least that dimension"
        )));
    }
    let mut report = Report::new("lifting-check")
        .param("map", format!("{} -> {}", p.dom.name, p.cod.name))
        .param("class", format!("{class:?}"))
        .param("max-dim", max_dim);

    for n in 1..=max_dim {
        for i in class.indices(n) {
            let mut instances = 0usize;
            let mut witness: Option<HornWitness> = None;
            // enumerate horns: compatible tuples (F_j)_{j≠i} over each b
            for b in 0..p.cod.levels[n].len() {
                let mut tuple: Vec<Option<usize>> = vec![None; n + 1];
                let positions: Vec<usize> = (0..=n).filter(|&j| j != i).collect();
                // DFS over the faces with compatibility pruning
                fn compatible(e: &TruncatedSSet, n: usize, tuple: &[Option<usize>]) -> bool {
                    // d_a(F_b) = d_{b-1}(F_a) for a < b, both assigned
                    for bb in 0..tuple.len() {
                        let Some(fb) = tuple[bb] else { continue };
                        for a in 0..bb {
                            let Some(fa) = tuple[a] else { continue };
                            if n >= 2 && e.face(n - 1, a, fb) != e.face(n - 1, bb - 1, fa) {
                                return false;
                            }
                        }
                    }
                    true
                }
                fn rec(
                    p: &SimplicialMap,
                    n: usize,
                    i: usize,
                    b: usize,
                    positions: &[usize],
                    at: usize,
                    tuple: &mut Vec<Option<usize>>,
                    instances: &mut usize,
                    witness: &mut Option<HornWitness>,
                ) {
                    if at == positions.len() {
                        *instances += 1;
                        // search a filler: e ∈ E_n over b with the right faces
                        let filled = (0..p.dom.levels[n].len()).any(|e| {
                            p.maps[n][e] == b
                                && positions
                                    .iter()
                                    .all(|&j| Some(p.dom.face(n, j, e)) == tuple[j])
                        });
                        if !filled && witness.is_none() {
                            *witness = Some(HornWitness {
                                dim: n,
                                omitted: i,
                                faces: tuple
                                    .iter()
                                    .map(|f| f.map(|x| p.dom.levels[n - 1][x].clone()))
                                    .collect(),
                                over: p.cod.levels[n][b].clone(),
                            });
                        }
                        return;
                    }
                    let j = positions[at];
                    let over_face = p.cod.face(n, j, b);
                    for cand in 0..p.dom.levels[n - 1].len() {
                        if p.maps[n - 1][cand] != over_face {
                            continue;
                        }
                        tuple[j] = Some(cand);
                        if compatible(&p.dom, n, tuple) {
                            rec(p, n, i, b, positions, at + 1, tuple, instances, witness);
                        }
                        tuple[j] = None;
                    }
                }
                rec(
                    p,
                    n,
                    i,
                    b,
                    &positions,
                    0,
                    &mut tuple,
                    &mut instances,
                    &mut witness,
                );
                if witness.is_some() {
                    break;
                }
            }
            let detail = match &witness {
                None => format!("{instances} horn instances, all filled"),
                Some(w) => format!(
                    "unfilled horn over {} with faces [{}]",
                    w.over,
                    w.faces
                        .iter()
                        .map(|f| f.clone().unwrap_or_else(|| "·".into()))
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            };
            report.push(Claim::of_bool(
                format!("dimension {n}, omitted face {i}"),
                format!("{instances}+ instances"),
                witness.is_none(),
                detail,
            ));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::builders;
    use crate::simplex::nerve::nerve;
    use std::sync::Arc;

    #[test]
    fn group_nerve_passes_all_kan_horns() {
        let c = Arc::new(builders::cyclic_group(2));
        let n = nerve(&c, 3).unwrap();
        let p = SimplicialMap::to_point(&n);
        let r = horn_lifting_check(&p, HornClass::Kan, 3).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn arrow_nerve_passes_inner_fails_outer() {
        let c = Arc::new(builders::arrow());
        let n = nerve(&c, 2).unwrap();
        let p = SimplicialMap::to_point(&n);
        let inner = horn_lifting_check(&p, HornClass::Inner, 2).unwrap();
        assert!(inner.passed(), "{}", inner.to_text());
        let kan = horn_lifting_check(&p, HornClass::Kan, 2).unwrap();
        assert!(!kan.passed());
        // the failing claim names a dimension-2 horn with omitted face 0
        let fail = kan.claims.iter().find(|c| !c.verdict.passed()).unwrap();
        assert!(
            fail.name.contains("dimension 2, omitted face 0"),
            "{}",
            fail.name
        );
        assert!(fail.details.contains("unfilled horn"));
    }

    #[test]
    fn identity_maps_lift_everything() {
        let c = Arc::new(builders::poset_chain("p", 2));
        let n = nerve(&c, 2).unwrap();
        let p = SimplicialMap::identity(&n);
        let r = horn_lifting_check(&p, HornClass::Kan, 2).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}
