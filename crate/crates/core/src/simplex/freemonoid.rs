//! Presentations of free simplicial monoids: graded basis sets with
//! degeneracy maps landing in the basis and face maps valued in words,
//! the stage filtration by nondegenerate core level, and horn-generator
//! annotations.

use super::ndelta::{enumerate_ndelta_plus, join_decompose_chain, OrdChain};
use crate::budget::Budget;
use crate::error::{EngineError, Result};
use crate::fincat::OrdMap;
use crate::report::{Claim, Report};
use std::collections::BTreeMap;

/// A word in the level-`n` basis: a list of generator indices.
pub type Word = Vec<usize>;

#[derive(Debug, Clone)]
pub struct FreeMonoidPresentation {
    pub name: String,
    /// basis labels per level `0..=levels`
    pub basis: Vec<Vec<String>>,
    /// `deg[n][i][x]`: index of `s_i(x)` in the level-`n+1` basis
    pub deg: Vec<Vec<Vec<usize>>>,
    /// `face[n][i][x]`: the word `d_i(x)` over the level-`n-1` basis
    pub face: Vec<Vec<Vec<Word>>>,
}

impl FreeMonoidPresentation {
    pub fn levels(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn check_shape(&self) -> Result<()> {
        let levels = self.levels();
        if self.deg.len() != levels + 1 || self.face.len() != levels + 1 {
            return Err(EngineError::structural(
                "table shapes do not match the level bound",
            ));
        }
        for n in 0..=levels {
            let dcount = if n == levels { 0 } else { n + 1 };
            if self.deg[n].len() != dcount {
                return Err(EngineError::structural(format!(
                    "level {n} needs {dcount} degeneracy tables"
                )));
            }
            for t in &self.deg[n] {
                if t.len() != self.basis[n].len() || t.iter().any(|&v| v >= self.basis[n + 1].len())
                {
                    return Err(EngineError::structural(format!(
                        "degeneracy table malformed at level {n}"
                    )));
                }
            }
            let fcount = if n == 0 { 0 } else { n + 1 };
            if self.face[n].len() != fcount {
                return Err(EngineError::structural(format!(
                    "level {n} needs {fcount} face tables"
                )));
            }
            for t in &self.face[n] {
                if t.len() != self.basis[n].len() {
                    return Err(EngineError::structural(format!(
                        "face table malformed at level {n}"
                    )));
                }
                for w in t {
                    if w.iter().any(|&v| v >= self.basis[n - 1].len()) {
                        return Err(EngineError::structural(format!(
                            "face word out of range at level {n}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Degenerate part of the basis at one level: images of degeneracies.
    pub fn degenerate_part(&self, n: usize) -> Vec<bool> {
        let mut is_dgn = vec![false; self.basis[n].len()];
        if n >= 1 {
            for t in &self.deg[n - 1] {
                for &x in t {
                    is_dgn[x] = true;
                }
            }
        }
        is_dgn
    }

    /// The nondegenerate core of a basis element: peel degeneracies and
    /// return `(epi, core level, core index)`.
    pub fn core(&self, n: usize, x: usize) -> (OrdMap, usize, usize) {
        let mut epi = OrdMap::identity(n + 1);
        let mut level = n;
        let mut cur = x;
        #[allow(clippy::mut_range_bound)] // the peel restarts the outer loop
        'peel: while level >= 1 {
            for i in 0..level {
                if let Some(y) = self.deg[level - 1][i].iter().position(|&t| t == cur) {
                    epi = OrdMap::codegeneracy(level, i)
                        .compose(&epi)
                        .expect("codegeneracy composes");
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

/// Stage filtration per nondegenerate core level: verifies unique core
/// presentation, the stage count identity (each stage adds one copy of the
/// nondegenerate part per epimorphism), and stage closure of the face
/// words.
pub fn free_map_filtration(pres: &FreeMonoidPresentation, up_to: usize) -> Result<Report> {
    pres.check_shape()?;
    let levels = pres.levels().min(up_to);
    let stamp = format!("levels ≤ {levels}");
    let mut report = Report::new("filtration")
        .param("presentation", &pres.name)
        .param("window", stamp.clone());

    // unique presentation as an epi image of a nondegenerate generator
    let mut bad = Vec::new();
    let mut core_level: Vec<Vec<usize>> = Vec::new();
    for n in 0..=levels {
        let is_dgn = pres.degenerate_part(n);
        let mut lv = Vec::with_capacity(pres.basis[n].len());
        for x in 0..pres.basis[n].len() {
            let (_, k, y) = pres.core(n, x);
            if pres.degenerate_part(k)[y] {
                bad.push(format!("core of {} is degenerate", pres.basis[n][x]));
            }
            // count all epi presentations; exactly one expected
            let mut count = 0;
            for k2 in 0..=n {
                let dgn2 = pres.degenerate_part(k2);
                for epi in OrdMap::enumerate_surjective(n + 1, k2 + 1) {
                    for y2 in 0..pres.basis[k2].len() {
                        if dgn2[y2] {
                            continue;
                        }
                        if apply_epi(pres, &epi, k2, y2) == Some((n, x)) {
                            count += 1;
                        }
                    }
                }
            }
            if count != 1 {
                bad.push(format!(
                    "{} has {count} epi presentations",
                    pres.basis[n][x]
                ));
            }
            let _ = &is_dgn;
            lv.push(k);
        }
        core_level.push(lv);
    }
    report.push(Claim::of_bool(
        "every basis element is a unique epi image of a nondegenerate generator",
        stamp.clone(),
        bad.is_empty(),
        truncate(&bad),
    ));

    // stage count identity
    let mut bad = Vec::new();
    for n in 0..=levels {
        let nd_counts: Vec<usize> = (0..=n)
            .map(|k| {
                pres.degenerate_part(k)
                    .iter()
                    .zip(0..)
                    .filter(|(d, _)| !**d)
                    .count()
            })
            .collect();
        for k in 0..=n {
            let stage: usize = core_level[n].iter().filter(|&&c| c == k).count();
            let epis = OrdMap::enumerate_surjective(n + 1, k + 1).len();
            let expect = epis * nd_counts[k];
            if stage != expect {
                bad.push(format!(
                    "level {n} stage {k}: {stage} elements, expected {epis}·{} = {expect}",
                    nd_counts[k]
                ));
            }
        }
    }
    report.push(Claim::of_bool(
        "stage counts match the attachment count (epimorphisms × nondegenerate generators)",
        stamp.clone(),
        bad.is_empty(),
        truncate(&bad),
    ));

    // stage closure: faces of stage-k elements stay within stage k
    let mut bad = Vec::new();
    for n in 1..=levels {
        for x in 0..pres.basis[n].len() {
            let k = core_level[n][x];
            for (i, t) in pres.face[n].iter().enumerate() {
                for &letter in &t[x] {
                    if core_level[n - 1][letter] > k {
                        bad.push(format!("face {i} of {} leaves stage {k}", pres.basis[n][x]));
                    }
                }
            }
        }
    }
    report.push(Claim::of_bool(
        "face words of stage-k elements use stage-k letters only",
        stamp,
        bad.is_empty(),
        truncate(&bad),
    ));
    Ok(report)
}

fn apply_epi(
    pres: &FreeMonoidPresentation,
    epi: &OrdMap,
    k: usize,
    y: usize,
) -> Option<(usize, usize)> {
    // epi: [n] ↠ [k] acts through degeneracy tables only
    use crate::monadkit::monad::{generator_chain, OrdGenerator};
    let mut level = k;
    let mut cur = y;
    for g in generator_chain(epi).into_iter().rev() {
        match g {
            OrdGenerator::Codegeneracy { cod_card, index } => {
                let n = cod_card - 1;
                debug_assert_eq!(level, n);
                cur = pres.deg[n][index][cur];
                level = n + 1;
            }
            OrdGenerator::Coface { .. } => return None, // not an epi
        }
    }
    Some((level, cur))
}

/// A collection of horn generators: chosen subsets of the nondegenerate
/// basis with a designated face index per generator.
#[derive(Debug, Clone)]
pub struct HornAnnotation {
    /// indices into the basis per level
    pub generators: Vec<Vec<usize>>,
    /// designated face index per generator
    pub indices: Vec<Vec<usize>>,
}

/// Verifies the horn-generator conditions: designated faces are single
/// non-horn nondegenerate letters, the pairing is a bijection with the
/// rest of the nondegenerate basis, and reports the index class.
pub fn verify_horn_annotation(
    pres: &FreeMonoidPresentation,
    horn: &HornAnnotation,
    up_to: usize,
) -> Result<Report> {
    let levels = pres.levels().min(up_to);
    let stamp = format!("levels ≤ {levels}");
    let mut report = Report::new("horn-annotation")
        .param("presentation", &pres.name)
        .param("window", stamp.clone());

    let mut all_left = true;
    let mut all_inner = true;
    let mut all_right = true;
    for n in 0..levels {
        let dgn = pres.degenerate_part(n);
        let nd: Vec<usize> = (0..pres.basis[n].len()).filter(|&x| !dgn[x]).collect();
        let hn: std::collections::BTreeSet<usize> = horn.generators[n].iter().copied().collect();
        let hn1 = &horn.generators[n + 1];
        let mut bad = Vec::new();
        let mut images = Vec::new();
        for (pos, &h) in hn1.iter().enumerate() {
            let i = horn.indices[n + 1][pos];
            if i > n + 1 {
                bad.push(format!("index {i} out of range at level {}", n + 1));
                continue;
            }
            if i == 0 {
                all_right = false;
            }
            if i == n + 1 {
                all_left = false;
            }
            if i == 0 || i == n + 1 {
                all_inner = false;
            }
            let word = &pres.face[n + 1][i][h];
            if word.len() != 1 {
                bad.push(format!(
                    "designated face of {} is a word of length {}",
                    pres.basis[n + 1][h],
                    word.len()
                ));
                continue;
            }
            let letter = word[0];
            if pres.degenerate_part(n)[letter] || hn.contains(&letter) {
                bad.push(format!(
                    "designated face of {} is degenerate or a horn generator",
                    pres.basis[n + 1][h]
                ));
            }
            images.push(letter);
        }
        images.sort();
        let mut target: Vec<usize> = nd.iter().filter(|x| !hn.contains(x)).copied().collect();
        target.sort();
        let distinct = images.windows(2).all(|w| w[0] != w[1]);
        report.push(Claim::of_bool(
            format!("level-{n} pairing is a bijection onto the non-horn nondegenerate part"),
            format!("{stamp}; {} generators above", hn1.len()),
            bad.is_empty() && distinct && images == target,
            truncate(&bad),
        ));
    }
    let class = if all_inner {
        "inner"
    } else if all_left {
        "left"
    } else if all_right {
        "right"
    } else {
        "unrestricted"
    };
    report.set_param("index-class", class);
    Ok(report)
}

/// The chain-nerve window as a presentation: basis chains (ending at the
/// one-point ordinal) with faces decomposed into words.
pub fn ndelta_presentation(
    levels: usize,
    bound: usize,
    budget: &Budget,
) -> Result<(FreeMonoidPresentation, HornAnnotation)> {
    let mut basis_chains: Vec<Vec<OrdChain>> = Vec::new();
    for k in 0..=levels {
        basis_chains.push(
            enumerate_ndelta_plus(k, bound, budget)?
                .into_iter()
                .filter(OrdChain::is_basis)
                .collect(),
        );
    }
    let index: Vec<BTreeMap<&OrdChain, usize>> = basis_chains
        .iter()
        .map(|l| l.iter().enumerate().map(|(i, c)| (c, i)).collect())
        .collect();

    let mut deg = vec![Vec::new(); levels + 1];
    for n in 0..levels {
        for i in 0..=n {
            let table: Result<Vec<usize>> = basis_chains[n]
                .iter()
                .map(|c| {
                    index[n + 1].get(&c.degeneracy(i)).copied().ok_or_else(|| {
                        EngineError::structural(
                            "degeneracy of a basis chain left the window".to_string(),
                        )
                    })
                })
                .collect();
            deg[n].push(table?);
        }
    }
    let mut face = vec![Vec::new(); levels + 1];
    for n in 1..=levels {
        for i in 0..=n {
            let table: Result<Vec<Word>> = basis_chains[n]
                .iter()
                .map(|c| {
                    join_decompose_chain(&c.face(i))
                        .into_iter()
                        .map(|f| {
                            index[n - 1].get(&f).copied().ok_or_else(|| {
                                EngineError::structural("face factor left the window".to_string())
                            })
                        })
                        .collect()
                })
                .collect();
            face[n].push(table?);
        }
    }
    let pres = FreeMonoidPresentation {
        name: format!("chain-nerve(levels ≤ {levels}, cards ≤ {bound})"),
        basis: basis_chains
            .iter()
            .map(|l| l.iter().map(OrdChain::label).collect())
            .collect(),
        deg,
        face,
    };
    pres.check_shape()?;

    // horn annotation: nondegenerate basis chains starting at the empty
    // ordinal, designated face 0
    let mut generators = Vec::new();
    let mut indices = Vec::new();
    for (n, level) in basis_chains.iter().enumerate() {
        let dgn = pres.degenerate_part(n);
        let g: Vec<usize> = level
            .iter()
            .enumerate()
            .filter(|(i, c)| !dgn[*i] && c.objects[0] == 0)
            .map(|(i, _)| i)
            .collect();
        indices.push(vec![0; g.len()]);
        generators.push(g);
    }
    Ok((
        pres,
        HornAnnotation {
            generators,
            indices,
        },
    ))
}

fn truncate(items: &[String]) -> String {
    const MAX: usize = 6;
    if items.len() <= MAX {
        items.join("; ")
    } else {
        format!("{}; … ({} total)", items[..MAX].join("; "), items.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_level_presentation_stabilizes_at_stage_zero() {
        // one generator at level 0, its degeneracies upward
        let pres = FreeMonoidPresentation {
            name: "point".into(),
            basis: vec![vec!["g".into()], vec!["s0g".into()]],
            deg: vec![vec![vec![0]], vec![]],
            face: vec![vec![], vec![vec![vec![0]], vec![vec![0]]]],
        };
        let r = free_map_filtration(&pres, 1).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn chain_nerve_presentation_passes_filtration_and_horns() {
        let b = Budget::default();
        let (pres, horn) = ndelta_presentation(2, 3, &b).unwrap();
        let r = free_map_filtration(&pres, 2).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = verify_horn_annotation(&pres, &horn, 2).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let class = r.params.get("index-class").unwrap();
        assert_eq!(class, "left");
    }

    #[test]
    fn removing_a_generator_breaks_the_partition() {
        let b = Budget::default();
        let (pres, mut horn) = ndelta_presentation(2, 3, &b).unwrap();
        // drop one level-1 horn generator
        assert!(!horn.generators[1].is_empty());
        horn.generators[1].pop();
        horn.indices[1].pop();
        let r = verify_horn_annotation(&pres, &horn, 2).unwrap();
        assert!(!r.passed());
    }
}
