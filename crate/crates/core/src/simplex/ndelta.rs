//! Simplices of the nerve of the augmented ordinal category: chains of
//! monotone maps. The levelwise monoid structure is the ordinal join, and
//! the chains ending at the one-point ordinal form a free basis; the
//! decomposition of a chain into basis factors runs through the fibers of
//! its last object.

use crate::budget::Budget;
use crate::error::Result;
use crate::fincat::OrdMap;
use crate::report::{Claim, Report};
use std::collections::BTreeMap;

/// A level-`k` simplex: `k+1` ordinals (by cardinality) and `k` monotone
/// maps between them.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrdChain {
    pub objects: Vec<usize>,
    pub maps: Vec<OrdMap>,
}

impl OrdChain {
    pub fn constant(card: usize, level: usize) -> Self {
        OrdChain {
            objects: vec![card; level + 1],
            maps: vec![OrdMap::identity(card); level],
        }
    }

    pub fn level(&self) -> usize {
        self.objects.len() - 1
    }

    pub fn label(&self) -> String {
        let mut parts = vec![format!("o{}", self.objects[0])];
        for m in &self.maps {
            parts.push(m.canonical_label());
        }
        format!("⟨{}⟩", parts.join("|"))
    }

    /// Pointwise join; the levelwise monoid operation.
    pub fn join(&self, other: &OrdChain) -> OrdChain {
        assert_eq!(self.level(), other.level());
        OrdChain {
            objects: self
                .objects
                .iter()
                .zip(&other.objects)
                .map(|(a, b)| a + b)
                .collect(),
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.join(b))
                .collect(),
        }
    }

    /// The monoid unit at this level: the constant empty-ordinal chain.
    pub fn unit(level: usize) -> OrdChain {
        OrdChain {
            objects: vec![0; level + 1],
            maps: vec![OrdMap::unit(); level],
        }
    }

    /// Is some step an identity map (equivalently: is the chain a
    /// degeneracy of a lower chain)?
    pub fn is_degenerate(&self) -> bool {
        self.maps.iter().any(OrdMap::is_identity)
    }

    /// Basis membership: the last object is the one-point ordinal.
    pub fn is_basis(&self) -> bool {
        *self.objects.last().unwrap() == 1
    }

    /// Nerve face: drop vertex `i`, composing the adjacent maps.
    pub fn face(&self, i: usize) -> OrdChain {
        let n = self.level();
        assert!(n >= 1 && i <= n);
        let mut objects = self.objects.clone();
        let mut maps = self.maps.clone();
        if i == 0 {
            objects.remove(0);
            maps.remove(0);
        } else if i == n {
            objects.pop();
            maps.pop();
        } else {
            let glued = maps[i]
                .compose(&maps[i - 1])
                .expect("adjacent maps compose");
            maps[i - 1] = glued;
            maps.remove(i);
            objects.remove(i);
        }
        OrdChain { objects, maps }
    }

    /// Nerve degeneracy: insert an identity at vertex `i`.
    pub fn degeneracy(&self, i: usize) -> OrdChain {
        let mut objects = self.objects.clone();
        let mut maps = self.maps.clone();
        objects.insert(i, self.objects[i]);
        maps.insert(i, OrdMap::identity(self.objects[i]));
        OrdChain { objects, maps }
    }
}

/// Every chain of the given level with all ordinal cardinalities bounded,
/// sorted canonically.
pub fn enumerate_ndelta_plus(level: usize, bound: usize, budget: &Budget) -> Result<Vec<OrdChain>> {
    let mut out: Vec<OrdChain> = (0..=bound)
        .map(|c| OrdChain {
            objects: vec![c],
            maps: Vec::new(),
        })
        .collect();
    for _ in 0..level {
        let mut next = Vec::new();
        for ch in &out {
            let last = *ch.objects.last().unwrap();
            for c in 0..=bound {
                for m in OrdMap::enumerate(last, c) {
                    let mut objects = ch.objects.clone();
                    let mut maps = ch.maps.clone();
                    objects.push(c);
                    maps.push(m);
                    next.push(OrdChain { objects, maps });
                }
            }
        }
        budget.admit_search(next.len() as u128, "chain enumeration")?;
        out = next;
    }
    out.sort();
    Ok(out)
}

/// Injective-only variant (the wide subcategory nerve), enumerated
/// directly so the window stays small.
pub fn enumerate_ndelta_inj(level: usize, bound: usize, budget: &Budget) -> Result<Vec<OrdChain>> {
    let mut out: Vec<OrdChain> = (0..=bound)
        .map(|c| OrdChain {
            objects: vec![c],
            maps: Vec::new(),
        })
        .collect();
    for _ in 0..level {
        let mut next = Vec::new();
        for ch in &out {
            let last = *ch.objects.last().unwrap();
            for c in last..=bound {
                for m in OrdMap::enumerate_injective(last, c) {
                    let mut objects = ch.objects.clone();
                    let mut maps = ch.maps.clone();
                    objects.push(c);
                    maps.push(m);
                    next.push(OrdChain { objects, maps });
                }
            }
        }
        budget.admit_search(next.len() as u128, "injective chain enumeration")?;
        out = next;
    }
    out.sort();
    Ok(out)
}

/// Factors a chain as a join of basis chains by taking the fibers of the
/// composite maps to its last object; the unit chain factors as the empty
/// list.
pub fn join_decompose_chain(ch: &OrdChain) -> Vec<OrdChain> {
    let n = ch.level();
    let t = *ch.objects.last().unwrap();
    // composite maps to the last object
    let mut to_last: Vec<OrdMap> = Vec::with_capacity(n + 1);
    to_last.push(OrdMap::identity(ch.objects[n]));
    for i in (0..n).rev() {
        let next = to_last
            .last()
            .unwrap()
            .compose(&ch.maps[i])
            .expect("chain composes");
        to_last.push(next);
    }
    to_last.reverse(); // to_last[i] : objects[i] -> objects[n]

    (0..t)
        .map(|j| {
            // fiber block of value j at every stage
            let ranges: Vec<std::ops::Range<usize>> =
                (0..=n).map(|i| to_last[i].fiber(j)).collect();
            let objects: Vec<usize> = ranges.iter().map(|r| r.len()).collect();
            let maps: Vec<OrdMap> = (0..n)
                .map(|i| {
                    let r = &ranges[i];
                    let r2 = &ranges[i + 1];
                    let vals: Vec<usize> = ch.maps[i].vals()[r.clone()]
                        .iter()
                        .map(|&v| v - r2.start)
                        .collect();
                    OrdMap::new(r.len(), r2.len(), vals).expect("fiber restriction is monotone")
                })
                .collect();
            OrdChain { objects, maps }
        })
        .collect()
}

fn join_all(level: usize, factors: &[OrdChain]) -> OrdChain {
    factors
        .iter()
        .fold(OrdChain::unit(level), |acc, f| acc.join(f))
}

/// Verifies that the chains ending at the one-point ordinal form a free
/// basis of the enumerated window: decomposition factors are basis chains,
/// recomposition is exact, distinct factor tuples give distinct joins, and
/// degeneracies of basis chains stay in the basis.
pub fn verify_basis_ndelta_plus(level: usize, bound: usize, budget: &Budget) -> Result<Report> {
    let stamp = format!("levels ≤ {level}, ordinal cardinalities ≤ {bound}");
    let mut report = Report::new("basis-check").param("window", stamp.clone());

    for k in 0..=level {
        let chains = enumerate_ndelta_plus(k, bound, budget)?;
        let basis: Vec<&OrdChain> = chains.iter().filter(|c| c.is_basis()).collect();
        report.set_param(
            format!("level-{k}"),
            format!("{} chains, {} basis", chains.len(), basis.len()),
        );

        let mut bad = Vec::new();
        for ch in &chains {
            let factors = join_decompose_chain(ch);
            if !factors.iter().all(OrdChain::is_basis) {
                bad.push(format!("non-basis factor for {}", ch.label()));
                continue;
            }
            if &join_all(k, &factors) != ch {
                bad.push(format!("recomposition fails for {}", ch.label()));
            }
        }
        report.push(Claim::of_bool(
            format!("every level-{k} chain is a join of basis chains"),
            stamp.clone(),
            bad.is_empty(),
            truncated(&bad),
        ));

        // uniqueness: distinct basis tuples with total size within the
        // bound produce distinct joins
        let mut seen: BTreeMap<OrdChain, Vec<usize>> = BTreeMap::new();
        let mut dup = Vec::new();
        let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
        while let Some((tuple, total)) = stack.pop() {
            let joined = join_all(
                k,
                &tuple.iter().map(|&i| basis[i].clone()).collect::<Vec<_>>(),
            );
            if let Some(prev) = seen.insert(joined.clone(), tuple.clone()) {
                dup.push(format!(
                    "tuples {:?} and {:?} join to {}",
                    prev,
                    tuple,
                    joined.label()
                ));
            }
            for (i, b) in basis.iter().enumerate() {
                let add: usize = b.objects.iter().sum();
                if total + add <= bound {
                    let mut t = tuple.clone();
                    t.push(i);
                    stack.push((t, total + add));
                }
            }
        }
        report.push(Claim::of_bool(
            format!("level-{k} factorizations are unique"),
            format!("{stamp}; total factor size ≤ {bound}"),
            dup.is_empty(),
            truncated(&dup),
        ));

        // degeneracies of basis chains are basis chains
        if k < level {
            let mut bad = Vec::new();
            for b in &basis {
                for i in 0..=k {
                    if !b.degeneracy(i).is_basis() {
                        bad.push(format!("degeneracy {i} of {} leaves the basis", b.label()));
                    }
                }
            }
            report.push(Claim::of_bool(
                format!("level-{k} basis is closed under degeneracies"),
                stamp.clone(),
                bad.is_empty(),
                truncated(&bad),
            ));
        }
    }

    // level 0: the basis is the single one-point chain (the free monoid on
    // one generator, i.e. the natural numbers)
    let level0 = enumerate_ndelta_plus(0, bound, budget)?;
    let basis0: Vec<&OrdChain> = level0.iter().filter(|c| c.is_basis()).collect();
    report.push(Claim::of_bool(
        "level 0 has a single basis generator",
        stamp,
        basis0.len() == 1 && basis0[0].objects == vec![1],
        format!("{} generators", basis0.len()),
    ));
    Ok(report)
}

/// Horn generators of the chain nerve: nondegenerate basis chains starting
/// at the empty ordinal, paired with the rest of the nondegenerate basis
/// through the 0th face.
pub fn verify_horn_generators_ndelta_plus(
    level: usize,
    bound: usize,
    budget: &Budget,
) -> Result<Report> {
    let stamp = format!("levels ≤ {level}, ordinal cardinalities ≤ {bound}");
    let mut report = Report::new("horn-generators").param("window", stamp.clone());

    let nd_basis = |k: usize| -> Result<Vec<OrdChain>> {
        Ok(enumerate_ndelta_plus(k, bound, budget)?
            .into_iter()
            .filter(|c| c.is_basis() && !c.is_degenerate())
            .collect())
    };
    let horn = |chains: &[OrdChain]| -> Vec<OrdChain> {
        chains
            .iter()
            .filter(|c| c.objects[0] == 0)
            .cloned()
            .collect()
    };

    // level 0 has no horn generators
    let x0 = nd_basis(0)?;
    let h0 = horn(&x0);
    report.push(Claim::of_bool(
        "no horn generators at level 0",
        stamp.clone(),
        h0.is_empty(),
        format!("{} found", h0.len()),
    ));

    for n in 0..level {
        let xn = nd_basis(n)?;
        let hn: std::collections::BTreeSet<OrdChain> = horn(&xn).into_iter().collect();
        let xn1 = nd_basis(n + 1)?;
        let hn1 = horn(&xn1);
        // d_0 : H_{n+1} -> X_n° ∖ H_n must be a bijection
        let mut images = Vec::new();
        let mut bad = Vec::new();
        for h in &hn1 {
            let d0 = h.face(0);
            if d0.is_degenerate() || !d0.is_basis() || hn.contains(&d0) || d0.objects[0] == 0 {
                bad.push(format!(
                    "face of {} is not a non-horn nondegenerate basis chain",
                    h.label()
                ));
            }
            images.push(d0);
        }
        images.sort();
        let distinct = images.windows(2).all(|w| w[0] != w[1]);
        let target: Vec<OrdChain> = xn.iter().filter(|c| c.objects[0] != 0).cloned().collect();
        let onto = images == target;
        report.push(Claim::of_bool(
            format!("level-{n} partition: the 0th face pairs horn generators with the rest"),
            format!(
                "{stamp}; |generators(n+1)| = {}, |rest(n)| = {}",
                hn1.len(),
                target.len()
            ),
            bad.is_empty() && distinct && onto,
            truncated(&bad),
        ));
    }

    report.push(Claim::pass(
        "all horn indices are 0 (left class)",
        stamp,
        "generators are paired through the 0th face by construction",
    ));
    Ok(report)
}

/// The injective-chain nerve: its basis consists of the step chains that
/// sit at the empty ordinal below a cut and at the one-point ordinal from
/// the cut on; `level + 1` of them per level.
pub fn verify_basis_delta_inj(level: usize, budget: &Budget) -> Result<Report> {
    let bound = level + 1;
    let stamp = format!("levels ≤ {level}, ordinal cardinalities ≤ {bound}");
    let mut report = Report::new("basis-check-injective").param("window", stamp.clone());

    for k in 0..=level {
        let chains = enumerate_ndelta_inj(k, bound, budget)?;
        let basis: Vec<&OrdChain> = chains.iter().filter(|c| c.is_basis()).collect();

        // expected step shape: cardinalities 0 below the cut, 1 after
        let expected: Vec<OrdChain> = (0..=k)
            .map(|cut| {
                let objects: Vec<usize> = (0..=k).map(|i| usize::from(i >= cut)).collect();
                let maps: Vec<OrdMap> = (0..k)
                    .map(|i| {
                        OrdMap::new(objects[i], objects[i + 1], vec![0; objects[i]])
                            .expect("step map is monotone")
                    })
                    .collect();
                OrdChain { objects, maps }
            })
            .collect();
        let got: Vec<OrdChain> = basis.iter().map(|b| (*b).clone()).collect();
        let mut want = expected.clone();
        want.sort();
        report.push(Claim::of_bool(
            format!("level-{k} basis is exactly the {} step chains", k + 1),
            stamp.clone(),
            got == want,
            format!("{} basis chains found", got.len()),
        ));

        // unique factorization of every injective chain
        let mut bad = Vec::new();
        for ch in &chains {
            let factors = join_decompose_chain(ch);
            if !factors
                .iter()
                .all(|f| f.is_basis() && f.maps.iter().all(OrdMap::is_injective))
            {
                bad.push(format!("bad factor for {}", ch.label()));
                continue;
            }
            if &join_all(k, &factors) != ch {
                bad.push(format!("recomposition fails for {}", ch.label()));
            }
        }
        report.push(Claim::of_bool(
            format!("level-{k} injective chains factor through the step basis"),
            stamp.clone(),
            bad.is_empty(),
            truncated(&bad),
        ));
    }

    // generator bijection with the free monoid on the standard 1-simplex:
    // one nondegenerate generator at levels 0 and 1, none above
    let mut counts = Vec::new();
    for k in 0..=level {
        let nd = enumerate_ndelta_inj(k, bound, budget)?
            .into_iter()
            .filter(|c| c.is_basis() && !c.is_degenerate())
            .count();
        counts.push(nd);
    }
    let ok = counts
        .iter()
        .enumerate()
        .all(|(k, &n)| if k <= 1 { n == 1 } else { n == 0 });
    report.push(Claim::of_bool(
        "nondegenerate generators match the interval-smash picture",
        stamp,
        ok,
        format!("per-level nondegenerate counts {:?}", counts),
    ));
    Ok(report)
}

fn truncated(items: &[String]) -> String {
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
    fn level_zero_objects_within_bound() {
        let b = Budget::default();
        let chains = enumerate_ndelta_plus(0, 2, &b).unwrap();
        assert_eq!(chains.len(), 3); // cardinalities 0, 1, 2
    }

    #[test]
    fn chain_counts_match_hom_counting() {
        // level-1 chains = Σ |hom(a, b)| over cardinalities ≤ bound
        let b = Budget::default();
        let chains = enumerate_ndelta_plus(1, 2, &b).unwrap();
        let expect: usize = (0..=2)
            .flat_map(|a| (0..=2).map(move |c| OrdMap::enumerate(a, c).len()))
            .sum();
        assert_eq!(chains.len(), expect);
    }

    #[test]
    fn decomposition_example_with_two_factors() {
        // [1] -(0↦0, 1↦2)-> [2]... wait in cardinalities: 2 -> 3 -> 2 with
        // the final map collapsing; the chain from the statement:
        // 2 -[0,2]-> 3 -[0,0,1]-> 2
        let ch = OrdChain {
            objects: vec![2, 3, 2],
            maps: vec![
                OrdMap::new(2, 3, vec![0, 2]).unwrap(),
                OrdMap::new(3, 2, vec![0, 0, 1]).unwrap(),
            ],
        };
        let factors = join_decompose_chain(&ch);
        assert_eq!(factors.len(), 2);
        // first factor: 1 -> 2 -> 1, second: 1 -> 1 -> 1
        assert_eq!(factors[0].objects, vec![1, 2, 1]);
        assert_eq!(factors[1].objects, vec![1, 1, 1]);
        assert_eq!(join_all(2, &factors), ch);
    }

    #[test]
    fn basis_and_horn_reports_pass_on_small_windows() {
        let b = Budget::default();
        let r = verify_basis_ndelta_plus(2, 3, &b).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = verify_horn_generators_ndelta_plus(2, 3, &b).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let r = verify_basis_delta_inj(2, &b).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn first_horn_generator_is_the_empty_to_point_chain() {
        let b = Budget::default();
        let x1: Vec<OrdChain> = enumerate_ndelta_plus(1, 2, &b)
            .unwrap()
            .into_iter()
            .filter(|c| c.is_basis() && !c.is_degenerate() && c.objects[0] == 0)
            .collect();
        assert_eq!(x1.len(), 1);
        assert_eq!(x1[0].objects, vec![0, 1]);
        // its 0th face is the one-point level-0 chain
        assert_eq!(x1[0].face(0).objects, vec![1]);
    }
}
