//! Codensity values of full subcategory inclusions, computed as ends of
//! naturality families.
//!
//! For a concrete ambient category, an object `c`, and a full subcategory
//! selection `D`, the value at `c` is the set of families `φ` assigning to
//! every pair `(d, f : c -> d)` an element of the underlying set of `d`,
//! naturally in `d`: `realize(g)(φ_d(f)) = φ_{d'}(g∘f)` for every
//! `g : d -> d'` between selected objects. Enumeration is an exhaustive
//! constraint search: sound pruning, no sampling, budget-guarded.

use crate::budget::{Budget, SearchMeter};
use crate::error::{EngineError, Result};
use crate::fincat::{ConcreteCategory, MorId, ObjId};
use crate::par;
use crate::set::{LFun, LSet};
use std::collections::BTreeMap;

/// A finite constraint system over assignment slots ("pairs"): slot `i`
/// ranges over `0..pair_values[i]`, and each edge `(i, j, table)` demands
/// `value[j] = table[value[i]]`.
pub struct FamilyProblem {
    pub pair_values: Vec<usize>,
    pub edges: Vec<(usize, usize, Vec<usize>)>,
}

impl FamilyProblem {
    /// All solutions in lexicographic order. Exhaustive: the search tree
    /// prunes only assignments already violating an edge.
    pub fn enumerate(&self, budget: &Budget) -> Result<Vec<Vec<usize>>> {
        let n = self.pair_values.len();
        // adjacency: per slot, the edges touching it
        let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut in_edges: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (e, &(i, j, _)) in self.edges.iter().enumerate() {
            out_edges[i].push(e);
            in_edges[j].push(e);
        }

        let consistent = |vals: &[usize], at: usize| -> bool {
            let v = vals[at];
            for &e in &out_edges[at] {
                let (_, j, ref table) = self.edges[e];
                if j < at && table[v] != vals[j] {
                    return false;
                }
                if j == at && table[v] != v {
                    return false;
                }
            }
            for &e in &in_edges[at] {
                let (i, _, ref table) = self.edges[e];
                if i < at && table[vals[i]] != v {
                    return false;
                }
            }
            true
        };

        fn rec(
            problem: &FamilyProblem,
            consistent: &dyn Fn(&[usize], usize) -> bool,
            vals: &mut Vec<usize>,
            meter: &mut SearchMeter,
            out: &mut Vec<Vec<usize>>,
        ) -> Result<()> {
            let at = vals.len();
            if at == problem.pair_values.len() {
                out.push(vals.clone());
                return Ok(());
            }
            for v in 0..problem.pair_values[at] {
                meter.tick()?;
                vals.push(v);
                if consistent(vals, at) {
                    rec(problem, consistent, vals, meter, out)?;
                }
                vals.pop();
            }
            Ok(())
        }

        if n == 0 {
            return Ok(vec![Vec::new()]);
        }
        if self.pair_values.iter().any(|&k| k == 0) {
            return Ok(Vec::new());
        }

        // fan out over the first slot, merge in order
        let first = self.pair_values[0];
        let branches: Vec<Result<Vec<Vec<usize>>>> = par::map_range(first, |v| {
            let mut meter = SearchMeter::new(budget, "family enumeration");
            let mut vals = vec![v];
            let mut out = Vec::new();
            meter.tick()?;
            if consistent(&vals, 0) {
                rec(self, &consistent, &mut vals, &mut meter, &mut out)?;
            }
            Ok(out)
        });
        let mut all = Vec::new();
        for b in branches {
            all.extend(b?);
        }
        Ok(all)
    }
}

/// The computed codensity value at one object.
#[derive(Debug, Clone)]
pub struct CodensityValue {
    pub object: ObjId,
    pub subcat: Vec<ObjId>,
    /// assignment slots `(d, f : c -> d)`, in (object, morphism) order
    pub pairs: Vec<(ObjId, MorId)>,
    /// each family assigns an element index of `underlying(d)` per pair
    pub families: Vec<Vec<usize>>,
    /// the value as a labeled set, one label per family
    pub set: LSet,
}

impl CodensityValue {
    fn family_label(family: &[usize]) -> String {
        let parts: Vec<String> = family.iter().map(|v| v.to_string()).collect();
        format!("⟨{}⟩", parts.join(","))
    }

    pub fn family_index(&self, family: &[usize]) -> Option<usize> {
        self.families
            .binary_search_by(|f| f.as_slice().cmp(family))
            .ok()
    }

    pub fn pair_index(&self) -> BTreeMap<(ObjId, MorId), usize> {
        self.pairs
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect()
    }
}

/// Builds the constraint system for the codensity value at `c` and
/// enumerates every naturality family.
pub fn codensity_value(
    ambient: &ConcreteCategory,
    d_objects: &[ObjId],
    c: &ObjId,
    budget: &Budget,
) -> Result<CodensityValue> {
    let base = ambient.base();
    if !base.has_object(c) {
        return Err(EngineError::structural(format!(
            "object {c} not in {}",
            base.name
        )));
    }
    let mut d_sorted: Vec<ObjId> = d_objects.to_vec();
    d_sorted.sort();
    d_sorted.dedup();
    for d in &d_sorted {
        if !base.has_object(d) {
            return Err(EngineError::structural(format!(
                "subcategory object {d} not in {}",
                base.name
            )));
        }
    }

    let mut pairs = Vec::new();
    for d in &d_sorted {
        for f in base.hom(c, d) {
            pairs.push((d.clone(), f));
        }
    }
    let pair_idx: BTreeMap<(ObjId, MorId), usize> = pairs
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();

    let mut edges = Vec::new();
    for (i, (d, f)) in pairs.iter().enumerate() {
        for d2 in &d_sorted {
            for g in base.hom(d, d2) {
                if &g == base.identity_of(d) {
                    continue;
                }
                let gf = base.compose(&g, f);
                let j = pair_idx[&(d2.clone(), gf)];
                edges.push((i, j, ambient.realize(&g).map().to_vec()));
            }
        }
    }
    let problem = FamilyProblem {
        pair_values: pairs
            .iter()
            .map(|(d, _)| ambient.underlying(d).len())
            .collect(),
        edges,
    };
    let families = problem.enumerate(budget)?;
    budget.admit_set(families.len() as u128, "codensity value")?;
    let set = LSet::from_distinct(
        families
            .iter()
            .map(|f| CodensityValue::family_label(f))
            .collect(),
    );
    Ok(CodensityValue {
        object: c.clone(),
        subcat: d_sorted,
        pairs,
        families,
        set,
    })
}

/// Independent oracle: enumerate the full product of assignments and
/// filter by naturality, with no constraint propagation. Only viable on
/// small instances; used to cross-check the search path.
pub fn codensity_value_naive(
    ambient: &ConcreteCategory,
    d_objects: &[ObjId],
    c: &ObjId,
    budget: &Budget,
) -> Result<Vec<Vec<usize>>> {
    let base = ambient.base();
    let mut d_sorted: Vec<ObjId> = d_objects.to_vec();
    d_sorted.sort();
    d_sorted.dedup();
    let mut pairs = Vec::new();
    for d in &d_sorted {
        for f in base.hom(c, d) {
            pairs.push((d.clone(), f));
        }
    }
    let sizes: Vec<usize> = pairs
        .iter()
        .map(|(d, _)| ambient.underlying(d).len())
        .collect();
    let total: u128 = sizes.iter().map(|&s| s as u128).product();
    budget.admit_search(total, "naive codensity enumeration")?;
    if sizes.iter().any(|&s| s == 0) && !pairs.is_empty() {
        return Ok(Vec::new());
    }
    let pair_idx: BTreeMap<(ObjId, MorId), usize> = pairs
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();

    let mut out = Vec::new();
    let mut vals = vec![0usize; pairs.len()];
    if pairs.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    'outer: loop {
        let natural = pairs.iter().enumerate().all(|(i, (d, f))| {
            d_sorted.iter().all(|d2| {
                base.hom(d, d2).iter().all(|g| {
                    let gf = base.compose(g, f);
                    let j = pair_idx[&(d2.clone(), gf)];
                    ambient.realize(g).apply(vals[i]) == vals[j]
                })
            })
        });
        if natural {
            out.push(vals.clone());
        }
        let mut pos = pairs.len();
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            vals[pos] += 1;
            if vals[pos] < sizes[pos] {
                break;
            }
            vals[pos] = 0;
        }
    }
    Ok(out)
}

/// An endofunctor of the ambient category materialized on an object
/// window, together with its coaugmentation.
#[derive(Debug, Clone)]
pub struct WindowedEndofunctor {
    pub name: String,
    pub window: Vec<ObjId>,
    pub on_objects: BTreeMap<ObjId, LSet>,
    /// action on every ambient morphism between window objects
    pub on_morphisms: BTreeMap<MorId, LFun>,
    /// `η_c : underlying(c) -> F(c)`
    pub unit: BTreeMap<ObjId, LFun>,
}

impl WindowedEndofunctor {
    /// The identity endofunctor with the identity coaugmentation.
    pub fn identity(ambient: &ConcreteCategory, window: &[ObjId]) -> Self {
        let mut on_objects = BTreeMap::new();
        let mut unit = BTreeMap::new();
        for c in window {
            on_objects.insert(c.clone(), ambient.underlying(c).clone());
            unit.insert(c.clone(), LFun::identity(ambient.underlying(c)));
        }
        let mut on_morphisms = BTreeMap::new();
        let wset: std::collections::BTreeSet<&ObjId> = window.iter().collect();
        for m in ambient.base().morphisms() {
            if wset.contains(&m.src) && wset.contains(&m.tgt) {
                on_morphisms.insert(m.id.clone(), ambient.realize(&m.id).clone());
            }
        }
        WindowedEndofunctor {
            name: "identity".into(),
            window: window.to_vec(),
            on_objects,
            on_morphisms,
            unit,
        }
    }

    /// Functoriality and unit naturality on the window; both must hold for
    /// any functor this engine constructs.
    pub fn check(&self, ambient: &ConcreteCategory) -> Result<()> {
        let base = ambient.base();
        let wset: std::collections::BTreeSet<&ObjId> = self.window.iter().collect();
        for c in &self.window {
            let idm = base.identity_of(c);
            if self.on_morphisms[idm] != LFun::identity(&self.on_objects[c]) {
                return Err(EngineError::structural(format!(
                    "{}: identity of {c} not sent to identity",
                    self.name
                )));
            }
        }
        for f in base.morphisms() {
            if !wset.contains(&f.src) || !wset.contains(&f.tgt) {
                continue;
            }
            for g in base.morphisms() {
                if !wset.contains(&g.tgt) || f.tgt != g.src {
                    continue;
                }
                let h = base.compose(&g.id, &f.id);
                let lhs = &self.on_morphisms[&h];
                let rhs = self.on_morphisms[&g.id].compose(&self.on_morphisms[&f.id])?;
                if lhs != &rhs {
                    return Err(EngineError::structural(format!(
                        "{}: functoriality breaks on ({}, {})",
                        self.name, g.id, f.id
                    )));
                }
            }
        }
        for f in base.morphisms() {
            if !wset.contains(&f.src) || !wset.contains(&f.tgt) {
                continue;
            }
            let lhs = self.on_morphisms[&f.id].compose(&self.unit[&f.src])?;
            let rhs = self.unit[&f.tgt].compose(ambient.realize(&f.id))?;
            if lhs != rhs {
                return Err(EngineError::structural(format!(
                    "{}: unit not natural at {}",
                    self.name, f.id
                )));
            }
        }
        Ok(())
    }
}

/// Materializes the codensity endofunctor of the selection `D` on a
/// window: values by family enumeration, morphism action by
/// precomposition, coaugmentation by evaluation families.
pub fn codensity_functor(
    ambient: &ConcreteCategory,
    d_objects: &[ObjId],
    window: &[ObjId],
    budget: &Budget,
) -> Result<(WindowedEndofunctor, BTreeMap<ObjId, CodensityValue>)> {
    let base = ambient.base();
    let mut values = BTreeMap::new();
    for c in window {
        values.insert(c.clone(), codensity_value(ambient, d_objects, c, budget)?);
    }
    let mut on_objects = BTreeMap::new();
    let mut unit = BTreeMap::new();
    for c in window {
        let v = &values[c];
        on_objects.insert(c.clone(), v.set.clone());
        // η_c(x): evaluation family f ↦ realize(f)(x)
        let ux = ambient.underlying(c);
        let mut map = Vec::with_capacity(ux.len());
        for x in 0..ux.len() {
            let fam: Vec<usize> = v
                .pairs
                .iter()
                .map(|(_, f)| ambient.realize(f).apply(x))
                .collect();
            let idx = v.family_index(&fam).ok_or_else(|| {
                EngineError::structural(format!(
                    "evaluation family of element {x} of {c} missing from the enumeration"
                ))
            })?;
            map.push(idx);
        }
        unit.insert(c.clone(), LFun::new(ux.clone(), v.set.clone(), map)?);
    }
    let wset: std::collections::BTreeSet<&ObjId> = window.iter().collect();
    let mut on_morphisms = BTreeMap::new();
    for m in base.morphisms() {
        if !wset.contains(&m.src) || !wset.contains(&m.tgt) {
            continue;
        }
        let src = &values[&m.src];
        let dst = &values[&m.tgt];
        let src_pairs = src.pair_index();
        // (T h)(φ) at pair (d, f) is φ at (d, f ∘ h)
        let mut map = Vec::with_capacity(src.families.len());
        for fam in &src.families {
            let image: Vec<usize> = dst
                .pairs
                .iter()
                .map(|(d, f)| fam[src_pairs[&(d.clone(), base.compose(f, &m.id))]])
                .collect();
            let idx = dst.family_index(&image).ok_or_else(|| {
                EngineError::structural(format!(
                    "precomposition image of a family along {} escapes the enumeration",
                    m.id
                ))
            })?;
            map.push(idx);
        }
        on_morphisms.insert(
            m.id.clone(),
            LFun::new(src.set.clone(), dst.set.clone(), map)?,
        );
    }
    let f = WindowedEndofunctor {
        name: format!("codensity[{}]", base.name),
        window: window.to_vec(),
        on_objects,
        on_morphisms,
        unit,
    };
    f.check(ambient)?;
    Ok((f, values))
}

/// Families sorted lexicographically must be; the enumerate path promises
/// it, so binary search in `family_index` is valid.
pub fn families_sorted(v: &CodensityValue) -> bool {
    v.families.windows(2).all(|w| w[0] < w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::concrete::{finset_object, finset_window, finvect_object, finvect_window};

    #[test]
    fn member_objects_have_bijective_units() {
        // c ∈ D: the identity forces every component, unit is a bijection
        let b = Budget::default();
        let amb = finset_window(3);
        let d = vec![finset_object(2), finset_object(3)];
        let (f, _) = codensity_functor(&amb, &d, &d.clone(), &b).unwrap();
        for c in &d {
            assert!(f.unit[c].is_bijective(), "unit at {c} not bijective");
        }
    }

    #[test]
    fn two_element_subcategory_value_has_eight_elements_at_three() {
        let b = Budget::default();
        let amb = finset_window(3);
        let v = codensity_value(&amb, &[finset_object(2)], &finset_object(3), &b).unwrap();
        assert_eq!(v.families.len(), 8);
        assert!(families_sorted(&v));
        // cross-check against the naive product-filter oracle (2^8 grid)
        let naive =
            codensity_value_naive(&amb, &[finset_object(2)], &finset_object(3), &b).unwrap();
        assert_eq!(v.families, naive);
    }

    #[test]
    fn value_at_empty_selection_is_a_point() {
        let b = Budget::default();
        let amb = finset_window(2);
        let v = codensity_value(&amb, &[], &finset_object(2), &b).unwrap();
        assert_eq!(v.families.len(), 1);
        assert!(v.families[0].is_empty());
    }

    #[test]
    fn double_dual_sizes_in_vector_spaces() {
        let b = Budget::default();
        let amb = finvect_window(2, 2);
        let d = vec![finvect_object(1), finvect_object(2)];
        for dim in 0..=2usize {
            let v = codensity_value(&amb, &d, &finvect_object(dim), &b).unwrap();
            assert_eq!(v.families.len(), 1 << dim, "dim {dim}");
        }
    }
}
