//! Finite categories as explicit object/morphism/composition tables.

use crate::error::{EngineError, Result};
use crate::report::{Claim, Report};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ObjId(pub String);

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MorId(pub String);

impl ObjId {
    pub fn new(s: impl Into<String>) -> Self {
        ObjId(s.into())
    }
}

impl MorId {
    pub fn new(s: impl Into<String>) -> Self {
        MorId(s.into())
    }
}

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Obj({})", self.0)
    }
}

impl fmt::Debug for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mor({})", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Morphism {
    pub id: MorId,
    pub src: ObjId,
    pub tgt: ObjId,
}

/// A finite category: sorted object and morphism lists, identity
/// assignment, and a total composition table on composable pairs.
///
/// The struct itself is plain data; [`FinCategory::validate`] reports every
/// violated axiom, so deliberately broken tables can be constructed and
/// diagnosed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinCategory {
    pub name: String,
    objects: Vec<ObjId>,
    morphisms: Vec<Morphism>,
    identity: BTreeMap<ObjId, MorId>,
    /// `(g, f) -> g∘f` for tgt(f) = src(g).
    compose: BTreeMap<(MorId, MorId), MorId>,
}

impl FinCategory {
    pub fn new(
        name: impl Into<String>,
        mut objects: Vec<ObjId>,
        mut morphisms: Vec<Morphism>,
        identity: BTreeMap<ObjId, MorId>,
        compose: BTreeMap<(MorId, MorId), MorId>,
    ) -> Self {
        objects.sort();
        morphisms.sort_by(|a, b| a.id.cmp(&b.id));
        FinCategory {
            name: name.into(),
            objects,
            morphisms,
            identity,
            compose,
        }
    }

    pub fn objects(&self) -> &[ObjId] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn has_object(&self, o: &ObjId) -> bool {
        self.objects.binary_search(o).is_ok()
    }

    pub fn morphism(&self, m: &MorId) -> Option<&Morphism> {
        self.morphisms
            .binary_search_by(|x| x.id.cmp(m))
            .ok()
            .map(|i| &self.morphisms[i])
    }

    pub fn src(&self, m: &MorId) -> &ObjId {
        &self.morphism(m).expect("morphism exists").src
    }

    pub fn tgt(&self, m: &MorId) -> &ObjId {
        &self.morphism(m).expect("morphism exists").tgt
    }

    pub fn identity_of(&self, o: &ObjId) -> &MorId {
        self.identity.get(o).expect("object has identity")
    }

    /// `g ∘ f`, if the pair is composable and tabulated.
    pub fn try_compose(&self, g: &MorId, f: &MorId) -> Option<&MorId> {
        self.compose.get(&(g.clone(), f.clone()))
    }

    /// `g ∘ f` for a composable pair; panics on table misuse.
    pub fn compose(&self, g: &MorId, f: &MorId) -> MorId {
        self.try_compose(g, f)
            .unwrap_or_else(|| panic!("no composite for {g} ∘ {f} in {}", self.name))
            .clone()
    }

    /// Morphisms from `a` to `b`, sorted by id.
    pub fn hom(&self, a: &ObjId, b: &ObjId) -> Vec<MorId> {
        self.morphisms
            .iter()
            .filter(|m| &m.src == a && &m.tgt == b)
            .map(|m| m.id.clone())
            .collect()
    }

    pub fn morphisms_from(&self, a: &ObjId) -> Vec<MorId> {
        self.morphisms
            .iter()
            .filter(|m| &m.src == a)
            .map(|m| m.id.clone())
            .collect()
    }

    /// Is `m` an isomorphism (some two-sided inverse exists)?
    pub fn is_iso(&self, m: &MorId) -> bool {
        let mor = match self.morphism(m) {
            Some(x) => x,
            None => return false,
        };
        self.hom(&mor.tgt, &mor.src).iter().any(|inv| {
            self.try_compose(inv, m) == Some(self.identity_of(&mor.src))
                && self.try_compose(m, inv) == Some(self.identity_of(&mor.tgt))
        })
    }

    /// A section/retraction pair through `via`: `r ∘ s = id_x`.
    pub fn retract_witness(&self, x: &ObjId, via: &ObjId) -> Option<(MorId, MorId)> {
        for s in self.hom(x, via) {
            for r in self.hom(via, x) {
                if self.try_compose(&r, &s) == Some(self.identity_of(x)) {
                    return Some((s, r));
                }
            }
        }
        None
    }

    /// Checks every category axiom, listing each violation.
    pub fn validate(&self) -> Report {
        let mut report = self.validate_structure();
        let window = format!(
            "{} objects, {} morphisms",
            self.objects.len(),
            self.morphisms.len()
        );

        // associativity on every composable triple
        let mut assoc_bad = Vec::new();
        for f in &self.morphisms {
            for g in &self.morphisms {
                if f.tgt != g.src {
                    continue;
                }
                for h in &self.morphisms {
                    if g.tgt != h.src {
                        continue;
                    }
                    let gf = self.try_compose(&g.id, &f.id);
                    let hg = self.try_compose(&h.id, &g.id);
                    if let (Some(gf), Some(hg)) = (gf, hg) {
                        let left = self.try_compose(&h.id, gf);
                        let right = self.try_compose(hg, &f.id);
                        if left != right || left.is_none() {
                            assoc_bad.push(format!(
                                "associativity fails on triple ({}, {}, {})",
                                h.id, g.id, f.id
                            ));
                        }
                    }
                }
            }
        }
        report.push(Claim::of_bool(
            "composition is associative on all composable triples",
            &window,
            assoc_bad.is_empty(),
            truncate_list(&assoc_bad),
        ));

        report
    }

    /// The quadratic part of validation: endpoints, identities, totality
    /// and unit laws, without the associativity sweep.
    pub fn validate_structure(&self) -> Report {
        let mut report = Report::new("validate-category").param("category", &self.name);
        let window = format!(
            "{} objects, {} morphisms",
            self.objects.len(),
            self.morphisms.len()
        );

        let mut bad = Vec::new();
        for m in &self.morphisms {
            if !self.has_object(&m.src) || !self.has_object(&m.tgt) {
                bad.push(format!("morphism {} has undeclared endpoints", m.id));
            }
        }
        for o in &self.objects {
            match self.identity.get(o) {
                None => bad.push(format!("object {o} has no identity")),
                Some(i) => match self.morphism(i) {
                    None => bad.push(format!("identity {i} of {o} is not a morphism")),
                    Some(mor) => {
                        if &mor.src != o || &mor.tgt != o {
                            bad.push(format!("identity {i} of {o} is not an endomorphism"));
                        }
                    }
                },
            }
        }
        report.push(Claim::of_bool(
            "endpoints and identities are well-formed",
            &window,
            bad.is_empty(),
            bad.join("; "),
        ));

        // composition defined exactly on composable pairs
        let mut comp_bad = Vec::new();
        for f in &self.morphisms {
            for g in &self.morphisms {
                let composable = f.tgt == g.src;
                match self.try_compose(&g.id, &f.id) {
                    None if composable => {
                        comp_bad.push(format!("missing composite {} ∘ {}", g.id, f.id))
                    }
                    Some(h) if !composable => {
                        comp_bad.push(format!("spurious composite {} ∘ {} = {h}", g.id, f.id))
                    }
                    Some(h) => {
                        let ok = self
                            .morphism(h)
                            .is_some_and(|hm| hm.src == f.src && hm.tgt == g.tgt);
                        if !ok {
                            comp_bad.push(format!(
                                "composite {} ∘ {} = {h} has wrong endpoints",
                                g.id, f.id
                            ));
                        }
                    }
                    None => {}
                }
            }
        }
        report.push(Claim::of_bool(
            "composition is total on composable pairs with correct endpoints",
            &window,
            comp_bad.is_empty(),
            truncate_list(&comp_bad),
        ));

        // identities are two-sided units
        let mut unit_bad = Vec::new();
        for m in &self.morphisms {
            let (is_, it) = (self.identity.get(&m.src), self.identity.get(&m.tgt));
            if let (Some(is_), Some(it)) = (is_, it) {
                if self.try_compose(&m.id, is_) != Some(&m.id) {
                    unit_bad.push(format!("{} ∘ id_{} ≠ {}", m.id, m.src, m.id));
                }
                if self.try_compose(it, &m.id) != Some(&m.id) {
                    unit_bad.push(format!("id_{} ∘ {} ≠ {}", m.tgt, m.id, m.id));
                }
            }
        }
        report.push(Claim::of_bool(
            "identities are two-sided units",
            &window,
            unit_bad.is_empty(),
            truncate_list(&unit_bad),
        ));

        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().passed()
    }
}

fn truncate_list(items: &[String]) -> String {
    const MAX: usize = 8;
    if items.len() <= MAX {
        items.join("; ")
    } else {
        format!("{}; … ({} total)", items[..MAX].join("; "), items.len())
    }
}

/// Shared handle used by functors and derived categories.
pub type Cat = Arc<FinCategory>;

/// Builder collecting objects and morphisms, then closing off identities
/// and the composition table from a composition rule.
pub struct CategoryBuilder {
    name: String,
    objects: Vec<ObjId>,
    morphisms: Vec<Morphism>,
}

impl CategoryBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        CategoryBuilder {
            name: name.into(),
            objects: Vec::new(),
            morphisms: Vec::new(),
        }
    }

    pub fn object(&mut self, id: impl Into<String>) -> ObjId {
        let id = ObjId::new(id);
        self.objects.push(id.clone());
        id
    }

    pub fn morphism(&mut self, id: impl Into<String>, src: &ObjId, tgt: &ObjId) -> MorId {
        let id = MorId::new(id);
        self.morphisms.push(Morphism {
            id: id.clone(),
            src: src.clone(),
            tgt: tgt.clone(),
        });
        id
    }

    /// Finishes the category: `identity` names the identity of each object,
    /// `rule` computes `g∘f` for each composable pair.
    ///
    /// Small results (≤ 200 morphisms) are validated in full, including the
    /// cubic associativity sweep. Larger rule-generated tables get the
    /// quadratic checks only; the concrete-category layer re-verifies them
    /// through realization functoriality, which pins associativity because
    /// function composition is associative.
    pub fn build(
        self,
        identity: impl Fn(&ObjId) -> MorId,
        rule: impl Fn(&Morphism, &Morphism) -> MorId,
    ) -> Result<FinCategory> {
        let mut id_map = BTreeMap::new();
        for o in &self.objects {
            id_map.insert(o.clone(), identity(o));
        }
        let mut compose = BTreeMap::new();
        for f in &self.morphisms {
            for g in &self.morphisms {
                if f.tgt == g.src {
                    compose.insert((g.id.clone(), f.id.clone()), rule(g, f));
                }
            }
        }
        let cat = FinCategory::new(self.name, self.objects, self.morphisms, id_map, compose);
        let report = if cat.morphisms.len() <= 200 {
            cat.validate()
        } else {
            cat.validate_structure()
        };
        if !report.passed() {
            return Err(EngineError::structural(format!(
                "built category is invalid:\n{}",
                report.to_text()
            )));
        }
        Ok(cat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::builders;

    #[test]
    fn terminal_category_is_valid() {
        let c = builders::terminal();
        assert!(c.is_valid());
        assert_eq!(c.objects().len(), 1);
        assert_eq!(c.morphisms().len(), 1);
    }

    #[test]
    fn broken_associativity_is_reported_with_the_triple() {
        // free-standing endomorphism table with a wrong composite
        let o = ObjId::new("x");
        let mk = |id: &str| Morphism {
            id: MorId::new(id),
            src: o.clone(),
            tgt: o.clone(),
        };
        let mut compose = BTreeMap::new();
        // elements {e, a}: e = identity, but declare a∘a = a and break
        // nothing else; then (a∘a)∘a = a∘a = a = a∘(a∘a): fine. Break it by
        // declaring a∘a = e and a∘e = a, e∘a = a: (a∘a)∘a = e∘a = a,
        // a∘(a∘a) = a∘e = a: still fine. Use a 3-cycle with a bad entry.
        let ids = ["e", "a", "b"];
        for f in ids {
            for g in ids {
                let comp = match (g, f) {
                    ("e", x) | (x, "e") => x,
                    ("a", "a") => "b",
                    ("a", "b") => "e",
                    ("b", "a") => "e",
                    ("b", "b") => "b", // wrong: should be "a"
                    _ => unreachable!(),
                };
                compose.insert((MorId::new(g), MorId::new(f)), MorId::new(comp));
            }
        }
        let mut identity = BTreeMap::new();
        identity.insert(o.clone(), MorId::new("e"));
        let morphisms = ids.iter().map(|i| mk(i)).collect();
        let cat = FinCategory::new("bad", vec![o.clone()], morphisms, identity, compose);
        let report = cat.validate();
        assert!(!report.passed());
        let assoc = report
            .claims
            .iter()
            .find(|c| c.name.contains("associative"))
            .unwrap();
        assert!(assoc.details.contains("triple"));
    }
}
