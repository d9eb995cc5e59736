//! Functors between finite categories and natural transformations,
//! validated exhaustively at construction.

use super::category::{Cat, MorId, ObjId};
use crate::error::{EngineError, Result};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    pub name: String,
    domain: Cat,
    codomain: Cat,
    on_objects: BTreeMap<ObjId, ObjId>,
    on_morphisms: BTreeMap<MorId, MorId>,
}

impl FinFunctor {
    pub fn new(
        name: impl Into<String>,
        domain: Cat,
        codomain: Cat,
        on_objects: BTreeMap<ObjId, ObjId>,
        on_morphisms: BTreeMap<MorId, MorId>,
    ) -> Result<Self> {
        let f = FinFunctor {
            name: name.into(),
            domain,
            codomain,
            on_objects,
            on_morphisms,
        };
        f.check()?;
        Ok(f)
    }

    pub fn identity(c: &Cat) -> Self {
        let on_objects = c.objects().iter().map(|o| (o.clone(), o.clone())).collect();
        let on_morphisms = c
            .morphisms()
            .iter()
            .map(|m| (m.id.clone(), m.id.clone()))
            .collect();
        FinFunctor {
            name: format!("id[{}]", c.name),
            domain: c.clone(),
            codomain: c.clone(),
            on_objects,
            on_morphisms,
        }
    }

    /// Constant functor at an object of `codomain`.
    pub fn constant(domain: &Cat, codomain: &Cat, at: &ObjId) -> Result<Self> {
        if !codomain.has_object(at) {
            return Err(EngineError::structural(format!(
                "no object {at} in {}",
                codomain.name
            )));
        }
        let id_at = codomain.identity_of(at).clone();
        FinFunctor::new(
            format!("const[{at}]"),
            domain.clone(),
            codomain.clone(),
            domain
                .objects()
                .iter()
                .map(|o| (o.clone(), at.clone()))
                .collect(),
            domain
                .morphisms()
                .iter()
                .map(|m| (m.id.clone(), id_at.clone()))
                .collect(),
        )
    }

    /// Inclusion of a full subcategory (objects given) into `c`.
    pub fn full_inclusion(sub: &Cat, c: &Cat) -> Result<Self> {
        FinFunctor::new(
            format!("incl[{}⊆{}]", sub.name, c.name),
            sub.clone(),
            c.clone(),
            sub.objects()
                .iter()
                .map(|o| (o.clone(), o.clone()))
                .collect(),
            sub.morphisms()
                .iter()
                .map(|m| (m.id.clone(), m.id.clone()))
                .collect(),
        )
    }

    fn check(&self) -> Result<()> {
        for o in self.domain.objects() {
            let fo = self.on_objects.get(o).ok_or_else(|| {
                EngineError::structural(format!("functor {} misses object {o}", self.name))
            })?;
            if !self.codomain.has_object(fo) {
                return Err(EngineError::structural(format!(
                    "functor {} maps {o} outside its codomain",
                    self.name
                )));
            }
        }
        for m in self.domain.morphisms() {
            let fm = self.on_morphisms.get(&m.id).ok_or_else(|| {
                EngineError::structural(format!("functor {} misses morphism {}", self.name, m.id))
            })?;
            let fm = self.codomain.morphism(fm).ok_or_else(|| {
                EngineError::structural(format!(
                    "functor {} maps {} to unknown {fm}",
                    self.name, m.id
                ))
            })?;
            if &fm.src != &self.on_objects[&m.src] || &fm.tgt != &self.on_objects[&m.tgt] {
                return Err(EngineError::structural(format!(
                    "functor {} breaks endpoints on {}",
                    self.name, m.id
                )));
            }
        }
        for o in self.domain.objects() {
            if self.on_morphisms[self.domain.identity_of(o)]
                != *self.codomain.identity_of(&self.on_objects[o])
            {
                return Err(EngineError::structural(format!(
                    "functor {} does not preserve identity of {o}",
                    self.name
                )));
            }
        }
        for f in self.domain.morphisms() {
            for g in self.domain.morphisms() {
                if f.tgt != g.src {
                    continue;
                }
                let gf = self.domain.compose(&g.id, &f.id);
                let lhs = &self.on_morphisms[&gf];
                let rhs = self
                    .codomain
                    .compose(&self.on_morphisms[&g.id], &self.on_morphisms[&f.id]);
                if lhs != &rhs {
                    return Err(EngineError::structural(format!(
                        "functor {} breaks composition on ({}, {})",
                        self.name, g.id, f.id
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &Cat {
        &self.domain
    }

    pub fn codomain(&self) -> &Cat {
        &self.codomain
    }

    pub fn ob(&self, o: &ObjId) -> &ObjId {
        &self.on_objects[o]
    }

    pub fn mor(&self, m: &MorId) -> &MorId {
        &self.on_morphisms[m]
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &FinFunctor) -> Result<FinFunctor> {
        if first.codomain != self.domain {
            return Err(EngineError::structural(format!(
                "non-composable functors {} and {}",
                first.name, self.name
            )));
        }
        FinFunctor::new(
            format!("{}∘{}", self.name, first.name),
            first.domain.clone(),
            self.codomain.clone(),
            first
                .on_objects
                .iter()
                .map(|(o, fo)| (o.clone(), self.on_objects[fo].clone()))
                .collect(),
            first
                .on_morphisms
                .iter()
                .map(|(m, fm)| (m.clone(), self.on_morphisms[fm].clone()))
                .collect(),
        )
    }
}

/// A natural transformation between parallel functors; the naturality
/// square is checked for every morphism of the domain at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransf {
    pub name: String,
    source: FinFunctor,
    target: FinFunctor,
    components: BTreeMap<ObjId, MorId>,
}

impl NatTransf {
    pub fn new(
        name: impl Into<String>,
        source: FinFunctor,
        target: FinFunctor,
        components: BTreeMap<ObjId, MorId>,
    ) -> Result<Self> {
        let t = NatTransf {
            name: name.into(),
            source,
            target,
            components,
        };
        t.check()?;
        Ok(t)
    }

    pub fn identity(f: &FinFunctor) -> Self {
        let components = f
            .domain()
            .objects()
            .iter()
            .map(|o| (o.clone(), f.codomain().identity_of(f.ob(o)).clone()))
            .collect();
        NatTransf {
            name: format!("id[{}]", f.name),
            source: f.clone(),
            target: f.clone(),
            components,
        }
    }

    fn check(&self) -> Result<()> {
        if self.source.domain() != self.target.domain()
            || self.source.codomain() != self.target.codomain()
        {
            return Err(EngineError::structural(format!(
                "transformation {} between non-parallel functors",
                self.name
            )));
        }
        let cod = self.source.codomain();
        for o in self.source.domain().objects() {
            let c = self.components.get(o).ok_or_else(|| {
                EngineError::structural(format!(
                    "transformation {} misses component at {o}",
                    self.name
                ))
            })?;
            let m = cod.morphism(c).ok_or_else(|| {
                EngineError::structural(format!("component {c} is not a morphism"))
            })?;
            if &m.src != self.source.ob(o) || &m.tgt != self.target.ob(o) {
                return Err(EngineError::structural(format!(
                    "component at {o} has wrong endpoints in {}",
                    self.name
                )));
            }
        }
        for m in self.source.domain().morphisms() {
            let lhs = cod.compose(&self.components[&m.tgt], self.source.mor(&m.id));
            let rhs = cod.compose(self.target.mor(&m.id), &self.components[&m.src]);
            if lhs != rhs {
                return Err(EngineError::structural(format!(
                    "naturality square fails at {} in {}",
                    m.id, self.name
                )));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &FinFunctor {
        &self.source
    }

    pub fn target(&self) -> &FinFunctor {
        &self.target
    }

    pub fn component(&self, o: &ObjId) -> &MorId {
        &self.components[o]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::builders;
    use std::sync::Arc;

    #[test]
    fn identity_functor_and_transformation() {
        let c = Arc::new(builders::poset_chain("abc", 3));
        let f = FinFunctor::identity(&c);
        let t = NatTransf::identity(&f);
        assert_eq!(t.source(), t.target());
    }

    #[test]
    fn functor_validation_rejects_broken_maps() {
        let c = Arc::new(builders::poset_chain("p", 2));
        let mut on_objects: BTreeMap<ObjId, ObjId> =
            c.objects().iter().map(|o| (o.clone(), o.clone())).collect();
        // swap the two objects but keep morphisms pointwise: breaks endpoints
        let a = c.objects()[0].clone();
        let b = c.objects()[1].clone();
        on_objects.insert(a.clone(), b.clone());
        on_objects.insert(b, a);
        let on_morphisms = c
            .morphisms()
            .iter()
            .map(|m| (m.id.clone(), m.id.clone()))
            .collect();
        assert!(FinFunctor::new("bad", c.clone(), c.clone(), on_objects, on_morphisms).is_err());
    }
}
