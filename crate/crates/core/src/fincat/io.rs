//! The category definition file: a JSON document with `objects`,
//! `morphisms` (id/src/tgt), `identity`, `compose` (triples `[g, f, g∘f]`),
//! and optional `underlying`/`realize` sections turning the category
//! concrete. Serialization sorts every key, so round-trips are byte-stable.

use super::category::{FinCategory, MorId, Morphism, ObjId};
use super::concrete::ConcreteCategory;
use crate::error::{EngineError, Result};
use crate::set::{LFun, LSet};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CategoryFile {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismEntry>,
    /// object -> identity morphism id
    pub identity: BTreeMap<String, String>,
    /// triples [g, f, g∘f]
    pub compose: Vec<[String; 3]>,
    /// object -> element labels
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub underlying: BTreeMap<String, Vec<String>>,
    /// morphism -> {element label -> element label}
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub realize: BTreeMap<String, BTreeMap<String, String>>,
    /// whether distinct morphisms must realize distinct functions
    #[serde(default = "default_faithful")]
    pub faithful: bool,
}

fn default_faithful() -> bool {
    true
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct MorphismEntry {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

impl CategoryFile {
    pub fn from_category(c: &FinCategory) -> Self {
        CategoryFile {
            name: c.name.clone(),
            objects: c.objects().iter().map(|o| o.0.clone()).collect(),
            morphisms: c
                .morphisms()
                .iter()
                .map(|m| MorphismEntry {
                    id: m.id.0.clone(),
                    src: m.src.0.clone(),
                    tgt: m.tgt.0.clone(),
                })
                .collect(),
            identity: c
                .objects()
                .iter()
                .map(|o| (o.0.clone(), c.identity_of(o).0.clone()))
                .collect(),
            compose: c
                .morphisms()
                .iter()
                .flat_map(|f| {
                    c.morphisms().iter().filter_map(move |g| {
                        c.try_compose(&g.id, &f.id)
                            .map(|h| [g.id.0.clone(), f.id.0.clone(), h.0.clone()])
                    })
                })
                .collect(),
            underlying: BTreeMap::new(),
            realize: BTreeMap::new(),
            faithful: true,
        }
    }

    pub fn from_concrete(c: &ConcreteCategory) -> Self {
        let mut file = CategoryFile::from_category(c.base());
        for o in c.base().objects() {
            file.underlying
                .insert(o.0.clone(), c.underlying(o).labels().to_vec());
        }
        for m in c.base().morphisms() {
            let f = c.realize(&m.id);
            let table: BTreeMap<String, String> = f
                .dom()
                .labels()
                .iter()
                .enumerate()
                .map(|(i, l)| (l.clone(), f.cod().label(f.apply(i)).to_string()))
                .collect();
            file.realize.insert(m.id.0.clone(), table);
        }
        file.faithful = c.faithful;
        file
    }

    pub fn to_category(&self) -> Result<FinCategory> {
        let objects: Vec<ObjId> = self.objects.iter().map(ObjId::new).collect();
        let morphisms: Vec<Morphism> = self
            .morphisms
            .iter()
            .map(|m| Morphism {
                id: MorId::new(&m.id),
                src: ObjId::new(&m.src),
                tgt: ObjId::new(&m.tgt),
            })
            .collect();
        let identity = self
            .identity
            .iter()
            .map(|(o, m)| (ObjId::new(o), MorId::new(m)))
            .collect();
        let compose = self
            .compose
            .iter()
            .map(|[g, f, h]| ((MorId::new(g), MorId::new(f)), MorId::new(h)))
            .collect();
        Ok(FinCategory::new(
            &self.name, objects, morphisms, identity, compose,
        ))
    }

    /// Builds the concrete category when `underlying`/`realize` are given.
    pub fn to_concrete(&self) -> Result<ConcreteCategory> {
        if self.underlying.is_empty() {
            return Err(EngineError::structural(
                "category file has no `underlying` section",
            ));
        }
        let base = Arc::new(self.to_category()?);
        let mut underlying = BTreeMap::new();
        for (o, labels) in &self.underlying {
            underlying.insert(ObjId::new(o), LSet::new(labels.clone())?);
        }
        let mut realize = BTreeMap::new();
        for m in base.morphisms().to_vec() {
            let table = self.realize.get(&m.id.0).ok_or_else(|| {
                EngineError::structural(format!("morphism {} has no realization", m.id))
            })?;
            let dom = underlying.get(&m.src).ok_or_else(|| {
                EngineError::structural(format!("no underlying set for {}", m.src))
            })?;
            let cod = underlying.get(&m.tgt).ok_or_else(|| {
                EngineError::structural(format!("no underlying set for {}", m.tgt))
            })?;
            let mut map = Vec::with_capacity(dom.len());
            for l in dom.labels() {
                let target = table.get(l).ok_or_else(|| {
                    EngineError::structural(format!("realization of {} misses element {l}", m.id))
                })?;
                let j = cod.index_of(target).ok_or_else(|| {
                    EngineError::structural(format!(
                        "realization of {} hits unknown element {target}",
                        m.id
                    ))
                })?;
                map.push(j);
            }
            realize.insert(m.id.clone(), LFun::new(dom.clone(), cod.clone(), map)?);
        }
        ConcreteCategory::new(base, underlying, realize, self.faithful)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("category file serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| EngineError::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::builders;

    #[test]
    fn category_file_round_trip_is_byte_stable() {
        let c = builders::poset_chain("p", 3);
        let file = CategoryFile::from_category(&c);
        let json = file.to_json();
        let parsed = CategoryFile::from_json(&json).unwrap();
        assert_eq!(parsed.to_json(), json);
        let back = parsed.to_category().unwrap();
        assert!(back.is_valid());
        assert_eq!(&back, &c);
    }

    #[test]
    fn concrete_round_trip_preserves_realization() {
        let c = crate::fincat::concrete::finset_window(2);
        let file = CategoryFile::from_concrete(&c);
        let back = file.to_concrete().unwrap();
        assert_eq!(back.base().morphisms().len(), c.base().morphisms().len());
        for m in c.base().morphisms() {
            assert_eq!(back.realize(&m.id), c.realize(&m.id));
        }
    }

    #[test]
    fn missing_realization_is_a_structural_error() {
        let c = crate::fincat::concrete::finset_window(1);
        let mut file = CategoryFile::from_concrete(&c);
        file.realize.clear();
        assert!(file.to_concrete().is_err());
    }
}
