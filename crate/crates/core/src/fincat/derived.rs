//! Derived categories: under-comma categories of a full subcategory, the
//! twisted arrow category with its two projections, and the over-fiber
//! model of the slice.

use super::builders::opposite;
use super::category::{Cat, FinCategory, MorId, Morphism, ObjId};
use super::functor::FinFunctor;
use crate::error::{EngineError, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// The under-category `D_{c/}` of a full subcategory selection `D ⊆ C`:
/// objects are morphisms `c -> d` with `d ∈ D`, morphisms are commuting
/// triangles. Returns the category together with the target projection
/// into `C`.
pub fn comma_under(c: &Cat, d_objects: &[ObjId], base: &ObjId) -> Result<(Cat, FinFunctor)> {
    if !c.has_object(base) {
        return Err(EngineError::structural(format!(
            "object {base} not in category {}",
            c.name
        )));
    }
    for d in d_objects {
        if !c.has_object(d) {
            return Err(EngineError::structural(format!(
                "subcategory object {d} not in {}",
                c.name
            )));
        }
    }
    let dset: std::collections::BTreeSet<&ObjId> = d_objects.iter().collect();
    let obj = |f: &MorId| ObjId::new(format!("[{f}]"));

    let mut objects = Vec::new();
    let mut obj_src = BTreeMap::new(); // comma object -> the morphism id it wraps
    for m in c.morphisms() {
        if m.src == *base && dset.contains(&m.tgt) {
            objects.push(obj(&m.id));
            obj_src.insert(obj(&m.id), m.id.clone());
        }
    }

    let mor = |f: &MorId, g: &MorId, f2: &MorId| MorId::new(format!("[{f}=>{f2}|{g}]"));
    let mut morphisms = Vec::new();
    let mut tri = BTreeMap::new(); // comma morphism -> underlying g
    for (of, f) in &obj_src {
        for (of2, f2) in &obj_src {
            let t1 = c.tgt(f);
            let t2 = c.tgt(f2);
            for g in c.hom(t1, t2) {
                if &c.compose(&g, f) == f2 {
                    let id = mor(f, &g, f2);
                    morphisms.push(Morphism {
                        id: id.clone(),
                        src: of.clone(),
                        tgt: of2.clone(),
                    });
                    tri.insert(id, g.clone());
                }
            }
        }
    }

    let identity: BTreeMap<ObjId, MorId> = obj_src
        .iter()
        .map(|(o, f)| (o.clone(), mor(f, c.identity_of(c.tgt(f)), f)))
        .collect();

    let mut compose = BTreeMap::new();
    for m1 in &morphisms {
        for m2 in &morphisms {
            if m1.tgt != m2.src {
                continue;
            }
            let g = c.compose(&tri[&m2.id], &tri[&m1.id]);
            let f = &obj_src[&m1.src];
            let f2 = &obj_src[&m2.tgt];
            compose.insert((m2.id.clone(), m1.id.clone()), mor(f, &g, f2));
        }
    }

    let comma = Arc::new(FinCategory::new(
        format!("{}[{base}/D]", c.name),
        objects,
        morphisms,
        identity,
        compose,
    ));
    debug_assert!(comma.is_valid());

    let proj = FinFunctor::new(
        "target-projection",
        comma.clone(),
        c.clone(),
        obj_src
            .iter()
            .map(|(o, f)| (o.clone(), c.tgt(f).clone()))
            .collect(),
        tri.into_iter().collect(),
    )?;
    Ok((comma, proj))
}

/// The twisted arrow category: objects are the morphisms of `C`; a
/// morphism `α -> α'` is a pair `(γ0, γ1)` with `α = γ1 ∘ α' ∘ γ0`.
/// Returns `(Tw(C), p, q)` with `p : Tw(C) -> C` (source projection) and
/// `q : Tw(C) -> C^op` (target projection).
pub fn twisted_arrow(c: &Cat) -> Result<(Cat, FinFunctor, FinFunctor)> {
    let obj = |a: &MorId| ObjId::new(format!("tw[{a}]"));
    let mor = |a: &MorId, g0: &MorId, g1: &MorId, a2: &MorId| {
        MorId::new(format!("tw[{a}=>{a2}|{g0},{g1}]"))
    };

    let objects: Vec<ObjId> = c.morphisms().iter().map(|m| obj(&m.id)).collect();
    let mut morphisms = Vec::new();
    let mut legs = BTreeMap::new(); // tw morphism -> (γ0, γ1)
    let mut ends = BTreeMap::new(); // tw morphism -> (α, α')
    for a in c.morphisms() {
        for a2 in c.morphisms() {
            for g0 in c.hom(&a.src, &a2.src) {
                for g1 in c.hom(&a2.tgt, &a.tgt) {
                    // α = γ1 ∘ α' ∘ γ0
                    let comp = c.compose(&g1, &c.compose(&a2.id, &g0));
                    if comp == a.id {
                        let id = mor(&a.id, &g0, &g1, &a2.id);
                        morphisms.push(Morphism {
                            id: id.clone(),
                            src: obj(&a.id),
                            tgt: obj(&a2.id),
                        });
                        legs.insert(id.clone(), (g0.clone(), g1.clone()));
                        ends.insert(id, (a.id.clone(), a2.id.clone()));
                    }
                }
            }
        }
    }

    let identity: BTreeMap<ObjId, MorId> = c
        .morphisms()
        .iter()
        .map(|a| {
            (
                obj(&a.id),
                mor(&a.id, c.identity_of(&a.src), c.identity_of(&a.tgt), &a.id),
            )
        })
        .collect();

    let mut compose = BTreeMap::new();
    for m1 in &morphisms {
        for m2 in &morphisms {
            if m1.tgt != m2.src {
                continue;
            }
            let (g0a, g1a) = &legs[&m1.id];
            let (g0b, g1b) = &legs[&m2.id];
            let (a, _) = &ends[&m1.id];
            let (_, a3) = &ends[&m2.id];
            // (δ0,δ1) ∘ (γ0,γ1) = (δ0∘γ0, γ1∘δ1)
            compose.insert(
                (m2.id.clone(), m1.id.clone()),
                mor(a, &c.compose(g0b, g0a), &c.compose(g1a, g1b), a3),
            );
        }
    }

    let tw = Arc::new(FinCategory::new(
        format!("Tw({})", c.name),
        objects,
        morphisms,
        identity,
        compose,
    ));
    debug_assert!(tw.is_valid());

    let p = FinFunctor::new(
        "tw-source",
        tw.clone(),
        c.clone(),
        c.morphisms()
            .iter()
            .map(|a| (obj(&a.id), a.src.clone()))
            .collect(),
        legs.iter()
            .map(|(m, (g0, _))| (m.clone(), g0.clone()))
            .collect(),
    )?;
    let cop = Arc::new(opposite(c));
    let q = FinFunctor::new(
        "tw-target",
        tw.clone(),
        cop.clone(),
        c.morphisms()
            .iter()
            .map(|a| (obj(&a.id), a.tgt.clone()))
            .collect(),
        legs.iter()
            .map(|(m, (_, g1))| (m.clone(), MorId::new(format!("op({g1})"))))
            .collect(),
    )?;
    Ok((tw, p, q))
}

/// The fiber `C_{|c}` of the target projection of `Tw(C)` over `c`,
/// together with the canonical comparison functor from the slice `C_{/c}`.
/// At the level of finite categories the comparison is an isomorphism;
/// `over_fiber_comparison_is_iso` checks it exhaustively.
pub struct OverFiber {
    pub fiber: Cat,
    pub slice: Cat,
    pub comparison: FinFunctor,
}

pub fn over_fiber(c: &Cat, at: &ObjId) -> Result<OverFiber> {
    if !c.has_object(at) {
        return Err(EngineError::structural(format!(
            "object {at} not in {}",
            c.name
        )));
    }
    // Fiber of q over `at`: objects tw[α] with tgt(α) = at, morphisms the
    // twisted-arrow morphisms whose γ1 leg is id_at, i.e. pairs (γ0, id)
    // with α = α' ∘ γ0. Ids match the ones `twisted_arrow` generates.
    let idc = c.identity_of(at).clone();
    let obj = |a: &MorId| ObjId::new(format!("tw[{a}]"));
    let mor = |a: &MorId, g0: &MorId, a2: &MorId| MorId::new(format!("tw[{a}=>{a2}|{g0},{idc}]"));
    let fiber_src: Vec<&Morphism> = c.morphisms().iter().filter(|a| &a.tgt == at).collect();
    let objects: Vec<ObjId> = fiber_src.iter().map(|a| obj(&a.id)).collect();
    let mut morphisms = Vec::new();
    let mut legs0 = BTreeMap::new();
    for a in &fiber_src {
        for a2 in &fiber_src {
            for g0 in c.hom(&a.src, &a2.src) {
                if c.compose(&a2.id, &g0) == a.id {
                    let id = mor(&a.id, &g0, &a2.id);
                    morphisms.push(Morphism {
                        id: id.clone(),
                        src: obj(&a.id),
                        tgt: obj(&a2.id),
                    });
                    legs0.insert(id, (a.id.clone(), g0, a2.id.clone()));
                }
            }
        }
    }
    let identity: BTreeMap<ObjId, MorId> = fiber_src
        .iter()
        .map(|a| (obj(&a.id), mor(&a.id, c.identity_of(&a.src), &a.id)))
        .collect();
    let mut compose = BTreeMap::new();
    for m1 in &morphisms {
        for m2 in &morphisms {
            if m1.tgt != m2.src {
                continue;
            }
            let (a, g0a, _) = &legs0[&m1.id];
            let (_, g0b, a3) = &legs0[&m2.id];
            compose.insert(
                (m2.id.clone(), m1.id.clone()),
                mor(a, &c.compose(g0b, g0a), a3),
            );
        }
    }
    let fiber = Arc::new(FinCategory::new(
        format!("{}[|{at}]", c.name),
        objects,
        morphisms,
        identity,
        compose,
    ));
    debug_assert!(fiber.is_valid());

    // slice C_{/c}: objects α: x -> c; morphisms g: x -> x' with α' ∘ g = α
    let sobj = |a: &MorId| ObjId::new(format!("sl[{a}]"));
    let smor = |a: &MorId, g: &MorId, a2: &MorId| MorId::new(format!("sl[{a}=>{a2}|{g}]"));
    let slice_objs: Vec<&Morphism> = c.morphisms().iter().filter(|a| &a.tgt == at).collect();
    let mut sobjects = Vec::new();
    let mut smorphisms = Vec::new();
    let mut sunder = BTreeMap::new();
    for a in &slice_objs {
        sobjects.push(sobj(&a.id));
    }
    for a in &slice_objs {
        for a2 in &slice_objs {
            for g in c.hom(&a.src, &a2.src) {
                if c.compose(&a2.id, &g) == a.id {
                    let id = smor(&a.id, &g, &a2.id);
                    smorphisms.push(Morphism {
                        id: id.clone(),
                        src: sobj(&a.id),
                        tgt: sobj(&a2.id),
                    });
                    sunder.insert(id, (a.id.clone(), g.clone(), a2.id.clone()));
                }
            }
        }
    }
    let sidentity: BTreeMap<ObjId, MorId> = slice_objs
        .iter()
        .map(|a| (sobj(&a.id), smor(&a.id, c.identity_of(&a.src), &a.id)))
        .collect();
    let mut scompose = BTreeMap::new();
    for m1 in &smorphisms {
        for m2 in &smorphisms {
            if m1.tgt != m2.src {
                continue;
            }
            let (a, g1, _) = &sunder[&m1.id];
            let (_, g2, a3) = &sunder[&m2.id];
            scompose.insert(
                (m2.id.clone(), m1.id.clone()),
                smor(a, &c.compose(g2, g1), a3),
            );
        }
    }
    let slice = Arc::new(FinCategory::new(
        format!("{}[/{at}]", c.name),
        sobjects,
        smorphisms,
        sidentity,
        scompose,
    ));
    debug_assert!(slice.is_valid());

    // comparison: sl[α] -> tw[α]; sl[α=>α'|g] -> tw[α=>α'|g,id_c]
    let idc = c.identity_of(at);
    let comparison = FinFunctor::new(
        "slice-to-fiber",
        slice.clone(),
        fiber.clone(),
        slice_objs
            .iter()
            .map(|a| (sobj(&a.id), ObjId::new(format!("tw[{}]", a.id))))
            .collect(),
        sunder
            .iter()
            .map(|(m, (a, g, a2))| (m.clone(), MorId::new(format!("tw[{a}=>{a2}|{g},{idc}]"))))
            .collect(),
    )?;
    Ok(OverFiber {
        fiber,
        slice,
        comparison,
    })
}

impl OverFiber {
    /// Is the comparison functor bijective on objects and morphisms?
    pub fn comparison_is_iso(&self) -> bool {
        if self.slice.objects().len() != self.fiber.objects().len()
            || self.slice.morphisms().len() != self.fiber.morphisms().len()
        {
            return false;
        }
        let obj_image: std::collections::BTreeSet<ObjId> = self
            .slice
            .objects()
            .iter()
            .map(|o| self.comparison.ob(o).clone())
            .collect();
        let mor_image: std::collections::BTreeSet<MorId> = self
            .slice
            .morphisms()
            .iter()
            .map(|m| self.comparison.mor(&m.id).clone())
            .collect();
        obj_image.len() == self.fiber.objects().len()
            && mor_image.len() == self.fiber.morphisms().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::builders;

    #[test]
    fn comma_with_base_in_subcategory_has_initial_identity() {
        let c = Arc::new(builders::poset_chain("p", 3));
        let all: Vec<ObjId> = c.objects().to_vec();
        let (comma, _proj) = comma_under(&c, &all, &all[0]).unwrap();
        // id_{e0} is initial: exactly one morphism to every object
        let init = crate::fincat::limits::initial_object(&comma);
        assert!(init.is_some());
    }

    #[test]
    fn comma_example_poset() {
        // poset a<=b<=c, D = {b,c}, base a: objects {a->b, a->c}, one
        // non-identity morphism between them
        let c = Arc::new(builders::poset_chain("p", 3));
        let d = vec![ObjId::new("e1"), ObjId::new("e2")];
        let (comma, proj) = comma_under(&c, &d, &ObjId::new("e0")).unwrap();
        assert_eq!(comma.objects().len(), 2);
        let non_id = comma.morphisms().iter().filter(|m| m.src != m.tgt).count();
        assert_eq!(non_id, 1);
        assert_eq!(proj.domain(), &comma);
    }

    #[test]
    fn comma_with_empty_subcategory_is_empty() {
        let c = Arc::new(builders::poset_chain("p", 2));
        let (comma, _) = comma_under(&c, &[], &ObjId::new("e0")).unwrap();
        assert!(comma.objects().is_empty());
    }

    #[test]
    fn twisted_arrow_of_terminal_category() {
        let c = Arc::new(builders::terminal());
        let (tw, _, _) = twisted_arrow(&c).unwrap();
        assert_eq!(tw.objects().len(), 1);
        assert_eq!(tw.morphisms().len(), 1);
    }

    #[test]
    fn twisted_arrow_of_walking_arrow() {
        let c = Arc::new(builders::arrow());
        let (tw, p, q) = twisted_arrow(&c).unwrap();
        assert_eq!(tw.objects().len(), 3); // id0, id1, the arrow
        let non_id = tw.morphisms().iter().filter(|m| m.src != m.tgt).count();
        assert_eq!(non_id, 2); // arrow -> id0 and arrow -> id1
        assert!(p.codomain().name.contains("arr"));
        assert!(q.codomain().name.ends_with("op"));
        // no morphism between the two identity objects
        let delta = c.hom(&ObjId::new("e0"), &ObjId::new("e1"))[0].clone();
        let o_id0 = ObjId::new(format!("tw[{}]", c.identity_of(&ObjId::new("e0"))));
        let o_id1 = ObjId::new(format!("tw[{}]", c.identity_of(&ObjId::new("e1"))));
        let o_d = ObjId::new(format!("tw[{delta}]"));
        assert_eq!(tw.hom(&o_id0, &o_id1).len(), 0);
        assert_eq!(tw.hom(&o_d, &o_id0).len(), 1);
        assert_eq!(tw.hom(&o_d, &o_id1).len(), 1);
    }

    #[test]
    fn twisted_arrow_object_count_equals_morphism_count() {
        let c = Arc::new(builders::delta_plus_window(2));
        let (tw, _, _) = twisted_arrow(&c).unwrap();
        assert_eq!(tw.objects().len(), c.morphisms().len());
    }

    #[test]
    fn over_fiber_comparison_is_iso_for_stock_categories() {
        for cat in [
            builders::poset_chain("p", 3),
            builders::cyclic_group(2),
            builders::delta_plus_window(2),
        ] {
            let c = Arc::new(cat);
            for at in c.objects().to_vec() {
                let of = over_fiber(&c, &at).unwrap();
                assert!(
                    of.comparison_is_iso(),
                    "comparison not iso at {at} in {}",
                    c.name
                );
                // object count = number of morphisms targeting `at`
                let expect = c.morphisms().iter().filter(|m| m.tgt == at).count();
                assert_eq!(of.fiber.objects().len(), expect);
            }
        }
    }

    #[test]
    fn over_fiber_at_terminal_object_of_poset_recovers_the_poset() {
        let c = Arc::new(builders::poset_chain("p", 3));
        let of = over_fiber(&c, &ObjId::new("e2")).unwrap();
        assert_eq!(of.fiber.objects().len(), c.objects().len());
        assert_eq!(of.fiber.morphisms().len(), c.morphisms().len());
    }
}
