//! Limits in abstract finite categories by exhaustive universality search,
//! and initial objects.

use super::category::{Cat, MorId, ObjId};
use super::functor::FinFunctor;
use std::collections::BTreeMap;

/// A cone over a diagram: apex object plus one leg per diagram object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub apex: ObjId,
    pub legs: BTreeMap<ObjId, MorId>,
}

/// All cones over `diagram` with the given apex, in canonical order.
fn cones_with_apex(diagram: &FinFunctor, apex: &ObjId) -> Vec<Cone> {
    let j = diagram.domain();
    let c = diagram.codomain();
    let jobjs = j.objects();
    // candidate legs per diagram object
    let cands: Vec<Vec<MorId>> = jobjs.iter().map(|o| c.hom(apex, diagram.ob(o))).collect();
    if cands.iter().any(|v| v.is_empty()) && !jobjs.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; jobjs.len()];
    'outer: loop {
        let legs: BTreeMap<ObjId, MorId> = jobjs
            .iter()
            .enumerate()
            .map(|(i, o)| (o.clone(), cands[i][pick[i]].clone()))
            .collect();
        // commutation with every diagram morphism
        let ok = j
            .morphisms()
            .iter()
            .all(|m| c.compose(diagram.mor(&m.id), &legs[&m.src]) == legs[&m.tgt]);
        if ok {
            out.push(Cone {
                apex: apex.clone(),
                legs,
            });
        }
        // odometer
        let mut i = jobjs.len();
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < cands[i].len() {
                break;
            }
            pick[i] = 0;
        }
        if jobjs.is_empty() {
            break;
        }
    }
    out
}

/// Searches a limiting cone by checking the universal property against
/// every cone in the category: for each candidate cone, every other cone
/// must factor through it by exactly one mediating morphism.
pub fn limit_in_finite_category(diagram: &FinFunctor) -> Option<Cone> {
    let all_cones: Vec<Cone> = diagram
        .codomain()
        .objects()
        .iter()
        .flat_map(|apex| cones_with_apex(diagram, apex))
        .collect();
    all_cones
        .iter()
        .find(|cand| cone_is_universal(diagram, cand, &all_cones))
        .cloned()
}

/// Is the given cone over the diagram limiting? Verified against the full
/// cone inventory of the codomain.
pub fn is_limiting_cone(diagram: &FinFunctor, cone: &Cone) -> bool {
    // the candidate must itself be a cone
    let c = diagram.codomain();
    let j = diagram.domain();
    let shaped = j.objects().iter().all(|o| {
        cone.legs
            .get(o)
            .and_then(|leg| c.morphism(leg))
            .is_some_and(|m| &m.src == &cone.apex && &m.tgt == diagram.ob(o))
    });
    if !shaped {
        return false;
    }
    let commutes = j
        .morphisms()
        .iter()
        .all(|m| c.compose(diagram.mor(&m.id), &cone.legs[&m.src]) == cone.legs[&m.tgt]);
    if !commutes {
        return false;
    }
    let all_cones: Vec<Cone> = c
        .objects()
        .iter()
        .flat_map(|apex| cones_with_apex(diagram, apex))
        .collect();
    cone_is_universal(diagram, cone, &all_cones)
}

fn cone_is_universal(diagram: &FinFunctor, cand: &Cone, all_cones: &[Cone]) -> bool {
    let c = diagram.codomain();
    all_cones.iter().all(|other| {
        let mediating = c
            .hom(&other.apex, &cand.apex)
            .into_iter()
            .filter(|u| {
                cand.legs
                    .iter()
                    .all(|(o, leg)| c.compose(leg, u) == other.legs[o])
            })
            .count();
        mediating == 1
    })
}

/// An object with exactly one morphism to every object, if any.
pub fn initial_object(c: &Cat) -> Option<ObjId> {
    c.objects()
        .iter()
        .find(|cand| c.objects().iter().all(|o| c.hom(cand, o).len() == 1))
        .cloned()
}

/// Dually: exactly one morphism from every object.
pub fn terminal_object(c: &Cat) -> Option<ObjId> {
    c.objects()
        .iter()
        .find(|cand| c.objects().iter().all(|o| c.hom(o, cand).len() == 1))
        .cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::builders;
    use std::sync::Arc;

    #[test]
    fn limit_of_single_object_diagram_is_the_object() {
        let c = Arc::new(builders::poset_chain("p", 3));
        let j = Arc::new(builders::terminal());
        let f = FinFunctor::constant(&j, &c, &ObjId::new("e1")).unwrap();
        let lim = limit_in_finite_category(&f).unwrap();
        assert_eq!(lim.apex, ObjId::new("e1"));
    }

    #[test]
    fn limit_in_poset_is_the_meet() {
        // diamond poset: bottom, two middles, top; limit of {m1, m2} = bottom
        let els: Vec<String> = ["bot", "m1", "m2", "top"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let mut pairs = vec![];
        for e in &els {
            pairs.push((e.clone(), e.clone()));
        }
        pairs.push(("bot".into(), "m1".into()));
        pairs.push(("bot".into(), "m2".into()));
        pairs.push(("bot".into(), "top".into()));
        pairs.push(("m1".into(), "top".into()));
        pairs.push(("m2".into(), "top".into()));
        let c = Arc::new(builders::poset_from_pairs("diamond", &els, &pairs));
        let j = Arc::new(builders::discrete("j", 2));
        let f = FinFunctor::new(
            "pair",
            j.clone(),
            c.clone(),
            [
                (ObjId::new("x0"), ObjId::new("m1")),
                (ObjId::new("x1"), ObjId::new("m2")),
            ]
            .into_iter()
            .collect(),
            [
                (MorId::new("id_x0"), MorId::new("le(m1,m1)")),
                (MorId::new("id_x1"), MorId::new("le(m2,m2)")),
            ]
            .into_iter()
            .collect(),
        )
        .unwrap();
        let lim = limit_in_finite_category(&f).unwrap();
        assert_eq!(lim.apex, ObjId::new("bot"));
    }

    #[test]
    fn limit_of_upper_segment_inclusion_in_chain() {
        // poset a<=b<=c; limit of the inclusion of {b,c} is b
        let c = Arc::new(builders::poset_chain("p", 3));
        let sub = Arc::new(builders::full_subcategory(
            &c,
            &[ObjId::new("e1"), ObjId::new("e2")],
            "upper",
        ));
        let f = FinFunctor::full_inclusion(&sub, &c).unwrap();
        let lim = limit_in_finite_category(&f).unwrap();
        assert_eq!(lim.apex, ObjId::new("e1"));
    }

    #[test]
    fn initial_and_terminal_objects() {
        let t = Arc::new(builders::terminal());
        assert!(initial_object(&t).is_some());
        let d = Arc::new(builders::discrete("d", 2));
        assert!(initial_object(&d).is_none());
        let p = Arc::new(builders::poset_chain("p", 3));
        assert_eq!(initial_object(&p), Some(ObjId::new("e0")));
        assert_eq!(terminal_object(&p), Some(ObjId::new("e2")));
    }
}
