//! Reflective subcategories of finite categories: the reflector is found
//! through initial objects of the under-comma categories, then verified
//! against the adjunction, the initiality statement, and the limit oracle.

use crate::error::Result;
use crate::fincat::builders::full_subcategory;
use crate::fincat::limits::{initial_object, is_limiting_cone, Cone};
use crate::fincat::{comma_under, Cat, FinFunctor, MorId, NatTransf, ObjId};
use crate::report::{Claim, Report};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A discovered reflector: the localization endofunctor and its unit.
pub struct Localization {
    pub reflector: FinFunctor,
    pub unit: NatTransf,
    /// unit morphism per object
    pub unit_components: BTreeMap<ObjId, MorId>,
}

/// Searches a left adjoint to the inclusion of the full subcategory on
/// `d_objects`. For each object the candidate unit is an initial object of
/// the under-comma category — the only possible choice — and the functor
/// action is the unique mediating triangle. Returns `None` when some comma
/// category has no initial object.
pub fn reflector_and_localization(c: &Cat, d_objects: &[ObjId]) -> Result<Option<Localization>> {
    let mut unit_components = BTreeMap::new();
    let mut l_objects = BTreeMap::new();
    for x in c.objects() {
        let (comma, proj) = comma_under(c, d_objects, x)?;
        let Some(init) = initial_object(&comma) else {
            return Ok(None);
        };
        let target = proj.ob(&init).clone();
        // the wrapped morphism: the unique id whose comma object is `init`
        let wrapped = c
            .morphisms()
            .iter()
            .find(|m| ObjId::new(format!("[{}]", m.id)) == init)
            .expect("comma object wraps a morphism")
            .id
            .clone();
        unit_components.insert(x.clone(), wrapped);
        l_objects.insert(x.clone(), target);
    }

    // functor action: L(h : x -> y) is the unique g : L(x) -> L(y) with
    // g ∘ η_x = η_y ∘ h
    let mut l_morphisms = BTreeMap::new();
    for m in c.morphisms() {
        let eta_x = &unit_components[&m.src];
        let eta_y = &unit_components[&m.tgt];
        let want = c.compose(eta_y, &m.id);
        let mut mediating = c
            .hom(&l_objects[&m.src], &l_objects[&m.tgt])
            .into_iter()
            .filter(|g| c.compose(g, eta_x) == want);
        let Some(g) = mediating.next() else {
            return Ok(None);
        };
        if mediating.next().is_some() {
            return Ok(None); // not unique: no adjoint
        }
        l_morphisms.insert(m.id.clone(), g);
    }

    let reflector = FinFunctor::new(
        "reflector",
        c.clone(),
        c.clone(),
        l_objects.clone(),
        l_morphisms,
    )?;
    let unit = NatTransf::new(
        "reflector-unit",
        FinFunctor::identity(c),
        reflector.clone(),
        unit_components.clone(),
    )?;
    Ok(Some(Localization {
        reflector,
        unit,
        unit_components,
    }))
}

/// Verifies a discovered localization: the adjunction bijection
/// `hom(L(x), d) ≅ hom(x, d)`, initiality of each unit in the under-comma
/// category, and the limit comparison with the codensity shape (the
/// reflector value is a limit of the comma projection).
pub fn localization_check(c: &Cat, d_objects: &[ObjId], loc: &Localization) -> Result<Report> {
    let mut report = Report::new("localize").param("category", &c.name).param(
        "subcategory",
        d_objects
            .iter()
            .map(|o| o.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    let stamp = format!("{} objects", c.objects().len());

    // adjunction: composing with the unit is a bijection hom(L(x), d) -> hom(x, d)
    let mut bad = Vec::new();
    for x in c.objects() {
        for d in d_objects {
            let eta = &loc.unit_components[x];
            let lx = loc.reflector.ob(x);
            let upstairs = c.hom(lx, d);
            let image: Vec<MorId> = upstairs.iter().map(|g| c.compose(g, eta)).collect();
            let mut sorted = image.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != upstairs.len() || sorted != c.hom(x, d) {
                bad.push(format!("adjunction fails at ({x}, {d})"));
            }
        }
    }
    report.push(Claim::of_bool(
        "composition with the unit is a hom-set bijection onto the subcategory",
        stamp.clone(),
        bad.is_empty(),
        bad.join("; "),
    ));

    // unit initiality in each under-comma category
    let mut bad = Vec::new();
    for x in c.objects() {
        let (comma, _) = comma_under(c, d_objects, x)?;
        let wrapped = ObjId::new(format!("[{}]", loc.unit_components[x]));
        let initial = comma
            .objects()
            .iter()
            .all(|o| comma.hom(&wrapped, o).len() == 1);
        if !initial {
            bad.push(format!("unit at {x} is not initial in its comma category"));
        }
    }
    report.push(Claim::of_bool(
        "each unit is initial in the under-comma category",
        stamp.clone(),
        bad.is_empty(),
        bad.join("; "),
    ));

    // limit oracle: L(x) with the cone induced by η is a limit of the
    // comma projection diagram
    let mut bad = Vec::new();
    for x in c.objects() {
        let (comma, proj) = comma_under(c, d_objects, x)?;
        let eta = &loc.unit_components[x];
        // leg at comma object [f] (f : x -> d): the unique triangle from
        // η_x, i.e. the g with g ∘ η_x = f
        let mut legs = BTreeMap::new();
        let mut ok = true;
        for o in comma.objects() {
            let f = c
                .morphisms()
                .iter()
                .find(|m| ObjId::new(format!("[{}]", m.id)) == *o)
                .expect("comma object wraps a morphism")
                .id
                .clone();
            let lx = loc.reflector.ob(x);
            let candidates: Vec<MorId> = c
                .hom(lx, c.tgt(&f))
                .into_iter()
                .filter(|g| c.compose(g, eta) == f)
                .collect();
            if candidates.len() != 1 {
                ok = false;
                break;
            }
            legs.insert(o.clone(), candidates[0].clone());
        }
        if !ok {
            bad.push(format!("no unique cone over the comma diagram at {x}"));
            continue;
        }
        let cone = Cone {
            apex: loc.reflector.ob(x).clone(),
            legs,
        };
        if !is_limiting_cone(&proj, &cone) {
            bad.push(format!(
                "reflector value at {x} is not the limit of the comma diagram"
            ));
        }
    }
    report.push(Claim::of_bool(
        "reflector values are limits of the comma diagrams",
        stamp.clone(),
        bad.is_empty(),
        bad.join("; "),
    ));

    // the reflector lands in the subcategory
    let lands = c
        .objects()
        .iter()
        .all(|x| d_objects.contains(loc.reflector.ob(x)));
    report.push(Claim::of_bool(
        "reflector lands in the subcategory",
        stamp,
        lands,
        String::new(),
    ));
    Ok(report)
}

/// Convenience: the full subcategory as a category (for cofinality data).
pub fn subcategory(c: &Cat, d_objects: &[ObjId], name: &str) -> Cat {
    Arc::new(full_subcategory(c, d_objects, name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::builders;

    #[test]
    fn chain_poset_reflects_onto_upper_segment() {
        let c = Arc::new(builders::poset_chain("p", 3));
        let d = vec![ObjId::new("e1"), ObjId::new("e2")];
        let loc = reflector_and_localization(&c, &d).unwrap().unwrap();
        assert_eq!(loc.reflector.ob(&ObjId::new("e0")), &ObjId::new("e1"));
        assert_eq!(loc.reflector.ob(&ObjId::new("e1")), &ObjId::new("e1"));
        assert_eq!(loc.reflector.ob(&ObjId::new("e2")), &ObjId::new("e2"));
        let report = localization_check(&c, &d, &loc).unwrap();
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn whole_category_reflects_identically() {
        let c = Arc::new(builders::poset_chain("p", 2));
        let d: Vec<ObjId> = c.objects().to_vec();
        let loc = reflector_and_localization(&c, &d).unwrap().unwrap();
        for x in c.objects() {
            assert_eq!(loc.reflector.ob(x), x);
        }
    }

    #[test]
    fn discrete_category_with_proper_subcategory_has_no_reflector() {
        let c = Arc::new(builders::discrete("d", 2));
        let d = vec![ObjId::new("x0")];
        assert!(reflector_and_localization(&c, &d).unwrap().is_none());
    }
}
