//! Cofinality at the finite level: the initial-functor criterion (every
//! under-comma category of the functor nonempty and connected) and the
//! witness-based sufficient condition built from a shift functor, a cone
//! point, and four compatible transformations with split comparison maps.

use crate::error::{EngineError, Result};
use crate::fincat::{FinFunctor, NatTransf, ObjId};
use crate::report::{Claim, Report};

/// Connectivity data of one comma category `(F ↓ d)`.
#[derive(Debug, Clone)]
pub struct CommaComponents {
    pub at: ObjId,
    pub objects: usize,
    pub components: usize,
}

/// The 1-categorical initial-functor criterion: for every object `d` of
/// the codomain, the category of pairs `(j, F(j) -> d)` is nonempty and
/// connected. Reports the component count per object as evidence.
pub fn is_initial_functor(f: &FinFunctor) -> (Report, Vec<CommaComponents>) {
    let j = f.domain();
    let k = f.codomain();
    let mut rows = Vec::new();
    for d in k.objects() {
        // comma objects: (j-object, morphism F(j) -> d)
        let mut objs = Vec::new();
        for jo in j.objects() {
            for g in k.hom(f.ob(jo), d) {
                objs.push((jo.clone(), g));
            }
        }
        // union-find over comma morphisms (u : j -> j' with g' ∘ F(u) = g)
        let mut parent: Vec<usize> = (0..objs.len()).collect();
        fn find(parent: &mut Vec<usize>, i: usize) -> usize {
            if parent[i] != i {
                let r = find(parent, parent[i]);
                parent[i] = r;
            }
            parent[i]
        }
        for (a, (jo, g)) in objs.iter().enumerate() {
            for (b, (jo2, g2)) in objs.iter().enumerate() {
                if a == b {
                    continue;
                }
                let connected = j.hom(jo, jo2).iter().any(|u| &k.compose(g2, f.mor(u)) == g);
                if connected {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra] = rb;
                    }
                }
            }
        }
        let mut roots: Vec<usize> = (0..objs.len()).map(|i| find(&mut parent, i)).collect();
        roots.sort();
        roots.dedup();
        rows.push(CommaComponents {
            at: d.clone(),
            objects: objs.len(),
            components: roots.len(),
        });
    }
    let mut report = Report::new("initial-check")
        .param("functor", &f.name)
        .param("domain", &f.domain().name)
        .param("codomain", &f.codomain().name);
    for r in &rows {
        report.push(Claim::of_bool(
            format!("comma category at {} is nonempty and connected", r.at),
            format!("{} comma objects", r.objects),
            r.objects > 0 && r.components == 1,
            format!("{} connected components", r.components),
        ));
    }
    (report, rows)
}

/// Witness data for the sufficient cofinality condition. The windowed
/// picture uses explicit inclusions `J ⊆ J⁺`, `K ⊆ K⁺` so the shift
/// functors can enlarge the index range:
///
/// * `f : J -> K` is the functor under test, `f_ext : J⁺ -> K⁺` extends it;
/// * `phi : J -> J⁺` and `psi : K -> K⁺` with `f_ext ∘ phi = psi ∘ f`;
/// * `sigma : Const(c0) ⇒ phi` and `xi : incl_j ⇒ phi`;
/// * `tau : Const(f_ext(c0)) ⇒ psi` and `zeta : incl_k ⇒ psi`;
/// * each `zeta` component must be left invertible.
pub struct CofinalityWitness {
    pub f: FinFunctor,
    pub f_ext: FinFunctor,
    pub incl_j: FinFunctor,
    pub incl_k: FinFunctor,
    pub phi: FinFunctor,
    pub psi: FinFunctor,
    pub c0: ObjId,
    pub sigma: NatTransf,
    pub xi: NatTransf,
    pub tau: NatTransf,
    pub zeta: NatTransf,
}

/// Verifies the witness squares, the split condition on `zeta`, and then
/// runs the initial-functor criterion as the conclusion.
pub fn cofinality_witness_check(w: &CofinalityWitness) -> Result<Report> {
    let mut report = Report::new("cofinality-witness").param("functor", &w.f.name);

    // shape checks: mismatched data is a structural error, not a failure
    if w.incl_j.domain() != w.f.domain() || w.incl_k.domain() != w.f.codomain() {
        return Err(EngineError::structural(
            "window inclusions must start at the domain/codomain of the functor under test",
        ));
    }
    if w.phi.domain() != w.f.domain() || w.phi.codomain() != w.f_ext.domain() {
        return Err(EngineError::structural(
            "shift functor on the index side has wrong endpoints",
        ));
    }
    if w.psi.domain() != w.f.codomain() || w.psi.codomain() != w.f_ext.codomain() {
        return Err(EngineError::structural(
            "shift functor on the target side has wrong endpoints",
        ));
    }

    // extension square: f_ext ∘ incl_j = incl_k ∘ f
    let lhs = w.f_ext.compose(&w.incl_j)?;
    let rhs = w.incl_k.compose(&w.f)?;
    report.push(Claim::of_bool(
        "extension restricts to the functor under test",
        format!("{} objects", w.f.domain().objects().len()),
        functors_equal(&lhs, &rhs),
        String::new(),
    ));

    // intertwining square: f_ext ∘ phi = psi ∘ f
    let lhs = w.f_ext.compose(&w.phi)?;
    let rhs = w.psi.compose(&w.f)?;
    report.push(Claim::of_bool(
        "shift functors commute with the functor",
        format!("{} objects", w.f.domain().objects().len()),
        functors_equal(&lhs, &rhs),
        String::new(),
    ));

    // transformation endpoints
    let sigma_ok = w.sigma.target() == &w.phi
        && w.sigma
            .source()
            .domain()
            .objects()
            .iter()
            .all(|j| w.sigma.source().ob(j) == &w.c0);
    report.push(Claim::of_bool(
        "cone transformation starts at the constant functor on the cone point",
        format!("{} components", w.f.domain().objects().len()),
        sigma_ok,
        String::new(),
    ));
    let xi_ok = w.xi.source() == &w.incl_j && w.xi.target() == &w.phi;
    report.push(Claim::of_bool(
        "inclusion-to-shift transformation has the declared endpoints",
        format!("{} components", w.f.domain().objects().len()),
        xi_ok,
        String::new(),
    ));

    // compatibility squares: F⁺(σ_j) = τ_{F(j)} and F⁺(ξ_j) = ζ_{F(j)}
    let mut bad = Vec::new();
    for j in w.f.domain().objects() {
        if w.f_ext.mor(w.sigma.component(j)) != w.tau.component(w.f.ob(j)) {
            bad.push(format!("cone square fails at {j}"));
        }
        if w.f_ext.mor(w.xi.component(j)) != w.zeta.component(w.f.ob(j)) {
            bad.push(format!("inclusion square fails at {j}"));
        }
    }
    report.push(Claim::of_bool(
        "transformations intertwine across the functor",
        format!("{} objects", w.f.domain().objects().len()),
        bad.is_empty(),
        bad.join("; "),
    ));

    // zeta components are left invertible in the enlarged window
    let kplus = w.f_ext.codomain();
    let mut bad = Vec::new();
    for d in w.f.codomain().objects() {
        let z = w.zeta.component(d);
        let zm = kplus.morphism(z).expect("component is a morphism");
        let has_left_inverse = kplus
            .hom(&zm.tgt, &zm.src)
            .iter()
            .any(|r| kplus.try_compose(r, z) == Some(kplus.identity_of(&zm.src)));
        if !has_left_inverse {
            bad.push(format!("comparison map at {d} has no left inverse"));
        }
    }
    report.push(Claim::of_bool(
        "comparison map is left invertible at every object",
        format!("{} objects", w.f.codomain().objects().len()),
        bad.is_empty(),
        bad.join("; "),
    ));

    // conclusion: the initial-functor criterion
    if report.passed() {
        let (inner, _) = is_initial_functor(&w.f);
        for c in inner.claims {
            report.push(c);
        }
    }
    Ok(report)
}

fn functors_equal(a: &FinFunctor, b: &FinFunctor) -> bool {
    a.domain() == b.domain()
        && a.codomain() == b.codomain()
        && a.domain().objects().iter().all(|o| a.ob(o) == b.ob(o))
        && a.domain()
            .morphisms()
            .iter()
            .all(|m| a.mor(&m.id) == b.mor(&m.id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::fincat::builders;
    use crate::fincat::{MorId, OrdMap};
    use crate::monadkit::SetMonad;
    use std::collections::BTreeMap;
    use std::sync::Arc;

    /// The classical splitting-style witness for the cobar diagram of the
    /// powerset monad at the empty set: ordinal windows shift by a vertex
    /// join, the target side shifts by one more monad application, the
    /// comparison maps are the units, and they split because every
    /// powerset value retracts onto its singletons.
    #[test]
    fn powerset_sketch_witness_passes() {
        let b = Budget::default();
        let m = crate::bkshadow::builtins::powerset();
        let empty = crate::set::LSet::empty();

        // ordinal windows: cardinalities 1..2 and 1..3
        let j = Arc::new(builders::delta_window(2));
        let jplus = Arc::new(builders::delta_window(3));
        // target windows: the finite-set category on sizes ≤ 4, restricted
        // to the cobar image sizes {1, 2} for the small side
        let ambient = crate::fincat::concrete::finset_window(4);
        let kplus = ambient.base().clone();
        let ksmall = Arc::new(builders::full_subcategory(
            &kplus,
            &[
                crate::fincat::concrete::finset_object(1),
                crate::fincat::concrete::finset_object(2),
            ],
            "cobar-image",
        ));

        // powers of the empty set: T^a(∅) has size 2^{a-1} for a ≥ 1
        let mut tower = crate::monadkit::PowerTower::new(&m, empty);
        let size_of_card = |a: usize| 1usize << (a - 1);
        let obj_of_card = |a: usize| crate::fincat::concrete::finset_object(size_of_card(a));

        // realize an ordinal map as a finite-set morphism through the cobar
        let mut realize = |f: &OrdMap| -> MorId {
            let lf = tower.cobar_map(f, &b).expect("cobar map materializes");
            ambient
                .morphism_for_function(
                    &obj_of_card(f.dom()),
                    &obj_of_card(f.cod()),
                    &crate::set::LFun::new(
                        crate::set::LSet::skeletal(lf.dom().len()),
                        crate::set::LSet::skeletal(lf.cod().len()),
                        lf.map().to_vec(),
                    )
                    .unwrap(),
                )
                .expect("cobar value is a finite-set morphism")
        };

        let functor_from_cards = |name: &str,
                                  dom: &crate::fincat::Cat,
                                  cod: &crate::fincat::Cat,
                                  realize: &mut dyn FnMut(&OrdMap) -> MorId|
         -> FinFunctor {
            let on_objects: BTreeMap<_, _> = dom
                .objects()
                .iter()
                .map(|o| {
                    let card: usize = o.0[1..].parse().unwrap();
                    (o.clone(), obj_of_card(card))
                })
                .collect();
            let on_morphisms: BTreeMap<_, _> = dom
                .morphisms()
                .iter()
                .map(|mor| {
                    let f = builders::parse_ord_mor(&mor.id).unwrap();
                    (mor.id.clone(), realize(&f))
                })
                .collect();
            FinFunctor::new(name, dom.clone(), cod.clone(), on_objects, on_morphisms).unwrap()
        };

        let f = functor_from_cards("cobar-small", &j, &ksmall, &mut realize);
        let f_ext = functor_from_cards("cobar-big", &jplus, &kplus, &mut realize);

        // ordinal-side shift: join a vertex on the left
        let phi = FinFunctor::new(
            "vertex-join",
            j.clone(),
            jplus.clone(),
            j.objects()
                .iter()
                .map(|o| {
                    let card: usize = o.0[1..].parse().unwrap();
                    (o.clone(), builders::ordinal_object(card + 1))
                })
                .collect(),
            j.morphisms()
                .iter()
                .map(|mor| {
                    let fm = builders::parse_ord_mor(&mor.id).unwrap();
                    (
                        mor.id.clone(),
                        builders::ordinal_morphism(&OrdMap::identity(1).join(&fm)),
                    )
                })
                .collect(),
        )
        .unwrap();

        // target-side shift: apply the monad once more
        let psi = FinFunctor::new(
            "monad-shift",
            ksmall.clone(),
            Arc::new((*kplus).clone()),
            ksmall
                .objects()
                .iter()
                .map(|o| {
                    let n: usize = o.0[1..].parse().unwrap();
                    (o.clone(), crate::fincat::concrete::finset_object(1 << n))
                })
                .collect(),
            ksmall
                .morphisms()
                .iter()
                .map(|mor| {
                    let lf = ambient.realize(&mor.id);
                    let plf = m.on_function(lf, &b).unwrap();
                    let src = crate::fincat::concrete::finset_object(1 << lf.dom().len());
                    let tgt = crate::fincat::concrete::finset_object(1 << lf.cod().len());
                    let as_skeletal = crate::set::LFun::new(
                        crate::set::LSet::skeletal(plf.dom().len()),
                        crate::set::LSet::skeletal(plf.cod().len()),
                        plf.map().to_vec(),
                    )
                    .unwrap();
                    (
                        mor.id.clone(),
                        ambient
                            .morphism_for_function(&src, &tgt, &as_skeletal)
                            .unwrap(),
                    )
                })
                .collect(),
        )
        .unwrap();

        let incl_j = FinFunctor::new(
            "ordinal-inclusion",
            j.clone(),
            jplus.clone(),
            j.objects().iter().map(|o| (o.clone(), o.clone())).collect(),
            j.morphisms()
                .iter()
                .map(|mor| (mor.id.clone(), mor.id.clone()))
                .collect(),
        )
        .unwrap();
        let incl_k = FinFunctor::full_inclusion(&ksmall, &kplus).unwrap();

        // cone point: the one-point ordinal
        let c0 = builders::ordinal_object(1);
        let sigma = NatTransf::new(
            "vertex-cone",
            FinFunctor::constant(&j, &jplus, &c0).unwrap(),
            phi.clone(),
            j.objects()
                .iter()
                .map(|o| {
                    let card: usize = o.0[1..].parse().unwrap();
                    (
                        o.clone(),
                        builders::ordinal_morphism(&OrdMap::new(1, card + 1, vec![0]).unwrap()),
                    )
                })
                .collect(),
        )
        .unwrap();
        let xi = NatTransf::new(
            "shift-inclusion",
            incl_j.clone(),
            phi.clone(),
            j.objects()
                .iter()
                .map(|o| {
                    let card: usize = o.0[1..].parse().unwrap();
                    let vals: Vec<usize> = (0..card).map(|i| i + 1).collect();
                    (
                        o.clone(),
                        builders::ordinal_morphism(&OrdMap::new(card, card + 1, vals).unwrap()),
                    )
                })
                .collect(),
        )
        .unwrap();

        // target cone: pick the empty subset; target comparison: the unit
        let d0 = f_ext.ob(&c0).clone();
        let tau = NatTransf::new(
            "empty-subset-cone",
            FinFunctor::constant(&ksmall, &kplus, &d0).unwrap(),
            psi.clone(),
            ksmall
                .objects()
                .iter()
                .map(|o| {
                    let n: usize = o.0[1..].parse().unwrap();
                    let table = crate::set::LFun::new(
                        crate::set::LSet::skeletal(1),
                        crate::set::LSet::skeletal(1 << n),
                        vec![0],
                    )
                    .unwrap();
                    let tgt = crate::fincat::concrete::finset_object(1 << n);
                    (
                        o.clone(),
                        ambient.morphism_for_function(&d0, &tgt, &table).unwrap(),
                    )
                })
                .collect(),
        )
        .unwrap();
        let zeta = NatTransf::new(
            "unit-comparison",
            incl_k.clone(),
            psi.clone(),
            ksmall
                .objects()
                .iter()
                .map(|o| {
                    let n: usize = o.0[1..].parse().unwrap();
                    let eta = m.unit(&crate::set::LSet::skeletal(n), &b).unwrap();
                    let as_skeletal = crate::set::LFun::new(
                        crate::set::LSet::skeletal(n),
                        crate::set::LSet::skeletal(1 << n),
                        eta.map().to_vec(),
                    )
                    .unwrap();
                    let tgt = crate::fincat::concrete::finset_object(1 << n);
                    (
                        o.clone(),
                        ambient
                            .morphism_for_function(o, &tgt, &as_skeletal)
                            .unwrap(),
                    )
                })
                .collect(),
        )
        .unwrap();

        let w = CofinalityWitness {
            f,
            f_ext,
            incl_j,
            incl_k,
            phi,
            psi,
            c0,
            sigma,
            xi,
            tau,
            zeta,
        };
        let report = cofinality_witness_check(&w).unwrap();
        assert!(report.passed(), "{}", report.to_text());
    }

    /// Breaking the split condition is detected and names the object.
    #[test]
    fn broken_comparison_split_is_reported() {
        let c = Arc::new(builders::poset_chain("p", 2));
        let id = FinFunctor::identity(&c);
        // ζ : Id ⇒ shift-to-top has no left inverse at e0 in a poset
        let top = ObjId::new("e1");
        let shift = FinFunctor::constant(&c, &c, &top).unwrap();
        let zeta = NatTransf::new(
            "to-top",
            id.clone(),
            shift.clone(),
            c.objects()
                .iter()
                .map(|o| (o.clone(), MorId::new(format!("le({o},{top})"))))
                .collect(),
        )
        .unwrap();
        let w = CofinalityWitness {
            f: id.clone(),
            f_ext: id.clone(),
            incl_j: id.clone(),
            incl_k: id.clone(),
            phi: shift.clone(),
            psi: shift.clone(),
            c0: top.clone(),
            sigma: NatTransf::new(
                "sigma",
                FinFunctor::constant(&c, &c, &top).unwrap(),
                shift.clone(),
                c.objects()
                    .iter()
                    .map(|o| (o.clone(), MorId::new(format!("le({top},{top})"))))
                    .collect(),
            )
            .unwrap(),
            xi: zeta.clone(),
            tau: NatTransf::new(
                "tau",
                FinFunctor::constant(&c, &c, &top).unwrap(),
                shift,
                c.objects()
                    .iter()
                    .map(|o| (o.clone(), MorId::new(format!("le({top},{top})"))))
                    .collect(),
            )
            .unwrap(),
            zeta,
        };
        let report = cofinality_witness_check(&w).unwrap();
        assert!(!report.passed());
        let split = report
            .claims
            .iter()
            .find(|c| c.name.contains("left invertible"))
            .unwrap();
        assert!(split.details.contains("e0"), "{}", split.details);
    }

    #[test]
    fn identity_functor_is_initial() {
        let c = Arc::new(builders::poset_chain("p", 3));
        let (report, rows) = is_initial_functor(&FinFunctor::identity(&c));
        assert!(report.passed());
        assert!(rows.iter().all(|r| r.components == 1));
    }

    #[test]
    fn empty_into_nonempty_fails() {
        let e = Arc::new(builders::discrete("empty", 0));
        let c = Arc::new(builders::terminal());
        let f = FinFunctor::new(
            "from-empty",
            e.clone(),
            c.clone(),
            Default::default(),
            Default::default(),
        )
        .unwrap();
        let (report, _) = is_initial_functor(&f);
        assert!(!report.passed());
    }

    #[test]
    fn trivial_witness_passes() {
        let c = Arc::new(builders::poset_chain("p", 2));
        let id = FinFunctor::identity(&c);
        let w = CofinalityWitness {
            f: id.clone(),
            f_ext: id.clone(),
            incl_j: id.clone(),
            incl_k: id.clone(),
            phi: id.clone(),
            psi: id.clone(),
            c0: ObjId::new("e0"),
            sigma: NatTransf::new(
                "sigma",
                FinFunctor::constant(&c, &c, &ObjId::new("e0")).unwrap(),
                id.clone(),
                c.objects()
                    .iter()
                    .map(|o| (o.clone(), crate::fincat::MorId::new(format!("le(e0,{o})"))))
                    .collect(),
            )
            .unwrap(),
            xi: NatTransf::identity(&id),
            tau: NatTransf::new(
                "tau",
                FinFunctor::constant(&c, &c, &ObjId::new("e0")).unwrap(),
                id.clone(),
                c.objects()
                    .iter()
                    .map(|o| (o.clone(), crate::fincat::MorId::new(format!("le(e0,{o})"))))
                    .collect(),
            )
            .unwrap(),
            zeta: NatTransf::identity(&id),
        };
        let report = cofinality_witness_check(&w).unwrap();
        assert!(report.passed(), "{}", report.to_text());
    }
}
