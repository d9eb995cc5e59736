//! The verification suites: `paper` runs every headline criterion of the
//! engine in order, `quick` a fast subset. Each criterion condenses to one
//! claim row; anything that could not be fully quantified within the
//! budget is an evidence verdict with the restriction stamped, and any
//! counterexample is a failure.

use crate::bkshadow::builtins;
use crate::budget::Budget;
use crate::error::Result;
use crate::fincat::concrete::{finset_object, finset_window, finvect_object, finvect_window};
use crate::fincat::{builders, max_canonical_form, max_recompose, FinFunctor, MaxOrdMap, ObjId};
use crate::kan;
use crate::monadkit::{self, monad::skeletal_window, SetMonad};
use crate::report::{Claim, Report, Verdict};
use crate::set::LSet;
use crate::simplex;
use std::sync::Arc;

/// Runs the full criterion list. Every claim is one criterion.
pub fn paper_suite(budget: &Budget) -> Result<Report> {
    let mut report = Report::new("suite:paper");
    report.set_param("budget-families", budget.families);
    report.set_param("budget-elements", budget.elements);
    report.push(c01_monad_laws(budget)?);
    report.push(c02_powerset_completion(budget)?);
    report.push(c03_unit_bijective_on_members(budget)?);
    report.push(c04_codensity_counts(budget)?);
    report.push(c05_double_dual(budget)?);
    report.push(c06_completion_convergence(budget)?);
    report.push(c07_subcategory_chain(budget)?);
    report.push(c08_retract_left_inverse(budget)?);
    report.push(c09_unique_monad_morphism(budget)?);
    report.push(c10_terminality_counts(budget)?);
    report.push(c11_chain_basis_and_horns(budget)?);
    report.push(c12_injective_basis(budget)?);
    report.push(c13_walking_action(budget)?);
    report.push(c14_canonical_form(budget)?);
    report.push(c15_horn_lifting(budget)?);
    report.push(c16_localization(budget)?);
    report.push(c17_cofinal_window(budget)?);
    Ok(report)
}

/// A fast subset for smoke-testing installs.
pub fn quick_suite(budget: &Budget) -> Result<Report> {
    let mut report = Report::new("suite:quick");
    report.set_param("budget-families", budget.families);
    report.set_param("budget-elements", budget.elements);
    report.push(c02_powerset_completion(budget)?);
    report.push(c04_codensity_counts(budget)?);
    report.push(c08_retract_left_inverse(budget)?);
    report.push(c14_canonical_form(budget)?);
    report.push(c15_horn_lifting(budget)?);
    Ok(report)
}

fn condense(name: &str, window: String, inner: &Report, extra: String) -> Claim {
    let verdict = inner.verdict();
    let mut details = extra;
    if verdict == Verdict::Fail {
        let bad: Vec<String> = inner
            .claims
            .iter()
            .filter(|c| c.verdict == Verdict::Fail)
            .map(|c| format!("{}: {}", c.name, c.details))
            .collect();
        if !details.is_empty() {
            details.push_str("; ");
        }
        details.push_str(&bad.join("; "));
    } else if verdict == Verdict::Evidence {
        let ev: Vec<String> = inner
            .claims
            .iter()
            .filter(|c| c.verdict == Verdict::Evidence)
            .map(|c| c.details.clone())
            .collect();
        if !details.is_empty() {
            details.push_str("; ");
        }
        details.push_str(&ev.join("; "));
    }
    Claim::new(name, window, verdict, details)
}

fn merge(name: &str, window: String, parts: Vec<Claim>) -> Claim {
    let verdict = parts
        .iter()
        .map(|c| c.verdict)
        .fold(Verdict::Pass, Verdict::and);
    let details: Vec<String> = parts
        .iter()
        .filter(|c| c.verdict != Verdict::Pass || !c.details.is_empty())
        .map(|c| {
            let body = if c.details.is_empty() {
                c.name.clone()
            } else {
                format!("{}: {}", c.name, c.details)
            };
            format!("{body} [{}]", c.verdict)
        })
        .collect();
    Claim::new(name, window, verdict, details.join("; "))
}

fn c01_monad_laws(budget: &Budget) -> Result<Claim> {
    let window = skeletal_window(4);
    let corpus: Vec<Box<dyn SetMonad>> = vec![
        Box::new(builtins::IdentityMonad),
        Box::new(builtins::powerset()),
        Box::new(builtins::MaybeMonad),
        builtins::builtin_monad("writer:Z/2")?,
        builtins::builtin_monad("affine:Z/2")?,
    ];
    let mut parts = Vec::new();
    for m in &corpus {
        let inner = monadkit::monad_law_check(m.as_ref(), &window, budget)?;
        parts.push(condense(
            &format!("laws of {}", m.name()),
            "sizes ≤ 4".into(),
            &inner,
            m.name(),
        ));
    }
    Ok(merge(
        "C1 monad laws: the comparison corpus passes every law check on set sizes ≤ 4",
        "sizes ≤ 4; laws over towers that exceed the budget are stamped".into(),
        parts,
    ))
}

fn c02_powerset_completion(budget: &Budget) -> Result<Claim> {
    let m = builtins::powerset();
    let mut ok = true;
    let mut details = Vec::new();
    for n in 0..=4usize {
        let x = LSet::skeletal(n);
        let v = monadkit::fakir(&m, &x, budget)?;
        // elementwise oracle: the singleton masks, nothing else
        let expect: Vec<usize> = (0..n).map(|e| 1usize << e).collect();
        if v.members != expect {
            ok = false;
            details.push(format!("size {n}: completion ≠ singleton image"));
        }
        let unit = monadkit::fakir_unit(&m, &x, budget)?;
        if !unit.is_bijective() {
            ok = false;
            details.push(format!("size {n}: corestricted unit not bijective"));
        }
    }
    Ok(Claim::of_bool(
        "C2 powerset completion equals the singleton image, bit-exact against the elementwise equalizer",
        "sizes ≤ 4",
        ok,
        details.join("; "),
    ))
}

fn c03_unit_bijective_on_members(budget: &Budget) -> Result<Claim> {
    let ambient = finset_window(3);
    let mut ok = true;
    let mut bad = Vec::new();
    // every nonempty subset of the size window
    for mask in 1u32..16 {
        let d: Vec<ObjId> = (0..=3)
            .filter(|&n| mask >> n & 1 == 1)
            .map(finset_object)
            .collect();
        let (f, _) = kan::codensity_functor(&ambient, &d, &d.clone(), budget)?;
        for obj in &d {
            if !f.unit[obj].is_bijective() {
                ok = false;
                bad.push(format!("selection {mask:04b}: unit at {obj} not bijective"));
            }
        }
    }
    Ok(Claim::of_bool(
        "C3 codensity preserves the selection: units at selected objects are bijections",
        "all 15 nonempty selections within set sizes ≤ 3",
        ok,
        bad.join("; "),
    ))
}

fn c04_codensity_counts(budget: &Budget) -> Result<Claim> {
    let ambient = finset_window(4);
    let three = finset_object(3);
    let v2 = kan::codensity_value(&ambient, &[finset_object(2)], &three, budget)?;
    let naive = kan::codensity_value_naive(&ambient, &[finset_object(2)], &three, budget)?;
    let d124: Vec<ObjId> = [1, 2, 4].map(finset_object).to_vec();
    let v124 = kan::codensity_value(&ambient, &d124, &three, budget)?;
    // unit bijectivity for the second case
    let (f124, _) = kan::codensity_functor(&ambient, &d124, &[three.clone()], budget)?;
    let ok = v2.families.len() == 8
        && naive == v2.families
        && v124.families.len() == 3
        && f124.unit[&three].is_bijective();
    Ok(Claim::of_bool(
        "C4 codensity value counts: 8 over the two-element selection, 3 over sizes {1,2,4}, unit bijective",
        "object size 3, ambient sizes ≤ 4; cross-checked against the product-filter oracle",
        ok,
        format!(
            "|value over {{2}}| = {} (oracle {}), |value over {{1,2,4}}| = {}",
            v2.families.len(),
            naive.len(),
            v124.families.len()
        ),
    ))
}

fn c05_double_dual(budget: &Budget) -> Result<Claim> {
    let ambient = finvect_window(2, 3);
    let d = vec![finvect_object(1), finvect_object(2)];
    let mut ok = true;
    let mut details = Vec::new();
    for dim in 0..=3usize {
        let c = finvect_object(dim);
        // unit-compatible bijection with the double dual: evaluate each
        // family at the linear functionals; the induced map on the dual
        // must be additive, families must stay separated, and unit
        // families must evaluate functionals at their point
        let (functor, values) = kan::codensity_functor(&ambient, &d, &[c.clone()], budget)?;
        let value = &values[&c];
        if value.families.len() != 1 << dim {
            ok = false;
            details.push(format!("dim {dim}: size {}", value.families.len()));
            continue;
        }
        let pair_idx = value.pair_index();
        let functionals = ambient.base().hom(&c, &finvect_object(1));
        let mut images = std::collections::BTreeSet::new();
        for fam in &value.families {
            for (ia, a) in functionals.iter().enumerate() {
                for b in &functionals {
                    let sum = add_functionals(&ambient, &c, a, b);
                    let fa = fam[pair_idx[&(finvect_object(1), a.clone())]];
                    let fb = fam[pair_idx[&(finvect_object(1), b.clone())]];
                    let fsum = fam[pair_idx[&(finvect_object(1), sum)]];
                    if fsum != (fa + fb) % 2 {
                        ok = false;
                        details.push(format!("dim {dim}: family not additive on the dual"));
                    }
                    let _ = ia;
                }
            }
            let table: Vec<usize> = functionals
                .iter()
                .map(|l| fam[pair_idx[&(finvect_object(1), l.clone())]])
                .collect();
            images.insert(table);
        }
        if images.len() != value.families.len() {
            ok = false;
            details.push(format!(
                "dim {dim}: families not separated by dual evaluation"
            ));
        }
        let unit = &functor.unit[&c];
        let uc = ambient.underlying(&c);
        for x in 0..uc.len() {
            let fam = &value.families[unit.apply(x)];
            for l in &functionals {
                if fam[pair_idx[&(finvect_object(1), l.clone())]] != ambient.realize(l).apply(x) {
                    ok = false;
                    details.push(format!("dim {dim}: unit family disagrees with evaluation"));
                }
            }
        }
    }
    details.sort();
    details.dedup();
    Ok(Claim::of_bool(
        "C5 double-dual shadow: codensity over lines and planes has dual-exponential size with evaluation units",
        "dimensions ≤ 3 over the two-element field",
        ok,
        details.join("; "),
    ))
}

fn add_functionals(
    ambient: &crate::fincat::ConcreteCategory,
    c: &ObjId,
    a: &crate::fincat::MorId,
    b: &crate::fincat::MorId,
) -> crate::fincat::MorId {
    // pointwise sum of two maps into the line, recovered as a morphism
    let fa = ambient.realize(a);
    let fb = ambient.realize(b);
    let table: Vec<usize> = (0..fa.dom().len())
        .map(|x| (fa.apply(x) + fb.apply(x)) % 2)
        .collect();
    let f = crate::set::LFun::new(fa.dom().clone(), fa.cod().clone(), table)
        .expect("sum is a function");
    ambient
        .morphism_for_function(c, &finvect_object(1), &f)
        .expect("sum of linear maps is linear")
}

fn c06_completion_convergence(budget: &Budget) -> Result<Claim> {
    let ladder = [1usize, 2, 3, 4];
    let mut parts = Vec::new();
    for m in [
        Box::new(builtins::powerset()) as Box<dyn SetMonad>,
        builtins::builtin_monad("affine:Z/2")?,
    ] {
        for n in 0..=3usize {
            let c = LSet::skeletal(n);
            let inner = monadkit::fakir::fakir_vs_codensity(m.as_ref(), &c, &ladder, budget)?;
            let stabilized = inner.params.contains_key("stabilized-at");
            let mut claim = condense(
                &format!("{} at size {n}", m.name()),
                "ladder 1..4".into(),
                &inner,
                format!("{} size {n}", m.name()),
            );
            if !stabilized {
                claim.verdict = Verdict::Fail;
                claim.details.push_str("; no stabilization rung");
            }
            parts.push(claim);
        }
    }
    Ok(merge(
        "C6 completion convergence: codensity over the truncated algebra spectrum stabilizes to the completion",
        "object sizes ≤ 3 (including the empty set), spectrum ladder bounds 1..4".into(),
        parts,
    ))
}

fn c07_subcategory_chain(budget: &Budget) -> Result<Claim> {
    let mut parts = Vec::new();
    let (rp, _) =
        monadkit::isar_chain_check(&builtins::powerset(), &skeletal_window(5), 2, budget)?;
    parts.push(condense(
        "powerset chain sizes ≤ 5",
        "sizes ≤ 5, depth 2".into(),
        &rp,
        String::new(),
    ));
    let affine = builtins::affine_z2();
    let (ra, rows) = monadkit::isar_chain_check(&affine, &skeletal_window(4), 2, budget)?;
    parts.push(condense(
        "affine chain sizes ≤ 4",
        "sizes ≤ 4, depth 2".into(),
        &ra,
        String::new(),
    ));
    let spectrum: Vec<usize> = rows
        .iter()
        .filter(|r| r.in_algebra == Some(true))
        .map(|r| r.size)
        .collect();
    parts.push(Claim::of_bool(
        "affine algebra spectrum",
        "sizes ≤ 4",
        spectrum == vec![0, 1, 2, 4],
        format!("spectrum {spectrum:?}"),
    ));
    Ok(merge(
        "C7 subcategory chain: image ⊆ algebras ⊆ split ⊆ retracts, with the affine spectrum {0,1,2,4}",
        "powerset sizes ≤ 5, affine sizes ≤ 4, splitting depth 2".into(),
        parts,
    ))
}

fn c08_retract_left_inverse(budget: &Budget) -> Result<Claim> {
    let mut ok = true;
    let mut count = 0usize;
    let mut bad = Vec::new();
    for m in builtins::catalog() {
        let window = skeletal_window(3);
        for x in &window {
            if let Some(w) = monadkit::retract_membership(m.as_ref(), x, &window, budget)? {
                count += 1;
                let eta = m.unit(x, budget)?;
                let composed = w.unit_left_inverse.compose(&eta)?;
                if composed != crate::set::LFun::identity(x) {
                    ok = false;
                    bad.push(format!("{} size {}", m.name(), x.len()));
                }
            }
        }
    }
    Ok(Claim::of_bool(
        "C8 retract members carry a constructed left inverse of the unit",
        "builtin corpus, sizes ≤ 3",
        ok,
        format!(
            "{count} retract members verified{}",
            if bad.is_empty() {
                String::new()
            } else {
                format!("; failures: {}", bad.join(", "))
            }
        ),
    ))
}

fn c09_unique_monad_morphism(budget: &Budget) -> Result<Claim> {
    let mut parts = Vec::new();
    for m in builtins::catalog() {
        let window = skeletal_window(3);
        let morphisms = monadkit::monad_morphisms_from_identity(m.as_ref(), &window, budget)?;
        let is_unit = morphisms.len() == 1
            && window
                .iter()
                .all(|x| morphisms[0][&x.len()] == m.unit(x, budget).expect("unit materializes"));
        parts.push(Claim::of_bool(
            m.name(),
            "sizes ≤ 3",
            is_unit,
            format!("{} morphisms found", morphisms.len()),
        ));
    }
    Ok(merge(
        "C9 the identity monad maps uniquely into every builtin, through the unit",
        "builtin corpus, sizes ≤ 3".into(),
        parts,
    ))
}

fn c10_terminality_counts(budget: &Budget) -> Result<Claim> {
    let ambient = finset_window(3);
    let window: Vec<ObjId> = (0..=3).map(finset_object).collect();
    let mut parts = Vec::new();

    // codensity functor over a selection, against itself and the identity
    let d: Vec<ObjId> = [1, 2].map(finset_object).to_vec();
    let (t, _) = kan::codensity_functor(&ambient, &d, &window, budget)?;
    let idf = kan::WindowedEndofunctor::identity(&ambient, &window);
    let self_count = kan::terminality_count(&ambient, &t, &t, budget)?;
    parts.push(Claim::of_bool(
        "codensity against itself",
        "sizes ≤ 3, selection {1,2}",
        self_count == 1,
        format!("{self_count} transformations"),
    ));
    let id_count = kan::terminality_count(&ambient, &idf, &t, budget)?;
    parts.push(Claim::of_bool(
        "identity functor into the codensity functor",
        "sizes ≤ 3, selection {1,2}",
        id_count == 1,
        format!("{id_count} transformations"),
    ));

    // completion of the powerset monad against the codensity of its
    // algebra spectrum
    let m = builtins::powerset();
    let mut spectrum = Vec::new();
    for n in 0..=3usize {
        if !monadkit::algebra_search(&m, &LSet::skeletal(n), budget)?.is_empty() {
            spectrum.push(finset_object(n));
        }
    }
    let (tspec, _) = kan::codensity_functor(&ambient, &spectrum, &window, budget)?;
    let fk = monadkit::fakir::fakir_windowed_endofunctor(&m, &ambient, &window, budget)?;
    let fk_count = kan::terminality_count(&ambient, &fk, &tspec, budget)?;
    parts.push(Claim::of_bool(
        "powerset completion into the codensity of its algebra spectrum",
        "sizes ≤ 3",
        fk_count == 1,
        format!("{fk_count} transformations"),
    ));
    Ok(merge(
        "C10 terminality counts: exactly one coaugmentation-compatible transformation in each comparison",
        "finite-set window sizes ≤ 3".into(),
        parts,
    ))
}

fn c11_chain_basis_and_horns(budget: &Budget) -> Result<Claim> {
    let basis = simplex::verify_basis_ndelta_plus(3, 4, budget)?;
    let horns = simplex::verify_horn_generators_ndelta_plus(2, 4, budget)?;
    let (pres, horn) = simplex::ndelta_presentation(3, 4, budget)?;
    let filtration = simplex::free_map_filtration(&pres, 3)?;
    let annotation = simplex::verify_horn_annotation(&pres, &horn, 3)?;
    let left = annotation.params.get("index-class").map(String::as_str) == Some("left");
    let mut parts = vec![
        condense(
            "chain basis",
            "levels ≤ 3, cardinalities ≤ 4".into(),
            &basis,
            String::new(),
        ),
        condense(
            "horn generators",
            "levels ≤ 2, cardinalities ≤ 4".into(),
            &horns,
            String::new(),
        ),
        condense(
            "filtration",
            "levels ≤ 3, cardinalities ≤ 4".into(),
            &filtration,
            String::new(),
        ),
        condense(
            "horn annotation",
            "levels ≤ 3, cardinalities ≤ 4".into(),
            &annotation,
            String::new(),
        ),
    ];
    parts.push(Claim::of_bool(
        "all horn indices are 0",
        "levels ≤ 3",
        left,
        format!("index class {:?}", annotation.params.get("index-class")),
    ));
    Ok(merge(
        "C11 chain-nerve freeness: unique factorization, horn-generator partition, left indices",
        "levels ≤ 3, ordinal cardinalities ≤ 4".into(),
        parts,
    ))
}

fn c12_injective_basis(budget: &Budget) -> Result<Claim> {
    let inner = simplex::verify_basis_delta_inj(4, budget)?;
    Ok(condense(
        "C12 injective-chain basis: step chains, one more per level",
        "levels ≤ 4".into(),
        &inner,
        String::new(),
    ))
}

fn c13_walking_action(budget: &Budget) -> Result<Claim> {
    let mut parts = Vec::new();
    let m = builtins::powerset();
    let (x, a) = monadkit::chain_lattice_algebra(&m, 3, budget)?;
    let inner = monadkit::walking_action_check(&m, &x, &a, 4, budget)?;
    parts.push(condense(
        "powerset chain lattice on 3 elements",
        "ordinal cardinalities ≤ 4; pairs over unmaterializable powers stamped".into(),
        &inner,
        String::new(),
    ));
    // a linear-growth monad exercises the full window with no skips
    let maybe = builtins::MaybeMonad;
    let x3 = LSet::skeletal(3);
    let alg = monadkit::algebra_search(&maybe, &x3, budget)?
        .into_iter()
        .next()
        .expect("pointed structure exists");
    let inner = monadkit::walking_action_check(&maybe, &x3, &alg, 4, budget)?;
    let fully = inner.verdict() == Verdict::Pass;
    parts.push(Claim::of_bool(
        "maybe monad on 3 elements (full window)",
        "ordinal cardinalities ≤ 4, no skips",
        fully,
        String::new(),
    ));
    Ok(merge(
        "C13 walking action: the realization preserves identities and all composable pairs",
        "ordinal cardinalities ≤ 4".into(),
        parts,
    ))
}

fn c14_canonical_form(_budget: &Budget) -> Result<Claim> {
    let mut count = 0usize;
    for dom in 1..=6 {
        for cod in 1..=6 {
            for g in MaxOrdMap::enumerate(dom, cod) {
                let (f, n) = max_canonical_form(&g);
                if max_recompose(&f, n) != g {
                    return Ok(Claim::fail(
                        "C14 canonical form round-trips on all max-preserving maps",
                        "cardinalities ≤ 6",
                        format!("round trip fails on {}", g.as_ord().canonical_label()),
                    ));
                }
                count += 1;
            }
        }
    }
    Ok(Claim::pass(
        "C14 canonical form round-trips on all max-preserving maps",
        "cardinalities ≤ 6",
        format!("{count} maps checked"),
    ))
}

fn c15_horn_lifting(_budget: &Budget) -> Result<Claim> {
    let z2 = Arc::new(builders::cyclic_group(2));
    let nz2 = simplex::nerve(&z2, 3)?;
    let kan_pass = simplex::horn_lifting_check(
        &simplex::SimplicialMap::to_point(&nz2),
        simplex::HornClass::Kan,
        3,
    )?;
    let arrow = Arc::new(builders::arrow());
    let narr = simplex::nerve(&arrow, 3)?;
    let inner_pass = simplex::horn_lifting_check(
        &simplex::SimplicialMap::to_point(&narr),
        simplex::HornClass::Inner,
        3,
    )?;
    let outer = simplex::horn_lifting_check(
        &simplex::SimplicialMap::to_point(&narr),
        simplex::HornClass::Left,
        2,
    )?;
    let left_witness = outer
        .claims
        .iter()
        .find(|c| c.name.contains("dimension 2, omitted face 0"))
        .map(|c| c.verdict == Verdict::Fail && c.details.contains("unfilled horn"))
        .unwrap_or(false);
    let parts = vec![
        condense(
            "group nerve is fibrant to dimension 3",
            "all horns ≤ 3".into(),
            &kan_pass,
            String::new(),
        ),
        condense(
            "arrow nerve fills inner horns",
            "inner horns ≤ 3".into(),
            &inner_pass,
            String::new(),
        ),
        Claim::of_bool(
            "arrow nerve fails the 0th outer horn with a reported witness",
            "dimension 2",
            left_witness,
            String::new(),
        ),
    ];
    Ok(merge(
        "C15 horn lifting: the group nerve fills everything, the arrow nerve only inner horns",
        "dimensions ≤ 3".into(),
        parts,
    ))
}

fn c16_localization(_budget: &Budget) -> Result<Claim> {
    let c = Arc::new(builders::poset_chain("p", 3));
    let d = vec![ObjId::new("e1"), ObjId::new("e2")];
    let Some(loc) = kan::reflector_and_localization(&c, &d)? else {
        return Ok(Claim::fail(
            "C16 localization: the chain poset reflects onto its upper segment",
            "3-chain poset",
            "no reflector found",
        ));
    };
    let inner = kan::localization_check(&c, &d, &loc)?;
    let values_ok = loc.reflector.ob(&ObjId::new("e0")) == &ObjId::new("e1")
        && loc.reflector.ob(&ObjId::new("e1")) == &ObjId::new("e1")
        && loc.reflector.ob(&ObjId::new("e2")) == &ObjId::new("e2");
    let mut claim = condense(
        "C16 localization: the discovered reflector matches the comma limits and initial units",
        "3-chain poset, upper segment".into(),
        &inner,
        String::new(),
    );
    if !values_ok {
        claim.verdict = Verdict::Fail;
        claim.details.push_str("; reflector values wrong");
    }
    Ok(claim)
}

fn c17_cofinal_window(_budget: &Budget) -> Result<Claim> {
    // inclusion of the two smallest ordinals into the four smallest
    let small = Arc::new(builders::delta_window(2));
    let big = Arc::new(builders::delta_window(4));
    let on_objects = small
        .objects()
        .iter()
        .map(|o| (o.clone(), o.clone()))
        .collect();
    let on_morphisms = small
        .morphisms()
        .iter()
        .map(|m| (m.id.clone(), m.id.clone()))
        .collect();
    let incl = FinFunctor::new(
        "ordinal-window-inclusion",
        small,
        big,
        on_objects,
        on_morphisms,
    )?;
    let (inner, rows) = kan::is_initial_functor(&incl);
    let all_connected = rows.iter().all(|r| r.objects > 0 && r.components == 1);
    Ok(Claim::of_bool(
        "C17 the one-truncated ordinal window includes initially into the three-truncated window",
        "ordinal cardinalities ≤ 4",
        inner.passed() && all_connected,
        rows.iter()
            .map(|r| {
                format!(
                    "{}: {} objects, {} components",
                    r.at, r.objects, r.components
                )
            })
            .collect::<Vec<_>>()
            .join("; "),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        let b = Budget::default();
        let r = quick_suite(&b).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}
