//! Retract closure of an object selection inside a concrete category, and
//! the element-wise comparison of codensity values across it.

use super::codensity::{codensity_value, CodensityValue};
use crate::budget::Budget;
use crate::error::Result;
use crate::fincat::{ConcreteCategory, ObjId};
use crate::report::{Claim, Report};
use std::collections::BTreeMap;

/// Window objects admitting a section/retraction pair through some
/// selected object.
pub fn retract_closure(
    ambient: &ConcreteCategory,
    d_objects: &[ObjId],
    window: &[ObjId],
) -> Vec<ObjId> {
    let base = ambient.base();
    window
        .iter()
        .filter(|x| {
            d_objects
                .iter()
                .any(|d| base.retract_witness(x, d).is_some())
        })
        .cloned()
        .collect()
}

/// The canonical restriction `T_{D'}(c) -> T_D(c)` for `D ⊆ D'`: forget
/// the components at the extra objects. Returns the restricted families in
/// the target's pair order.
fn restrict_families(bigger: &CodensityValue, smaller: &CodensityValue) -> Vec<Vec<usize>> {
    let big_idx = bigger.pair_index();
    bigger
        .families
        .iter()
        .map(|fam| {
            smaller
                .pairs
                .iter()
                .map(|p| fam[big_idx[p]])
                .collect::<Vec<usize>>()
        })
        .collect()
}

/// Checks that the codensity value over the selection and over its retract
/// closure agree, object by object, through the canonical restriction map
/// (an explicit natural bijection, not a cardinality count).
pub fn closure_invariance_check(
    ambient: &ConcreteCategory,
    d_objects: &[ObjId],
    window: &[ObjId],
    budget: &Budget,
) -> Result<Report> {
    let closure = retract_closure(ambient, d_objects, window);
    let mut report = Report::new("retract-closure")
        .param("ambient", &ambient.base().name)
        .param(
            "selection",
            d_objects
                .iter()
                .map(|o| o.to_string())
                .collect::<Vec<_>>()
                .join(","),
        )
        .param(
            "closure",
            closure
                .iter()
                .map(|o| o.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );

    // closure-operator laws on the window
    let again = retract_closure(ambient, &closure, window);
    report.push(Claim::of_bool(
        "closure is idempotent on the window",
        format!("{} window objects", window.len()),
        again == closure,
        String::new(),
    ));
    let extensive = d_objects
        .iter()
        .filter(|d| window.contains(d))
        .all(|d| closure.contains(d));
    report.push(Claim::of_bool(
        "closure contains the selection",
        format!("{} window objects", window.len()),
        extensive,
        String::new(),
    ));

    for c in window {
        let small = codensity_value(ambient, d_objects, c, budget)?;
        let big = codensity_value(ambient, &closure, c, budget)?;
        let restricted = restrict_families(&big, &small);
        // the restriction must be a bijection onto the enumerated families
        let mut seen: BTreeMap<&[usize], usize> = BTreeMap::new();
        for r in &restricted {
            *seen.entry(r.as_slice()).or_default() += 1;
        }
        let injective = seen.values().all(|&k| k == 1);
        let surjective = small
            .families
            .iter()
            .all(|f| seen.contains_key(f.as_slice()));
        let same_count = big.families.len() == small.families.len();
        report.push(Claim::of_bool(
            format!("restriction is a bijection at {c}"),
            format!(
                "|value over selection| = {}, |value over closure| = {}",
                small.families.len(),
                big.families.len()
            ),
            injective && surjective && same_count,
            String::new(),
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::concrete::{finset_object, finset_window};

    #[test]
    fn closure_of_four_contains_all_smaller_nonempty_sizes() {
        let amb = finset_window(4);
        let window: Vec<ObjId> = (0..=4).map(finset_object).collect();
        let closure = retract_closure(&amb, &[finset_object(4)], &window);
        let expect: Vec<ObjId> = (1..=4).map(finset_object).collect();
        assert_eq!(closure, expect);
    }

    #[test]
    fn closure_is_monotone_and_idempotent() {
        let amb = finset_window(3);
        let window: Vec<ObjId> = (0..=3).map(finset_object).collect();
        let c1 = retract_closure(&amb, &[finset_object(2)], &window);
        let c2 = retract_closure(&amb, &[finset_object(2), finset_object(3)], &window);
        assert!(c1.iter().all(|x| c2.contains(x)), "monotone");
        assert_eq!(retract_closure(&amb, &c2, &window), c2, "idempotent");
    }

    #[test]
    fn codensity_agrees_across_the_closure() {
        let b = Budget::default();
        let amb = finset_window(3);
        let window: Vec<ObjId> = (0..=3).map(finset_object).collect();
        let r = closure_invariance_check(&amb, &[finset_object(2)], &window, &b).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}
