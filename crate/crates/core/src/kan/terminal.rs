//! Terminality of the codensity endofunctor among subcategory-preserving
//! coaugmented endofunctors, checked by exhaustive enumeration of natural
//! transformations over a window.

use super::codensity::WindowedEndofunctor;
use crate::budget::{Budget, SearchMeter};
use crate::error::Result;
use crate::fincat::{ConcreteCategory, ObjId};
use crate::set::LFun;
use std::collections::BTreeMap;

/// Is the coaugmentation an isomorphism at every selected object?
pub fn d_preserving_check(f: &WindowedEndofunctor, d_objects: &[ObjId]) -> bool {
    d_objects
        .iter()
        .all(|d| f.unit.get(d).map(LFun::is_bijective).unwrap_or(false))
}

/// All functions `fc -> tc` with `lam ∘ ef = et`, enumerated over the
/// cells outside the image of `ef` only.
fn unit_compatible_functions(
    fc: &crate::set::LSet,
    tc: &crate::set::LSet,
    ef: &LFun,
    et: &LFun,
    budget: &Budget,
) -> Result<Vec<LFun>> {
    let mut forced: Vec<Option<usize>> = vec![None; fc.len()];
    for x in 0..ef.dom().len() {
        let cell = ef.apply(x);
        let want = et.apply(x);
        match forced[cell] {
            Some(v) if v != want => return Ok(Vec::new()),
            _ => forced[cell] = Some(want),
        }
    }
    let free: Vec<usize> = (0..fc.len()).filter(|&i| forced[i].is_none()).collect();
    if tc.is_empty() && !free.is_empty() {
        return Ok(Vec::new());
    }
    let total = (tc.len().max(1) as u128)
        .checked_pow(free.len() as u32)
        .unwrap_or(u128::MAX);
    budget.admit_search(total, "unit-compatible function enumeration")?;
    let mut out = Vec::with_capacity(total as usize);
    let mut pick = vec![0usize; free.len()];
    loop {
        let mut table: Vec<usize> = forced.iter().map(|v| v.unwrap_or(0)).collect();
        for (k, &cell) in free.iter().enumerate() {
            table[cell] = pick[k];
        }
        out.push(LFun::new(fc.clone(), tc.clone(), table)?);
        let mut pos = free.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            pick[pos] += 1;
            if pick[pos] < tc.len() {
                break;
            }
            pick[pos] = 0;
        }
    }
}

/// Counts natural transformations `λ : F ⇒ T` over the window whose
/// components commute with both coaugmentations (`λ_c ∘ η^F_c = η^T_c`).
/// The terminality shadow predicts exactly one.
pub fn terminality_count(
    ambient: &ConcreteCategory,
    f: &WindowedEndofunctor,
    t: &WindowedEndofunctor,
    budget: &Budget,
) -> Result<usize> {
    assert_eq!(f.window, t.window, "windows must match");
    let window = &f.window;
    let base = ambient.base();

    // per-object candidates: functions F(c) -> T(c) compatible with units;
    // the unit condition pins the cells in the image of the coaugmentation,
    // so only the complement is enumerated
    let mut candidates: Vec<Vec<LFun>> = Vec::new();
    for c in window {
        let fc = &f.on_objects[c];
        let tc = &t.on_objects[c];
        let ef = &f.unit[c];
        let et = &t.unit[c];
        candidates.push(unit_compatible_functions(fc, tc, ef, et, budget)?);
    }

    // morphisms grouped by (src-index, tgt-index) for incremental checks
    let windex: BTreeMap<&ObjId, usize> = window.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut mors: Vec<(usize, usize, LFun, LFun)> = Vec::new();
    for m in base.morphisms() {
        let (Some(&si), Some(&ti)) = (windex.get(&m.src), windex.get(&m.tgt)) else {
            continue;
        };
        mors.push((
            si,
            ti,
            f.on_morphisms[&m.id].clone(),
            t.on_morphisms[&m.id].clone(),
        ));
    }

    let mut meter = SearchMeter::new(budget, "terminality count");
    let mut count = 0usize;
    let mut pick: Vec<usize> = Vec::new();

    fn natural_so_far(
        pick: &[usize],
        candidates: &[Vec<LFun>],
        mors: &[(usize, usize, LFun, LFun)],
    ) -> bool {
        let assigned = pick.len();
        mors.iter().all(|(si, ti, fm, tm)| {
            if *si >= assigned || *ti >= assigned {
                return true;
            }
            let lam_s = &candidates[*si][pick[*si]];
            let lam_t = &candidates[*ti][pick[*ti]];
            // T(m) ∘ λ_src = λ_tgt ∘ F(m)
            (0..fm.dom().len()).all(|x| tm.apply(lam_s.apply(x)) == lam_t.apply(fm.apply(x)))
        })
    }

    fn rec(
        candidates: &[Vec<LFun>],
        mors: &[(usize, usize, LFun, LFun)],
        pick: &mut Vec<usize>,
        meter: &mut SearchMeter,
        count: &mut usize,
    ) -> Result<()> {
        if pick.len() == candidates.len() {
            *count += 1;
            return Ok(());
        }
        let at = pick.len();
        for i in 0..candidates[at].len() {
            meter.tick()?;
            pick.push(i);
            if natural_so_far(pick, candidates, mors) {
                rec(candidates, mors, pick, meter, count)?;
            }
            pick.pop();
        }
        Ok(())
    }

    rec(&candidates, &mors, &mut pick, &mut meter, &mut count)?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::concrete::{finset_object, finset_window};
    use crate::kan::codensity::codensity_functor;

    #[test]
    fn identity_functor_is_subcategory_preserving() {
        let amb = finset_window(2);
        let window: Vec<ObjId> = (0..=2).map(finset_object).collect();
        let idf = WindowedEndofunctor::identity(&amb, &window);
        assert!(d_preserving_check(&idf, &window));
    }

    #[test]
    fn powerset_functor_with_singleton_unit_does_not_preserve_a_two_element_set() {
        use crate::bkshadow::builtins;
        use crate::monadkit::SetMonad;
        use std::collections::BTreeMap;
        let b = Budget::default();
        let amb = finset_window(2);
        let m = builtins::powerset();
        let window: Vec<ObjId> = (0..=2).map(finset_object).collect();
        let mut on_objects = BTreeMap::new();
        let mut unit = BTreeMap::new();
        for c in &window {
            let x = amb.underlying(c);
            on_objects.insert(c.clone(), m.on_object(x, &b).unwrap());
            unit.insert(c.clone(), m.unit(x, &b).unwrap());
        }
        let mut on_morphisms = BTreeMap::new();
        for mor in amb.base().morphisms() {
            on_morphisms.insert(
                mor.id.clone(),
                m.on_function(amb.realize(&mor.id), &b).unwrap(),
            );
        }
        let f = WindowedEndofunctor {
            name: "powerset".into(),
            window: window.clone(),
            on_objects,
            on_morphisms,
            unit,
        };
        f.check(&amb).unwrap();
        // |P(2)| = 4 ≠ 2: the singleton unit is not a bijection there,
        // and no cardinality survives doubling
        assert!(!d_preserving_check(&f, &[finset_object(2)]));
        assert!(!d_preserving_check(&f, &[finset_object(1)]));
    }

    #[test]
    fn codensity_is_terminal_with_exactly_one_endomorphism() {
        let b = Budget::default();
        let amb = finset_window(2);
        let window: Vec<ObjId> = (0..=2).map(finset_object).collect();
        let d = vec![finset_object(1), finset_object(2)];
        let (t, _) = codensity_functor(&amb, &d, &window, &b).unwrap();
        assert!(d_preserving_check(&t, &d));
        // unique endomorphism under coaugmentation: the identity
        assert_eq!(terminality_count(&amb, &t, &t, &b).unwrap(), 1);
        // unique map from the identity functor: the coaugmentation
        let idf = WindowedEndofunctor::identity(&amb, &window);
        assert_eq!(terminality_count(&amb, &idf, &t, &b).unwrap(), 1);
    }
}
