//! The walking action object: an algebra `(x, a)` over a monad extends the
//! cobar resolution to the whole category of max-preserving ordinal maps,
//! with the ordinal of cardinality `k` realized as `T^{k-1}(x)` and the
//! collapse maps realized through the iterated structure map
//! `a^{n+1} = a ∘ T(a^n)`.

use super::isar::{verify_realization, MaxRealization};
use super::monad::SetMonad;
use crate::budget::Budget;
use crate::error::Result;
use crate::fincat::MaxOrdMap;
use crate::report::{Claim, Report, Verdict};
use crate::set::{LFun, LSet};

/// `a^n : T^n(x) -> x` by the recursion `a^0 = id`, `a^{n+1} = a ∘ T(a^n)`.
pub fn iterated_action(
    m: &dyn SetMonad,
    x: &LSet,
    a: &LFun,
    n: usize,
    budget: &Budget,
) -> Result<LFun> {
    let mut acc = LFun::identity(x);
    for _ in 0..n {
        acc = a.compose(&m.on_function(&acc, budget)?)?;
    }
    Ok(acc)
}

/// Realizes one max-preserving map `g : m -> n` (ordinal cardinalities) as
/// the concrete function `T^{m-1}(x) -> T^{n-1}(x)` induced by the action.
pub fn walking_action(
    m: &dyn SetMonad,
    x: &LSet,
    structure: &LFun,
    g: &MaxOrdMap,
    budget: &Budget,
) -> Result<LFun> {
    let depth = g.as_ord().dom().saturating_sub(1);
    let mut real = MaxRealization::from_algebra(m, x.clone(), structure, depth, budget)?;
    real.value(g, budget)
}

/// Checks that the realization is a functor on the whole bounded window of
/// max-preserving maps: identities and every composable pair, evaluated
/// extensionally on each materializable power of `x`. Pairs needing a
/// power over budget are counted and stamped, never silently dropped.
pub fn walking_action_check(
    m: &dyn SetMonad,
    x: &LSet,
    structure: &LFun,
    max_card: usize,
    budget: &Budget,
) -> Result<Report> {
    let mut report = Report::new("walking")
        .param("monad", m.name())
        .param("carrier", format!("size {}", x.len()))
        .param("max-ordinal-cardinality", max_card);

    let mut real =
        MaxRealization::from_algebra(m, x.clone(), structure, max_card.saturating_sub(1), budget)?;

    // identities realize as identities
    let mut id_bad = Vec::new();
    let mut id_skipped = 0usize;
    for c in 1..=max_card {
        match real.value(&MaxOrdMap::identity(c), budget) {
            Ok(v) => {
                if !v.is_bijective() || v.map().iter().enumerate().any(|(i, &j)| i != j) {
                    id_bad.push(format!("identity of cardinality {c} realizes wrongly"));
                }
            }
            Err(e) if e.is_resource() => id_skipped += 1,
            Err(e) => return Err(e),
        }
    }
    report.push(Claim::new(
        "identities realize as identity functions",
        format!("cardinalities 1..={max_card}"),
        if !id_bad.is_empty() {
            Verdict::Fail
        } else if id_skipped > 0 {
            Verdict::Evidence
        } else {
            Verdict::Pass
        },
        if id_skipped > 0 {
            format!("{id_skipped} cardinalities over power budget")
        } else {
            id_bad.join("; ")
        },
    ));

    let (verified, skipped, violations) = verify_realization(&mut real, max_card, budget)?;
    report.push(Claim::new(
        "composition is preserved on every composable pair",
        format!("max-preserving maps on cardinalities 1..={max_card}"),
        if !violations.is_empty() {
            Verdict::Fail
        } else if skipped > 0 {
            Verdict::Evidence
        } else {
            Verdict::Pass
        },
        if violations.is_empty() {
            format!("{verified} pairs verified, {skipped} skipped over the power budget")
        } else {
            violations.join("; ")
        },
    ));
    Ok(report)
}

/// The chain-lattice algebra over the powerset monad: joins are maxima, so
/// the structure map sends a subset to its greatest element and the empty
/// subset to the least. The standard carrier for action checks.
pub fn chain_lattice_algebra(m: &dyn SetMonad, n: usize, budget: &Budget) -> Result<(LSet, LFun)> {
    let x = LSet::skeletal(n);
    let tx = m.on_object(&x, budget)?;
    // subsets arrive in mask order for the powerset monad
    let map = (0..tx.len())
        .map(|mask| {
            if mask == 0 {
                0
            } else {
                63 - (mask as u64).leading_zeros() as usize
            }
        })
        .collect();
    let a = LFun::new(tx, x.clone(), map)?;
    Ok((x, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bkshadow::builtins::powerset;
    use crate::fincat::OrdMap;
    use crate::monadkit::algebra::verify_algebra;

    #[test]
    fn chain_lattice_is_an_algebra() {
        let b = Budget::default();
        let m = powerset();
        let (x, a) = chain_lattice_algebra(&m, 3, &b).unwrap();
        assert!(verify_algebra(&m, &x, &a, &b).unwrap());
    }

    #[test]
    fn identity_map_realizes_as_identity() {
        let b = Budget::default();
        let m = powerset();
        let (x, a) = chain_lattice_algebra(&m, 3, &b).unwrap();
        let v = walking_action(&m, &x, &a, &MaxOrdMap::identity(1), &b).unwrap();
        assert_eq!(v, LFun::identity(&x));
    }

    #[test]
    fn collapse_of_two_realizes_as_the_structure_map() {
        let b = Budget::default();
        let m = powerset();
        let (x, a) = chain_lattice_algebra(&m, 3, &b).unwrap();
        let g = MaxOrdMap::new(OrdMap::collapse(2)).unwrap();
        let v = walking_action(&m, &x, &a, &g, &b).unwrap();
        assert_eq!(v, a);
    }

    #[test]
    fn functoriality_on_small_window() {
        let b = Budget::default();
        let m = powerset();
        let (x, a) = chain_lattice_algebra(&m, 2, &b).unwrap();
        let r = walking_action_check(&m, &x, &a, 3, &b).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
}
