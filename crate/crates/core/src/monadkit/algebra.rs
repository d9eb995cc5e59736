//! Algebra structures over a set monad: exhaustive search for structure
//! maps `a : T(x) -> x` satisfying the unit and multiplication axioms, and
//! retract membership with constructed witnesses.

use super::monad::SetMonad;
use crate::budget::Budget;
use crate::error::Result;
use crate::par;
use crate::set::{LFun, LSet};

/// Checks the two algebra axioms for a candidate structure map:
/// `a ∘ η_x = id` and `a ∘ μ_x = a ∘ T(a)` (the latter quantifies over
/// `T²(x)`, so it is budget-bound).
pub fn verify_algebra(m: &dyn SetMonad, x: &LSet, a: &LFun, budget: &Budget) -> Result<bool> {
    let eta = m.unit(x, budget)?;
    if a.compose(&eta)? != LFun::identity(x) {
        return Ok(false);
    }
    let mu = m.mult(x, budget)?;
    let ta = m.on_function(a, budget)?;
    Ok(a.compose(&mu)? == a.compose(&ta)?)
}

/// Every algebra structure on `x`, in canonical table order. Uses the
/// monad's exact enumerator when it provides one, otherwise a guarded
/// brute-force sweep over all unit-compatible maps `T(x) -> x`.
pub fn algebra_search(m: &dyn SetMonad, x: &LSet, budget: &Budget) -> Result<Vec<LFun>> {
    if let Some(hook) = m.algebra_structures_hook(x, budget) {
        return hook;
    }
    let tx = m.on_object(x, budget)?;
    let eta = m.unit(x, budget)?;
    if x.is_empty() {
        // structure maps T(∅) -> ∅ exist only when T(∅) is empty too
        return if tx.is_empty() {
            Ok(vec![LFun::new(tx, x.clone(), Vec::new())?])
        } else {
            Ok(Vec::new())
        };
    }

    // cells forced by the unit axiom
    let mut forced: Vec<Option<usize>> = vec![None; tx.len()];
    for e in 0..x.len() {
        forced[eta.apply(e)] = Some(e);
    }
    let free_cells: Vec<usize> = (0..tx.len()).filter(|&i| forced[i].is_none()).collect();

    let t2 = m.on_object(&tx, budget)?;
    let candidates = (x.len() as u128)
        .checked_pow(free_cells.len() as u32)
        .unwrap_or(u128::MAX);
    let cost = candidates.saturating_mul(t2.len() as u128);
    budget.admit_search(cost, "algebra structure search")?;

    let mu = m.mult(x, budget)?;
    let n = x.len();
    let total = candidates as usize;
    let found: Vec<Vec<LFun>> = par::map_range(total, |c| {
        // decode candidate c into the free cells
        let mut table: Vec<usize> = forced.iter().map(|f| f.unwrap_or(0)).collect();
        let mut rem = c;
        for &cell in &free_cells {
            table[cell] = rem % n;
            rem /= n;
        }
        let a = LFun::new(tx.clone(), x.clone(), table).expect("candidate table is well-formed");
        let ta = m
            .on_function(&a, budget)
            .expect("T(a) materializes within checked budget");
        let ok = (0..t2.len()).all(|w| a.apply(mu.apply(w)) == a.apply(ta.apply(w)));
        if ok {
            vec![a]
        } else {
            Vec::new()
        }
    });
    let mut out: Vec<LFun> = found.into_iter().flatten().collect();
    out.sort_by(|p, q| p.map().cmp(q.map()));
    Ok(out)
}

/// Does `x` admit any algebra structure?
pub fn admits_algebra(m: &dyn SetMonad, x: &LSet, budget: &Budget) -> Result<bool> {
    Ok(!algebra_search(m, x, budget)?.is_empty())
}

/// A retract witness: `x` is a retract of `T(c)` via a section and a
/// retraction, plus the left inverse of the unit that membership implies.
#[derive(Debug, Clone)]
pub struct RetractWitness {
    /// size of the generating object `c`
    pub generator: LSet,
    /// `s : x -> T(c)`
    pub section: LFun,
    /// `r : T(c) -> x` with `r ∘ s = id`
    pub retraction: LFun,
    /// `ρ : T(x) -> x` with `ρ ∘ η_x = id`, built as `r ∘ μ_c ∘ T(s)`
    pub unit_left_inverse: LFun,
}

/// Searches the window for an object `c` exhibiting `x` as a retract of
/// `T(c)`, and constructs the left inverse of `η_x` that the retract
/// property guarantees.
pub fn retract_membership(
    m: &dyn SetMonad,
    x: &LSet,
    window: &[LSet],
    budget: &Budget,
) -> Result<Option<RetractWitness>> {
    for c in window {
        let tc = match m.on_object(c, budget) {
            Ok(t) => t,
            Err(e) if e.is_resource() => continue,
            Err(e) => return Err(e),
        };
        // sections x -> T(c) need |x| <= |T(c)|; search all pairs
        if (tc.len() as u128).checked_pow(x.len() as u32).is_none() {
            continue;
        }
        let sections = crate::set::all_functions(x, &tc, budget)?;
        let retractions = crate::set::all_functions(&tc, x, budget)?;
        for s in &sections {
            if !s.is_injective() {
                continue;
            }
            for r in &retractions {
                if r.compose(s)? == LFun::identity(x) {
                    // ρ = r ∘ μ_c ∘ T(s): T(x) -> T(T(c)) -> T(c) -> x
                    let ts = m.on_function(s, budget)?;
                    let mu = m.mult(c, budget)?;
                    let rho = r.compose(&mu.compose(&ts)?)?;
                    let eta = m.unit(x, budget)?;
                    debug_assert_eq!(rho.compose(&eta)?, LFun::identity(x));
                    if rho.compose(&eta)? != LFun::identity(x) {
                        continue; // cannot happen for a monad; keep exact
                    }
                    return Ok(Some(RetractWitness {
                        generator: c.clone(),
                        section: s.clone(),
                        retraction: r.clone(),
                        unit_left_inverse: rho,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Image membership up to bijection: is `x` isomorphic (equinumerous,
/// for the skeletal windows used here) to some `T(c)` with `c` in the
/// window?
pub fn image_membership(
    m: &dyn SetMonad,
    x: &LSet,
    window: &[LSet],
    budget: &Budget,
) -> Result<Option<LSet>> {
    for c in window {
        match m.on_object(c, budget) {
            Ok(tc) if tc.len() == x.len() => return Ok(Some(c.clone())),
            Ok(_) => {}
            Err(e) if e.is_resource() => {}
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// The free algebra `(T(c), μ_c)` always satisfies both axioms.
pub fn free_algebra(m: &dyn SetMonad, c: &LSet, budget: &Budget) -> Result<(LSet, LFun)> {
    Ok((m.on_object(c, budget)?, m.mult(c, budget)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bkshadow::builtins::{self, powerset};
    use crate::monadkit::monad::skeletal_window;

    #[test]
    fn free_algebras_pass_the_axioms() {
        let b = Budget::default();
        for m in builtins::catalog() {
            for c in skeletal_window(2) {
                let (tc, mu) = free_algebra(m.as_ref(), &c, &b).unwrap();
                assert!(
                    verify_algebra(m.as_ref(), &tc, &mu, &b).unwrap(),
                    "free algebra fails for {} at size {}",
                    m.name(),
                    c.len()
                );
            }
        }
    }

    #[test]
    fn powerset_algebras_on_three_elements_are_the_semilattices() {
        let b = Budget::default();
        let m = powerset();
        let x = LSet::skeletal(3);
        let smart = algebra_search(&m, &x, &b).unwrap();
        // independent raw sweep: all unit-compatible tables, raw axioms
        struct Raw(builtins::PowersetMonad);
        impl SetMonad for Raw {
            fn name(&self) -> String {
                "raw-powerset".into()
            }
            fn on_object(&self, x: &LSet, b: &Budget) -> Result<LSet> {
                self.0.on_object(x, b)
            }
            fn on_function(&self, f: &LFun, b: &Budget) -> Result<LFun> {
                self.0.on_function(f, b)
            }
            fn unit(&self, x: &LSet, b: &Budget) -> Result<LFun> {
                self.0.unit(x, b)
            }
            fn mult(&self, x: &LSet, b: &Budget) -> Result<LFun> {
                self.0.mult(x, b)
            }
        }
        let raw = algebra_search(&Raw(powerset()), &x, &b).unwrap();
        assert_eq!(
            smart, raw,
            "semilattice enumeration disagrees with raw search"
        );
        // every survivor passes the raw axioms
        for a in &smart {
            assert!(verify_algebra(&m, &x, a, &b).unwrap());
        }
        // join-semilattices with bottom on 3 labeled elements
        assert!(!smart.is_empty());
    }

    #[test]
    fn affine_z2_has_no_algebra_on_three_elements() {
        let b = Budget::default();
        let m = builtins::affine_z2();
        assert!(algebra_search(&m, &LSet::skeletal(3), &b)
            .unwrap()
            .is_empty());
        assert!(!algebra_search(&m, &LSet::skeletal(2), &b)
            .unwrap()
            .is_empty());
        // the empty set carries the empty structure map
        assert_eq!(algebra_search(&m, &LSet::empty(), &b).unwrap().len(), 1);
    }

    #[test]
    fn retract_membership_for_powerset() {
        let b = Budget::default();
        let m = powerset();
        let window = skeletal_window(3);
        // nonempty sizes are retracts of powers
        for n in 1..=3 {
            let w = retract_membership(&m, &LSet::skeletal(n), &window, &b)
                .unwrap()
                .unwrap_or_else(|| panic!("size {n} should be a retract"));
            let eta = m.unit(&LSet::skeletal(n), &b).unwrap();
            assert_eq!(
                w.unit_left_inverse.compose(&eta).unwrap(),
                LFun::identity(&LSet::skeletal(n))
            );
        }
        // the empty set is not: P(∅) = {∅} has no map to ∅
        assert!(retract_membership(&m, &LSet::empty(), &window, &b)
            .unwrap()
            .is_none());
    }
}
