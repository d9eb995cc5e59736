//! Monad morphisms out of the identity monad: natural transformations
//! `λ : Id ⇒ T` compatible with units and multiplications. The identity
//! monad is initial, so the enumeration should always produce exactly the
//! unit of the target.

use super::monad::SetMonad;
use crate::budget::Budget;
use crate::error::Result;
use crate::set::{all_functions, LFun, LSet};
use std::collections::BTreeMap;

/// A natural family indexed by window objects (keyed by their size, since
/// windows are skeletal).
pub type NatFamily = BTreeMap<usize, LFun>;

/// All natural transformations `Id ⇒ T` on the window (no monad-morphism
/// axioms yet): one component `x -> T(x)` per window object, natural
/// against every function between window objects.
pub fn natural_transformations_from_identity(
    m: &dyn SetMonad,
    window: &[LSet],
    budget: &Budget,
) -> Result<Vec<NatFamily>> {
    // candidate components per object
    let mut candidates: Vec<Vec<LFun>> = Vec::new();
    for x in window {
        let tx = m.on_object(x, budget)?;
        candidates.push(all_functions(x, &tx, budget)?);
    }
    let total: u128 = candidates.iter().map(|c| c.len() as u128).product();
    budget.admit_search(total, "natural transformation enumeration")?;

    // function corpus for naturality
    let mut funs: Vec<LFun> = Vec::new();
    for x in window {
        for y in window {
            funs.extend(all_functions(x, y, budget)?);
        }
    }
    let size_index: BTreeMap<usize, usize> = window
        .iter()
        .enumerate()
        .map(|(i, x)| (x.len(), i))
        .collect();

    let mut out = Vec::new();
    let mut pick = vec![0usize; window.len()];
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(out);
    }
    'outer: loop {
        let family: Vec<&LFun> = pick
            .iter()
            .enumerate()
            .map(|(i, &j)| &candidates[i][j])
            .collect();
        let natural = funs.iter().all(|f| {
            let xi = size_index[&f.dom().len()];
            let yi = size_index[&f.cod().len()];
            // T(f) ∘ λ_x = λ_y ∘ f
            let lhs = m
                .on_function(f, budget)
                .and_then(|tf| tf.compose(family[xi]));
            let rhs = family[yi].compose(f);
            matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b)
        });
        if natural {
            out.push(
                window
                    .iter()
                    .enumerate()
                    .map(|(i, x)| (x.len(), family[i].clone()))
                    .collect(),
            );
        }
        let mut pos = window.len();
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            pick[pos] += 1;
            if pick[pos] < candidates[pos].len() {
                break;
            }
            pick[pos] = 0;
        }
    }
    Ok(out)
}

/// Monad morphisms `Id ⇒ T` on the window: natural transformations whose
/// components satisfy the unit axiom (`λ ∘ η^{Id} = η`, i.e. `λ = η`) and
/// the multiplication axiom `λ = μ ∘ T(λ) ∘ λ`.
pub fn monad_morphisms_from_identity(
    m: &dyn SetMonad,
    window: &[LSet],
    budget: &Budget,
) -> Result<Vec<NatFamily>> {
    let all = natural_transformations_from_identity(m, window, budget)?;
    let mut out = Vec::new();
    for family in all {
        let mut ok = true;
        for x in window {
            let lam = &family[&x.len()];
            let eta = m.unit(x, budget)?;
            // unit axiom: the identity monad's unit is the identity
            if lam != &eta {
                ok = false;
                break;
            }
            // multiplication axiom: μ_x ∘ T(λ_x) ∘ λ_x = λ_x (the identity
            // monad's multiplication is the identity)
            let t_lam = m.on_function(lam, budget)?;
            let lhs = m.mult(x, budget)?.compose(&t_lam.compose(lam)?)?;
            if &lhs != lam {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(family);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bkshadow::builtins;
    use crate::monadkit::monad::skeletal_window;

    #[test]
    fn powerset_admits_extra_natural_families_but_one_morphism() {
        let b = Budget::default();
        let m = builtins::powerset();
        let window = skeletal_window(2);
        let nat = natural_transformations_from_identity(&m, &window, &b).unwrap();
        // at least the unit and the constant-empty family
        assert!(nat.len() >= 2, "found {}", nat.len());
        let morphisms = monad_morphisms_from_identity(&m, &window, &b).unwrap();
        assert_eq!(morphisms.len(), 1);
        for x in &window {
            assert_eq!(morphisms[0][&x.len()], m.unit(x, &b).unwrap());
        }
    }

    #[test]
    fn identity_monad_has_exactly_the_identity() {
        let b = Budget::default();
        let m = builtins::IdentityMonad;
        let window = skeletal_window(2);
        let morphisms = monad_morphisms_from_identity(&m, &window, &b).unwrap();
        assert_eq!(morphisms.len(), 1);
    }
}
