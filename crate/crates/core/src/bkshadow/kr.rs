//! The finite-set shadow of the spaces spanned by the empty space and
//! module-like objects: the algebra spectrum of the affine-span monad,
//! sandwiched between its image and retract subcategories, plus the
//! levelwise extension of the monad to truncated simplicial sets.

use super::affine::AffineSpanMonad;
use super::ring::FiniteRing;
use crate::budget::Budget;
use crate::error::Result;
use crate::monadkit::algebra::{algebra_search, image_membership, retract_membership};
use crate::monadkit::monad::SetMonad;
use crate::report::{Claim, Report};
use crate::set::{LFun, LSet};
use crate::simplex::TruncatedSSet;

/// Computes the algebra spectrum of the affine-span monad over the window
/// and asserts the image ⊆ algebras ⊆ retracts sandwich.
pub fn kr_shadow(ring: &FiniteRing, window: &[LSet], budget: &Budget) -> Result<Report> {
    let monad = AffineSpanMonad { ring: ring.clone() };
    let sizes: Vec<String> = window.iter().map(|s| s.len().to_string()).collect();
    let stamp = format!("set sizes [{}]", sizes.join(","));
    let mut report = Report::new("bk-shadow")
        .param("ring", &ring.name)
        .param("window", stamp.clone());

    let mut image = Vec::new();
    let mut algebras = Vec::new();
    let mut retracts = Vec::new();
    for x in window {
        if image_membership(&monad, x, window, budget)?.is_some() {
            image.push(x.len());
        }
        if !algebra_search(&monad, x, budget)?.is_empty() {
            algebras.push(x.len());
        }
        if retract_membership(&monad, x, window, budget)?.is_some() {
            retracts.push(x.len());
        }
    }
    report.set_param("image-sizes", format!("{image:?}"));
    report.set_param("algebra-sizes", format!("{algebras:?}"));
    report.set_param("retract-sizes", format!("{retracts:?}"));

    let sandwich =
        image.iter().all(|s| algebras.contains(s)) && algebras.iter().all(|s| retracts.contains(s));
    report.push(Claim::of_bool(
        "image sizes ⊆ algebra sizes ⊆ retract sizes",
        stamp.clone(),
        sandwich,
        format!("image {image:?}, algebras {algebras:?}, retracts {retracts:?}"),
    ));

    // the empty set always carries the (vacuous) algebra structure
    report.push(Claim::of_bool(
        "the empty set is in the algebra spectrum",
        stamp,
        algebras.contains(&0),
        String::new(),
    ));
    Ok(report)
}

/// Applies the affine-span monad levelwise to a truncated simplicial set,
/// extending faces and degeneracies linearly, and re-verifies the
/// simplicial identities.
pub fn levelwise_affine(
    x: &TruncatedSSet,
    ring: &FiniteRing,
    budget: &Budget,
) -> Result<TruncatedSSet> {
    let monad = AffineSpanMonad { ring: ring.clone() };
    let level_sets: Vec<LSet> = x
        .levels
        .iter()
        .map(|l| LSet::from_distinct(l.clone()))
        .collect();
    let new_levels: Result<Vec<LSet>> = level_sets
        .iter()
        .map(|s| monad.on_object(s, budget))
        .collect();
    let new_levels = new_levels?;

    let lift = |table: &Vec<usize>, dom: usize, cod: usize| -> Result<Vec<usize>> {
        let f = LFun::new(
            level_sets[dom].clone(),
            level_sets[cod].clone(),
            table.clone(),
        )?;
        Ok(monad.on_function(&f, budget)?.map().to_vec())
    };
    let mut face = vec![Vec::new(); x.dim + 1];
    for n in 1..=x.dim {
        for t in &x.face[n] {
            face[n].push(lift(t, n, n - 1)?);
        }
    }
    let mut deg = vec![Vec::new(); x.dim + 1];
    for n in 0..x.dim {
        for t in &x.deg[n] {
            deg[n].push(lift(t, n, n + 1)?);
        }
    }
    let out = TruncatedSSet {
        name: format!("{}[{}]", ring.name, x.name),
        dim: x.dim,
        levels: new_levels.iter().map(|s| s.labels().to_vec()).collect(),
        face,
        deg,
    };
    out.check_identities()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::builders;
    use crate::monadkit::monad::skeletal_window;
    use crate::simplex::nerve::{nerve, point};
    use std::sync::Arc;

    #[test]
    fn z2_spectrum_on_small_window() {
        let b = Budget::default();
        let ring = FiniteRing::zmod(2).unwrap();
        let r = kr_shadow(&ring, &skeletal_window(4), &b).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.params["algebra-sizes"], "[0, 1, 2, 4]");
    }

    #[test]
    fn levelwise_affine_of_point_is_point() {
        let b = Budget::default();
        let ring = FiniteRing::zmod(2).unwrap();
        let p = levelwise_affine(&point(2), &ring, &b).unwrap();
        for n in 0..=2 {
            assert_eq!(p.levels[n].len(), 1);
        }
    }

    #[test]
    fn levelwise_affine_of_arrow_nerve_checks_identities() {
        let b = Budget::default();
        let ring = FiniteRing::zmod(2).unwrap();
        let c = Arc::new(builders::arrow());
        let n = nerve(&c, 2).unwrap();
        let a = levelwise_affine(&n, &ring, &b).unwrap();
        // level 0 has two vertices: the affine part over two points has
        // 2^{2-1} = 2 combinations
        assert_eq!(a.levels[0].len(), 2);
        a.check_identities().unwrap();
    }
}
