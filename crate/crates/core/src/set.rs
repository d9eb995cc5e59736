//! Labeled finite sets and functions between them.
//!
//! `LSet` is an ordered list of distinct element labels; `LFun` is a total
//! function recorded index-wise. Everything downstream (monad windows,
//! codensity elements, affine combinations) is built from these two types,
//! so equality of computed objects is exact label equality.

use crate::budget::Budget;
use crate::error::{EngineError, Result};
use std::fmt;
use std::sync::Arc;

// the pointer fast path in PartialEq only short-circuits equal labels, so
// the derived Hash stays consistent with it
#[allow(clippy::derived_hash_with_manual_eq)]
#[derive(Clone, Eq, PartialOrd, Ord, Hash)]
pub struct LSet {
    labels: Arc<Vec<String>>,
}

impl PartialEq for LSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl LSet {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(EngineError::structural(format!(
                    "duplicate element label `{l}`"
                )));
            }
        }
        Ok(LSet {
            labels: Arc::new(labels),
        })
    }

    /// Infallible constructor for internally generated (distinct) labels.
    pub fn from_distinct(labels: Vec<String>) -> Self {
        // distinctness spot-check; full validation would dominate hot paths
        debug_assert!(
            labels.len() > 256 || {
                let mut s = labels.clone();
                s.sort();
                s.dedup();
                s.len() == labels.len()
            }
        );
        LSet {
            labels: Arc::new(labels),
        }
    }

    /// The skeletal n-element set with labels "0".."n-1".
    pub fn skeletal(n: usize) -> Self {
        LSet::from_distinct((0..n).map(|i| i.to_string()).collect())
    }

    pub fn empty() -> Self {
        LSet::from_distinct(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

impl fmt::Debug for LSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LSet{:?}", self.labels)
    }
}

/// A total function between labeled sets, stored as `map[i] = j` meaning
/// element `i` of the domain goes to element `j` of the codomain.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LFun {
    dom: LSet,
    cod: LSet,
    map: Vec<usize>,
}

impl LFun {
    pub fn new(dom: LSet, cod: LSet, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.len() {
            return Err(EngineError::structural(format!(
                "function table has {} entries for a domain of size {}",
                map.len(),
                dom.len()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&j| j >= cod.len()) {
            return Err(EngineError::structural(format!(
                "function value {bad} out of range for codomain of size {}",
                cod.len()
            )));
        }
        Ok(LFun { dom, cod, map })
    }

    pub fn identity(s: &LSet) -> Self {
        LFun {
            dom: s.clone(),
            cod: s.clone(),
            map: (0..s.len()).collect(),
        }
    }

    pub fn dom(&self) -> &LSet {
        &self.dom
    }

    pub fn cod(&self) -> &LSet {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// `self ∘ first` (apply `first`, then `self`).
    pub fn compose(&self, first: &LFun) -> Result<LFun> {
        if first.cod != self.dom {
            return Err(EngineError::structural(format!(
                "non-composable functions: codomain {:?} vs domain {:?}",
                first.cod, self.dom
            )));
        }
        Ok(LFun {
            dom: first.dom.clone(),
            cod: self.cod.clone(),
            map: first.map.iter().map(|&i| self.map[i]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.cod.len()];
        for &j in &self.map {
            if hit[j] {
                return false;
            }
            hit[j] = true;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod.len()];
        for &j in &self.map {
            hit[j] = true;
        }
        hit.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.len() == self.cod.len() && self.is_injective()
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> Option<LFun> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0usize; self.cod.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Some(LFun {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            map: inv,
        })
    }
}

impl fmt::Debug for LFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LFun{:?}", self.map)
    }
}

/// All functions `dom -> cod` in lexicographic table order. Guarded.
pub fn all_functions(dom: &LSet, cod: &LSet, budget: &Budget) -> Result<Vec<LFun>> {
    let count = (cod.len() as u128).checked_pow(dom.len() as u32);
    let count = count.ok_or_else(|| EngineError::Resource {
        context: "all_functions".into(),
        needed: u128::MAX,
        budget: budget.families as u128,
    })?;
    if dom.is_empty() {
        return Ok(vec![LFun {
            dom: dom.clone(),
            cod: cod.clone(),
            map: Vec::new(),
        }]);
    }
    if cod.is_empty() {
        return Ok(Vec::new());
    }
    budget.admit_search(count, "all_functions")?;
    let mut out = Vec::with_capacity(count as usize);
    let mut table = vec![0usize; dom.len()];
    loop {
        out.push(LFun {
            dom: dom.clone(),
            cod: cod.clone(),
            map: table.clone(),
        });
        // odometer, last position fastest: lexicographic order on tables
        let mut pos = dom.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            table[pos] += 1;
            if table[pos] < cod.len() {
                break;
            }
            table[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_labels() {
        assert!(LSet::new(vec!["a".into(), "a".into()]).is_err());
    }

    #[test]
    fn function_composition() {
        let a = LSet::skeletal(2);
        let b = LSet::skeletal(3);
        let f = LFun::new(a.clone(), b.clone(), vec![2, 0]).unwrap();
        let g = LFun::new(b.clone(), a.clone(), vec![1, 1, 0]).unwrap();
        let gf = g.compose(&f).unwrap();
        assert_eq!(gf.map(), &[0, 1]);
        assert!(gf.is_bijective());
    }

    #[test]
    fn all_functions_counts_and_order() {
        let b = Budget::default();
        let two = LSet::skeletal(2);
        let three = LSet::skeletal(3);
        let fns = all_functions(&two, &three, &b).unwrap();
        assert_eq!(fns.len(), 9);
        assert_eq!(fns[0].map(), &[0, 0]);
        assert_eq!(fns[1].map(), &[0, 1]);
        assert_eq!(fns[8].map(), &[2, 2]);
        // empty domain: exactly one function, even into the empty set
        let empty = LSet::empty();
        assert_eq!(all_functions(&empty, &empty, &b).unwrap().len(), 1);
        assert_eq!(all_functions(&empty, &three, &b).unwrap().len(), 1);
        // nonempty domain into empty codomain: none
        assert_eq!(all_functions(&two, &empty, &b).unwrap().len(), 0);
    }
}
