//! Monotone maps between finite ordinals, the join monoidal structure, and
//! the wide subcategory of max-preserving maps with its canonical forms.
//!
//! Ordinals are encoded by cardinality: `0` is the empty ordinal, `n` is
//! the n-element chain `{0 < .. < n-1}`. This makes the join strictly
//! associative: `join` concatenates value blocks with no re-indexing.

use crate::error::{EngineError, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A monotone map between ordinals given by cardinality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OrdMap {
    dom: usize,
    cod: usize,
    vals: Vec<usize>,
}

impl OrdMap {
    pub fn new(dom: usize, cod: usize, vals: Vec<usize>) -> Result<Self> {
        if vals.len() != dom {
            return Err(EngineError::structural(format!(
                "ordinal map needs {dom} values, got {}",
                vals.len()
            )));
        }
        if let Some(&v) = vals.iter().find(|&&v| v >= cod) {
            return Err(EngineError::structural(format!(
                "ordinal map value {v} out of range for codomain {cod}"
            )));
        }
        if vals.windows(2).any(|w| w[0] > w[1]) {
            return Err(EngineError::structural(
                "ordinal map values must be weakly increasing",
            ));
        }
        Ok(OrdMap { dom, cod, vals })
    }

    /// The empty map, unit of the join.
    pub fn unit() -> Self {
        OrdMap {
            dom: 0,
            cod: 0,
            vals: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        OrdMap {
            dom: n,
            cod: n,
            vals: (0..n).collect(),
        }
    }

    /// The unique map from an n-element ordinal to the one-point ordinal.
    /// `collapse(0)` is the inclusion of the empty ordinal into the point.
    pub fn collapse(n: usize) -> Self {
        OrdMap {
            dom: n,
            cod: 1,
            vals: vec![0; n],
        }
    }

    /// Coface: the injection `n-1 -> n` skipping value `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i < n);
        OrdMap {
            dom: n - 1,
            cod: n,
            vals: (0..n - 1).map(|k| if k < i { k } else { k + 1 }).collect(),
        }
    }

    /// Codegeneracy: the surjection `n+1 -> n` repeating value `i`.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i < n);
        OrdMap {
            dom: n + 1,
            cod: n,
            vals: (0..n + 1).map(|k| if k <= i { k } else { k - 1 }).collect(),
        }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn vals(&self) -> &[usize] {
        &self.vals
    }

    pub fn apply(&self, i: usize) -> usize {
        self.vals[i]
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.vals.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.vals.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        if self.cod == 0 {
            return self.dom == 0;
        }
        if self.dom == 0 {
            return false;
        }
        self.vals[0] == 0
            && self.vals[self.dom - 1] == self.cod - 1
            && self.vals.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &OrdMap) -> Result<OrdMap> {
        if first.cod != self.dom {
            return Err(EngineError::structural(format!(
                "non-composable ordinal maps: {} -> {} then {} -> {}",
                first.dom, first.cod, self.dom, self.cod
            )));
        }
        Ok(OrdMap {
            dom: first.dom,
            cod: self.cod,
            vals: first.vals.iter().map(|&i| self.vals[i]).collect(),
        })
    }

    /// Monoidal join: `self` acts on the lower block, `other` on the upper
    /// block shifted by `self.cod`. Strictly associative, unit `unit()`.
    pub fn join(&self, other: &OrdMap) -> OrdMap {
        let mut vals = self.vals.clone();
        vals.extend(other.vals.iter().map(|&v| v + self.cod));
        OrdMap {
            dom: self.dom + other.dom,
            cod: self.cod + other.cod,
            vals,
        }
    }

    /// Is the largest element preserved (last value hits the top)?
    pub fn is_max_preserving(&self) -> bool {
        self.dom >= 1 && self.cod >= 1 && self.vals[self.dom - 1] == self.cod - 1
    }

    /// Preimage of a codomain value, as a half-open index range.
    pub fn fiber(&self, v: usize) -> std::ops::Range<usize> {
        let lo = self.vals.partition_point(|&x| x < v);
        let hi = self.vals.partition_point(|&x| x <= v);
        lo..hi
    }

    /// Canonical text form, used in simplex identifiers.
    pub fn canonical_label(&self) -> String {
        let vals: Vec<String> = self.vals.iter().map(|v| v.to_string()).collect();
        format!("{}>{}:{}", self.dom, self.cod, vals.join("."))
    }

    /// All monotone maps `dom -> cod`, lexicographic on value tables.
    pub fn enumerate(dom: usize, cod: usize) -> Vec<OrdMap> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(dom);
        fn rec(dom: usize, cod: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<OrdMap>) {
            if cur.len() == dom {
                out.push(OrdMap {
                    dom,
                    cod,
                    vals: cur.clone(),
                });
                return;
            }
            for v in min..cod {
                cur.push(v);
                rec(dom, cod, v, cur, out);
                cur.pop();
            }
        }
        if dom == 0 {
            return vec![OrdMap {
                dom: 0,
                cod,
                vals: Vec::new(),
            }];
        }
        rec(dom, cod, 0, &mut cur, &mut out);
        out
    }

    /// All injective monotone maps `dom -> cod`.
    pub fn enumerate_injective(dom: usize, cod: usize) -> Vec<OrdMap> {
        OrdMap::enumerate(dom, cod)
            .into_iter()
            .filter(|m| m.is_injective())
            .collect()
    }

    /// All surjective monotone maps `dom -> cod` (epimorphisms).
    pub fn enumerate_surjective(dom: usize, cod: usize) -> Vec<OrdMap> {
        OrdMap::enumerate(dom, cod)
            .into_iter()
            .filter(|m| m.is_surjective())
            .collect()
    }
}

impl fmt::Debug for OrdMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrdMap({})", self.canonical_label())
    }
}

/// A max-preserving monotone map: the wide subcategory where the top
/// element of the domain hits the top element of the codomain.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MaxOrdMap(OrdMap);

impl MaxOrdMap {
    pub fn new(m: OrdMap) -> Result<Self> {
        if !m.is_max_preserving() {
            return Err(EngineError::structural(format!(
                "not max-preserving: {}",
                m.canonical_label()
            )));
        }
        Ok(MaxOrdMap(m))
    }

    pub fn as_ord(&self) -> &OrdMap {
        &self.0
    }

    pub fn into_ord(self) -> OrdMap {
        self.0
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        MaxOrdMap(OrdMap::identity(n))
    }

    /// All max-preserving maps `dom -> cod`.
    pub fn enumerate(dom: usize, cod: usize) -> Vec<MaxOrdMap> {
        OrdMap::enumerate(dom, cod)
            .into_iter()
            .filter(|m| m.is_max_preserving())
            .map(MaxOrdMap)
            .collect()
    }
}

/// `amax(n)`: the unique max-preserving map from the (n+1)-element ordinal
/// to the one-point ordinal; `amax(0)` is the identity of the point.
pub fn amax(n: usize) -> MaxOrdMap {
    MaxOrdMap(OrdMap::collapse(n + 1))
}

/// Decomposes a max-preserving map as `join(f, amax(n))`: `n+1` is the size
/// of the preimage of the top element, `f` the restriction to the lower
/// blocks. The decomposition is unique; `max_compose` relies on it.
pub fn max_canonical_form(g: &MaxOrdMap) -> (OrdMap, usize) {
    let m = g.as_ord();
    let top = m.cod() - 1;
    let k = m.fiber(top).len(); // >= 1 since max-preserving
    let f = OrdMap::new(m.dom() - k, m.cod() - 1, m.vals()[..m.dom() - k].to_vec())
        .expect("lower block of a max-preserving map is monotone");
    (f, k - 1)
}

/// Recomposes a canonical form; inverse of [`max_canonical_form`].
pub fn max_recompose(f: &OrdMap, n: usize) -> MaxOrdMap {
    MaxOrdMap(f.join(amax(n).as_ord()))
}

/// Composition in the max-preserving subcategory. Equal to plain function
/// composition; additionally verifies the canonical-form composition law
/// `(f ⋆ aˢ) ∘ (g₁ ⋆ g₂ ⋆ aᵗ) = (f ∘ g₁) ⋆ aᵗ⁺ˡ` (`l` the domain size of
/// `g₂`) as a postcondition.
pub fn max_compose(g2: &MaxOrdMap, g1: &MaxOrdMap) -> Result<MaxOrdMap> {
    let plain = g2.as_ord().compose(g1.as_ord())?;

    // canonical-form route
    let (f, _n2) = max_canonical_form(g2);
    let (big_g, n1) = max_canonical_form(g1);
    // split big_g at codomain blocks of sizes f.dom() | n2; cod(big_g) = f.dom() + n2
    let cut = big_g.fiber_block_split(f.dom());
    let (sub1, sub2) = cut;
    let fg1 = f.compose(&sub1)?;
    let reassembled = fg1.join(&OrdMap::collapse(sub2.dom() + n1 + 1));
    debug_assert_eq!(
        plain, reassembled,
        "canonical-form composition law violated"
    );
    if plain != reassembled {
        return Err(EngineError::structural(
            "canonical-form composition law violated (internal inconsistency)",
        ));
    }
    MaxOrdMap::new(plain)
}

impl OrdMap {
    /// Splits `self : d -> c1 + c2` as `g1 ⋆ g2` with `cod(g1) = c1`,
    /// returning `(g1, g2)`. Unique because the map is monotone.
    fn fiber_block_split(&self, c1: usize) -> (OrdMap, OrdMap) {
        let cut = self.vals.partition_point(|&v| v < c1);
        let g1 = OrdMap {
            dom: cut,
            cod: c1,
            vals: self.vals[..cut].to_vec(),
        };
        let g2 = OrdMap {
            dom: self.dom - cut,
            cod: self.cod - c1,
            vals: self.vals[cut..].iter().map(|&v| v - c1).collect(),
        };
        (g1, g2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn join_unit_and_identities() {
        let e = OrdMap::unit();
        let id0 = OrdMap::identity(1);
        assert_eq!(e.join(&id0), id0);
        assert_eq!(id0.join(&e), id0);
        assert_eq!(id0.join(&id0), OrdMap::identity(2));
    }

    #[test]
    fn canonical_form_examples() {
        // identity of the one-point ordinal -> (empty map, 0)
        let g = MaxOrdMap::identity(1);
        let (f, n) = max_canonical_form(&g);
        assert_eq!(f, OrdMap::unit());
        assert_eq!(n, 0);
        assert_eq!(max_recompose(&f, n), g);

        // values (0,1,1) : 3 -> 2 -> (identity of the point, n = 1)
        let g = MaxOrdMap::new(OrdMap::new(3, 2, vec![0, 1, 1]).unwrap()).unwrap();
        let (f, n) = max_canonical_form(&g);
        assert_eq!(f, OrdMap::identity(1));
        assert_eq!(n, 1);
        assert_eq!(max_recompose(&f, n), g);
    }

    #[test]
    fn canonical_form_round_trips_exhaustively() {
        for dom in 1..=6 {
            for cod in 1..=6 {
                for g in MaxOrdMap::enumerate(dom, cod) {
                    let (f, n) = max_canonical_form(&g);
                    assert_eq!(max_recompose(&f, n), g);
                }
            }
        }
        // and compose-then-decompose is the identity on pairs (f, n)
        for fd in 0..=4 {
            for fc in 0..=4 {
                for f in OrdMap::enumerate(fd, fc) {
                    for n in 0..3 {
                        let g = max_recompose(&f, n);
                        let (f2, n2) = max_canonical_form(&g);
                        assert_eq!((f2, n2), (f.clone(), n));
                    }
                }
            }
        }
    }

    #[test]
    fn max_compose_agrees_with_plain_composition() {
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    for g1 in MaxOrdMap::enumerate(a, b) {
                        for g2 in MaxOrdMap::enumerate(b, c) {
                            let m = max_compose(&g2, &g1).unwrap();
                            assert_eq!(m.as_ord(), &g2.as_ord().compose(g1.as_ord()).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn composing_with_identity_is_identity() {
        let g = MaxOrdMap::new(OrdMap::new(3, 2, vec![0, 0, 1]).unwrap()).unwrap();
        let id2 = MaxOrdMap::identity(2);
        let id3 = MaxOrdMap::identity(3);
        assert_eq!(max_compose(&id2, &g).unwrap(), g);
        assert_eq!(max_compose(&g, &id3).unwrap(), g);
    }

    #[test]
    fn monotone_map_counts_match_binomials() {
        // |Hom(m, n)| = C(n + m - 1, m) for m >= 1
        fn binom(n: usize, k: usize) -> usize {
            if k > n {
                return 0;
            }
            let mut r = 1usize;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        }
        for m in 1..=5 {
            for n in 0..=5 {
                assert_eq!(OrdMap::enumerate(m, n).len(), binom(n + m - 1, m));
                assert_eq!(OrdMap::enumerate_injective(m, n).len(), binom(n, m));
            }
        }
    }

    fn arb_ordmap(max: usize) -> impl Strategy<Value = OrdMap> {
        (0..=max, 0..=max).prop_flat_map(|(dom, cod)| {
            let all = OrdMap::enumerate(dom, cod);
            if all.is_empty() {
                Just(OrdMap::unit()).boxed()
            } else {
                proptest::sample::select(all).boxed()
            }
        })
    }

    proptest! {
        #[test]
        fn join_is_associative(a in arb_ordmap(5), b in arb_ordmap(5), c in arb_ordmap(5)) {
            prop_assert_eq!(a.join(&b).join(&c), a.join(&b.join(&c)));
        }

        #[test]
        fn join_respects_composition(a in arb_ordmap(4), b in arb_ordmap(4)) {
            // (id ⋆ id) ∘ (a ⋆ b) = a ⋆ b through independent routes
            let ida = OrdMap::identity(a.cod());
            let idb = OrdMap::identity(b.cod());
            let j = a.join(&b);
            let idj = ida.join(&idb);
            prop_assert_eq!(idj.compose(&j).unwrap(), j);
        }
    }
}
