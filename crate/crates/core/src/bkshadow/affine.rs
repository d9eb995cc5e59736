//! The affine-span monad `R_a` of a finite commutative ring: a set `X`
//! goes to the coefficient-sum-one combinations in the free module `R·X`.
//! The finite-set shadow of the homology-completion machinery.

use super::ring::FiniteRing;
use crate::budget::Budget;
use crate::error::Result;
use crate::monadkit::monad::SetMonad;
use crate::set::{LFun, LSet};
use std::collections::BTreeMap;

/// A coefficient-sum-one combination, dense over the base set. The sparse
/// canonical form (zero entries dropped, support sorted) is the label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AffineElement {
    /// ring-element index per base element
    pub coeffs: Vec<usize>,
}

impl AffineElement {
    pub fn label(&self, ring: &FiniteRing, base: &LSet) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != ring.zero)
            .map(|(i, &c)| {
                if c == ring.one {
                    format!("({})", base.label(i))
                } else {
                    format!("{}({})", ring.labels[c], base.label(i))
                }
            })
            .collect();
        terms.join("+")
    }

    pub fn coefficient_sum(&self, ring: &FiniteRing) -> usize {
        self.coeffs
            .iter()
            .fold(ring.zero, |acc, &c| ring.add(acc, c))
    }
}

/// All affine elements over a base of size `n`, lexicographic in the dense
/// coefficient vector.
pub fn enumerate_affine(
    ring: &FiniteRing,
    n: usize,
    budget: &Budget,
) -> Result<Vec<AffineElement>> {
    let total = (ring.size() as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    budget.admit_search(total, "affine span enumeration")?;
    let mut out = Vec::new();
    let mut coeffs = vec![ring.zero; n];
    if n == 0 {
        return Ok(out); // empty sum is 0 ≠ 1
    }
    loop {
        let e = AffineElement {
            coeffs: coeffs.clone(),
        };
        if e.coefficient_sum(ring) == ring.one {
            out.push(e);
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            coeffs[pos] += 1;
            if coeffs[pos] < ring.size() {
                break;
            }
            coeffs[pos] = ring.zero;
        }
    }
}

/// The affine-span monad over a finite commutative ring.
pub struct AffineSpanMonad {
    pub ring: FiniteRing,
}

pub fn affine_span_monad(ring: FiniteRing) -> AffineSpanMonad {
    AffineSpanMonad { ring }
}

impl AffineSpanMonad {
    fn elements(&self, x: &LSet, budget: &Budget) -> Result<Vec<AffineElement>> {
        enumerate_affine(&self.ring, x.len(), budget)
    }

    fn object_from(&self, x: &LSet, elems: &[AffineElement]) -> LSet {
        LSet::from_distinct(elems.iter().map(|e| e.label(&self.ring, x)).collect())
    }

    fn push_forward(&self, f: &LFun, e: &AffineElement) -> AffineElement {
        let mut coeffs = vec![self.ring.zero; f.cod().len()];
        for (i, &c) in e.coeffs.iter().enumerate() {
            let j = f.apply(i);
            coeffs[j] = self.ring.add(coeffs[j], c);
        }
        AffineElement { coeffs }
    }
}

impl SetMonad for AffineSpanMonad {
    fn name(&self) -> String {
        format!("affine:{}", self.ring.name)
    }

    fn on_object(&self, x: &LSet, budget: &Budget) -> Result<LSet> {
        let elems = self.elements(x, budget)?;
        budget.admit_set(elems.len() as u128, "affine span")?;
        Ok(self.object_from(x, &elems))
    }

    fn on_function(&self, f: &LFun, budget: &Budget) -> Result<LFun> {
        let dom_elems = self.elements(f.dom(), budget)?;
        let cod_elems = self.elements(f.cod(), budget)?;
        let index: BTreeMap<&AffineElement, usize> =
            cod_elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let map = dom_elems
            .iter()
            .map(|e| index[&self.push_forward(f, e)])
            .collect();
        LFun::new(
            self.object_from(f.dom(), &dom_elems),
            self.object_from(f.cod(), &cod_elems),
            map,
        )
    }

    fn unit(&self, x: &LSet, budget: &Budget) -> Result<LFun> {
        let elems = self.elements(x, budget)?;
        let index: BTreeMap<&AffineElement, usize> =
            elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let map = (0..x.len())
            .map(|i| {
                let mut coeffs = vec![self.ring.zero; x.len()];
                coeffs[i] = self.ring.one;
                index[&AffineElement { coeffs }]
            })
            .collect();
        LFun::new(x.clone(), self.object_from(x, &elems), map)
    }

    fn mult(&self, x: &LSet, budget: &Budget) -> Result<LFun> {
        let inner = self.elements(x, budget)?;
        let tx = self.object_from(x, &inner);
        let outer = self.elements(&tx, budget)?;
        let index: BTreeMap<&AffineElement, usize> =
            inner.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let map = outer
            .iter()
            .map(|big| {
                // expand Σ_k s_k · (Σ_i φ_k[i] · x_i)
                let mut coeffs = vec![self.ring.zero; x.len()];
                for (k, &s) in big.coeffs.iter().enumerate() {
                    if s == self.ring.zero {
                        continue;
                    }
                    for (i, &c) in inner[k].coeffs.iter().enumerate() {
                        coeffs[i] = self.ring.add(coeffs[i], self.ring.mul(s, c));
                    }
                }
                index[&AffineElement { coeffs }]
            })
            .collect();
        LFun::new(self.object_from(&tx, &outer), tx.clone(), map)
    }
}

/// The bilinear pairing `R_a(X) × R_a(Y) -> R_a(X×Y)` restricted to affine
/// parts: `(Σ rᵢxᵢ, Σ sⱼyⱼ) ↦ Σ rᵢsⱼ (xᵢ,yⱼ)`.
pub struct RProduct {
    /// `X × Y` with pair labels
    pub pair_set: LSet,
    /// domain: pairs of affine elements, labeled `⟨a|b⟩`
    pub domain: LSet,
    pub map: LFun,
}

pub fn r_product_map(ring: &FiniteRing, x: &LSet, y: &LSet, budget: &Budget) -> Result<RProduct> {
    let monad = AffineSpanMonad { ring: ring.clone() };
    let ex = monad.elements(x, budget)?;
    let ey = monad.elements(y, budget)?;
    let pair_set = LSet::from_distinct(
        x.labels()
            .iter()
            .flat_map(|a| y.labels().iter().map(move |b| format!("({a}|{b})")))
            .collect(),
    );
    let exy = monad.elements(&pair_set, budget)?;
    let index: BTreeMap<&AffineElement, usize> =
        exy.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let tx = monad.object_from(x, &ex);
    let ty = monad.object_from(y, &ey);
    let domain = LSet::from_distinct(
        tx.labels()
            .iter()
            .flat_map(|a| ty.labels().iter().map(move |b| format!("⟨{a}|{b}⟩")))
            .collect(),
    );
    budget.admit_set(domain.len() as u128, "affine product domain")?;
    let cod = monad.object_from(&pair_set, &exy);
    let mut map = Vec::with_capacity(domain.len());
    for a in &ex {
        for b in &ey {
            // coefficient of (x_i, y_j) is r_i · s_j
            let mut coeffs = vec![ring.zero; pair_set.len()];
            for (i, &r) in a.coeffs.iter().enumerate() {
                for (j, &s) in b.coeffs.iter().enumerate() {
                    coeffs[i * y.len() + j] = ring.mul(r, s);
                }
            }
            let e = AffineElement { coeffs };
            debug_assert_eq!(e.coefficient_sum(ring), ring.one);
            map.push(index[&e]);
        }
    }
    let map = LFun::new(domain.clone(), cod, map)?;
    Ok(RProduct {
        pair_set,
        domain,
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z2() -> FiniteRing {
        FiniteRing::zmod(2).unwrap()
    }

    #[test]
    fn affine_counts_over_z2() {
        let b = Budget::default();
        // |R_a(X)| = 2^{|X|-1} for nonempty X (odd-support subsets), 0 for ∅
        for n in 0..=4usize {
            let got = enumerate_affine(&z2(), n, &b).unwrap().len();
            let expect = if n == 0 { 0 } else { 1 << (n - 1) };
            assert_eq!(got, expect, "size {n}");
        }
        // Z/3: vectors with sum 1 out of 3^n: 3^{n-1}
        let r3 = FiniteRing::zmod(3).unwrap();
        assert_eq!(enumerate_affine(&r3, 3, &b).unwrap().len(), 9);
    }

    #[test]
    fn unit_is_dirac() {
        let b = Budget::default();
        let m = affine_span_monad(z2());
        let x = LSet::skeletal(3);
        let eta = m.unit(&x, &b).unwrap();
        for i in 0..3 {
            assert_eq!(eta.cod().label(eta.apply(i)), format!("({i})"));
        }
    }

    #[test]
    fn empty_set_maps_to_empty_set() {
        let b = Budget::default();
        let m = affine_span_monad(z2());
        assert_eq!(m.on_object(&LSet::empty(), &b).unwrap().len(), 0);
    }

    proptest! {
        #[test]
        fn pushforward_preserves_the_coefficient_sum(
            dom in 1usize..5,
            cod in 1usize..5,
            seed in any::<u64>(),
            modulus in 2usize..5,
        ) {
            let b = Budget::default();
            let ring = FiniteRing::zmod(modulus).unwrap();
            let monad = affine_span_monad(ring.clone());
            let x = LSet::skeletal(dom);
            let y = LSet::skeletal(cod);
            // a pseudo-random function table from the seed
            let table: Vec<usize> = (0..dom)
                .map(|i| (seed.rotate_left(i as u32 * 7) as usize) % cod)
                .collect();
            let f = LFun::new(x.clone(), y, table).unwrap();
            for e in enumerate_affine(&ring, dom, &b).unwrap() {
                let image = monad.push_forward(&f, &e);
                prop_assert_eq!(image.coefficient_sum(&ring), ring.one);
            }
        }
    }

    #[test]
    fn product_map_hits_affine_part_and_respects_units() {
        let b = Budget::default();
        let r = z2();
        let x = LSet::skeletal(2);
        let y = LSet::skeletal(2);
        let p = r_product_map(&r, &x, &y, &b).unwrap();
        // (η(x0), η(y1)) ↦ η((x0|y1)): find the pair label
        let i = p.domain.index_of("⟨(0)|(1)⟩").unwrap();
        assert_eq!(p.map.cod().label(p.map.apply(i)), "((0|1))");
        // every output has coefficient sum one by construction; the map is
        // total, which is the checkable part here
        assert_eq!(p.map.dom().len(), 2 * 2);
    }
}
