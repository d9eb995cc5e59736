//! Monads on finite sets, given by rules: object action, function action,
//! unit, and multiplication. Powers `T^k(x)` are materialized lazily and
//! memoized per tower; every materialization is budget-checked.

use crate::budget::Budget;
use crate::error::Result;
use crate::fincat::OrdMap;
use crate::set::{LFun, LSet};

/// A monad on the category of finite sets. Implementations must be
/// deterministic: `on_object` of equal inputs yields identical label
/// vectors, which is what makes computed towers comparable.
pub trait SetMonad: Send + Sync {
    fn name(&self) -> String;

    /// `T(x)`.
    fn on_object(&self, x: &LSet, budget: &Budget) -> Result<LSet>;

    /// `T(f) : T(dom f) -> T(cod f)`.
    fn on_function(&self, f: &LFun, budget: &Budget) -> Result<LFun>;

    /// `η_x : x -> T(x)`.
    fn unit(&self, x: &LSet, budget: &Budget) -> Result<LFun>;

    /// `μ_x : T(T(x)) -> T(x)`.
    fn mult(&self, x: &LSet, budget: &Budget) -> Result<LFun>;

    /// Monad-specific exact enumerator of algebra structures on `x`;
    /// `None` falls back to the generic guarded search. Implementations
    /// must return the complete list in canonical table order.
    fn algebra_structures_hook(&self, x: &LSet, budget: &Budget) -> Option<Result<Vec<LFun>>> {
        let _ = (x, budget);
        None
    }
}

/// Lazily materialized powers `x, T(x), T²(x), ..` of one base object.
pub struct PowerTower<'m> {
    monad: &'m dyn SetMonad,
    powers: Vec<LSet>,
}

impl<'m> PowerTower<'m> {
    pub fn new(monad: &'m dyn SetMonad, base: LSet) -> Self {
        PowerTower {
            monad,
            powers: vec![base],
        }
    }

    pub fn monad(&self) -> &'m dyn SetMonad {
        self.monad
    }

    pub fn base(&self) -> &LSet {
        &self.powers[0]
    }

    /// `T^k(base)`, materializing on demand.
    pub fn power(&mut self, k: usize, budget: &Budget) -> Result<LSet> {
        while self.powers.len() <= k {
            let last = self.powers.last().unwrap();
            let next = self.monad.on_object(last, budget)?;
            budget.admit_set(next.len() as u128, "power tower")?;
            self.powers.push(next);
        }
        Ok(self.powers[k].clone())
    }

    /// Can `T^k(base)` be materialized within budget? Errors other than
    /// resource exhaustion propagate.
    pub fn power_within_budget(&mut self, k: usize, budget: &Budget) -> Result<bool> {
        match self.power(k, budget) {
            Ok(_) => Ok(true),
            Err(e) if e.is_resource() => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// `T^j(f)` for an arbitrary function.
    pub fn iterate_function(&self, f: &LFun, j: usize, budget: &Budget) -> Result<LFun> {
        let mut g = f.clone();
        for _ in 0..j {
            g = self.monad.on_function(&g, budget)?;
        }
        Ok(g)
    }

    /// Component at `base` of the canonical transformation `T^c ⇒ T`
    /// (iterated multiplication; unit when `c = 0`).
    pub fn mu_chain(&mut self, c: usize, budget: &Budget) -> Result<LFun> {
        let x = self.base().clone();
        match c {
            0 => self.monad.unit(&x, budget),
            1 => Ok(LFun::identity(&self.power(1, budget)?)),
            _ => {
                let inner = self.mu_chain(c - 1, budget)?; // T^{c-1}(x) -> T(x)
                let lifted = self.monad.on_function(&inner, budget)?; // T^c(x) -> T²(x)
                self.monad.mult(&x, budget)?.compose(&lifted)
            }
        }
    }

    /// Component at `base` of the cobar transformation of a monotone map:
    /// `φ(f) : T^{dom f} ⇒ T^{cod f}`. The map is factored into
    /// codegeneracies (realized as whiskered multiplications) followed by
    /// cofaces (whiskered units), so no power beyond
    /// `max(dom f, cod f)` is ever materialized.
    pub fn cobar_map(&mut self, f: &OrdMap, budget: &Budget) -> Result<LFun> {
        let mut acc = LFun::identity(&self.power(f.dom(), budget)?);
        for g in generator_chain(f) {
            let step = match g {
                OrdGenerator::Coface { cod_card, index } => {
                    // T^index(η at T^{cod_card - 1 - index}(base))
                    let inner = self.power(cod_card - 1 - index, budget)?;
                    let eta = self.monad.unit(&inner, budget)?;
                    self.iterate_function(&eta, index, budget)?
                }
                OrdGenerator::Codegeneracy { cod_card, index } => {
                    // T^index(μ at T^{cod_card - 1 - index}(base))
                    let inner = self.power(cod_card - 1 - index, budget)?;
                    let mu = self.monad.mult(&inner, budget)?;
                    self.iterate_function(&mu, index, budget)?
                }
            };
            acc = step.compose(&acc)?;
        }
        Ok(acc)
    }
}

/// Convenience: the skeletal window `{0, .., max}` as labeled sets.
pub fn skeletal_window(max: usize) -> Vec<LSet> {
    (0..=max).map(LSet::skeletal).collect()
}

/// One step of the epi-mono generator factorization of a monotone map.
/// `cod_card` is the cardinality of the step's codomain; a coface with
/// `index i` skips value `i`, a codegeneracy repeats it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrdGenerator {
    Coface { cod_card: usize, index: usize },
    Codegeneracy { cod_card: usize, index: usize },
}

impl OrdGenerator {
    pub fn as_ordmap(self) -> OrdMap {
        match self {
            OrdGenerator::Coface { cod_card, index } => OrdMap::coface(cod_card, index),
            OrdGenerator::Codegeneracy { cod_card, index } => OrdMap::codegeneracy(cod_card, index),
        }
    }
}

/// Factors a monotone map into codegeneracies followed by cofaces, listed
/// in application order (first applied first). The recomposition is
/// asserted equal to the input.
pub fn generator_chain(f: &OrdMap) -> Vec<OrdGenerator> {
    let mut chain = Vec::new();
    let mut cur = f.clone();
    // collapse repeated values: each merge is a codegeneracy applied first
    loop {
        let Some(i) = cur.vals().windows(2).position(|w| w[0] == w[1]) else {
            break;
        };
        chain.push(OrdGenerator::Codegeneracy {
            cod_card: cur.dom() - 1,
            index: i,
        });
        let mut vals = cur.vals().to_vec();
        vals.remove(i);
        cur = OrdMap::new(cur.dom() - 1, cur.cod(), vals)
            .expect("removing a duplicate keeps monotonicity");
    }
    // now `cur` is injective; insert the missing values lowest first
    let mut tail = Vec::new();
    loop {
        let hit: std::collections::BTreeSet<usize> = cur.vals().iter().copied().collect();
        let Some(v) = (0..cur.cod()).find(|v| !hit.contains(v)) else {
            break;
        };
        // peel δ^v off the left: cur = δ^v ∘ cur' with cur' into cod - 1
        tail.push(OrdGenerator::Coface {
            cod_card: cur.cod(),
            index: v,
        });
        let vals = cur
            .vals()
            .iter()
            .map(|&w| if w > v { w - 1 } else { w })
            .collect();
        cur =
            OrdMap::new(cur.dom(), cur.cod() - 1, vals).expect("closing a gap keeps monotonicity");
    }
    tail.reverse();
    chain.extend(tail);
    debug_assert_eq!(
        {
            let mut acc = OrdMap::identity(f.dom());
            for g in &chain {
                acc = g.as_ordmap().compose(&acc).expect("chain composes");
            }
            acc
        },
        *f,
        "generator chain recomposition"
    );
    chain
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bkshadow::builtins::powerset;

    #[test]
    fn tower_materializes_powerset_powers() {
        let b = Budget::default();
        let m = powerset();
        let mut t = PowerTower::new(&m, LSet::skeletal(2));
        assert_eq!(t.power(0, &b).unwrap().len(), 2);
        assert_eq!(t.power(1, &b).unwrap().len(), 4);
        assert_eq!(t.power(2, &b).unwrap().len(), 16);
    }

    #[test]
    fn cobar_map_of_cofaces_and_codegeneracies() {
        let b = Budget::default();
        let m = powerset();
        let x = LSet::skeletal(2);

        // coface 0 of 1 -> 2 is η at level 1 applied to T(x): δ⁰ = η_{T(x)}
        let mut t = PowerTower::new(&m, x.clone());
        let d0 = t.cobar_map(&OrdMap::coface(2, 0), &b).unwrap();
        let tx = t.power(1, &b).unwrap();
        assert_eq!(d0, m.unit(&tx, &b).unwrap());

        // coface 1 is T(η_x)
        let d1 = t.cobar_map(&OrdMap::coface(2, 1), &b).unwrap();
        let eta = m.unit(&x, &b).unwrap();
        assert_eq!(d1, m.on_function(&eta, &b).unwrap());

        // codegeneracy 2 -> 1 is μ_x
        let s0 = t.cobar_map(&OrdMap::codegeneracy(1, 0), &b).unwrap();
        assert_eq!(s0, m.mult(&x, &b).unwrap());
    }

    #[test]
    fn cobar_map_is_functorial_on_small_windows() {
        let b = Budget::default();
        let m = powerset();
        let x = LSet::skeletal(1);
        let mut t = PowerTower::new(&m, x);
        for a in 0..=3usize {
            for bb in 0..=3usize {
                for c in 0..=3usize {
                    for f in OrdMap::enumerate(a, bb) {
                        for g in OrdMap::enumerate(bb, c) {
                            let gf = g.compose(&f).unwrap();
                            let lhs = t.cobar_map(&gf, &b).unwrap();
                            let rhs = t
                                .cobar_map(&g, &b)
                                .unwrap()
                                .compose(&t.cobar_map(&f, &b).unwrap())
                                .unwrap();
                            assert_eq!(lhs, rhs, "cobar breaks on {f:?} then {g:?}");
                        }
                    }
                }
            }
        }
    }
}
