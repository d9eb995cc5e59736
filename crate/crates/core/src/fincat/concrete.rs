//! Concrete categories: finite categories whose objects carry finite
//! underlying sets and whose morphisms are realized as functions. Limits
//! downstream (ends, codensity values) are created in these underlying
//! sets. Builtins: a skeletal window of finite sets, and finite-dimensional
//! vector spaces over a prime field.

use super::category::{Cat, CategoryBuilder, MorId, ObjId};
use crate::budget::Budget;
use crate::error::{EngineError, Result};
use crate::set::{all_functions, LFun, LSet};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct ConcreteCategory {
    base: Cat,
    underlying: BTreeMap<ObjId, LSet>,
    realize: BTreeMap<MorId, LFun>,
    /// When set (default), distinct parallel morphisms must realize
    /// distinct functions.
    pub faithful: bool,
}

impl ConcreteCategory {
    pub fn new(
        base: Cat,
        underlying: BTreeMap<ObjId, LSet>,
        realize: BTreeMap<MorId, LFun>,
        faithful: bool,
    ) -> Result<Self> {
        let c = ConcreteCategory {
            base,
            underlying,
            realize,
            faithful,
        };
        c.check()?;
        Ok(c)
    }

    fn check(&self) -> Result<()> {
        for o in self.base.objects() {
            if !self.underlying.contains_key(o) {
                return Err(EngineError::structural(format!(
                    "object {o} has no underlying set"
                )));
            }
        }
        for m in self.base.morphisms() {
            let f = self.realize.get(&m.id).ok_or_else(|| {
                EngineError::structural(format!("morphism {} is not realized", m.id))
            })?;
            if f.dom() != &self.underlying[&m.src] || f.cod() != &self.underlying[&m.tgt] {
                return Err(EngineError::structural(format!(
                    "realization of {} disagrees with underlying sets",
                    m.id
                )));
            }
        }
        for o in self.base.objects() {
            if self.realize[self.base.identity_of(o)] != LFun::identity(&self.underlying[o]) {
                return Err(EngineError::structural(format!(
                    "identity of {o} is not realized as the identity function"
                )));
            }
        }
        for f in self.base.morphisms() {
            for g in self.base.morphisms() {
                if f.tgt != g.src {
                    continue;
                }
                let h = self.base.compose(&g.id, &f.id);
                let lhs = &self.realize[&h];
                let rhs = self.realize[&g.id].compose(&self.realize[&f.id])?;
                if lhs != &rhs {
                    return Err(EngineError::structural(format!(
                        "realization breaks composition on ({}, {})",
                        g.id, f.id
                    )));
                }
            }
        }
        if self.faithful {
            for a in self.base.objects() {
                for b in self.base.objects() {
                    let hom = self.base.hom(a, b);
                    for (i, m1) in hom.iter().enumerate() {
                        for m2 in &hom[i + 1..] {
                            if self.realize[m1] == self.realize[m2] {
                                return Err(EngineError::structural(format!(
                                    "declared faithful, but {m1} and {m2} realize the same function"
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &Cat {
        &self.base
    }

    pub fn underlying(&self, o: &ObjId) -> &LSet {
        &self.underlying[o]
    }

    pub fn realize(&self, m: &MorId) -> &LFun {
        &self.realize[m]
    }

    /// The morphism of `hom(a, b)` realizing a given function, if any.
    pub fn morphism_for_function(&self, a: &ObjId, b: &ObjId, f: &LFun) -> Option<MorId> {
        self.base
            .hom(a, b)
            .into_iter()
            .find(|m| self.realize(m) == f)
    }
}

fn finset_obj(n: usize) -> ObjId {
    ObjId::new(format!("s{n}"))
}

fn finset_mor(dom: usize, cod: usize, table: &[usize]) -> MorId {
    let vals: Vec<String> = table.iter().map(|v| v.to_string()).collect();
    MorId::new(format!("f{dom}>{cod}:{}", vals.join(".")))
}

/// Skeletal finite sets of size `0..=max`, with all functions as
/// morphisms.
pub fn finset_window(max: usize) -> ConcreteCategory {
    let budget = Budget::new(u64::MAX, u64::MAX);
    let mut b = CategoryBuilder::new(format!("FinSet≤{max}"));
    let objs: Vec<ObjId> = (0..=max).map(|n| b.object(finset_obj(n).0)).collect();
    let sets: Vec<LSet> = (0..=max).map(LSet::skeletal).collect();
    let mut realize = BTreeMap::new();
    for d in 0..=max {
        for c in 0..=max {
            for f in all_functions(&sets[d], &sets[c], &budget).expect("unbounded") {
                let id = b.morphism(finset_mor(d, c, f.map()).0, &objs[d], &objs[c]);
                realize.insert(id, f);
            }
        }
    }
    let parse = |id: &MorId| -> (usize, usize, Vec<usize>) {
        let s = id.0.strip_prefix('f').unwrap();
        let (d, rest) = s.split_once('>').unwrap();
        let (c, vals) = rest.split_once(':').unwrap();
        let table = if vals.is_empty() {
            Vec::new()
        } else {
            vals.split('.').map(|v| v.parse().unwrap()).collect()
        };
        (d.parse().unwrap(), c.parse().unwrap(), table)
    };
    let base = b
        .build(
            |o| {
                let n: usize = o.0[1..].parse().unwrap();
                finset_mor(n, n, &(0..n).collect::<Vec<_>>())
            },
            move |g, f| {
                let (_, gc, gt) = parse(&g.id);
                let (fd, _, ft) = parse(&f.id);
                let table: Vec<usize> = ft.iter().map(|&i| gt[i]).collect();
                finset_mor(fd, gc, &table)
            },
        )
        .expect("finset window is valid");
    let base = Arc::new(base);
    let underlying = (0..=max)
        .map(|n| (finset_obj(n), sets[n].clone()))
        .collect();
    ConcreteCategory::new(base, underlying, realize, true).expect("finset window is concrete")
}

pub fn finset_object(n: usize) -> ObjId {
    finset_obj(n)
}

/// Vectors of `F_p^dim` as digit-string labels, lexicographic order.
fn vect_labels(p: usize, dim: usize) -> Vec<String> {
    let count = p.pow(dim as u32);
    (0..count)
        .map(|i| {
            let mut digits = vec![0usize; dim];
            let mut x = i;
            for d in (0..dim).rev() {
                digits[d] = x % p;
                x /= p;
            }
            format!(
                "v{}",
                digits.iter().map(|d| d.to_string()).collect::<String>()
            )
        })
        .collect()
}

fn vect_index(p: usize, coords: &[usize]) -> usize {
    coords.iter().fold(0, |acc, &c| acc * p + c)
}

fn vect_coords(p: usize, dim: usize, index: usize) -> Vec<usize> {
    let mut digits = vec![0usize; dim];
    let mut x = index;
    for d in (0..dim).rev() {
        digits[d] = x % p;
        x /= p;
    }
    digits
}

fn matrix_mor(p: usize, dom: usize, cod: usize, entries: &[usize]) -> MorId {
    let _ = p;
    let s: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
    MorId::new(format!("A{dom}>{cod}:{}", s.join(".")))
}

/// Finite-dimensional vector spaces `F_p^0 .. F_p^max`, morphisms all
/// matrices over the prime field.
pub fn finvect_window(p: usize, max_dim: usize) -> ConcreteCategory {
    assert!(p >= 2, "field order must be a prime >= 2");
    let mut b = CategoryBuilder::new(format!("FinVect(F{p})≤{max_dim}"));
    let objs: Vec<ObjId> = (0..=max_dim).map(|d| b.object(format!("V{d}"))).collect();
    let sets: Vec<LSet> = (0..=max_dim)
        .map(|d| LSet::from_distinct(vect_labels(p, d)))
        .collect();

    // all matrices cod x dom, row-major entries
    let mut realize = BTreeMap::new();
    for dom in 0..=max_dim {
        for cod in 0..=max_dim {
            let cells = dom * cod;
            let count = p.pow(cells as u32);
            for idx in 0..count {
                let mut entries = vec![0usize; cells];
                let mut x = idx;
                for e in (0..cells).rev() {
                    entries[e] = x % p;
                    x /= p;
                }
                let id = b.morphism(matrix_mor(p, dom, cod, &entries).0, &objs[dom], &objs[cod]);
                // realize: v -> A v
                let map: Vec<usize> = (0..sets[dom].len())
                    .map(|vi| {
                        let v = vect_coords(p, dom, vi);
                        let mut w = vec![0usize; cod];
                        for r in 0..cod {
                            let mut acc = 0usize;
                            for c in 0..dom {
                                acc = (acc + entries[r * dom + c] * v[c]) % p;
                            }
                            w[r] = acc;
                        }
                        vect_index(p, &w)
                    })
                    .collect();
                realize.insert(
                    id,
                    LFun::new(sets[dom].clone(), sets[cod].clone(), map).unwrap(),
                );
            }
        }
    }

    let parse = move |id: &MorId| -> (usize, usize, Vec<usize>) {
        let s = id.0.strip_prefix('A').unwrap();
        let (d, rest) = s.split_once('>').unwrap();
        let (c, vals) = rest.split_once(':').unwrap();
        let entries = if vals.is_empty() {
            Vec::new()
        } else {
            vals.split('.').map(|v| v.parse().unwrap()).collect()
        };
        (d.parse().unwrap(), c.parse().unwrap(), entries)
    };
    let base = b
        .build(
            |o| {
                let d: usize = o.0[1..].parse().unwrap();
                let mut entries = vec![0usize; d * d];
                for i in 0..d {
                    entries[i * d + i] = 1;
                }
                matrix_mor(p, d, d, &entries)
            },
            move |g, f| {
                let (gd, gc, ge) = parse(&g.id);
                let (fd, fc, fe) = parse(&f.id);
                debug_assert_eq!(fc, gd);
                // product: (g∘f)[r][c] = Σ_k g[r][k] f[k][c] mod p
                let mut entries = vec![0usize; gc * fd];
                for r in 0..gc {
                    for c in 0..fd {
                        let mut acc = 0usize;
                        for k in 0..gd {
                            acc = (acc + ge[r * gd + k] * fe[k * fd + c]) % p;
                        }
                        entries[r * fd + c] = acc;
                    }
                }
                matrix_mor(p, fd, gc, &entries)
            },
        )
        .expect("finvect window is valid");
    let base = Arc::new(base);
    let underlying = (0..=max_dim)
        .map(|d| (ObjId::new(format!("V{d}")), sets[d].clone()))
        .collect();
    ConcreteCategory::new(base, underlying, realize, true).expect("finvect window is concrete")
}

pub fn finvect_object(dim: usize) -> ObjId {
    ObjId::new(format!("V{dim}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finset_window_sizes_and_realization() {
        let c = finset_window(3);
        assert_eq!(c.base().objects().len(), 4);
        // |Hom(2,3)| = 9
        assert_eq!(c.base().hom(&finset_object(2), &finset_object(3)).len(), 9);
        // no functions from a nonempty set to the empty set
        assert_eq!(c.base().hom(&finset_object(1), &finset_object(0)).len(), 0);
        // exactly one from the empty set anywhere
        assert_eq!(c.base().hom(&finset_object(0), &finset_object(3)).len(), 1);
    }

    #[test]
    fn finvect_window_counts() {
        let c = finvect_window(2, 2);
        // |Hom(V2, V1)| = 2^2 = 4 linear functionals
        assert_eq!(
            c.base().hom(&finvect_object(2), &finvect_object(1)).len(),
            4
        );
        // underlying set of V2 has 4 vectors
        assert_eq!(c.underlying(&finvect_object(2)).len(), 4);
        // the zero space has one vector and one endomorphism
        assert_eq!(c.underlying(&finvect_object(0)).len(), 1);
        assert_eq!(
            c.base().hom(&finvect_object(0), &finvect_object(0)).len(),
            1
        );
    }

    #[test]
    fn finvect_realization_is_linear_action() {
        let c = finvect_window(2, 2);
        // the matrix (1 1) : V2 -> V1 sends v11 to 0, v01 and v10 to 1
        let m = MorId::new("A2>1:1.1");
        let f = c.realize(&m);
        let dom = c.underlying(&finvect_object(2));
        let idx = |l: &str| dom.index_of(l).unwrap();
        let cod = c.underlying(&finvect_object(1));
        assert_eq!(cod.label(f.apply(idx("v11"))), "v0");
        assert_eq!(cod.label(f.apply(idx("v10"))), "v1");
        assert_eq!(cod.label(f.apply(idx("v01"))), "v1");
    }
}
