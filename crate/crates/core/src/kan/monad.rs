//! The codensity construction packaged as a set monad: values are
//! naturality families over a skeletal selection of finite sets, the unit
//! is evaluation, and the multiplication evaluates a family of families at
//! evaluation maps. Law checks run through the generic monad machinery,
//! with the budget guarding the (often violently growing) towers.

use super::codensity::FamilyProblem;
use crate::budget::Budget;
use crate::error::{EngineError, Result};
use crate::monadkit::monad::SetMonad;
use crate::set::{all_functions, LFun, LSet};
use std::collections::BTreeMap;

/// The codensity monad of the full subcategory of finite sets spanned by
/// skeletal sets of the given sizes.
pub struct CodensitySetMonad {
    pub d_sizes: Vec<usize>,
    selection: Vec<LSet>,
}

pub fn codensity_set_monad(mut d_sizes: Vec<usize>) -> CodensitySetMonad {
    d_sizes.sort();
    d_sizes.dedup();
    let selection = d_sizes.iter().map(|&n| LSet::skeletal(n)).collect();
    CodensitySetMonad { d_sizes, selection }
}

struct Pairs {
    /// (selection index, function table from the base set)
    list: Vec<(usize, Vec<usize>)>,
    index: BTreeMap<(usize, Vec<usize>), usize>,
}

impl CodensitySetMonad {
    fn pairs(&self, x: &LSet, budget: &Budget) -> Result<Pairs> {
        let mut list = Vec::new();
        for (di, d) in self.selection.iter().enumerate() {
            for f in all_functions(x, d, budget)? {
                list.push((di, f.map().to_vec()));
            }
        }
        let index = list
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Ok(Pairs { list, index })
    }

    fn families(&self, x: &LSet, budget: &Budget) -> Result<(Pairs, Vec<Vec<usize>>)> {
        let pairs = self.pairs(x, budget)?;
        let mut edges = Vec::new();
        for (i, (di, f)) in pairs.list.iter().enumerate() {
            let d = &self.selection[*di];
            for (di2, d2) in self.selection.iter().enumerate() {
                for g in all_functions(d, d2, budget)? {
                    if *di == di2 && g == LFun::identity(d) {
                        continue;
                    }
                    let gf: Vec<usize> = f.iter().map(|&v| g.apply(v)).collect();
                    let j = pairs.index[&(di2, gf)];
                    edges.push((i, j, g.map().to_vec()));
                }
            }
        }
        let problem = FamilyProblem {
            pair_values: pairs
                .list
                .iter()
                .map(|(di, _)| self.selection[*di].len())
                .collect(),
            edges,
        };
        let families = problem.enumerate(budget)?;
        budget.admit_set(families.len() as u128, "codensity set monad value")?;
        Ok((pairs, families))
    }

    fn object_from(families: &[Vec<usize>]) -> LSet {
        LSet::from_distinct(
            families
                .iter()
                .map(|f| {
                    let parts: Vec<String> = f.iter().map(|v| v.to_string()).collect();
                    format!("⟨{}⟩", parts.join(","))
                })
                .collect(),
        )
    }

    fn family_index(families: &[Vec<usize>], fam: &[usize]) -> Result<usize> {
        families
            .binary_search_by(|f| f.as_slice().cmp(fam))
            .map_err(|_| EngineError::structural("family image escaped the enumeration"))
    }
}

impl SetMonad for CodensitySetMonad {
    fn name(&self) -> String {
        let sizes: Vec<String> = self.d_sizes.iter().map(|n| n.to_string()).collect();
        format!("codensity:{{{}}}", sizes.join(","))
    }

    fn on_object(&self, x: &LSet, budget: &Budget) -> Result<LSet> {
        let (_, families) = self.families(x, budget)?;
        Ok(Self::object_from(&families))
    }

    fn on_function(&self, f: &LFun, budget: &Budget) -> Result<LFun> {
        let (src_pairs, src_families) = self.families(f.dom(), budget)?;
        let (dst_pairs, dst_families) = self.families(f.cod(), budget)?;
        let mut map = Vec::with_capacity(src_families.len());
        for fam in &src_families {
            let image: Result<Vec<usize>> = dst_pairs
                .list
                .iter()
                .map(|(di, g)| {
                    // value at (d, g) is the source value at (d, g ∘ f)
                    let gf: Vec<usize> = f.map().iter().map(|&v| g[v]).collect();
                    Ok(fam[src_pairs.index[&(*di, gf)]])
                })
                .collect();
            map.push(Self::family_index(&dst_families, &image?)?);
        }
        LFun::new(
            Self::object_from(&src_families),
            Self::object_from(&dst_families),
            map,
        )
    }

    fn unit(&self, x: &LSet, budget: &Budget) -> Result<LFun> {
        let (pairs, families) = self.families(x, budget)?;
        let tx = Self::object_from(&families);
        let mut map = Vec::with_capacity(x.len());
        for e in 0..x.len() {
            let fam: Vec<usize> = pairs.list.iter().map(|(_, f)| f[e]).collect();
            map.push(Self::family_index(&families, &fam)?);
        }
        LFun::new(x.clone(), tx, map)
    }

    fn mult(&self, x: &LSet, budget: &Budget) -> Result<LFun> {
        let (pairs, families) = self.families(x, budget)?;
        let tx = Self::object_from(&families);
        let (tpairs, tfamilies) = self.families(&tx, budget)?;
        let ttx = Self::object_from(&tfamilies);
        let mut map = Vec::with_capacity(tfamilies.len());
        for big in &tfamilies {
            // μ(Φ) at (d, f) = Φ at (d, ev_f) where ev_f(φ) = φ_d(f)
            let fam: Vec<usize> = pairs
                .list
                .iter()
                .map(|(di, f)| {
                    let pair_pos = pairs.index[&(*di, f.clone())];
                    let ev: Vec<usize> = families.iter().map(|phi| phi[pair_pos]).collect();
                    big[tpairs.index[&(*di, ev)]]
                })
                .collect();
            map.push(Self::family_index(&families, &fam)?);
        }
        LFun::new(ttx, tx, map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monadkit::laws::monad_law_check;
    use crate::monadkit::monad::skeletal_window;
    use crate::report::Verdict;

    #[test]
    fn selection_members_have_bijective_units() {
        let b = Budget::default();
        let m = codensity_set_monad(vec![1, 2]);
        for n in [1usize, 2] {
            let eta = m.unit(&LSet::skeletal(n), &b).unwrap();
            assert!(eta.is_bijective(), "unit at size {n}");
        }
    }

    #[test]
    fn value_counts_for_the_two_element_selection() {
        let b = Budget::default();
        let m = codensity_set_monad(vec![2]);
        assert_eq!(m.on_object(&LSet::skeletal(3), &b).unwrap().len(), 8);
        assert_eq!(m.on_object(&LSet::skeletal(0), &b).unwrap().len(), 0);
        assert_eq!(m.on_object(&LSet::skeletal(1), &b).unwrap().len(), 1);
    }

    #[test]
    fn laws_hold_where_towers_materialize() {
        let b = Budget::default();
        let m = codensity_set_monad(vec![1, 2]);
        let r = monad_law_check(&m, &skeletal_window(2), &b).unwrap();
        assert_ne!(r.verdict(), Verdict::Fail, "{}", r.to_text());
    }
}
