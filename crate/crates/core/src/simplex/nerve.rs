//! Nerves of finite categories as truncated simplicial sets: level k is
//! the set of composable k-chains, faces compose or drop, degeneracies
//! insert identities.

use super::sset::TruncatedSSet;
use crate::error::Result;
use crate::fincat::{Cat, MorId, ObjId};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct NerveChain {
    start: ObjId,
    maps: Vec<MorId>,
}

impl NerveChain {
    fn label(&self) -> String {
        if self.maps.is_empty() {
            format!("⟨{}⟩", self.start)
        } else {
            let parts: Vec<String> = self.maps.iter().map(|m| m.to_string()).collect();
            format!("⟨{}⟩", parts.join("|"))
        }
    }
}

/// The nerve of `c`, truncated at `dim`.
pub fn nerve(c: &Cat, dim: usize) -> Result<TruncatedSSet> {
    // levels by chain extension
    let mut chains: Vec<Vec<NerveChain>> = Vec::with_capacity(dim + 1);
    chains.push(
        c.objects()
            .iter()
            .map(|o| NerveChain {
                start: o.clone(),
                maps: Vec::new(),
            })
            .collect(),
    );
    for n in 1..=dim {
        let mut next = Vec::new();
        for ch in &chains[n - 1] {
            let end = if ch.maps.is_empty() {
                ch.start.clone()
            } else {
                c.tgt(ch.maps.last().unwrap()).clone()
            };
            for m in c.morphisms_from(&end) {
                let mut maps = ch.maps.clone();
                maps.push(m);
                next.push(NerveChain {
                    start: ch.start.clone(),
                    maps,
                });
            }
        }
        next.sort();
        chains.push(next);
    }

    let index_of = |n: usize, ch: &NerveChain, chains: &Vec<Vec<NerveChain>>| -> usize {
        chains[n]
            .binary_search(ch)
            .expect("chain exists at its level")
    };

    let mut face: Vec<Vec<Vec<usize>>> = vec![Vec::new(); dim + 1];
    let mut deg: Vec<Vec<Vec<usize>>> = vec![Vec::new(); dim + 1];
    for n in 1..=dim {
        for i in 0..=n {
            let mut table = Vec::with_capacity(chains[n].len());
            for ch in &chains[n] {
                let dropped = if n == 1 {
                    // vertices: d_0 is the target, d_1 the source
                    let m = &ch.maps[0];
                    NerveChain {
                        start: if i == 0 {
                            c.tgt(m).clone()
                        } else {
                            c.src(m).clone()
                        },
                        maps: Vec::new(),
                    }
                } else if i == 0 {
                    NerveChain {
                        start: c.tgt(&ch.maps[0]).clone(),
                        maps: ch.maps[1..].to_vec(),
                    }
                } else if i == n {
                    NerveChain {
                        start: ch.start.clone(),
                        maps: ch.maps[..n - 1].to_vec(),
                    }
                } else {
                    // compose the two maps meeting at vertex i
                    let mut maps = ch.maps.clone();
                    let glued = c.compose(&maps[i], &maps[i - 1]);
                    maps[i - 1] = glued;
                    maps.remove(i);
                    NerveChain {
                        start: ch.start.clone(),
                        maps,
                    }
                };
                table.push(index_of(n - 1, &dropped, &chains));
            }
            face[n].push(table);
        }
    }
    for n in 0..dim {
        for i in 0..=n {
            let mut table = Vec::with_capacity(chains[n].len());
            for ch in &chains[n] {
                // insert an identity at vertex i
                let vertex = if i == 0 || ch.maps.is_empty() {
                    ch.start.clone()
                } else {
                    c.tgt(&ch.maps[i - 1]).clone()
                };
                let mut maps = ch.maps.clone();
                maps.insert(i, c.identity_of(&vertex).clone());
                let inserted = NerveChain {
                    start: ch.start.clone(),
                    maps,
                };
                table.push(index_of(n + 1, &inserted, &chains));
            }
            deg[n].push(table);
        }
    }

    let out = TruncatedSSet {
        name: format!("N({})", c.name),
        dim,
        levels: chains
            .iter()
            .map(|l| l.iter().map(NerveChain::label).collect())
            .collect(),
        face,
        deg,
    };
    out.check_identities()?;
    Ok(out)
}

/// The nerve of the terminal category: a point in every dimension.
pub fn point(dim: usize) -> TruncatedSSet {
    let c = std::sync::Arc::new(crate::fincat::builders::terminal());
    nerve(&c, dim).expect("point nerve is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::builders;
    use std::sync::Arc;

    #[test]
    fn point_has_one_simplex_per_level() {
        let p = point(3);
        for n in 0..=3 {
            assert_eq!(p.levels[n].len(), 1);
        }
    }

    #[test]
    fn nerve_of_arrow_level_counts() {
        let c = Arc::new(builders::arrow());
        let n = nerve(&c, 3).unwrap();
        assert_eq!(n.levels[0].len(), 2);
        assert_eq!(n.levels[1].len(), 3);
        assert_eq!(n.levels[2].len(), 4); // composable 2-chains in the arrow
        n.check_identities().unwrap();
    }

    #[test]
    fn nerve_of_group_level_counts() {
        let c = Arc::new(builders::cyclic_group(2));
        let n = nerve(&c, 3).unwrap();
        for k in 0..=3usize {
            assert_eq!(n.levels[k].len(), 1 << k);
        }
    }
}
