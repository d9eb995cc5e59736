//! The builtin monad catalog: identity, powerset, nonempty powerset,
//! maybe, writer over a finite monoid, and the affine span of a finite
//! ring. Each entry is law-checked by the verification suite.

use super::affine::{affine_span_monad, AffineSpanMonad};
use super::ring::{FinMonoid, FiniteRing};
use crate::budget::Budget;
use crate::error::{EngineError, Result};
use crate::monadkit::monad::SetMonad;
use crate::set::{LFun, LSet};

pub struct IdentityMonad;

impl SetMonad for IdentityMonad {
    fn name(&self) -> String {
        "identity".into()
    }

    fn on_object(&self, x: &LSet, _: &Budget) -> Result<LSet> {
        Ok(x.clone())
    }

    fn on_function(&self, f: &LFun, _: &Budget) -> Result<LFun> {
        Ok(f.clone())
    }

    fn unit(&self, x: &LSet, _: &Budget) -> Result<LFun> {
        Ok(LFun::identity(x))
    }

    fn mult(&self, x: &LSet, _: &Budget) -> Result<LFun> {
        Ok(LFun::identity(x))
    }
}

/// Subsets in mask order, so the index of a subset *is* its bitmask.
pub struct PowersetMonad {
    /// when set, the empty subset is dropped (indices shift down by one)
    nonempty: bool,
    /// memoized outputs keyed by (input length, label hash); towers get
    /// rebuilt constantly during law checks, and sharing the result makes
    /// set equality a pointer check
    cache: std::sync::RwLock<std::collections::BTreeMap<(usize, u64), LSet>>,
}

pub fn powerset() -> PowersetMonad {
    PowersetMonad {
        nonempty: false,
        cache: std::sync::RwLock::new(std::collections::BTreeMap::new()),
    }
}

pub fn nonempty_powerset() -> PowersetMonad {
    PowersetMonad {
        nonempty: true,
        cache: std::sync::RwLock::new(std::collections::BTreeMap::new()),
    }
}

fn label_key(x: &LSet) -> (usize, u64) {
    use std::hash::{Hash, Hasher};
    let mut h = std::collections::hash_map::DefaultHasher::new();
    for l in x.labels() {
        l.hash(&mut h);
    }
    (x.len(), h.finish())
}

impl PowersetMonad {
    fn first_mask(&self) -> u64 {
        if self.nonempty {
            1
        } else {
            0
        }
    }

    fn index_of_mask(&self, mask: u64) -> usize {
        (mask - self.first_mask()) as usize
    }

    fn mask_of_index(&self, index: usize) -> u64 {
        index as u64 + self.first_mask()
    }

    fn subset_label(x: &LSet, mask: u64) -> String {
        let names: Vec<&str> = (0..x.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| x.label(i))
            .collect();
        format!("{{{}}}", names.join(","))
    }

    /// Labels for one full output set. Nested powerset labels grow
    /// geometrically, so when any braced label would get long the whole
    /// level switches to bitmask labels.
    fn level_labels(&self, x: &LSet) -> Vec<String> {
        let nested = x.len() > 8 || x.labels().iter().map(|l| l.len() + 1).sum::<usize>() > 48;
        (self.first_mask()..1u64 << x.len())
            .map(|mask| {
                if nested {
                    format!("#{mask:x}")
                } else {
                    Self::subset_label(x, mask)
                }
            })
            .collect()
    }

    fn count(&self, n: usize) -> u128 {
        if n >= 127 {
            return u128::MAX;
        }
        (1u128 << n) - if self.nonempty { 1 } else { 0 }
    }

    fn admit(&self, x: &LSet, budget: &Budget) -> Result<()> {
        if x.len() > 63 {
            return Err(EngineError::Resource {
                context: "powerset mask width".into(),
                needed: self.count(x.len()),
                budget: budget.elements as u128,
            });
        }
        budget.admit_set(self.count(x.len()), "powerset")
    }
}

impl SetMonad for PowersetMonad {
    fn name(&self) -> String {
        if self.nonempty {
            "nonempty-powerset".into()
        } else {
            "powerset".into()
        }
    }

    fn on_object(&self, x: &LSet, budget: &Budget) -> Result<LSet> {
        self.admit(x, budget)?;
        let key = label_key(x);
        if let Some(hit) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let built = LSet::from_distinct(self.level_labels(x));
        self.cache
            .write()
            .expect("cache lock")
            .insert(key, built.clone());
        Ok(built)
    }

    fn on_function(&self, f: &LFun, budget: &Budget) -> Result<LFun> {
        self.admit(f.dom(), budget)?;
        self.admit(f.cod(), budget)?;
        let dom = self.on_object(f.dom(), budget)?;
        let cod = self.on_object(f.cod(), budget)?;
        let map = (0..dom.len())
            .map(|i| {
                let mask = self.mask_of_index(i);
                let mut image = 0u64;
                for b in 0..f.dom().len() {
                    if mask >> b & 1 == 1 {
                        image |= 1 << f.apply(b);
                    }
                }
                self.index_of_mask(image)
            })
            .collect();
        LFun::new(dom, cod, map)
    }

    fn unit(&self, x: &LSet, budget: &Budget) -> Result<LFun> {
        let tx = self.on_object(x, budget)?;
        let map = (0..x.len())
            .map(|i| self.index_of_mask(1u64 << i))
            .collect();
        LFun::new(x.clone(), tx, map)
    }

    fn mult(&self, x: &LSet, budget: &Budget) -> Result<LFun> {
        let tx = self.on_object(x, budget)?;
        let ttx = self.on_object(&tx, budget)?;
        let map = (0..ttx.len())
            .map(|i| {
                let outer = self.mask_of_index(i);
                let mut union = 0u64;
                for k in 0..tx.len() {
                    if outer >> k & 1 == 1 {
                        union |= self.mask_of_index(k);
                    }
                }
                self.index_of_mask(union)
            })
            .collect();
        LFun::new(ttx, tx, map)
    }

    fn algebra_structures_hook(&self, x: &LSet, budget: &Budget) -> Option<Result<Vec<LFun>>> {
        if self.nonempty {
            return None; // generic search handles the small windows we use
        }
        Some(self.semilattice_algebras(x, budget))
    }
}

impl PowersetMonad {
    /// Full-powerset algebra structures on `x`, enumerated through their
    /// equivalent description: a commutative idempotent associative binary
    /// join with a least element, with the structure map sending a subset
    /// to its join (the empty subset to the least element). The generic
    /// raw-axiom search cross-validates this on small windows.
    fn semilattice_algebras(&self, x: &LSet, budget: &Budget) -> Result<Vec<LFun>> {
        let n = x.len();
        let tx = self.on_object(x, budget)?;
        if n == 0 {
            return Ok(Vec::new()); // T(∅) = {∅} has no map into ∅
        }
        // pair cells (u, v), u < v, in lexicographic order
        let cells: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut join = vec![vec![usize::MAX; n]; n];
        for u in 0..n {
            join[u][u] = u;
        }
        let mut found = Vec::new();
        let mut meter = crate::budget::SearchMeter::new(budget, "semilattice enumeration");

        fn lookup(join: &[Vec<usize>], a: usize, b: usize) -> usize {
            join[a][b]
        }

        // check all triples whose lookups are available; missing lookups
        // are rechecked once their cells fill in
        fn consistent(join: &[Vec<usize>], n: usize) -> bool {
            for a in 0..n {
                for b in 0..n {
                    let ab = lookup(join, a, b);
                    if ab == usize::MAX {
                        continue;
                    }
                    for c in 0..n {
                        let bc = lookup(join, b, c);
                        if bc == usize::MAX {
                            continue;
                        }
                        let left = lookup(join, ab, c);
                        let right = lookup(join, a, bc);
                        if left != usize::MAX && right != usize::MAX && left != right {
                            return false;
                        }
                    }
                }
            }
            true
        }

        fn rec(
            cells: &[(usize, usize)],
            at: usize,
            join: &mut Vec<Vec<usize>>,
            n: usize,
            meter: &mut crate::budget::SearchMeter,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) -> Result<()> {
            meter.tick()?;
            if at == cells.len() {
                // a least element must exist
                let bottom = (0..n).find(|&b| (0..n).all(|u| join[b][u] == u));
                if bottom.is_some() && consistent(join, n) {
                    out.push(join.clone());
                }
                return Ok(());
            }
            let (u, v) = cells[at];
            for w in 0..n {
                join[u][v] = w;
                join[v][u] = w;
                if consistent(join, n) {
                    rec(cells, at + 1, join, n, meter, out)?;
                }
            }
            join[u][v] = usize::MAX;
            join[v][u] = usize::MAX;
            Ok(())
        }

        let mut tables = Vec::new();
        rec(&cells, 0, &mut join, n, &mut meter, &mut tables)?;

        for table in tables {
            let bottom = (0..n)
                .find(|&b| (0..n).all(|u| table[b][u] == u))
                .expect("filtered above");
            // fold the join over each subset mask
            let map: Vec<usize> = (0..tx.len())
                .map(|i| {
                    let mask = self.mask_of_index(i);
                    let mut acc: Option<usize> = None;
                    for b in 0..n {
                        if mask >> b & 1 == 1 {
                            acc = Some(match acc {
                                None => b,
                                Some(a) => table[a][b],
                            });
                        }
                    }
                    acc.unwrap_or(bottom)
                })
                .collect();
            found.push(LFun::new(tx.clone(), x.clone(), map)?);
        }
        found.sort_by(|a, b| a.map().cmp(b.map()));
        found.dedup();
        Ok(found)
    }
}

/// `T(x) = x ⊔ {⊥}`; labels wrap as `j(..)` and `n`.
pub struct MaybeMonad;

impl MaybeMonad {
    fn wrap(x: &LSet) -> LSet {
        let mut labels: Vec<String> = x.labels().iter().map(|l| format!("j({l})")).collect();
        labels.push("n".into());
        LSet::from_distinct(labels)
    }
}

impl SetMonad for MaybeMonad {
    fn name(&self) -> String {
        "maybe".into()
    }

    fn on_object(&self, x: &LSet, _: &Budget) -> Result<LSet> {
        Ok(Self::wrap(x))
    }

    fn on_function(&self, f: &LFun, _: &Budget) -> Result<LFun> {
        let dom = Self::wrap(f.dom());
        let cod = Self::wrap(f.cod());
        let mut map: Vec<usize> = f.map().to_vec();
        map.push(f.cod().len()); // ⊥ ↦ ⊥
        LFun::new(dom, cod, map)
    }

    fn unit(&self, x: &LSet, _: &Budget) -> Result<LFun> {
        LFun::new(x.clone(), Self::wrap(x), (0..x.len()).collect())
    }

    fn mult(&self, x: &LSet, _: &Budget) -> Result<LFun> {
        let tx = Self::wrap(x);
        let ttx = Self::wrap(&tx);
        // j(j(a)) ↦ j(a); j(n) ↦ n; n ↦ n
        let mut map: Vec<usize> = (0..tx.len()).collect();
        map.push(x.len()); // outer ⊥ to inner ⊥
        LFun::new(ttx, tx, map)
    }
}

/// `T(x) = W × x` for a finite monoid `W`.
pub struct WriterMonad {
    pub monoid: FinMonoid,
}

impl WriterMonad {
    fn wrap(&self, x: &LSet) -> LSet {
        let labels = self
            .monoid
            .labels
            .iter()
            .flat_map(|w| x.labels().iter().map(move |l| format!("({w},{l})")))
            .collect();
        LSet::from_distinct(labels)
    }

    fn size(&self) -> usize {
        self.monoid.size()
    }
}

impl SetMonad for WriterMonad {
    fn name(&self) -> String {
        format!("writer:{}", self.monoid.name)
    }

    fn on_object(&self, x: &LSet, _: &Budget) -> Result<LSet> {
        Ok(self.wrap(x))
    }

    fn on_function(&self, f: &LFun, _: &Budget) -> Result<LFun> {
        let n = f.dom().len();
        let map = (0..self.size() * n)
            .map(|i| {
                let (w, a) = (i / n, i % n);
                w * f.cod().len() + f.apply(a)
            })
            .collect();
        LFun::new(self.wrap(f.dom()), self.wrap(f.cod()), map)
    }

    fn unit(&self, x: &LSet, _: &Budget) -> Result<LFun> {
        let map = (0..x.len())
            .map(|a| self.monoid.unit * x.len() + a)
            .collect();
        LFun::new(x.clone(), self.wrap(x), map)
    }

    fn mult(&self, x: &LSet, _: &Budget) -> Result<LFun> {
        let n = x.len();
        let tx = self.wrap(x);
        let ttx = self.wrap(&tx);
        // (w1, (w2, a)) ↦ (w1·w2, a)
        let map = (0..self.size() * self.size() * n)
            .map(|i| {
                let (w1, rest) = (i / (self.size() * n), i % (self.size() * n));
                let (w2, a) = (rest / n, rest % n);
                self.monoid.op(w1, w2) * n + a
            })
            .collect();
        LFun::new(ttx, tx, map)
    }
}

/// Looks up a builtin by name: `identity`, `powerset`,
/// `nonempty-powerset`, `maybe`, `writer:<monoid>`, `affine:<ring>`.
/// Monoids: `trivial` or `Z/n`. Rings: `Z/n`.
pub fn builtin_monad(name: &str) -> Result<Box<dyn SetMonad>> {
    match name {
        "identity" => Ok(Box::new(IdentityMonad)),
        "powerset" => Ok(Box::new(powerset())),
        "nonempty-powerset" => Ok(Box::new(nonempty_powerset())),
        "maybe" => Ok(Box::new(MaybeMonad)),
        _ => {
            if let Some(m) = name.strip_prefix("writer:") {
                let monoid = if m.eq_ignore_ascii_case("trivial") {
                    FinMonoid::trivial()
                } else if let Some(n) = m.to_ascii_lowercase().strip_prefix("z/") {
                    let n: usize = n
                        .parse()
                        .map_err(|_| EngineError::Parse(format!("bad monoid `{m}`")))?;
                    FinMonoid::cyclic(n)
                } else {
                    return Err(EngineError::Parse(format!("unknown monoid `{m}`")));
                };
                monoid.validate()?;
                return Ok(Box::new(WriterMonad { monoid }));
            }
            if let Some(r) = name.strip_prefix("affine:") {
                let ring = FiniteRing::parse(r)?;
                return Ok(Box::new(affine_span_monad(ring)));
            }
            Err(EngineError::Parse(format!(
                "unknown builtin monad `{name}`"
            )))
        }
    }
}

/// The default comparison corpus used by the verification suites.
pub fn catalog() -> Vec<Box<dyn SetMonad>> {
    vec![
        Box::new(IdentityMonad),
        Box::new(powerset()),
        Box::new(nonempty_powerset()),
        Box::new(MaybeMonad),
        Box::new(WriterMonad {
            monoid: FinMonoid::cyclic(2),
        }),
        Box::new(affine_span_monad(
            FiniteRing::zmod(2).expect("Z/2 is a ring"),
        )),
    ]
}

/// The affine monad over Z/2, the most exercised instance.
pub fn affine_z2() -> AffineSpanMonad {
    affine_span_monad(FiniteRing::zmod(2).expect("Z/2 is a ring"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powerset_mask_arithmetic() {
        let b = Budget::default();
        let m = powerset();
        let x = LSet::skeletal(3);
        let tx = m.on_object(&x, &b).unwrap();
        assert_eq!(tx.len(), 8);
        assert_eq!(tx.label(0), "{}");
        assert_eq!(tx.label(0b101), "{0,2}");
        // unit is singleton
        let eta = m.unit(&x, &b).unwrap();
        assert_eq!(tx.label(eta.apply(1)), "{1}");
        // direct image
        let y = LSet::skeletal(2);
        let f = LFun::new(x.clone(), y.clone(), vec![0, 0, 1]).unwrap();
        let pf = m.on_function(&f, &b).unwrap();
        assert_eq!(pf.cod().label(pf.apply(0b011)), "{0}");
        assert_eq!(pf.cod().label(pf.apply(0b111)), "{0,1}");
    }

    #[test]
    fn nonempty_powerset_drops_empty() {
        let b = Budget::default();
        let m = nonempty_powerset();
        let x = LSet::skeletal(2);
        let tx = m.on_object(&x, &b).unwrap();
        assert_eq!(tx.len(), 3);
        assert_eq!(m.on_object(&LSet::empty(), &b).unwrap().len(), 0);
    }

    #[test]
    fn maybe_mult_collapses_bottoms() {
        let b = Budget::default();
        let m = MaybeMonad;
        let x = LSet::skeletal(1);
        let mu = m.mult(&x, &b).unwrap();
        let tx = m.on_object(&x, &b).unwrap();
        // j(n) and n both land on n
        let jn = mu.dom().index_of("j(n)").unwrap();
        let n = mu.dom().index_of("n").unwrap();
        assert_eq!(tx.label(mu.apply(jn)), "n");
        assert_eq!(tx.label(mu.apply(n)), "n");
    }

    #[test]
    fn writer_over_trivial_monoid_acts_like_identity() {
        let b = Budget::default();
        let m = WriterMonad {
            monoid: FinMonoid::trivial(),
        };
        let x = LSet::skeletal(3);
        assert_eq!(m.on_object(&x, &b).unwrap().len(), 3);
        let eta = m.unit(&x, &b).unwrap();
        assert!(eta.is_bijective());
    }

    #[test]
    fn builtin_lookup() {
        assert!(builtin_monad("powerset").is_ok());
        assert!(builtin_monad("writer:Z/2").is_ok());
        assert!(builtin_monad("affine:Z/2").is_ok());
        assert!(builtin_monad("frobenius").is_err());
    }

    #[test]
    fn powerset_algebra_hook_on_small_sets() {
        let b = Budget::default();
        let m = powerset();
        // |x| = 1: unique structure; |x| = 0: none
        let one = m
            .algebra_structures_hook(&LSet::skeletal(1), &b)
            .unwrap()
            .unwrap();
        assert_eq!(one.len(), 1);
        let zero = m
            .algebra_structures_hook(&LSet::empty(), &b)
            .unwrap()
            .unwrap();
        assert!(zero.is_empty());
        // |x| = 2: joins: two total orders = 2 semilattices with bottom
        let two = m
            .algebra_structures_hook(&LSet::skeletal(2), &b)
            .unwrap()
            .unwrap();
        assert_eq!(two.len(), 2);
    }
}
