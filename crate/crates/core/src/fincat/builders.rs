//! Stock finite categories: posets, small groups, and bounded windows of
//! the simplex-category family.

use super::category::{CategoryBuilder, FinCategory, MorId, Morphism, ObjId};
use super::ordmap::OrdMap;
use std::collections::BTreeMap;

/// The terminal category: one object, one identity.
pub fn terminal() -> FinCategory {
    discrete("pt", 1)
}

/// A discrete category with `n` objects `x0..x{n-1}`.
pub fn discrete(name: &str, n: usize) -> FinCategory {
    let mut b = CategoryBuilder::new(name);
    let objs: Vec<ObjId> = (0..n).map(|i| b.object(format!("x{i}"))).collect();
    for o in &objs {
        b.morphism(format!("id_{o}"), o, o);
    }
    b.build(|o| MorId::new(format!("id_{o}")), |g, _| g.id.clone())
        .expect("discrete category is valid")
}

/// The walking arrow `0 -> 1`.
pub fn arrow() -> FinCategory {
    poset_chain("arr", 2)
}

/// A linear poset `e0 <= e1 <= .. <= e{n-1}` viewed as a category.
pub fn poset_chain(name: &str, n: usize) -> FinCategory {
    let elements: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let pairs: Vec<(String, String)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (format!("e{i}"), format!("e{j}"))))
        .collect();
    poset_from_pairs(name, &elements, &pairs)
}

/// A poset category from an explicit reflexive-transitive relation.
pub fn poset_from_pairs(name: &str, elements: &[String], leq: &[(String, String)]) -> FinCategory {
    let mut b = CategoryBuilder::new(name);
    let objs: BTreeMap<String, ObjId> = elements
        .iter()
        .map(|e| (e.clone(), b.object(e.clone())))
        .collect();
    for (x, y) in leq {
        b.morphism(format!("le({x},{y})"), &objs[x], &objs[y]);
    }
    b.build(
        |o| MorId::new(format!("le({o},{o})")),
        |g, f| MorId::new(format!("le({},{})", f.src, g.tgt)),
    )
    .expect("poset category is valid")
}

/// The cyclic group Z/n as a one-object category.
pub fn cyclic_group(n: usize) -> FinCategory {
    assert!(n >= 1);
    let mut b = CategoryBuilder::new(format!("Z/{n}"));
    let star = b.object("*");
    for i in 0..n {
        b.morphism(format!("g{i}"), &star, &star);
    }
    let parse = |m: &Morphism| -> usize { m.id.0[1..].parse().unwrap() };
    b.build(
        |_| MorId::new("g0"),
        move |g, f| MorId::new(format!("g{}", (parse(g) + parse(f)) % n)),
    )
    .expect("group category is valid")
}

fn ord_obj(card: usize) -> ObjId {
    ObjId::new(format!("o{card}"))
}

fn ord_mor(m: &OrdMap) -> MorId {
    MorId::new(format!("m{}", m.canonical_label()))
}

/// Recovers the ordinal map encoded in a morphism id of a simplex-category
/// window.
pub fn parse_ord_mor(id: &MorId) -> Option<OrdMap> {
    let s = id.0.strip_prefix('m')?;
    let (doms, rest) = s.split_once('>')?;
    let (cods, vals) = rest.split_once(':')?;
    let dom: usize = doms.parse().ok()?;
    let cod: usize = cods.parse().ok()?;
    let vals: Vec<usize> = if vals.is_empty() {
        Vec::new()
    } else {
        vals.split('.')
            .map(|v| v.parse().ok())
            .collect::<Option<_>>()?
    };
    let _ = dom;
    OrdMap::new(vals.len(), cod, vals).ok()
}

fn simplex_window(
    name: String,
    cards: std::ops::RangeInclusive<usize>,
    admit: impl Fn(&OrdMap) -> bool,
) -> FinCategory {
    let mut b = CategoryBuilder::new(name);
    let objs: BTreeMap<usize, ObjId> = cards
        .clone()
        .map(|c| (c, b.object(format!("o{c}"))))
        .collect();
    for &d in objs.keys() {
        for &c in objs.keys() {
            for m in OrdMap::enumerate(d, c) {
                if admit(&m) {
                    b.morphism(ord_mor(&m).0, &objs[&d], &objs[&c]);
                }
            }
        }
    }
    b.build(
        |o| {
            let card: usize = o.0[1..].parse().unwrap();
            ord_mor(&OrdMap::identity(card))
        },
        |g, f| {
            let gm = parse_ord_mor(&g.id).unwrap();
            let fm = parse_ord_mor(&f.id).unwrap();
            ord_mor(&gm.compose(&fm).unwrap())
        },
    )
    .expect("simplex window is valid")
}

/// The augmented simplex category on ordinals of cardinality `0..=max`.
pub fn delta_plus_window(max_card: usize) -> FinCategory {
    simplex_window(format!("Δ+≤{max_card}"), 0..=max_card, |_| true)
}

/// The plain simplex category window (cardinalities `1..=max`).
pub fn delta_window(max_card: usize) -> FinCategory {
    assert!(max_card >= 1);
    simplex_window(format!("Δ≤{max_card}"), 1..=max_card, |_| true)
}

/// Window of the wide subcategory of max-preserving maps.
pub fn delta_max_window(max_card: usize) -> FinCategory {
    assert!(max_card >= 1);
    simplex_window(
        format!("Δmax≤{max_card}"),
        1..=max_card,
        OrdMap::is_max_preserving,
    )
}

/// Window of the wide subcategory of injective maps of the augmented
/// simplex category.
pub fn delta_plus_inj_window(max_card: usize) -> FinCategory {
    simplex_window(
        format!("Δ+inj≤{max_card}"),
        0..=max_card,
        OrdMap::is_injective,
    )
}

pub fn ordinal_object(card: usize) -> ObjId {
    ord_obj(card)
}

pub fn ordinal_morphism(m: &OrdMap) -> MorId {
    ord_mor(m)
}

/// Full subcategory of `c` on a subset of objects.
pub fn full_subcategory(c: &FinCategory, objects: &[ObjId], name: &str) -> FinCategory {
    let keep: std::collections::BTreeSet<&ObjId> = objects.iter().collect();
    let objs: Vec<ObjId> = c
        .objects()
        .iter()
        .filter(|o| keep.contains(o))
        .cloned()
        .collect();
    let mors: Vec<Morphism> = c
        .morphisms()
        .iter()
        .filter(|m| keep.contains(&m.src) && keep.contains(&m.tgt))
        .cloned()
        .collect();
    let identity = objs
        .iter()
        .map(|o| (o.clone(), c.identity_of(o).clone()))
        .collect();
    let mor_ids: std::collections::BTreeSet<&MorId> = mors.iter().map(|m| &m.id).collect();
    let compose = mors
        .iter()
        .flat_map(|f| {
            mors.iter().filter_map(|g| {
                if f.tgt == g.src {
                    let h = c.compose(&g.id, &f.id);
                    debug_assert!(
                        mor_ids.contains(&h),
                        "full subcategory closed under composition"
                    );
                    Some(((g.id.clone(), f.id.clone()), h))
                } else {
                    None
                }
            })
        })
        .collect();
    FinCategory::new(name, objs, mors, identity, compose)
}

/// The opposite category; morphism `m` becomes `op(m)`.
pub fn opposite(c: &FinCategory) -> FinCategory {
    let op = |m: &MorId| MorId::new(format!("op({})", m.0));
    let mors = c
        .morphisms()
        .iter()
        .map(|m| Morphism {
            id: op(&m.id),
            src: m.tgt.clone(),
            tgt: m.src.clone(),
        })
        .collect();
    let identity = c
        .objects()
        .iter()
        .map(|o| (o.clone(), op(c.identity_of(o))))
        .collect();
    let mut compose = BTreeMap::new();
    for ((g, f), h) in c
        .morphisms()
        .iter()
        .flat_map(|f| c.morphisms().iter().map(move |g| (g, f)))
        .filter(|(g, f)| f.tgt == g.src)
        .map(|(g, f)| ((g.id.clone(), f.id.clone()), c.compose(&g.id, &f.id)))
    {
        // (g∘f)^op = f^op ∘ g^op
        compose.insert((op(&f), op(&g)), op(&h));
    }
    FinCategory::new(
        format!("{}^op", c.name),
        c.objects().to_vec(),
        mors,
        identity,
        compose,
    )
}

/// Binary product category. Objects `(a|b)`, morphisms `(f|g)`.
pub fn product(a: &FinCategory, b: &FinCategory) -> FinCategory {
    let obj = |x: &ObjId, y: &ObjId| ObjId::new(format!("({x}|{y})"));
    let mor = |f: &MorId, g: &MorId| MorId::new(format!("({f}|{g})"));
    let objects: Vec<ObjId> = a
        .objects()
        .iter()
        .flat_map(|x| b.objects().iter().map(move |y| obj(x, y)))
        .collect();
    let morphisms: Vec<Morphism> = a
        .morphisms()
        .iter()
        .flat_map(|f| {
            b.morphisms().iter().map(move |g| Morphism {
                id: mor(&f.id, &g.id),
                src: obj(&f.src, &g.src),
                tgt: obj(&f.tgt, &g.tgt),
            })
        })
        .collect();
    let identity = a
        .objects()
        .iter()
        .flat_map(|x| {
            b.objects()
                .iter()
                .map(move |y| (obj(x, y), mor(a.identity_of(x), b.identity_of(y))))
        })
        .collect();
    let mut compose = BTreeMap::new();
    for f1 in a.morphisms() {
        for g1 in a.morphisms() {
            if f1.tgt != g1.src {
                continue;
            }
            let h1 = a.compose(&g1.id, &f1.id);
            for f2 in b.morphisms() {
                for g2 in b.morphisms() {
                    if f2.tgt != g2.src {
                        continue;
                    }
                    let h2 = b.compose(&g2.id, &f2.id);
                    compose.insert((mor(&g1.id, &g2.id), mor(&f1.id, &f2.id)), mor(&h1, &h2));
                }
            }
        }
    }
    FinCategory::new(
        format!("{}×{}", a.name, b.name),
        objects,
        morphisms,
        identity,
        compose,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stock_categories_are_valid() {
        assert!(terminal().is_valid());
        assert!(arrow().is_valid());
        assert!(poset_chain("c", 4).is_valid());
        assert!(cyclic_group(2).is_valid());
        assert!(discrete("d", 3).is_valid());
    }

    #[test]
    fn delta_plus_window_is_valid_and_counts_check() {
        let d = delta_plus_window(3);
        assert!(d.is_valid());
        assert_eq!(d.objects().len(), 4);
        // hom(o2, o2) = monotone maps on a 2-chain = C(3,2) = 3
        let h = d.hom(&ordinal_object(2), &ordinal_object(2));
        assert_eq!(h.len(), 3);
    }

    #[test]
    fn opposite_and_product_are_valid() {
        let c = poset_chain("c", 3);
        assert!(opposite(&c).is_valid());
        let p = product(&c, &arrow());
        assert!(p.is_valid());
        assert_eq!(p.objects().len(), 6);
    }

    #[test]
    fn delta_max_window_morphisms_preserve_max() {
        let d = delta_max_window(3);
        assert!(d.is_valid());
        for m in d.morphisms() {
            let om = parse_ord_mor(&m.id).unwrap();
            assert!(om.is_max_preserving());
        }
    }
}
