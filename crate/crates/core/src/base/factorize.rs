//! The (bijective on objects, fully faithful) factorization on finite
//! categories, and the enhanced lifting it supports.

use super::{enumerate_functors, enumerate_nat_trans, FiniteCategory, FiniteFunctor, FiniteNatTrans};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Result of [`factorize_bo_ff`]: `f = ff ∘ bo` through `middle`.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub middle: FiniteCategory,
    /// Bijective on objects: source → middle.
    pub bo: FiniteFunctor,
    /// Fully faithful: middle → target.
    pub ff: FiniteFunctor,
}

fn middle_mor_id(x: &str, y: &str, m: &str) -> String {
    format!("{m}@{x}>{y}")
}

/// Factor `f: src → tgt` as a bijective-on-objects functor followed by
/// a fully faithful one. The middle category has the objects of `src`
/// with homs pulled back from `tgt`:
/// `middle(x, y) = tgt(f(x), f(y))`.
pub fn factorize_bo_ff(
    src: &FiniteCategory,
    tgt: &FiniteCategory,
    f: &FiniteFunctor,
) -> Result<Factorization> {
    if !f.validate(src, tgt).passed() {
        return Err(Error::Structural(
            "factorize_bo_ff: input is not a functor".into(),
        ));
    }
    let mut middle = FiniteCategory {
        objects: src.objects.clone(),
        ..Default::default()
    };
    // Morphisms: one copy of tgt(Fx, Fy) per ordered pair (x, y).
    for x in &src.objects {
        for y in &src.objects {
            for m in tgt.hom(&f.obj_map[x], &f.obj_map[y]) {
                middle
                    .morphisms
                    .insert(middle_mor_id(x, y, &m), (x.clone(), y.clone()));
            }
        }
    }
    for x in &src.objects {
        let id_tgt = &tgt.identity[&f.obj_map[x]];
        middle
            .identity
            .insert(x.clone(), middle_mor_id(x, x, id_tgt));
    }
    // Composition inherited from the target.
    let strip = |id: &str| -> (String, String, String) {
        let (m, rest) = id.split_once('@').expect("middle morphism id shape");
        let (x, y) = rest.split_once('>').expect("middle morphism id shape");
        (x.to_string(), y.to_string(), m.to_string())
    };
    let keys: Vec<String> = middle.morphisms.keys().cloned().collect();
    for g in &keys {
        for h in &keys {
            let (gx, gy, gm) = strip(g);
            let (hx, hy, hm) = strip(h);
            if gy != hx {
                continue;
            }
            let comp = tgt
                .composite(&hm, &gm)
                .ok_or_else(|| Error::Structural("target composition table incomplete".into()))?;
            middle.compose.insert(
                (h.clone(), g.clone()),
                middle_mor_id(&gx, &hy, comp),
            );
        }
    }
    let bo = FiniteFunctor {
        obj_map: src.objects.iter().map(|x| (x.clone(), x.clone())).collect(),
        mor_map: src
            .morphisms
            .iter()
            .map(|(m, (d, c))| (m.clone(), middle_mor_id(d, c, &f.mor_map[m])))
            .collect(),
    };
    let ff = FiniteFunctor {
        obj_map: src
            .objects
            .iter()
            .map(|x| (x.clone(), f.obj_map[x].clone()))
            .collect(),
        mor_map: middle
            .morphisms
            .keys()
            .map(|id| {
                let (_, _, m) = strip(id);
                (id.clone(), m)
            })
            .collect(),
    };
    Ok(Factorization { middle, bo, ff })
}

/// Is `f` full and faithful? Checked hom-by-hom: each induced map
/// `src(x,y) → tgt(fx,fy)` must be a bijection.
pub fn is_fully_faithful(src: &FiniteCategory, tgt: &FiniteCategory, f: &FiniteFunctor) -> bool {
    for x in &src.objects {
        for y in &src.objects {
            let dom_hom = src.hom(x, y);
            let cod_hom = tgt.hom(&f.obj_map[x], &f.obj_map[y]);
            let mut image: Vec<&String> = dom_hom.iter().filter_map(|m| f.mor_map.get(m)).collect();
            image.sort();
            image.dedup();
            if image.len() != dom_hom.len() || image.len() != cod_hom.len() {
                return false;
            }
        }
    }
    true
}

/// The unique preimage of `m: f(x) → f(y)` under a fully faithful `f`.
fn ff_preimage(
    src: &FiniteCategory,
    f: &FiniteFunctor,
    x: &str,
    y: &str,
    m: &str,
) -> Option<String> {
    src.hom(x, y)
        .into_iter()
        .find(|n| f.mor_map.get(n).map(|s| s.as_str()) == Some(m))
}

/// Enhanced factorization lifting.
///
/// Given `e: A → B` bijective on objects, `m: C → D` fully faithful,
/// `s: A → C`, `t: B → D`, and a natural isomorphism `α: t∘e ≅ m∘s`,
/// produce the unique pair `(r, β)` with `r∘e = s`, `β: t ≅ m∘r`, and
/// `β·e = α` (that is, `β_{e(a)} = α_a`).
#[allow(clippy::too_many_arguments)]
pub fn enhanced_lifting(
    cat_a: &FiniteCategory,
    cat_b: &FiniteCategory,
    cat_c: &FiniteCategory,
    cat_d: &FiniteCategory,
    e: &FiniteFunctor,
    m: &FiniteFunctor,
    s: &FiniteFunctor,
    t: &FiniteFunctor,
    alpha: &FiniteNatTrans,
) -> Result<(FiniteFunctor, FiniteNatTrans)> {
    if !e.is_bijective_on_objects(cat_a, cat_b) {
        return Err(Error::Precondition("e is not bijective on objects".into()));
    }
    if !is_fully_faithful(cat_c, cat_d, m) {
        return Err(Error::Precondition("m is not fully faithful".into()));
    }
    let te = super::compose_functors(t, e);
    let ms = super::compose_functors(m, s);
    if !alpha.validate(cat_a, cat_d, &te, &ms).passed() {
        return Err(Error::Precondition("α is not natural t∘e ⇒ m∘s".into()));
    }
    for (a, comp) in &alpha.components {
        if !cat_d.is_iso(comp) {
            return Err(Error::Precondition(format!(
                "α component at {a} is not invertible"
            )));
        }
    }
    // Invert the object bijection of e.
    let e_inv: BTreeMap<String, String> = e
        .obj_map
        .iter()
        .map(|(a, b)| (b.clone(), a.clone()))
        .collect();
    let mut r = FiniteFunctor::default();
    for b in &cat_b.objects {
        let a = &e_inv[b];
        r.obj_map.insert(b.clone(), s.obj_map[a].clone());
    }
    // r on morphisms: conjugate by α and pull back through m.
    for (mor, (b0, b1)) in &cat_b.morphisms {
        let a0 = &e_inv[b0];
        let a1 = &e_inv[b1];
        let al0 = &alpha.components[a0];
        let al1 = &alpha.components[a1];
        let al0_inv = cat_d
            .inverse_of(al0)
            .ok_or_else(|| Error::Precondition("α component not invertible".into()))?;
        let tm = &t.mor_map[mor];
        let step = cat_d
            .composite(tm, &al0_inv)
            .and_then(|u| cat_d.composite(al1, u))
            .ok_or_else(|| Error::Structural("composition undefined in target".into()))?
            .clone();
        let pre = ff_preimage(cat_c, m, &r.obj_map[b0].clone(), &r.obj_map[b1].clone(), &step)
            .ok_or_else(|| Error::Structural("fully-faithful preimage missing".into()))?;
        r.mor_map.insert(mor.clone(), pre);
    }
    let beta = FiniteNatTrans {
        components: cat_b
            .objects
            .iter()
            .map(|b| (b.clone(), alpha.components[&e_inv[b]].clone()))
            .collect(),
    };
    Ok((r, beta))
}

/// Exhaustive uniqueness check for [`enhanced_lifting`], used by tests:
/// enumerate all pairs `(r, β)` satisfying the three equations and
/// confirm exactly one exists.
#[allow(clippy::too_many_arguments)]
pub fn count_lifting_solutions(
    cat_a: &FiniteCategory,
    cat_b: &FiniteCategory,
    cat_c: &FiniteCategory,
    cat_d: &FiniteCategory,
    e: &FiniteFunctor,
    m: &FiniteFunctor,
    s: &FiniteFunctor,
    t: &FiniteFunctor,
    alpha: &FiniteNatTrans,
    cap: u128,
) -> Result<usize> {
    let mut hits = 0;
    for r in enumerate_functors(cat_b, cat_c, cap)? {
        if !r.validate(cat_b, cat_c).passed() {
            continue;
        }
        if super::compose_functors(&r, e) != *s {
            continue;
        }
        let mr = super::compose_functors(m, &r);
        for beta in enumerate_nat_trans(cat_b, cat_d, t, &mr, cap)? {
            if !beta.validate(cat_b, cat_d, t, &mr).passed() {
                continue;
            }
            if !beta.components.values().all(|c| cat_d.is_iso(c)) {
                continue;
            }
            let whiskered: BTreeMap<String, String> = cat_a
                .objects
                .iter()
                .map(|a| (a.clone(), beta.components[&e.obj_map[a]].clone()))
                .collect();
            if whiskered == alpha.components {
                hits += 1;
            }
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::identity_functor;
    use crate::fixtures;

    #[test]
    fn bo_ff_of_an_iso_is_iso_on_both_legs() {
        let c = fixtures::walking_arrow();
        let f = identity_functor(&c);
        let fact = factorize_bo_ff(&c, &c, &f).unwrap();
        assert!(crate::base::validate_category(&fact.middle).unwrap().passed());
        assert!(fact.bo.validate(&c, &fact.middle).passed());
        assert!(fact.ff.validate(&fact.middle, &c).passed());
        assert!(fact.bo.is_bijective_on_objects(&c, &fact.middle));
        assert!(is_fully_faithful(&fact.middle, &c, &fact.ff));
        // Both legs are isomorphisms up to relabel.
        assert!(crate::base::are_isomorphic(&fact.middle, &c, 100_000).unwrap());
    }

    #[test]
    fn constant_functor_factorization_collapses_homs() {
        // Discrete 2-object category → terminal: the middle keeps both
        // objects but acquires the pulled-back singleton homs.
        let two = fixtures::discrete_category(2);
        let one = fixtures::terminal_category();
        let mut f = FiniteFunctor::default();
        for x in &two.objects {
            f.obj_map.insert(x.clone(), "*".into());
        }
        for m in two.morphisms.keys() {
            f.mor_map.insert(m.clone(), "id*".into());
        }
        let fact = factorize_bo_ff(&two, &one, &f).unwrap();
        assert_eq!(fact.middle.object_count(), 2);
        assert_eq!(fact.middle.morphism_count(), 4); // every pair has 1 morphism
        assert!(crate::base::validate_category(&fact.middle).unwrap().passed());
        assert_eq!(
            fact.bo.validate(&two, &fact.middle).passed()
                && fact.ff.validate(&fact.middle, &one).passed(),
            true
        );
        assert!(fact.bo.is_bijective_on_objects(&two, &fact.middle));
        assert!(is_fully_faithful(&fact.middle, &one, &fact.ff));
        // Composite recovers f.
        assert_eq!(crate::base::compose_functors(&fact.ff, &fact.bo), f);
    }

    #[test]
    fn enhanced_lifting_is_unique_on_a_small_instance() {
        // A = B = terminal; C = D = Z/3 viewed as a one-object
        // category; e = id, m = id (fully faithful), s picks the
        // object, t likewise; α = a nontrivial automorphism component.
        let one = fixtures::terminal_category();
        let z3 = fixtures::cyclic_group_category(3);
        let e = identity_functor(&one);
        let m = identity_functor(&z3);
        let pick = FiniteFunctor {
            obj_map: [("*".to_string(), "x".to_string())].into_iter().collect(),
            mor_map: [("id*".to_string(), "g0".to_string())].into_iter().collect(),
        };
        let alpha = FiniteNatTrans {
            components: [("*".to_string(), "g1".to_string())].into_iter().collect(),
        };
        let (r, beta) =
            enhanced_lifting(&one, &one, &z3, &z3, &e, &m, &pick, &pick, &alpha).unwrap();
        assert_eq!(crate::base::compose_functors(&r, &e), pick);
        assert_eq!(beta.components["*"], "g1");
        let solutions = count_lifting_solutions(
            &one, &one, &z3, &z3, &e, &m, &pick, &pick, &alpha, 100_000,
        )
        .unwrap();
        assert_eq!(solutions, 1);
    }
}
