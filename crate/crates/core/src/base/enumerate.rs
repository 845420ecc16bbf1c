//! Exhaustive enumeration of functors and natural transformations.
//!
//! Enumeration is complete, duplicate-free and canonically ordered.
//! Candidate counts are estimated up front against a cap; exceeding it
//! is an error, never silent truncation.

use super::{
    compose_functors, identity_functor, FiniteCategory, FiniteFunctor, FiniteNatTrans, MorId, ObjId,
};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Upper bound on the number of raw object-map candidates.
fn object_map_candidates(src: &FiniteCategory, tgt: &FiniteCategory) -> u128 {
    (tgt.objects.len() as u128)
        .checked_pow(src.objects.len() as u32)
        .unwrap_or(u128::MAX)
}

/// All functors `src → tgt`, canonically ordered.
///
/// Morphism images are assigned by backtracking: identities are forced
/// and composition is enforced as soon as both factors of a pair are
/// assigned, so the search prunes far below the raw candidate count.
/// The raw count is still what the cap is measured against.
pub fn enumerate_functors(
    src: &FiniteCategory,
    tgt: &FiniteCategory,
    cap: u128,
) -> Result<Vec<FiniteFunctor>> {
    let obj_candidates = object_map_candidates(src, tgt);
    if obj_candidates > cap {
        return Err(Error::SizeCap {
            context: format!(
                "enumerate_functors: {} object maps",
                obj_candidates
            ),
            candidates: obj_candidates,
            cap,
        });
    }
    let mut out = Vec::new();
    let mut obj_map = BTreeMap::new();
    enumerate_object_maps(src, tgt, 0, &mut obj_map, &mut |om| {
        // Estimate the morphism-map space for this object map.
        let mut est: u128 = 1;
        for (_, (d, c)) in &src.morphisms {
            let h = tgt.hom(&om[d], &om[c]).len() as u128;
            est = est.saturating_mul(h.max(1));
            if h == 0 {
                est = 0;
                break;
            }
        }
        if est > cap {
            return Err(Error::SizeCap {
                context: "enumerate_functors: morphism maps".into(),
                candidates: est,
                cap,
            });
        }
        let mors: Vec<MorId> = src.morphisms.keys().cloned().collect();
        let mut mor_map = BTreeMap::new();
        // Force identities first.
        for (x, i) in &src.identity {
            mor_map.insert(i.clone(), tgt.identity[&om[x]].clone());
        }
        assign_morphisms(src, tgt, om, &mors, 0, &mut mor_map, &mut |mm| {
            out.push(FiniteFunctor {
                obj_map: om.clone(),
                mor_map: mm.clone(),
            });
        });
        Ok(())
    })?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn enumerate_object_maps(
    src: &FiniteCategory,
    tgt: &FiniteCategory,
    idx: usize,
    acc: &mut BTreeMap<ObjId, ObjId>,
    visit: &mut impl FnMut(&BTreeMap<ObjId, ObjId>) -> Result<()>,
) -> Result<()> {
    if idx == src.objects.len() {
        return visit(acc);
    }
    let x = src.objects[idx].clone();
    for y in &tgt.objects {
        acc.insert(x.clone(), y.clone());
        enumerate_object_maps(src, tgt, idx + 1, acc, visit)?;
    }
    acc.remove(&x);
    Ok(())
}

fn assign_morphisms(
    src: &FiniteCategory,
    tgt: &FiniteCategory,
    om: &BTreeMap<ObjId, ObjId>,
    mors: &[MorId],
    idx: usize,
    acc: &mut BTreeMap<MorId, MorId>,
    visit: &mut impl FnMut(&BTreeMap<MorId, MorId>),
) {
    if idx == mors.len() {
        visit(acc);
        return;
    }
    let m = &mors[idx];
    if acc.contains_key(m) {
        // Identity, already forced.
        if consistent(src, tgt, acc) {
            assign_morphisms(src, tgt, om, mors, idx + 1, acc, visit);
        }
        return;
    }
    let (d, c) = &src.morphisms[m];
    for n in tgt.hom(&om[d], &om[c]) {
        acc.insert(m.clone(), n);
        if consistent(src, tgt, acc) {
            assign_morphisms(src, tgt, om, mors, idx + 1, acc, visit);
        }
        acc.remove(m);
    }
}

/// Composition constraints restricted to pairs whose images are all
/// already assigned.
fn consistent(src: &FiniteCategory, tgt: &FiniteCategory, acc: &BTreeMap<MorId, MorId>) -> bool {
    for ((g, f), h) in &src.compose {
        if let (Some(ig), Some(iff), Some(ih)) = (acc.get(g), acc.get(f), acc.get(h)) {
            if tgt.composite(ig, iff) != Some(ih) {
                return false;
            }
        }
    }
    true
}

/// All natural transformations between a parallel pair of functors.
pub fn enumerate_nat_trans(
    src: &FiniteCategory,
    tgt: &FiniteCategory,
    f: &FiniteFunctor,
    g: &FiniteFunctor,
    cap: u128,
) -> Result<Vec<FiniteNatTrans>> {
    let mut est: u128 = 1;
    for x in &src.objects {
        est = est.saturating_mul(tgt.hom(&f.obj_map[x], &g.obj_map[x]).len().max(1) as u128);
    }
    if est > cap {
        return Err(Error::SizeCap {
            context: "enumerate_nat_trans".into(),
            candidates: est,
            cap,
        });
    }
    let mut out = Vec::new();
    let objs: Vec<ObjId> = src.objects.clone();
    let mut comp = BTreeMap::new();
    assign_components(src, tgt, f, g, &objs, 0, &mut comp, &mut out);
    out.sort();
    out.dedup();
    Ok(out)
}

fn assign_components(
    src: &FiniteCategory,
    tgt: &FiniteCategory,
    f: &FiniteFunctor,
    g: &FiniteFunctor,
    objs: &[ObjId],
    idx: usize,
    acc: &mut BTreeMap<ObjId, MorId>,
    out: &mut Vec<FiniteNatTrans>,
) {
    if idx == objs.len() {
        out.push(FiniteNatTrans {
            components: acc.clone(),
        });
        return;
    }
    let x = &objs[idx];
    'cand: for c in tgt.hom(&f.obj_map[x], &g.obj_map[x]) {
        acc.insert(x.clone(), c);
        // Naturality squares whose both components are assigned.
        for (m, (mx, my)) in &src.morphisms {
            if let (Some(cx), Some(cy)) = (acc.get(mx), acc.get(my)) {
                let fm = &f.mor_map[m];
                let gm = &g.mor_map[m];
                if tgt.composite(gm, cx) != tgt.composite(cy, fm) {
                    acc.remove(x);
                    continue 'cand;
                }
            }
        }
        assign_components(src, tgt, f, g, objs, idx + 1, acc, out);
        acc.remove(x);
    }
}

/// The functor category `[src, tgt]` as a finite category: objects are
/// the enumerated functors, morphisms the natural transformations,
/// composition vertical. Object ids are `F0, F1, …` in canonical
/// functor order; morphism ids are `F{i}>F{j}#{k}`.
pub fn functor_category(
    src: &FiniteCategory,
    tgt: &FiniteCategory,
    cap: u128,
) -> Result<FiniteCategory> {
    let functors = enumerate_functors(src, tgt, cap)?;
    let mut cat = FiniteCategory::default();
    let obj_id = |i: usize| format!("F{i}");
    for i in 0..functors.len() {
        cat.objects.push(obj_id(i));
    }
    // Natural transformations between each ordered pair.
    let mut nat_by_pair: BTreeMap<(usize, usize), Vec<FiniteNatTrans>> = BTreeMap::new();
    let mut mor_of: BTreeMap<(usize, usize, usize), MorId> = BTreeMap::new();
    for (i, fi) in functors.iter().enumerate() {
        for (j, fj) in functors.iter().enumerate() {
            let nats = enumerate_nat_trans(src, tgt, fi, fj, cap)?;
            for (k, _) in nats.iter().enumerate() {
                let id = format!("F{i}>F{j}#{k}");
                cat.morphisms.insert(id.clone(), (obj_id(i), obj_id(j)));
                mor_of.insert((i, j, k), id);
            }
            nat_by_pair.insert((i, j), nats);
        }
    }
    for (i, _) in functors.iter().enumerate() {
        let identity = FiniteNatTrans {
            components: src
                .objects
                .iter()
                .map(|x| (x.clone(), tgt.identity[&functors[i].obj_map[x]].clone()))
                .collect(),
        };
        let k = nat_by_pair[&(i, i)]
            .iter()
            .position(|n| *n == identity)
            .ok_or_else(|| Error::Structural("identity transformation not enumerated".into()))?;
        cat.identity.insert(obj_id(i), mor_of[&(i, i, k)].clone());
    }
    for ((i, j), nats_ij) in &nat_by_pair {
        for (k, alpha) in nats_ij.iter().enumerate() {
            for ((j2, l), nats_jl) in &nat_by_pair {
                if j2 != j {
                    continue;
                }
                for (m, beta) in nats_jl.iter().enumerate() {
                    let comp = alpha
                        .vcompose(beta, tgt)
                        .ok_or_else(|| Error::Structural("vertical composite undefined".into()))?;
                    let pos = nat_by_pair[&(*i, *l)]
                        .iter()
                        .position(|n| *n == comp)
                        .ok_or_else(|| {
                            Error::Structural("vertical composite not enumerated".into())
                        })?;
                    cat.compose.insert(
                        (mor_of[&(*j2, *l, m)].clone(), mor_of[&(*i, *j, k)].clone()),
                        mor_of[&(*i, *l, pos)].clone(),
                    );
                }
            }
        }
    }
    Ok(cat)
}

/// Independent recount used by tests: for a discrete source category,
/// the number of functors is a plain product of hom-set cardinalities,
/// i.e. `Σ_{object maps} 1 = |tgt.objects|^|src.objects|`.
pub fn hom_set_count(src: &FiniteCategory, tgt: &FiniteCategory) -> u128 {
    object_map_candidates(src, tgt)
}

/// Exhaustive isomorphism search between small categories.
pub fn are_isomorphic(a: &FiniteCategory, b: &FiniteCategory, cap: u128) -> Result<bool> {
    if a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count() {
        return Ok(false);
    }
    if a.object_count() == 0 {
        return Ok(true);
    }
    let functors = enumerate_functors(a, b, cap)?;
    for f in &functors {
        if !f.validate(a, b).passed() {
            continue;
        }
        let mut objs: Vec<&ObjId> = f.obj_map.values().collect();
        objs.sort();
        objs.dedup();
        if objs.len() != b.object_count() {
            continue;
        }
        let mut mors: Vec<&MorId> = f.mor_map.values().collect();
        mors.sort();
        mors.dedup();
        if mors.len() == b.morphism_count() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whiskering and composition sanity: `G(F)` as a plain composite.
pub fn endo_iterate(cat: &FiniteCategory, f: &FiniteFunctor, times: usize) -> FiniteFunctor {
    let mut acc = identity_functor(cat);
    for _ in 0..times {
        acc = compose_functors(f, &acc);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn three_functors_between_walking_arrows() {
        let arrow = fixtures::walking_arrow();
        let fs = enumerate_functors(&arrow, &arrow, 100_000).unwrap();
        // Brute-force oracle: constant at 0, constant at 1, identity.
        assert_eq!(fs.len(), 3);
        for f in &fs {
            assert!(f.validate(&arrow, &arrow).passed());
        }
    }

    #[test]
    fn exactly_one_functor_to_terminal() {
        let c = fixtures::cyclic_group_category(3);
        let one = fixtures::terminal_category();
        let fs = enumerate_functors(&c, &one, 1000).unwrap();
        assert_eq!(fs.len(), 1);
    }

    #[test]
    fn exactly_one_functor_from_empty() {
        let e = fixtures::empty_category();
        let d = fixtures::walking_arrow();
        let fs = enumerate_functors(&e, &d, 1000).unwrap();
        assert_eq!(fs.len(), 1);
        assert!(fs[0].obj_map.is_empty());
    }

    #[test]
    fn discrete_source_count_matches_hom_arithmetic() {
        // For discrete C every object map is a functor, so the count
        // is |D₀|^|C₀| when D is also discrete.
        let c = fixtures::discrete_category(2);
        let d = fixtures::discrete_category(3);
        let fs = enumerate_functors(&c, &d, 100_000).unwrap();
        assert_eq!(fs.len() as u128, hom_set_count(&c, &d));
    }

    #[test]
    fn cap_exceeded_is_an_error() {
        let c = fixtures::discrete_category(3);
        let d = fixtures::discrete_category(3);
        assert!(matches!(
            enumerate_functors(&c, &d, 5),
            Err(crate::Error::SizeCap { .. })
        ));
    }

    #[test]
    fn functor_category_of_walking_arrows_has_three_objects() {
        let arrow = fixtures::walking_arrow();
        let fc = functor_category(&arrow, &arrow, 100_000).unwrap();
        assert_eq!(fc.object_count(), 3);
        assert!(crate::base::validate_category(&fc).unwrap().passed());
    }

    #[test]
    fn group_functor_category_is_the_group_of_endomorphisms() {
        // Endofunctors of Z/3 are the three group homomorphisms; each
        // pair related by "conjugation" transformations.
        let z3 = fixtures::cyclic_group_category(3);
        let fc = functor_category(&z3, &z3, 1_000_000).unwrap();
        assert_eq!(fc.object_count(), 3);
        assert!(crate::base::validate_category(&fc).unwrap().passed());
    }
}
