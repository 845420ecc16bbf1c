//! Functors and natural transformations between finite categories.

use super::{FiniteCategory, MorId, ObjId};
use crate::report::ValidationReport;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A functor between finite categories, as its two maps. Source and
/// target categories are passed explicitly to the operations that need
/// them; the struct itself is plain data.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteFunctor {
    pub obj_map: BTreeMap<ObjId, ObjId>,
    pub mor_map: BTreeMap<MorId, MorId>,
}

impl FiniteFunctor {
    pub fn on_obj(&self, x: &str) -> Option<&ObjId> {
        self.obj_map.get(x)
    }

    pub fn on_mor(&self, m: &str) -> Option<&MorId> {
        self.mor_map.get(m)
    }

    /// Is the object map a bijection onto the target's objects?
    pub fn is_bijective_on_objects(&self, src: &FiniteCategory, tgt: &FiniteCategory) -> bool {
        if src.objects.len() != tgt.objects.len() {
            return false;
        }
        let mut image: Vec<&ObjId> = self.obj_map.values().collect();
        image.sort();
        image.dedup();
        image.len() == tgt.objects.len() && src.objects.iter().all(|x| self.obj_map.contains_key(x))
    }

    /// Functor laws: total maps, boundary preservation, identities,
    /// composition. Violations are listed, not summarized.
    pub fn validate(&self, src: &FiniteCategory, tgt: &FiniteCategory) -> ValidationReport {
        let mut report = ValidationReport::new();
        for x in &src.objects {
            report.check(
                self.obj_map
                    .get(x)
                    .map(|y| tgt.objects.contains(y))
                    .unwrap_or(false),
                "functor-object-map",
                || x.clone(),
                || "object not mapped into target".into(),
            );
        }
        for (m, (d, c)) in &src.morphisms {
            let ok = match self.mor_map.get(m) {
                Some(n) => match tgt.morphisms.get(n) {
                    Some((nd, nc)) => {
                        Some(nd) == self.obj_map.get(d) && Some(nc) == self.obj_map.get(c)
                    }
                    None => false,
                },
                None => false,
            };
            report.check(
                ok,
                "functor-boundary",
                || m.clone(),
                || format!("image of {m} missing or has wrong dom/cod"),
            );
        }
        for (x, i) in &src.identity {
            let ok = match (self.obj_map.get(x), self.mor_map.get(i)) {
                (Some(y), Some(n)) => tgt.identity.get(y) == Some(n),
                _ => false,
            };
            report.check(
                ok,
                "functor-identity",
                || x.clone(),
                || format!("F(id_{x}) is not id_F({x})"),
            );
        }
        for ((g, f), h) in &src.compose {
            let ok = match (self.mor_map.get(g), self.mor_map.get(f), self.mor_map.get(h)) {
                (Some(fg), Some(ff), Some(fh)) => tgt.composite(fg, ff) == Some(fh),
                _ => false,
            };
            report.check(
                ok,
                "functor-composition",
                || format!("g={g}, f={f}"),
                || format!("F({g}∘{f}) ≠ F({g})∘F({f})"),
            );
        }
        report
    }
}

/// The identity functor on a category.
pub fn identity_functor(cat: &FiniteCategory) -> FiniteFunctor {
    FiniteFunctor {
        obj_map: cat.objects.iter().map(|x| (x.clone(), x.clone())).collect(),
        mor_map: cat
            .morphisms
            .keys()
            .map(|m| (m.clone(), m.clone()))
            .collect(),
    }
}

/// g∘f as maps (f first).
pub fn compose_functors(g: &FiniteFunctor, f: &FiniteFunctor) -> FiniteFunctor {
    FiniteFunctor {
        obj_map: f
            .obj_map
            .iter()
            .filter_map(|(x, y)| g.obj_map.get(y).map(|z| (x.clone(), z.clone())))
            .collect(),
        mor_map: f
            .mor_map
            .iter()
            .filter_map(|(m, n)| g.mor_map.get(n).map(|p| (m.clone(), p.clone())))
            .collect(),
    }
}

/// A natural transformation between a parallel pair of functors, as
/// its component family.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteNatTrans {
    /// Source object → component morphism in the target category.
    pub components: BTreeMap<ObjId, MorId>,
}

impl FiniteNatTrans {
    /// Check component boundaries and every naturality square.
    pub fn validate(
        &self,
        src: &FiniteCategory,
        tgt: &FiniteCategory,
        f: &FiniteFunctor,
        g: &FiniteFunctor,
    ) -> ValidationReport {
        let mut report = ValidationReport::new();
        for x in &src.objects {
            let ok = match self.components.get(x) {
                Some(c) => tgt.dom(c) == f.obj_map.get(x) && tgt.cod(c) == g.obj_map.get(x),
                None => false,
            };
            report.check(
                ok,
                "component-boundary",
                || x.clone(),
                || format!("component at {x} missing or not F({x}) → G({x})"),
            );
        }
        for (m, (x, y)) in &src.morphisms {
            let square = (|| {
                let cx = self.components.get(x)?;
                let cy = self.components.get(y)?;
                let fm = f.mor_map.get(m)?;
                let gm = g.mor_map.get(m)?;
                let left = tgt.composite(gm, cx)?;
                let right = tgt.composite(cy, fm)?;
                Some(left == right)
            })();
            report.check(
                square.unwrap_or(false),
                "naturality",
                || format!("m={m}: {x}→{y}"),
                || format!("G({m})∘α_{x} ≠ α_{y}∘F({m})"),
            );
        }
        report
    }

    /// Vertical composite β∘α, componentwise in the target.
    pub fn vcompose(&self, other: &FiniteNatTrans, tgt: &FiniteCategory) -> Option<FiniteNatTrans> {
        // self = α: F ⇒ G, other = β: G ⇒ H; result β∘α: F ⇒ H.
        let mut components = BTreeMap::new();
        for (x, a) in &self.components {
            let b = other.components.get(x)?;
            components.insert(x.clone(), tgt.composite(b, a)?.clone());
        }
        Some(FiniteNatTrans { components })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn identity_functor_validates() {
        let c = fixtures::cyclic_group_category(3);
        let f = identity_functor(&c);
        assert!(f.validate(&c, &c).passed());
    }

    #[test]
    fn naturality_catches_broken_component() {
        // Arrow category: two endofunctors, components that cannot
        // commute with the arrow.
        let arrow = fixtures::walking_arrow();
        let idf = identity_functor(&arrow);
        // Constant functor at the target object "1".
        let mut con = FiniteFunctor::default();
        for x in &arrow.objects {
            con.obj_map.insert(x.clone(), "1".into());
        }
        for m in arrow.morphisms.keys() {
            con.mor_map.insert(m.clone(), "id1".into());
        }
        assert!(con.validate(&arrow, &arrow).passed());
        // α: id ⇒ con with components id at 1 and the arrow at 0: natural.
        let good = FiniteNatTrans {
            components: [("0".into(), "a".into()), ("1".into(), "id1".into())]
                .into_iter()
                .collect(),
        };
        assert!(good.validate(&arrow, &arrow, &idf, &con).passed());
        // Swap a component boundary: broken.
        let bad = FiniteNatTrans {
            components: [("0".into(), "id0".into()), ("1".into(), "id1".into())]
                .into_iter()
                .collect(),
        };
        assert!(!bad.validate(&arrow, &arrow, &idf, &con).passed());
    }
}
