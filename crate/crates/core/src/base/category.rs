//! Composition-table presentation of finite categories.

use super::{pair_id, MorId, ObjId};
use crate::report::ValidationReport;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// A finite category as explicit tables.
///
/// The composition table is total on composable pairs and stored
/// eagerly: no composite is ever computed lazily at this layer, so any
/// law failure can be reported at its exact table entry.
///
/// Serialized form:
/// `{"objects":[...], "morphisms":[{"id","dom","cod"}],
///   "identity":{obj: morph}, "compose":{"g|f": "h"}}`
/// where `"g|f"` denotes the composite `g∘f` (first `f`, then `g`).
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct FiniteCategory {
    /// Object ids, kept sorted.
    pub objects: Vec<ObjId>,
    /// Morphism id → (dom, cod).
    pub morphisms: BTreeMap<MorId, (ObjId, ObjId)>,
    /// Object → its identity morphism.
    pub identity: BTreeMap<ObjId, MorId>,
    /// (g, f) → g∘f, defined exactly when cod(f) = dom(g).
    pub compose: BTreeMap<(MorId, MorId), MorId>,
}

impl FiniteCategory {
    pub fn dom(&self, m: &str) -> Option<&ObjId> {
        self.morphisms.get(m).map(|(d, _)| d)
    }

    pub fn cod(&self, m: &str) -> Option<&ObjId> {
        self.morphisms.get(m).map(|(_, c)| c)
    }

    /// The composite g∘f, if the pair is composable and tabled.
    pub fn composite(&self, g: &str, f: &str) -> Option<&MorId> {
        self.compose.get(&(g.to_string(), f.to_string()))
    }

    pub fn identity_of(&self, x: &str) -> Option<&MorId> {
        self.identity.get(x)
    }

    pub fn is_identity(&self, m: &str) -> bool {
        self.identity.values().any(|i| i == m)
    }

    /// Morphisms x → y, sorted.
    pub fn hom(&self, x: &str, y: &str) -> Vec<MorId> {
        self.morphisms
            .iter()
            .filter(|(_, (d, c))| d == x && c == y)
            .map(|(m, _)| m.clone())
            .collect()
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    /// All composable pairs (g, f) with cod(f) = dom(g).
    pub fn composable_pairs(&self) -> Vec<(MorId, MorId)> {
        let mut out = Vec::new();
        for (g, (gd, _)) in &self.morphisms {
            for (f, (_, fc)) in &self.morphisms {
                if fc == gd {
                    out.push((g.clone(), f.clone()));
                }
            }
        }
        out
    }

    /// Does `m` have a two-sided inverse?
    pub fn is_iso(&self, m: &str) -> bool {
        self.inverse_of(m).is_some()
    }

    /// The two-sided inverse of `m`, if any.
    pub fn inverse_of(&self, m: &str) -> Option<MorId> {
        let (d, c) = self.morphisms.get(m)?;
        let id_d = self.identity.get(d)?;
        let id_c = self.identity.get(c)?;
        for n in self.hom(c, d) {
            if self.composite(&n, m) == Some(id_d) && self.composite(m, &n) == Some(id_c) {
                return Some(n);
            }
        }
        None
    }

    /// Structural well-formedness: no dangling ids, identity and
    /// composition tables keyed exactly where they should be. Distinct
    /// from axiom checking: a structurally broken table is an `Err`,
    /// not a validation failure.
    pub fn check_structure(&self) -> Result<()> {
        let objs: BTreeSet<&ObjId> = self.objects.iter().collect();
        if objs.len() != self.objects.len() {
            return Err(Error::Structural("duplicate object ids".into()));
        }
        for id in self.objects.iter().chain(self.morphisms.keys()) {
            if id.contains('|') {
                return Err(Error::Structural(format!(
                    "id {id:?} contains '|', which is reserved as a key separator"
                )));
            }
        }
        for (m, (d, c)) in &self.morphisms {
            if !objs.contains(d) || !objs.contains(c) {
                return Err(Error::Structural(format!(
                    "morphism {m} has dangling dom/cod ({d}, {c})"
                )));
            }
        }
        for x in &self.objects {
            match self.identity.get(x) {
                None => {
                    return Err(Error::Structural(format!("object {x} has no identity")));
                }
                Some(i) => match self.morphisms.get(i) {
                    None => {
                        return Err(Error::Structural(format!(
                            "identity {i} of {x} is not a morphism"
                        )));
                    }
                    Some((d, c)) if d != x || c != x => {
                        return Err(Error::Structural(format!(
                            "identity {i} of {x} is not an endomorphism of {x}"
                        )));
                    }
                    _ => {}
                },
            }
        }
        for x in self.identity.keys() {
            if !objs.contains(x) {
                return Err(Error::Structural(format!(
                    "identity table keyed at unknown object {x}"
                )));
            }
        }
        // compose keys: exactly the composable pairs, values well-typed.
        let mut expected: BTreeSet<(MorId, MorId)> = self.composable_pairs().into_iter().collect();
        for ((g, f), h) in &self.compose {
            let (Some((fd, fc)), Some((gd, gc))) = (self.morphisms.get(f), self.morphisms.get(g))
            else {
                return Err(Error::Structural(format!(
                    "compose table entry ({g},{f}) references unknown morphisms"
                )));
            };
            if fc != gd {
                return Err(Error::Structural(format!(
                    "compose table entry ({g},{f}) is not a composable pair"
                )));
            }
            let Some((hd, hc)) = self.morphisms.get(h) else {
                return Err(Error::Structural(format!(
                    "composite {h} of ({g},{f}) is not a morphism"
                )));
            };
            if hd != fd || hc != gc {
                return Err(Error::Structural(format!(
                    "composite {h} of ({g},{f}) has wrong boundary: expected {fd}->{gc}, found {hd}->{hc}"
                )));
            }
            expected.remove(&(g.clone(), f.clone()));
        }
        if let Some((g, f)) = expected.into_iter().next() {
            return Err(Error::Structural(format!(
                "composable pair ({g},{f}) missing from compose table"
            )));
        }
        Ok(())
    }
}

/// Check the category axioms, listing every violated instance.
///
/// Returns `Err` only on structural malformation; an axiom failure is
/// data, not an error. The report is empty iff the tables present a
/// category.
pub fn validate_category(cat: &FiniteCategory) -> Result<ValidationReport> {
    cat.check_structure()?;
    let mut report = ValidationReport::new();
    // Identity laws.
    for (f, (d, c)) in &cat.morphisms {
        let id_d = &cat.identity[d];
        let id_c = &cat.identity[c];
        report.check(
            cat.composite(f, id_d).map(|h| h == f).unwrap_or(false),
            "identity-law",
            || format!("f={f}, id={id_d}"),
            || {
                format!(
                    "{f}∘{id_d} = {}, expected {f}",
                    cat.composite(f, id_d).cloned().unwrap_or_default()
                )
            },
        );
        report.check(
            cat.composite(id_c, f).map(|h| h == f).unwrap_or(false),
            "identity-law",
            || format!("id={id_c}, f={f}"),
            || {
                format!(
                    "{id_c}∘{f} = {}, expected {f}",
                    cat.composite(id_c, f).cloned().unwrap_or_default()
                )
            },
        );
    }
    // Associativity over all composable triples.
    for (h, (hd, _)) in &cat.morphisms {
        for (g, (gd, gc)) in &cat.morphisms {
            if gc != hd {
                continue;
            }
            for (f, (_, fc)) in &cat.morphisms {
                if fc != gd {
                    continue;
                }
                let hg = cat.composite(h, g).cloned().unwrap_or_default();
                let gf = cat.composite(g, f).cloned().unwrap_or_default();
                let left = cat.composite(&hg, f);
                let right = cat.composite(h, &gf);
                report.check(
                    left.is_some() && left == right,
                    "associativity",
                    || format!("h={h}, g={g}, f={f}"),
                    || {
                        format!(
                            "({h}∘{g})∘{f} = {:?} but {h}∘({g}∘{f}) = {:?}",
                            left, right
                        )
                    },
                );
            }
        }
    }
    Ok(report)
}

/// Binary product of finite categories. Objects and morphisms are
/// pairs; composition is componentwise.
pub fn product(a: &FiniteCategory, b: &FiniteCategory) -> FiniteCategory {
    let mut out = FiniteCategory::default();
    for x in &a.objects {
        for y in &b.objects {
            out.objects.push(pair_id(x, y));
        }
    }
    out.objects.sort();
    for (m, (md, mc)) in &a.morphisms {
        for (n, (nd, nc)) in &b.morphisms {
            out.morphisms
                .insert(pair_id(m, n), (pair_id(md, nd), pair_id(mc, nc)));
        }
    }
    for x in &a.objects {
        for y in &b.objects {
            out.identity
                .insert(pair_id(x, y), pair_id(&a.identity[x], &b.identity[y]));
        }
    }
    for ((g1, f1), h1) in &a.compose {
        for ((g2, f2), h2) in &b.compose {
            out.compose
                .insert((pair_id(g1, g2), pair_id(f1, f2)), pair_id(h1, h2));
        }
    }
    out
}

/// n-ary product, folded left; the empty product is the terminal
/// category with object `"*"`.
pub fn product_many(cats: &[&FiniteCategory]) -> FiniteCategory {
    match cats.split_first() {
        None => crate::fixtures::terminal_category(),
        Some((first, rest)) => rest.iter().fold((*first).clone(), |acc, c| product(&acc, c)),
    }
}

/// Coproduct: disjoint union with no cross morphisms. Ids are tagged
/// `l:`/`r:` to keep the union disjoint even when the inputs share ids.
pub fn coproduct(a: &FiniteCategory, b: &FiniteCategory) -> FiniteCategory {
    let tag = |p: &str, id: &str| format!("{p}{id}");
    let mut out = FiniteCategory::default();
    for (prefix, cat) in [("l:", a), ("r:", b)] {
        for x in &cat.objects {
            out.objects.push(tag(prefix, x));
        }
        for (m, (d, c)) in &cat.morphisms {
            out.morphisms
                .insert(tag(prefix, m), (tag(prefix, d), tag(prefix, c)));
        }
        for (x, i) in &cat.identity {
            out.identity.insert(tag(prefix, x), tag(prefix, i));
        }
        for ((g, f), h) in &cat.compose {
            out.compose
                .insert((tag(prefix, g), tag(prefix, f)), tag(prefix, h));
        }
    }
    out.objects.sort();
    out
}

// -------------------------------------------------------------------------
// serde: spec'd JSON layout with "g|f" composite keys.

#[derive(Serialize, Deserialize)]
struct MorRecord {
    id: MorId,
    dom: ObjId,
    cod: ObjId,
}

#[derive(Serialize, Deserialize)]
struct CategoryRecord {
    objects: Vec<ObjId>,
    morphisms: Vec<MorRecord>,
    identity: BTreeMap<ObjId, MorId>,
    compose: BTreeMap<String, MorId>,
}

impl Serialize for FiniteCategory {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rec = CategoryRecord {
            objects: self.objects.clone(),
            morphisms: self
                .morphisms
                .iter()
                .map(|(m, (d, c))| MorRecord {
                    id: m.clone(),
                    dom: d.clone(),
                    cod: c.clone(),
                })
                .collect(),
            identity: self.identity.clone(),
            compose: self
                .compose
                .iter()
                .map(|((g, f), h)| (format!("{g}|{f}"), h.clone()))
                .collect(),
        };
        rec.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteCategory {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = CategoryRecord::deserialize(d)?;
        let mut cat = FiniteCategory {
            objects: rec.objects,
            ..Default::default()
        };
        cat.objects.sort();
        for m in rec.morphisms {
            cat.morphisms.insert(m.id, (m.dom, m.cod));
        }
        cat.identity = rec.identity;
        for (key, h) in rec.compose {
            let (g, f) = key.split_once('|').ok_or_else(|| {
                serde::de::Error::custom(format!("compose key {key:?} is not of the form g|f"))
            })?;
            cat.compose.insert((g.to_string(), f.to_string()), h);
        }
        Ok(cat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn terminal_category_passes() {
        let report = validate_category(&fixtures::terminal_category()).unwrap();
        assert!(report.passed());
        assert!(report.checks > 0);
    }

    #[test]
    fn z3_addition_table_is_a_category() {
        // One object, morphisms {0,1,2} with composition = addition mod 3.
        // The brute-force sweep covers all 27 triples.
        let z3 = fixtures::cyclic_group_category(3);
        let report = validate_category(&z3).unwrap();
        assert!(report.passed());
        // 27 associativity triples + 2 identity checks per morphism.
        assert_eq!(report.checks, 27 + 6);
    }

    #[test]
    fn broken_identity_table_reports_one_violation() {
        // {id, e} with e∘e = e, but id∘e deliberately declared = id.
        let mut cat = FiniteCategory {
            objects: vec!["x".into()],
            ..Default::default()
        };
        cat.morphisms.insert("id".into(), ("x".into(), "x".into()));
        cat.morphisms.insert("e".into(), ("x".into(), "x".into()));
        cat.identity.insert("x".into(), "id".into());
        let t = |g: &str, f: &str, h: &str| ((g.to_string(), f.to_string()), h.to_string());
        cat.compose.extend([
            t("id", "id", "id"),
            t("id", "e", "id"), // wrong: should be e
            t("e", "id", "e"),
            t("e", "e", "e"),
        ]);
        let report = validate_category(&cat).unwrap();
        assert!(!report.passed());
        let idlaw: Vec<_> = report
            .violations
            .iter()
            .filter(|v| v.rule == "identity-law")
            .collect();
        assert_eq!(idlaw.len(), 1);
        assert!(idlaw[0].at.contains('e'));
    }

    #[test]
    fn dangling_ids_are_structural_not_axiomatic() {
        let mut cat = fixtures::terminal_category();
        cat.morphisms.insert("bad".into(), ("x".into(), "nowhere".into()));
        assert!(matches!(
            validate_category(&cat),
            Err(crate::Error::Structural(_))
        ));
    }

    #[test]
    fn walking_arrow_squared_has_four_objects_nine_morphisms() {
        let arrow = fixtures::walking_arrow();
        let sq = product(&arrow, &arrow);
        assert_eq!(sq.object_count(), 4);
        assert_eq!(sq.morphism_count(), 9); // 3·3 morphism pairs
        assert!(validate_category(&sq).unwrap().passed());
    }

    #[test]
    fn product_with_empty_is_empty() {
        let e = fixtures::empty_category();
        let d = fixtures::walking_arrow();
        let p = product(&d, &e);
        assert_eq!(p.object_count(), 0);
        assert_eq!(p.morphism_count(), 0);
        assert!(validate_category(&p).unwrap().passed());
    }

    #[test]
    fn product_with_terminal_is_isomorphic_copy() {
        let one = fixtures::terminal_category();
        let d = fixtures::walking_arrow();
        let p = product(&one, &d);
        assert!(validate_category(&p).unwrap().passed());
        assert!(super::super::are_isomorphic(&p, &d, 10_000).unwrap());
    }

    #[test]
    fn coproduct_with_empty_is_isomorphic_copy() {
        let c = fixtures::walking_arrow();
        let s = coproduct(&c, &fixtures::empty_category());
        assert!(validate_category(&s).unwrap().passed());
        assert!(super::super::are_isomorphic(&s, &c, 10_000).unwrap());
    }

    #[test]
    fn coproduct_of_terminals_is_discrete_two_objects() {
        let one = fixtures::terminal_category();
        let s = coproduct(&one, &one);
        assert_eq!(s.object_count(), 2);
        assert_eq!(s.morphism_count(), 2);
        assert!(validate_category(&s).unwrap().passed());
    }

    #[test]
    fn products_distribute_over_coproducts_on_counts() {
        let c = fixtures::walking_arrow();
        let d = fixtures::terminal_category();
        let e = fixtures::discrete_category(2);
        let lhs = product(&c, &coproduct(&d, &e));
        let rhs = coproduct(&product(&c, &d), &product(&c, &e));
        assert_eq!(lhs.object_count(), rhs.object_count());
        assert_eq!(lhs.morphism_count(), rhs.morphism_count());
        assert!(super::super::are_isomorphic(&lhs, &rhs, 100_000).unwrap());
    }

    #[test]
    fn json_round_trip_is_exact() {
        let z3 = fixtures::cyclic_group_category(3);
        let text = serde_json::to_string_pretty(&z3).unwrap();
        let back: FiniteCategory = serde_json::from_str(&text).unwrap();
        assert_eq!(z3, back);
    }
}
