//! Graphs enriched in a base, their hom formula, and enriched 2-graphs.
//!
//! A `WGraph` is a vertex set with a base object of "arrows" between
//! each ordered pair of vertices. The category of such graphs has a
//! hom formula
//!
//! ```text
//! Hom(A, B) = Σ_{f0: A0 → B0}  Π_{x,y ∈ A0}  W(A(x,y), B(f0 x, f0 y))
//! ```
//!
//! realized here by [`graph_hom_object`] as an explicit coproduct of
//! products. A `TwoGraph` is a directed graph together with a base
//! object for each *parallel* pair of edges; homs on non-parallel
//! pairs are not stored at all, so malformed input is detectable
//! rather than silently read as empty.

use crate::base::{
    enumerate_nat_trans, functor_category, pair_id, product_many, validate_category, BaseObject,
    ElemId, FiniteCategory, FiniteFunctor, FiniteNatTrans,
};
use crate::report::ValidationReport;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub type VertexId = String;
pub type EdgeId = String;

/// A graph enriched in the base: vertices plus a hom object for every
/// ordered vertex pair (including the diagonal).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WGraph {
    pub vertices: Vec<VertexId>,
    pub hom: BTreeMap<(VertexId, VertexId), BaseObject>,
}

impl WGraph {
    pub fn hom_at(&self, x: &str, y: &str) -> Option<&BaseObject> {
        self.hom.get(&(x.to_string(), y.to_string()))
    }

    /// Structural check: homs total on ordered pairs, tags consistent.
    pub fn check_structure(&self) -> Result<()> {
        let mut dedup = self.vertices.clone();
        dedup.sort();
        dedup.dedup();
        if dedup.len() != self.vertices.len() {
            return Err(Error::Structural("duplicate vertex ids".into()));
        }
        let mut tag_is_set = None;
        for x in &self.vertices {
            for y in &self.vertices {
                match self.hom_at(x, y) {
                    None => {
                        return Err(Error::Structural(format!(
                            "hom({x},{y}) missing: homs must be total on ordered pairs"
                        )));
                    }
                    Some(b) => match tag_is_set {
                        None => tag_is_set = Some(b.is_set()),
                        Some(t) if t != b.is_set() => {
                            return Err(Error::Structural(
                                "mixed set/cat homs in a single graph".into(),
                            ));
                        }
                        _ => {}
                    },
                }
            }
        }
        for (x, y) in self.hom.keys() {
            if !self.vertices.contains(x) || !self.vertices.contains(y) {
                return Err(Error::Structural(format!(
                    "hom keyed at unknown vertices ({x},{y})"
                )));
            }
        }
        if let Some(false) = tag_is_set {
            for b in self.hom.values() {
                if let BaseObject::Cat(c) = b {
                    let rep = validate_category(c)?;
                    if !rep.passed() {
                        return Err(Error::Structural(format!(
                            "hom category is not a category: {}",
                            rep.violations[0]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Tensor of graphs: vertex pairs, hom tensor. This is the
    /// monoidal structure the colax rearrangement map lives over.
    pub fn tensor(&self, other: &WGraph) -> Result<WGraph> {
        let mut out = WGraph::default();
        for x in &self.vertices {
            for y in &other.vertices {
                out.vertices.push(pair_id(x, y));
            }
        }
        out.vertices.sort();
        for ((x, x2), a) in &self.hom {
            for ((y, y2), b) in &other.hom {
                out.hom
                    .insert((pair_id(x, y), pair_id(x2, y2)), a.tensor(b)?);
            }
        }
        Ok(out)
    }
}

/// A morphism of enriched graphs: vertex map plus a base morphism per
/// ordered pair.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WGraphMorphism {
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub hom_components: BTreeMap<(VertexId, VertexId), BaseMorphism>,
}

/// A morphism between base objects: a function of sets or a functor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BaseMorphism {
    #[serde(rename = "map")]
    SetMap(BTreeMap<ElemId, ElemId>),
    #[serde(rename = "functor")]
    CatFunctor(FiniteFunctor),
}

impl BaseMorphism {
    /// Is this a valid base morphism `src → tgt`?
    pub fn validate(&self, src: &BaseObject, tgt: &BaseObject) -> ValidationReport {
        let mut report = ValidationReport::new();
        match (self, src, tgt) {
            (BaseMorphism::SetMap(m), BaseObject::Set(s), BaseObject::Set(t)) => {
                for e in s {
                    report.check(
                        m.get(e).map(|v| t.contains(v)).unwrap_or(false),
                        "set-map-totality",
                        || e.clone(),
                        || format!("element {e} unmapped or mapped outside target"),
                    );
                }
            }
            (BaseMorphism::CatFunctor(f), BaseObject::Cat(c), BaseObject::Cat(d)) => {
                report.merge(f.validate(c, d));
            }
            _ => {
                report.count(1);
                report.fail("base-tag", "-", "morphism tag does not match object tags");
            }
        }
        report
    }

    /// Where a point (set element / category object) is sent.
    pub fn on_point(&self, e: &str) -> Option<&ElemId> {
        match self {
            BaseMorphism::SetMap(m) => m.get(e),
            BaseMorphism::CatFunctor(f) => f.obj_map.get(e),
        }
    }

    pub fn identity_on(obj: &BaseObject) -> BaseMorphism {
        match obj {
            BaseObject::Set(s) => {
                BaseMorphism::SetMap(s.iter().map(|e| (e.clone(), e.clone())).collect())
            }
            BaseObject::Cat(c) => BaseMorphism::CatFunctor(crate::base::identity_functor(c)),
        }
    }

    pub fn compose(&self, earlier: &BaseMorphism) -> Result<BaseMorphism> {
        match (self, earlier) {
            (BaseMorphism::SetMap(g), BaseMorphism::SetMap(f)) => Ok(BaseMorphism::SetMap(
                f.iter()
                    .filter_map(|(x, y)| g.get(y).map(|z| (x.clone(), z.clone())))
                    .collect(),
            )),
            (BaseMorphism::CatFunctor(g), BaseMorphism::CatFunctor(f)) => {
                Ok(BaseMorphism::CatFunctor(crate::base::compose_functors(g, f)))
            }
            _ => Err(Error::Structural("composing mixed base morphisms".into())),
        }
    }
}

impl WGraphMorphism {
    /// Validate against explicit source and target graphs.
    pub fn validate(&self, src: &WGraph, tgt: &WGraph) -> ValidationReport {
        let mut report = ValidationReport::new();
        for x in &src.vertices {
            report.check(
                self.vertex_map
                    .get(x)
                    .map(|y| tgt.vertices.contains(y))
                    .unwrap_or(false),
                "vertex-map",
                || x.clone(),
                || format!("vertex {x} unmapped or mapped outside target"),
            );
        }
        for x in &src.vertices {
            for y in &src.vertices {
                let key = (x.clone(), y.clone());
                let ok = (|| {
                    let comp = self.hom_components.get(&key)?;
                    let fx = self.vertex_map.get(x)?;
                    let fy = self.vertex_map.get(y)?;
                    let a = src.hom_at(x, y)?;
                    let b = tgt.hom_at(fx, fy)?;
                    Some(comp.validate(a, b).passed())
                })();
                report.check(
                    ok.unwrap_or(false),
                    "hom-component",
                    || format!("({x},{y})"),
                    || format!("hom component at ({x},{y}) missing or invalid"),
                );
            }
        }
        report
    }
}

/// A 2-cell between parallel graph morphisms: the assertion that the
/// vertex maps agree, plus a base 2-cell per ordered pair. In `FinSet`
/// the only base 2-cells are identities, so there the component also
/// asserts equality of the set maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WGraphTwoCell {
    pub source: WGraphMorphism,
    pub target: WGraphMorphism,
    pub components: BTreeMap<(VertexId, VertexId), BaseTwoCell>,
}

/// A 2-cell of the base between parallel base morphisms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum BaseTwoCell {
    /// `FinSet` is locally discrete: the 2-cell exists iff the maps
    /// are equal, and then it is the identity.
    SetIdentity,
    CatNat(FiniteNatTrans),
}

/// Check a 2-cell of enriched graphs: item (1), the vertex maps agree;
/// item (2), each component is a valid base 2-cell.
pub fn validate_two_cell(alpha: &WGraphTwoCell, src: &WGraph, tgt: &WGraph) -> ValidationReport {
    let mut report = ValidationReport::new();
    report.check(
        alpha.source.vertex_map == alpha.target.vertex_map,
        "two-cell-vertex-maps",
        || "f0 vs g0".into(),
        || "parallel pair has different vertex maps".into(),
    );
    for x in &src.vertices {
        for y in &src.vertices {
            let key = (x.clone(), y.clone());
            let ok = (|| {
                let comp = alpha.components.get(&key)?;
                let f = alpha.source.hom_components.get(&key)?;
                let g = alpha.target.hom_components.get(&key)?;
                let fx = alpha.source.vertex_map.get(x)?;
                let fy = alpha.source.vertex_map.get(y)?;
                let a = src.hom_at(x, y)?;
                let b = tgt.hom_at(fx, fy)?;
                match (comp, f, g, a, b) {
                    (BaseTwoCell::SetIdentity, fm, gm, BaseObject::Set(_), BaseObject::Set(_)) => {
                        Some(fm == gm)
                    }
                    (
                        BaseTwoCell::CatNat(nat),
                        BaseMorphism::CatFunctor(ff),
                        BaseMorphism::CatFunctor(gf),
                        BaseObject::Cat(c),
                        BaseObject::Cat(d),
                    ) => Some(nat.validate(c, d, ff, gf).passed()),
                    _ => Some(false),
                }
            })();
            report.check(
                ok.unwrap_or(false),
                "two-cell-component",
                || format!("({x},{y})"),
                || format!("component at ({x},{y}) missing or not a base 2-cell"),
            );
        }
    }
    report
}

// -------------------------------------------------------------------------
// The hom formula.

/// Encode a vertex map canonically for use inside element ids.
fn encode_vertex_map(map: &BTreeMap<VertexId, VertexId>) -> String {
    let parts: Vec<String> = map.iter().map(|(x, y)| format!("{x}>{y}")).collect();
    format!("[{}]", parts.join(";"))
}

fn all_vertex_maps(src: &[VertexId], tgt: &[VertexId]) -> Vec<BTreeMap<VertexId, VertexId>> {
    let mut out = vec![BTreeMap::new()];
    for x in src {
        let mut next = Vec::new();
        for map in &out {
            for y in tgt {
                let mut m = map.clone();
                m.insert(x.clone(), y.clone());
                next.push(m);
            }
        }
        out = next;
    }
    out
}

/// The internal hom of the base: the set of functions, or the functor
/// category.
pub fn base_internal_hom(a: &BaseObject, b: &BaseObject, cap: u128) -> Result<BaseObject> {
    match (a, b) {
        (BaseObject::Set(s), BaseObject::Set(t)) => {
            let count = (t.len() as u128)
                .checked_pow(s.len() as u32)
                .unwrap_or(u128::MAX);
            if count > cap {
                return Err(Error::SizeCap {
                    context: "base_internal_hom (set exponent)".into(),
                    candidates: count,
                    cap,
                });
            }
            let mut maps = vec![BTreeMap::<ElemId, ElemId>::new()];
            for e in s {
                let mut next = Vec::new();
                for m in &maps {
                    for v in t {
                        let mut m2 = m.clone();
                        m2.insert(e.clone(), v.clone());
                        next.push(m2);
                    }
                }
                maps = next;
            }
            Ok(BaseObject::Set(
                maps.iter()
                    .map(|m| {
                        let parts: Vec<String> =
                            m.iter().map(|(x, y)| format!("{x}:={y}")).collect();
                        format!("{{{}}}", parts.join(","))
                    })
                    .collect(),
            ))
        }
        (BaseObject::Cat(c), BaseObject::Cat(d)) => {
            Ok(BaseObject::Cat(functor_category(c, d, cap)?))
        }
        _ => Err(Error::Structural("internal hom of mixed tags".into())),
    }
}

/// Coproduct of base objects, tagging elements by summand.
fn base_coproduct_indexed(summands: &[(String, BaseObject)]) -> Result<BaseObject> {
    if summands.is_empty() {
        return Ok(BaseObject::empty_set());
    }
    if summands.iter().all(|(_, b)| b.is_set()) {
        let mut out = std::collections::BTreeSet::new();
        for (tag, b) in summands {
            if let BaseObject::Set(s) = b {
                for e in s {
                    out.insert(format!("{tag}•{e}"));
                }
            }
        }
        Ok(BaseObject::Set(out))
    } else if summands.iter().all(|(_, b)| !b.is_set()) {
        let mut acc: Option<FiniteCategory> = None;
        for (_, b) in summands {
            if let BaseObject::Cat(c) = b {
                acc = Some(match acc {
                    None => c.clone(),
                    Some(a) => crate::base::coproduct(&a, c),
                });
            }
        }
        Ok(BaseObject::Cat(acc.unwrap()))
    } else {
        Err(Error::Structural("coproduct of mixed tags".into()))
    }
}

/// Product of base objects (empty product = unit).
fn base_product(factors: &[&BaseObject]) -> Result<BaseObject> {
    if factors.is_empty() {
        return Ok(BaseObject::singleton_set("()"));
    }
    if factors.iter().all(|b| b.is_set()) {
        let mut acc = vec![String::new()];
        for b in factors {
            if let BaseObject::Set(s) = b {
                let mut next = Vec::new();
                for prefix in &acc {
                    for e in s {
                        next.push(if prefix.is_empty() {
                            e.clone()
                        } else {
                            format!("{prefix}×{e}")
                        });
                    }
                }
                acc = next;
            }
        }
        Ok(BaseObject::Set(acc.into_iter().collect()))
    } else if factors.iter().all(|b| !b.is_set()) {
        let cats: Vec<&FiniteCategory> = factors
            .iter()
            .map(|b| match b {
                BaseObject::Cat(c) => c,
                _ => unreachable!(),
            })
            .collect();
        Ok(BaseObject::Cat(product_many(&cats)))
    } else {
        Err(Error::Structural("product of mixed tags".into()))
    }
}

/// The hom object of the category of enriched graphs:
/// a coproduct over all vertex maps of the product over ordered pairs
/// of internal homs. For a `FinCat` base the inner homs are functor
/// categories.
pub fn graph_hom_object(a: &WGraph, b: &WGraph, cap: u128) -> Result<BaseObject> {
    a.check_structure()?;
    b.check_structure()?;
    let maps = all_vertex_maps(&a.vertices, &b.vertices);
    let raw = maps.len() as u128;
    if raw > cap {
        return Err(Error::SizeCap {
            context: "graph_hom_object vertex maps".into(),
            candidates: raw,
            cap,
        });
    }
    let mut summands = Vec::new();
    for f0 in &maps {
        let mut factors = Vec::new();
        for x in &a.vertices {
            for y in &a.vertices {
                let inner = base_internal_hom(
                    a.hom_at(x, y).unwrap(),
                    b.hom_at(&f0[x], &f0[y]).unwrap(),
                    cap,
                )?;
                factors.push(inner);
            }
        }
        let refs: Vec<&BaseObject> = factors.iter().collect();
        summands.push((encode_vertex_map(f0), base_product(&refs)?));
    }
    base_coproduct_indexed(&summands)
}

/// Closed-form cardinality of [`graph_hom_object`], used as the
/// independent oracle: `Σ_{f0} Π_{x,y} |W(A(x,y), B(f0x, f0y))|`,
/// where `|W(S,T)| = |T|^|S|` for sets and the functor count for
/// categories.
pub fn graph_hom_cardinality(a: &WGraph, b: &WGraph, cap: u128) -> Result<u128> {
    let mut total: u128 = 0;
    for f0 in all_vertex_maps(&a.vertices, &b.vertices) {
        let mut prod: u128 = 1;
        for x in &a.vertices {
            for y in &a.vertices {
                let count = match (a.hom_at(x, y).unwrap(), b.hom_at(&f0[x], &f0[y]).unwrap()) {
                    (BaseObject::Set(s), BaseObject::Set(t)) => {
                        (t.len() as u128).checked_pow(s.len() as u32).unwrap_or(u128::MAX)
                    }
                    (BaseObject::Cat(c), BaseObject::Cat(d)) => {
                        crate::base::enumerate_functors(c, d, cap)?.len() as u128
                    }
                    _ => return Err(Error::Structural("mixed tags".into())),
                };
                prod = prod.saturating_mul(count);
            }
        }
        total = total.saturating_add(prod);
    }
    Ok(total)
}

// -------------------------------------------------------------------------
// The endofunctor G: apply a base functor on homs, leave vertices alone.

/// A functor of the base, applied pointwise by `G`. Implementations
/// must be genuinely functorial; the tests check this on small graphs.
pub trait BaseEndofunctor {
    fn on_object(&self, b: &BaseObject) -> BaseObject;
    fn on_morphism(&self, src: &BaseObject, m: &BaseMorphism) -> BaseMorphism;
}

/// The identity base functor.
pub struct IdentityEndo;

impl BaseEndofunctor for IdentityEndo {
    fn on_object(&self, b: &BaseObject) -> BaseObject {
        b.clone()
    }
    fn on_morphism(&self, _src: &BaseObject, m: &BaseMorphism) -> BaseMorphism {
        m.clone()
    }
}

/// The constant functor at the terminal object.
pub struct ConstTerminalEndo;

impl BaseEndofunctor for ConstTerminalEndo {
    fn on_object(&self, b: &BaseObject) -> BaseObject {
        match b {
            BaseObject::Set(_) => BaseObject::singleton_set("*"),
            BaseObject::Cat(_) => BaseObject::Cat(crate::fixtures::terminal_category()),
        }
    }
    fn on_morphism(&self, src: &BaseObject, _m: &BaseMorphism) -> BaseMorphism {
        match src {
            BaseObject::Set(_) => {
                BaseMorphism::SetMap([("*".to_string(), "*".to_string())].into_iter().collect())
            }
            BaseObject::Cat(_) => BaseMorphism::CatFunctor(crate::base::identity_functor(
                &crate::fixtures::terminal_category(),
            )),
        }
    }
}

/// `S ↦ S × {0,1}` on sets; nontrivial enough to distinguish the two
/// sides of the functoriality tests.
pub struct DoubleEndo;

impl BaseEndofunctor for DoubleEndo {
    fn on_object(&self, b: &BaseObject) -> BaseObject {
        match b {
            BaseObject::Set(s) => BaseObject::Set(
                s.iter()
                    .flat_map(|e| ["0", "1"].map(|t| pair_id(e, t)))
                    .collect(),
            ),
            BaseObject::Cat(_) => b.clone(),
        }
    }
    fn on_morphism(&self, src: &BaseObject, m: &BaseMorphism) -> BaseMorphism {
        match (src, m) {
            (BaseObject::Set(s), BaseMorphism::SetMap(f)) => BaseMorphism::SetMap(
                s.iter()
                    .flat_map(|e| {
                        ["0", "1"].map(|t| (pair_id(e, t), pair_id(&f[e], t)))
                    })
                    .collect(),
            ),
            _ => m.clone(),
        }
    }
}

/// `G(F)` on graphs: identity on vertices, `F` on hom objects.
pub fn apply_g_graph(f: &dyn BaseEndofunctor, a: &WGraph) -> WGraph {
    WGraph {
        vertices: a.vertices.clone(),
        hom: a
            .hom
            .iter()
            .map(|(k, b)| (k.clone(), f.on_object(b)))
            .collect(),
    }
}

/// `G(F)` on graph morphisms: identity on the vertex map, `F` on each
/// hom component.
pub fn apply_g_morphism(f: &dyn BaseEndofunctor, src: &WGraph, m: &WGraphMorphism) -> WGraphMorphism {
    WGraphMorphism {
        vertex_map: m.vertex_map.clone(),
        hom_components: m
            .hom_components
            .iter()
            .map(|(k, comp)| {
                let obj = src.hom.get(k).expect("component over source hom");
                (k.clone(), f.on_morphism(obj, comp))
            })
            .collect(),
    }
}

// -------------------------------------------------------------------------
// 2-graphs.

/// A directed graph with a base object per parallel pair of edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TwoGraph {
    pub vertices: Vec<VertexId>,
    /// Edge id → (src, tgt).
    pub edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
    /// Hom object per ordered parallel pair, keys exactly those pairs.
    pub hom: BTreeMap<(EdgeId, EdgeId), BaseObject>,
}

impl TwoGraph {
    pub fn src(&self, e: &str) -> Option<&VertexId> {
        self.edges.get(e).map(|(s, _)| s)
    }

    pub fn tgt(&self, e: &str) -> Option<&VertexId> {
        self.edges.get(e).map(|(_, t)| t)
    }

    pub fn parallel(&self, f: &str, g: &str) -> bool {
        match (self.edges.get(f), self.edges.get(g)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    pub fn hom_at(&self, f: &str, g: &str) -> Option<&BaseObject> {
        self.hom.get(&(f.to_string(), g.to_string()))
    }

    /// The 2-cells f ⇒ g (points of the hom object); empty when the
    /// pair is not parallel.
    pub fn cells_between(&self, f: &str, g: &str) -> Vec<ElemId> {
        self.hom_at(f, g).map(|b| b.points()).unwrap_or_default()
    }

    pub fn edges_from(&self, x: &str) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|(_, (s, _))| s == x)
            .map(|(e, _)| e.clone())
            .collect()
    }

    /// Hom keys must cover exactly the parallel pairs.
    pub fn check_structure(&self) -> Result<()> {
        let mut dedup = self.vertices.clone();
        dedup.sort();
        dedup.dedup();
        if dedup.len() != self.vertices.len() {
            return Err(Error::Structural("duplicate vertex ids".into()));
        }
        for (e, (s, t)) in &self.edges {
            if !self.vertices.contains(s) || !self.vertices.contains(t) {
                return Err(Error::Structural(format!(
                    "edge {e} has dangling endpoints ({s},{t})"
                )));
            }
        }
        let mut tag_is_set = None;
        for f in self.edges.keys() {
            for g in self.edges.keys() {
                let parallel = self.parallel(f, g);
                let present = self.hom.contains_key(&(f.clone(), g.clone()));
                if parallel && !present {
                    return Err(Error::Structural(format!(
                        "parallel pair ({f},{g}) has no hom object"
                    )));
                }
                if !parallel && present {
                    return Err(Error::Structural(format!(
                        "hom stored on non-parallel pair ({f},{g})"
                    )));
                }
                if present {
                    let b = &self.hom[&(f.clone(), g.clone())];
                    match tag_is_set {
                        None => tag_is_set = Some(b.is_set()),
                        Some(t) if t != b.is_set() => {
                            return Err(Error::Structural(
                                "mixed set/cat homs in a single 2-graph".into(),
                            ));
                        }
                        _ => {}
                    }
                }
            }
        }
        for (f, g) in self.hom.keys() {
            if !self.edges.contains_key(f) || !self.edges.contains_key(g) {
                return Err(Error::Structural(format!(
                    "hom keyed at unknown edges ({f},{g})"
                )));
            }
        }
        Ok(())
    }
}

// -------------------------------------------------------------------------
// serde for graphs: "x|y" hom keys per the documented schema.

#[derive(Serialize, Deserialize)]
struct WGraphRecord {
    vertices: Vec<VertexId>,
    hom: BTreeMap<String, BaseObject>,
}

impl Serialize for WGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WGraphRecord {
            vertices: self.vertices.clone(),
            hom: self
                .hom
                .iter()
                .map(|((x, y), b)| (format!("{x}|{y}"), b.clone()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = WGraphRecord::deserialize(d)?;
        let mut hom = BTreeMap::new();
        for (k, b) in rec.hom {
            let (x, y) = k
                .split_once('|')
                .ok_or_else(|| serde::de::Error::custom(format!("hom key {k:?} not x|y")))?;
            hom.insert((x.to_string(), y.to_string()), b);
        }
        Ok(WGraph {
            vertices: rec.vertices,
            hom,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeRecord {
    id: EdgeId,
    src: VertexId,
    tgt: VertexId,
}

#[derive(Serialize, Deserialize)]
struct TwoGraphRecord {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeRecord>,
    hom: BTreeMap<String, BaseObject>,
}

impl Serialize for TwoGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TwoGraphRecord {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|(e, (src, tgt))| EdgeRecord {
                    id: e.clone(),
                    src: src.clone(),
                    tgt: tgt.clone(),
                })
                .collect(),
            hom: self
                .hom
                .iter()
                .map(|((f, g), b)| (format!("{f}|{g}"), b.clone()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TwoGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = TwoGraphRecord::deserialize(d)?;
        let mut hom = BTreeMap::new();
        for (k, b) in rec.hom {
            let (f, g) = k
                .split_once('|')
                .ok_or_else(|| serde::de::Error::custom(format!("hom key {k:?} not f|g")))?;
            hom.insert((f.to_string(), g.to_string()), b);
        }
        Ok(TwoGraph {
            vertices: rec.vertices,
            edges: rec
                .edges
                .into_iter()
                .map(|e| (e.id, (e.src, e.tgt)))
                .collect(),
            hom,
        })
    }
}

// -------------------------------------------------------------------------

/// Enumerate the natural transformations between two functors living
/// inside hom categories; exposed for 2-cell component searches.
pub fn nat_trans_components(
    c: &FiniteCategory,
    d: &FiniteCategory,
    f: &FiniteFunctor,
    g: &FiniteFunctor,
    cap: u128,
) -> Result<Vec<FiniteNatTrans>> {
    enumerate_nat_trans(c, d, f, g, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn hom_object_of_points_is_a_point() {
        let a = fixtures::point_graph();
        let h = graph_hom_object(&a, &a, 10_000).unwrap();
        assert_eq!(h.point_count(), 1);
    }

    #[test]
    fn hom_object_for_cat_base_counts_functors() {
        // A single vertex with hom the walking arrow, mapped to
        // itself: the hom object is the functor category with 3
        // objects.
        let a = fixtures::arrow_hom_graph();
        let h = graph_hom_object(&a, &a, 1_000_000).unwrap();
        assert_eq!(h.point_count(), 3);
        match h {
            BaseObject::Cat(c) => {
                assert!(crate::base::validate_category(&c).unwrap().passed())
            }
            _ => panic!("expected a category"),
        }
    }

    #[test]
    fn two_vertices_to_one_vertex_has_single_summand() {
        let a = fixtures::edge_graph();
        let b = fixtures::point_graph();
        let h = graph_hom_object(&a, &b, 10_000).unwrap();
        // One vertex map only; product over the four ordered pairs of
        // |{e}|^|A(x,y)|.
        let oracle = graph_hom_cardinality(&a, &b, 10_000).unwrap();
        assert_eq!(h.point_count() as u128, oracle);
        assert_eq!(oracle, 1);
    }

    #[test]
    fn hom_cardinality_matches_closed_form_on_small_graphs() {
        let graphs = [
            fixtures::point_graph(),
            fixtures::edge_graph(),
            fixtures::loop_graph(),
        ];
        for a in &graphs {
            for b in &graphs {
                let obj = graph_hom_object(a, b, 100_000).unwrap();
                let oracle = graph_hom_cardinality(a, b, 100_000).unwrap();
                assert_eq!(obj.point_count() as u128, oracle, "hom({a:?},{b:?})");
            }
        }
    }

    #[test]
    fn g_of_identity_is_identity() {
        let a = fixtures::edge_graph();
        assert_eq!(apply_g_graph(&IdentityEndo, &a), a);
    }

    #[test]
    fn g_of_constant_makes_all_homs_terminal() {
        let a = fixtures::edge_graph();
        let g = apply_g_graph(&ConstTerminalEndo, &a);
        assert!(g.hom.values().all(|b| b.point_count() == 1));
    }

    #[test]
    fn g_is_functorial_on_a_two_vertex_graph() {
        // G(F∘F') = G(F)∘G(F') checked pointwise for F = double,
        // F' = constant-at-terminal.
        let a = fixtures::edge_graph();
        struct Composite;
        impl BaseEndofunctor for Composite {
            fn on_object(&self, b: &BaseObject) -> BaseObject {
                DoubleEndo.on_object(&ConstTerminalEndo.on_object(b))
            }
            fn on_morphism(&self, src: &BaseObject, m: &BaseMorphism) -> BaseMorphism {
                let mid_obj = ConstTerminalEndo.on_object(src);
                DoubleEndo.on_morphism(&mid_obj, &ConstTerminalEndo.on_morphism(src, m))
            }
        }
        let lhs = apply_g_graph(&Composite, &a);
        let rhs = apply_g_graph(&DoubleEndo, &apply_g_graph(&ConstTerminalEndo, &a));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_of_graphs_multiplies_vertex_and_hom_counts() {
        let a = fixtures::edge_graph();
        let b = fixtures::loop_graph();
        let t = a.tensor(&b).unwrap();
        t.check_structure().unwrap();
        assert_eq!(t.vertices.len(), 2);
        for ((x, y), h) in &t.hom {
            let (x1, x2) = crate::base::split_pair_id(x).unwrap();
            let (y1, y2) = crate::base::split_pair_id(y).unwrap();
            let expect = a.hom_at(&x1, &y1).unwrap().point_count()
                * b.hom_at(&x2, &y2).unwrap().point_count();
            assert_eq!(h.point_count(), expect);
        }
    }

    #[test]
    fn identity_two_cell_passes_and_mismatched_vertex_maps_fail() {
        let a = fixtures::point_graph();
        let id_mor = WGraphMorphism {
            vertex_map: [("v".to_string(), "v".to_string())].into_iter().collect(),
            hom_components: [(
                ("v".to_string(), "v".to_string()),
                BaseMorphism::identity_on(a.hom_at("v", "v").unwrap()),
            )]
            .into_iter()
            .collect(),
        };
        let ok = WGraphTwoCell {
            source: id_mor.clone(),
            target: id_mor.clone(),
            components: [(("v".to_string(), "v".to_string()), BaseTwoCell::SetIdentity)]
                .into_iter()
                .collect(),
        };
        assert!(validate_two_cell(&ok, &a, &a).passed());

        // Two-vertex graph: swap map vs identity map differ on vertices.
        let b = fixtures::edge_graph();
        let idb = WGraphMorphism {
            vertex_map: b.vertices.iter().map(|v| (v.clone(), v.clone())).collect(),
            hom_components: b
                .hom
                .iter()
                .map(|(k, o)| (k.clone(), BaseMorphism::identity_on(o)))
                .collect(),
        };
        let mut swapped = idb.clone();
        swapped.vertex_map.insert("x".into(), "y".into());
        swapped.vertex_map.insert("y".into(), "x".into());
        let bad = WGraphTwoCell {
            source: idb,
            target: swapped,
            components: b
                .hom
                .keys()
                .map(|k| (k.clone(), BaseTwoCell::SetIdentity))
                .collect(),
        };
        let report = validate_two_cell(&bad, &b, &b);
        assert!(report
            .violations
            .iter()
            .any(|v| v.rule == "two-cell-vertex-maps"));
    }

    #[test]
    fn two_graph_rejects_hom_on_non_parallel_pair() {
        let mut g = fixtures::two_step_two_graph();
        g.check_structure().unwrap();
        g.hom.insert(
            ("f".to_string(), "g".to_string()),
            BaseObject::empty_set(),
        );
        assert!(g.check_structure().is_err());
    }

    #[test]
    fn graph_json_round_trip() {
        let g = fixtures::parallel_pair_two_graph();
        let text = serde_json::to_string(&g).unwrap();
        let back: TwoGraph = serde_json::from_str(&text).unwrap();
        assert_eq!(g, back);
        let w = fixtures::edge_graph();
        let text = serde_json::to_string(&w).unwrap();
        let back: WGraph = serde_json::from_str(&text).unwrap();
        assert_eq!(w, back);
    }

    #[test]
    fn componentwise_nat_two_cell_over_cat_base() {
        // FinCat base: components are natural transformations; valid
        // iff each naturality square commutes.
        let a = fixtures::arrow_hom_graph();
        let arrow = fixtures::walking_arrow();
        let idf = crate::base::identity_functor(&arrow);
        let mor = WGraphMorphism {
            vertex_map: [("v".to_string(), "v".to_string())].into_iter().collect(),
            hom_components: [(
                ("v".to_string(), "v".to_string()),
                BaseMorphism::CatFunctor(idf.clone()),
            )]
            .into_iter()
            .collect(),
        };
        let nats = nat_trans_components(&arrow, &arrow, &idf, &idf, 10_000).unwrap();
        assert!(!nats.is_empty());
        for nat in nats {
            let cell = WGraphTwoCell {
                source: mor.clone(),
                target: mor.clone(),
                components: [(
                    ("v".to_string(), "v".to_string()),
                    BaseTwoCell::CatNat(nat),
                )]
                .into_iter()
                .collect(),
            };
            assert!(validate_two_cell(&cell, &a, &a).passed());
        }
    }
}
