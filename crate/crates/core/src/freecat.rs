//! The free enriched category on a graph: path cells, the monad
//! structure (unit, flattening multiplication), bounded law checking,
//! and the colax rearrangement map over tensor graphs.
//!
//! Free homs are infinite over cyclic graphs, so every law here is
//! quantified over a caller-supplied bound. The laws are element-wise,
//! which makes bounded exhaustiveness sound evidence: a violation at
//! any length would show up at that length.

use crate::base::ElemId;
use crate::report::ValidationReport;
use crate::wgraph::{VertexId, WGraph};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A path in an enriched graph: a vertex sequence `z_0, …, z_n` with a
/// hom element for each step. The empty path (one vertex, no steps)
/// exists only at a single vertex and plays the role of the unit term.
///
/// The element type is generic so that paths of paths (elements of the
/// free category applied twice) reuse the same structure.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path<T> {
    /// `steps.len() + 1` vertices.
    pub vertices: Vec<VertexId>,
    /// Step elements; step `i` lives in `hom(vertices[i], vertices[i+1])`.
    #[serde(rename = "cells")]
    pub steps: Vec<T>,
}

/// The concrete element of a free hom: steps are hom elements.
pub type PathCell = Path<ElemId>;

impl<T> Path<T> {
    pub fn empty(at: impl Into<VertexId>) -> Self {
        Path {
            vertices: vec![at.into()],
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn src(&self) -> &VertexId {
        self.vertices.first().expect("path has at least one vertex")
    }

    pub fn tgt(&self) -> &VertexId {
        self.vertices.last().expect("path has at least one vertex")
    }

    /// Vertex count must be steps + 1; enforced by constructors, kept
    /// as a check for deserialized data.
    pub fn well_shaped(&self) -> bool {
        !self.vertices.is_empty() && self.vertices.len() == self.steps.len() + 1
    }
}

impl PathCell {
    /// Validate step elements against the graph's hom objects.
    pub fn validate(&self, graph: &WGraph) -> Result<()> {
        if !self.well_shaped() {
            return Err(Error::Structural("path vertex/step count mismatch".into()));
        }
        for v in &self.vertices {
            if !graph.vertices.contains(v) {
                return Err(Error::Structural(format!("path visits unknown vertex {v}")));
            }
        }
        for (i, e) in self.steps.iter().enumerate() {
            let (x, y) = (&self.vertices[i], &self.vertices[i + 1]);
            let hom = graph
                .hom_at(x, y)
                .ok_or_else(|| Error::Structural(format!("missing hom ({x},{y})")))?;
            if !hom.contains_point(e) {
                return Err(Error::Structural(format!(
                    "step {i} element {e} is not in hom({x},{y})"
                )));
            }
        }
        Ok(())
    }
}

/// The unit of the free category monad: a hom element becomes a
/// length-1 path.
pub fn free_unit(graph: &WGraph, x: &str, y: &str, elem: &str) -> Result<PathCell> {
    let hom = graph
        .hom_at(x, y)
        .ok_or_else(|| Error::Structural(format!("missing hom ({x},{y})")))?;
    if !hom.contains_point(elem) {
        return Err(Error::Structural(format!(
            "element {elem} is not in hom({x},{y})"
        )));
    }
    Ok(Path {
        vertices: vec![x.to_string(), y.to_string()],
        steps: vec![elem.to_string()],
    })
}

/// The multiplication: flatten a composable path of paths. Empty inner
/// paths vanish; length of the output is the sum of inner lengths.
pub fn free_mult<T: Clone>(nested: &Path<Path<T>>) -> Result<Path<T>> {
    if !nested.well_shaped() {
        return Err(Error::Structural("nested path malformed".into()));
    }
    let mut vertices = vec![nested.src().clone()];
    let mut steps = Vec::new();
    for (i, inner) in nested.steps.iter().enumerate() {
        if !inner.well_shaped() {
            return Err(Error::Structural(format!("inner path {i} malformed")));
        }
        if inner.src() != &nested.vertices[i] || inner.tgt() != &nested.vertices[i + 1] {
            return Err(Error::NotComposable(format!(
                "inner path {i} runs {}→{} but the outer step expects {}→{}",
                inner.src(),
                inner.tgt(),
                nested.vertices[i],
                nested.vertices[i + 1]
            )));
        }
        if vertices.last() != Some(inner.src()) {
            return Err(Error::NotComposable(format!(
                "seam mismatch before inner path {i}"
            )));
        }
        vertices.extend(inner.vertices[1..].iter().cloned());
        steps.extend(inner.steps.iter().cloned());
    }
    Ok(Path { vertices, steps })
}

/// All paths `x → y` of length at most `max_len`, canonically ordered
/// by (length, stepwise ids). Complete and duplicate-free.
pub fn enumerate_paths(graph: &WGraph, x: &str, y: &str, max_len: usize) -> Vec<PathCell> {
    let mut out = Vec::new();
    // Frontier of partial paths from x, extended breadth-first so the
    // output is already grouped by length.
    let mut frontier = vec![Path::<ElemId>::empty(x)];
    for _len in 0..=max_len {
        for p in &frontier {
            if p.tgt() == y {
                out.push(p.clone());
            }
        }
        let mut next = Vec::new();
        for p in &frontier {
            let from = p.tgt().clone();
            for z in &graph.vertices {
                if let Some(hom) = graph.hom_at(&from, z) {
                    for e in hom.points() {
                        let mut q = p.clone();
                        q.vertices.push(z.clone());
                        q.steps.push(e);
                        next.push(q);
                    }
                }
            }
        }
        frontier = next;
    }
    out.sort_by(|a, b| (a.len(), &a.vertices, &a.steps).cmp(&(b.len(), &b.vertices, &b.steps)));
    out
}

/// A bounded view of the free category on a graph: complete hom
/// enumeration up to the length bound, recomputed purely per query.
#[derive(Debug, Clone)]
pub struct FreeCategoryView {
    pub graph: WGraph,
    pub max_len: usize,
}

impl FreeCategoryView {
    pub fn new(graph: WGraph, max_len: usize) -> Self {
        FreeCategoryView { graph, max_len }
    }

    pub fn hom(&self, x: &str, y: &str) -> Vec<PathCell> {
        enumerate_paths(&self.graph, x, y, self.max_len)
    }
}

/// Transfer-matrix count of paths of length ≤ `max_len`, the
/// independent oracle for [`enumerate_paths`]: entry `(x,y)` of
/// `Σ_{l ≤ L} M^l` where `M[x][y] = |hom(x,y)|`.
pub fn transfer_matrix_count(graph: &WGraph, x: &str, y: &str, max_len: usize) -> u128 {
    let n = graph.vertices.len();
    let idx: BTreeMap<&str, usize> = graph
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect();
    let mut m = vec![vec![0u128; n]; n];
    for ((a, b), h) in &graph.hom {
        m[idx[a.as_str()]][idx[b.as_str()]] = h.point_count() as u128;
    }
    let mut total = vec![vec![0u128; n]; n];
    let mut power = vec![vec![0u128; n]; n];
    for (i, row) in power.iter_mut().enumerate() {
        row[i] = 1; // identity: the empty paths
    }
    for l in 0..=max_len {
        for i in 0..n {
            for j in 0..n {
                total[i][j] += power[i][j];
            }
        }
        if l < max_len {
            let mut next = vec![vec![0u128; n]; n];
            for i in 0..n {
                for k in 0..n {
                    if power[i][k] == 0 {
                        continue;
                    }
                    for j in 0..n {
                        next[i][j] += power[i][k] * m[k][j];
                    }
                }
            }
            power = next;
        }
    }
    total[idx[x]][idx[y]]
}

// -------------------------------------------------------------------------
// Nested-path enumeration and the monad laws.

/// All composable sequences of paths: outer paths over the free
/// category, with total inner length ≤ `total` and outer length ≤
/// `outer`.
pub fn enumerate_nested_paths(
    graph: &WGraph,
    x: &str,
    y: &str,
    outer: usize,
    total: usize,
) -> Vec<Path<PathCell>> {
    let mut out = Vec::new();
    let start = Path::<PathCell>::empty(x);
    let mut frontier = vec![(start, 0usize)];
    while let Some((p, used)) = frontier.pop() {
        if p.tgt() == y {
            out.push(p.clone());
        }
        if p.len() >= outer {
            continue;
        }
        let from = p.tgt().clone();
        for z in &graph.vertices {
            for inner in enumerate_paths(graph, &from, z, total - used) {
                let cost = inner.len();
                let mut q = p.clone();
                q.vertices.push(z.clone());
                q.steps.push(inner);
                frontier.push((q, used + cost));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Triple-nested paths within the same bounds at each level.
pub fn enumerate_double_nested_paths(
    graph: &WGraph,
    x: &str,
    y: &str,
    outer: usize,
    total: usize,
) -> Vec<Path<Path<PathCell>>> {
    let mut out = Vec::new();
    let start = Path::<Path<PathCell>>::empty(x);
    let mut frontier = vec![(start, 0usize)];
    while let Some((p, used)) = frontier.pop() {
        if p.tgt() == y {
            out.push(p.clone());
        }
        if p.len() >= outer {
            continue;
        }
        let from = p.tgt().clone();
        for z in &graph.vertices {
            for inner in enumerate_nested_paths(graph, &from, z, outer, total - used) {
                let cost: usize = inner.steps.iter().map(|q| q.len()).sum();
                let mut q = p.clone();
                q.vertices.push(z.clone());
                q.steps.push(inner);
                frontier.push((q, used + cost));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The flattening used by the law checker; injectable so a mutation
/// hook can corrupt it and confirm the checker notices.
pub type FlattenFn = dyn Fn(&Path<PathCell>) -> Result<PathCell>;

/// Check unit and associativity of the free multiplication on every
/// nested path within the bound.
pub fn check_monad_laws_free(graph: &WGraph, bound: usize) -> Result<ValidationReport> {
    check_monad_laws_free_with(graph, bound, &|p| free_mult(p))
}

/// As [`check_monad_laws_free`], with the depth-2 flatten replaced by
/// an arbitrary candidate. The depth-3 comparison still uses the
/// canonical flatten for the stage not under test, so a corrupted
/// candidate is caught by both the unit and associativity sweeps.
pub fn check_monad_laws_free_with(
    graph: &WGraph,
    bound: usize,
    mult: &FlattenFn,
) -> Result<ValidationReport> {
    graph.check_structure()?;
    let mut report = ValidationReport::new();
    for x in &graph.vertices {
        for y in &graph.vertices {
            for p in enumerate_paths(graph, x, y, bound) {
                // Left unit: a singleton nesting flattens to p.
                let singleton = Path {
                    vertices: vec![p.src().clone(), p.tgt().clone()],
                    steps: vec![p.clone()],
                };
                match mult(&singleton) {
                    Ok(q) => report.check(
                        q == p,
                        "left-unit",
                        || format!("path {:?}", p.steps),
                        || format!("η;μ gave {:?}", q.steps),
                    ),
                    Err(e) => {
                        report.check(false, "left-unit", || format!("path {:?}", p.steps), || e.to_string())
                    }
                }
                // Right unit: wrap each step as a singleton path.
                let wrapped = Path {
                    vertices: p.vertices.clone(),
                    steps: p
                        .steps
                        .iter()
                        .enumerate()
                        .map(|(i, e)| Path {
                            vertices: vec![p.vertices[i].clone(), p.vertices[i + 1].clone()],
                            steps: vec![e.clone()],
                        })
                        .collect(),
                };
                match mult(&wrapped) {
                    Ok(q) => report.check(
                        q == p,
                        "right-unit",
                        || format!("path {:?}", p.steps),
                        || format!("Tη;μ gave {:?}", q.steps),
                    ),
                    Err(e) => {
                        report.check(false, "right-unit", || format!("path {:?}", p.steps), || e.to_string())
                    }
                }
            }
            // Associativity on depth-3 nestings.
            for ppp in enumerate_double_nested_paths(graph, x, y, bound, bound) {
                let inner_first = (|| -> Result<PathCell> {
                    let collapsed = Path {
                        vertices: ppp.vertices.clone(),
                        steps: ppp
                            .steps
                            .iter()
                            .map(|pp| mult(pp))
                            .collect::<Result<Vec<_>>>()?,
                    };
                    mult(&collapsed)
                })();
                let outer_first = (|| -> Result<PathCell> {
                    let flattened_outer = free_mult(&ppp)?;
                    mult(&flattened_outer)
                })();
                match (inner_first, outer_first) {
                    (Ok(a), Ok(b)) => report.check(
                        a == b,
                        "associativity",
                        || format!("nesting over {x}→{y}"),
                        || format!("μ∘Tμ gave {:?} but μ∘μT gave {:?}", a.steps, b.steps),
                    ),
                    (a, b) => report.check(
                        false,
                        "associativity",
                        || format!("nesting over {x}→{y}"),
                        || format!("flatten errored: {:?} / {:?}", a.err(), b.err()),
                    ),
                }
            }
        }
    }
    Ok(report)
}

// -------------------------------------------------------------------------
// The colax rearrangement map.

/// Project a path over a tensor graph to its two component paths.
/// Both outputs have the same length as the input: the image always
/// lands in the equal-lengths summand, which is exactly why the map is
/// not an isomorphism.
pub fn colax_rearrange(p: &PathCell) -> Result<(PathCell, PathCell)> {
    let mut va = Vec::new();
    let mut vb = Vec::new();
    for v in &p.vertices {
        let (a, b) = crate::base::split_pair_id(v)
            .ok_or_else(|| Error::Structural(format!("vertex {v} is not a tensor pair")))?;
        va.push(a);
        vb.push(b);
    }
    let mut sa = Vec::new();
    let mut sb = Vec::new();
    for e in &p.steps {
        let (a, b) = crate::base::split_pair_id(e)
            .ok_or_else(|| Error::Structural(format!("step {e} is not a tensor pair")))?;
        sa.push(a);
        sb.push(b);
    }
    Ok((
        Path {
            vertices: va,
            steps: sa,
        },
        Path {
            vertices: vb,
            steps: sb,
        },
    ))
}

/// The colax monad functor axioms for the rearrangement map, checked
/// element-wise within the bound: compatibility with the unit and with
/// the multiplication.
pub fn check_colax_axioms(a: &WGraph, b: &WGraph, bound: usize) -> Result<ValidationReport> {
    let tensor = a.tensor(b)?;
    let mut report = ValidationReport::new();
    // Unit axiom: rearranging a unit path gives the pair of unit paths.
    for ((x, y), hom) in &tensor.hom {
        for e in hom.points() {
            let unit = free_unit(&tensor, x, y, &e)?;
            let (pa, pb) = colax_rearrange(&unit)?;
            let (xa, xb) = crate::base::split_pair_id(x).unwrap();
            let (ya, yb) = crate::base::split_pair_id(y).unwrap();
            let (ea, eb) = crate::base::split_pair_id(&e).unwrap();
            let expect_a = free_unit(a, &xa, &ya, &ea)?;
            let expect_b = free_unit(b, &xb, &yb, &eb)?;
            report.check(
                pa == expect_a && pb == expect_b,
                "colax-unit",
                || format!("element {e} at ({x},{y})"),
                || "rearranged unit differs from the pair of units".into(),
            );
        }
    }
    // Multiplication axiom: flatten-then-split equals
    // split-inside, split-outside, then flatten both components.
    for x in &tensor.vertices {
        for y in &tensor.vertices {
            for nested in enumerate_nested_paths(&tensor, x, y, bound, bound) {
                let lhs = {
                    let flat = free_mult(&nested)?;
                    colax_rearrange(&flat)?
                };
                let rhs = (|| -> Result<(PathCell, PathCell)> {
                    let mut steps_a = Vec::new();
                    let mut steps_b = Vec::new();
                    let mut verts_a = Vec::new();
                    let mut verts_b = Vec::new();
                    for v in &nested.vertices {
                        let (va, vb) = crate::base::split_pair_id(v)
                            .ok_or_else(|| Error::Structural("bad tensor vertex".into()))?;
                        verts_a.push(va);
                        verts_b.push(vb);
                    }
                    for inner in &nested.steps {
                        let (ia, ib) = colax_rearrange(inner)?;
                        steps_a.push(ia);
                        steps_b.push(ib);
                    }
                    let na = Path {
                        vertices: verts_a,
                        steps: steps_a,
                    };
                    let nb = Path {
                        vertices: verts_b,
                        steps: steps_b,
                    };
                    Ok((free_mult(&na)?, free_mult(&nb)?))
                })();
                match rhs {
                    Ok(rhs) => report.check(
                        lhs == rhs,
                        "colax-mult",
                        || format!("nested path over {x}→{y}"),
                        || "the two composites around the colax square differ".into(),
                    ),
                    Err(e) => report.check(
                        false,
                        "colax-mult",
                        || format!("nested path over {x}→{y}"),
                        || e.to_string(),
                    ),
                }
            }
        }
    }
    Ok(report)
}

/// The documented witness that the rearrangement is not invertible: a
/// target pair with component lengths (1, 2). Every image pair has
/// equal lengths, so this element of the codomain has empty preimage;
/// the bounded search confirms it and the length argument closes the
/// unbounded part.
pub fn non_isomorphism_witness(
    a: &WGraph,
    b: &WGraph,
    bound: usize,
) -> Result<Option<(PathCell, PathCell)>> {
    let tensor = a.tensor(b)?;
    for xa in &a.vertices {
        for ya in &a.vertices {
            for pa in enumerate_paths(a, xa, ya, 1) {
                if pa.len() != 1 {
                    continue;
                }
                for xb in &b.vertices {
                    for yb in &b.vertices {
                        for pb in enumerate_paths(b, xb, yb, 2) {
                            if pb.len() != 2 {
                                continue;
                            }
                            // Exhaustive preimage search within bound.
                            let mut found = false;
                            for x in &tensor.vertices {
                                for y in &tensor.vertices {
                                    for p in enumerate_paths(&tensor, x, y, bound) {
                                        if colax_rearrange(&p)? == (pa.clone(), pb.clone()) {
                                            found = true;
                                        }
                                    }
                                }
                            }
                            if !found {
                                return Ok(Some((pa, pb)));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

// -------------------------------------------------------------------------
// Coproducts of graphs, for the sum-preservation property.

/// Disjoint union of graphs; homs across the two sides are empty.
pub fn coproduct_graphs(a: &WGraph, b: &WGraph) -> WGraph {
    use crate::base::BaseObject;
    let tag = |p: &str, v: &str| format!("{p}{v}");
    let mut out = WGraph::default();
    let empty_like = |sample: &BaseObject| match sample {
        BaseObject::Set(_) => BaseObject::empty_set(),
        BaseObject::Cat(_) => BaseObject::Cat(crate::fixtures::empty_category()),
    };
    let sample = a.hom.values().next().or_else(|| b.hom.values().next());
    for (prefix, g) in [("l:", a), ("r:", b)] {
        for v in &g.vertices {
            out.vertices.push(tag(prefix, v));
        }
        for ((x, y), h) in &g.hom {
            out.hom
                .insert((tag(prefix, x), tag(prefix, y)), h.clone());
        }
    }
    if let Some(sample) = sample {
        for x in a.vertices.iter().map(|v| tag("l:", v)) {
            for y in b.vertices.iter().map(|v| tag("r:", v)) {
                out.hom.insert((x.clone(), y.clone()), empty_like(sample));
                out.hom.insert((y.clone(), x.clone()), empty_like(sample));
            }
        }
    }
    out.vertices.sort();
    out
}

/// Test hook: a deliberately corrupted flatten that drops the last
/// cell of nonempty outputs.
pub mod testhooks {
    use super::*;

    pub fn corrupt_flatten(nested: &Path<PathCell>) -> Result<PathCell> {
        let mut flat = free_mult(nested)?;
        if !flat.steps.is_empty() {
            flat.steps.pop();
            flat.vertices.pop();
        }
        Ok(flat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn unit_is_a_length_one_path() {
        let g = fixtures::loop_graph();
        let p = free_unit(&g, "v", "v", "e").unwrap();
        assert_eq!(p.len(), 1);
        p.validate(&g).unwrap();
    }

    #[test]
    fn empty_path_exists_independently_of_unit() {
        let g = fixtures::loop_graph();
        let paths = enumerate_paths(&g, "v", "v", 0);
        assert_eq!(paths, vec![Path::empty("v")]);
    }

    #[test]
    fn flatten_concatenates_and_drops_empty_inners() {
        let g = fixtures::loop_graph();
        let e = free_unit(&g, "v", "v", "e").unwrap();
        let nested = Path {
            vertices: vec!["v".into(), "v".into(), "v".into(), "v".into()],
            steps: vec![Path::empty("v"), e.clone(), Path::empty("v")],
        };
        assert_eq!(free_mult(&nested).unwrap(), e);
    }

    #[test]
    fn flatten_of_composable_pair() {
        let g = fixtures::two_step_graph();
        let e = free_unit(&g, "x", "y", "e").unwrap();
        let f = free_unit(&g, "y", "z", "f").unwrap();
        let nested = Path {
            vertices: vec!["x".into(), "y".into(), "z".into()],
            steps: vec![e, f],
        };
        let flat = free_mult(&nested).unwrap();
        assert_eq!(flat.len(), 2);
        assert_eq!(flat.steps, vec!["e".to_string(), "f".to_string()]);
    }

    #[test]
    fn flatten_rejects_non_composable() {
        let g = fixtures::two_step_graph();
        let e = free_unit(&g, "x", "y", "e").unwrap();
        let bad = Path {
            vertices: vec!["x".into(), "y".into(), "z".into()],
            steps: vec![e.clone(), e],
        };
        assert!(matches!(free_mult(&bad), Err(Error::NotComposable(_))));
    }

    #[test]
    fn single_edge_path_counts() {
        let g = fixtures::edge_graph();
        assert_eq!(enumerate_paths(&g, "x", "y", 3).len(), 1);
        assert_eq!(enumerate_paths(&g, "x", "x", 3).len(), 1); // empty path only
    }

    #[test]
    fn loop_graph_has_one_path_per_length() {
        let g = fixtures::loop_graph();
        let paths = enumerate_paths(&g, "v", "v", 3);
        assert_eq!(paths.len(), 4); // lengths 0..3
        for (i, p) in paths.iter().enumerate() {
            assert_eq!(p.len(), i);
        }
    }

    #[test]
    fn path_counts_match_transfer_matrix_oracle() {
        for g in [
            fixtures::loop_graph(),
            fixtures::edge_graph(),
            fixtures::two_step_graph(),
            fixtures::two_loop_graph(),
        ] {
            for x in &g.vertices {
                for y in &g.vertices {
                    for max_len in 0..=4 {
                        let by_walk = enumerate_paths(&g, x, y, max_len).len() as u128;
                        let by_matrix = transfer_matrix_count(&g, x, y, max_len);
                        assert_eq!(by_walk, by_matrix, "{x}→{y} ≤{max_len}");
                    }
                }
            }
        }
    }

    #[test]
    fn monad_laws_hold_on_loop_and_edge_graphs() {
        for g in [fixtures::loop_graph(), fixtures::edge_graph()] {
            let report = check_monad_laws_free(&g, 4).unwrap();
            assert!(report.passed(), "{report}");
            assert!(report.checks > 0);
        }
    }

    #[test]
    fn flatten_of_flatten_equals_single_flatten_depth_three() {
        // All depth-3 nestings of total length ≤ 4 over the loop graph.
        let g = fixtures::loop_graph();
        let nestings = enumerate_double_nested_paths(&g, "v", "v", 4, 4);
        assert!(!nestings.is_empty());
        for ppp in nestings {
            let inner_then: PathCell = {
                let collapsed = Path {
                    vertices: ppp.vertices.clone(),
                    steps: ppp.steps.iter().map(|pp| free_mult(pp).unwrap()).collect(),
                };
                free_mult(&collapsed).unwrap()
            };
            let outer_then = free_mult(&free_mult(&ppp).unwrap()).unwrap();
            assert_eq!(inner_then, outer_then);
        }
    }

    #[test]
    fn corrupted_flatten_is_detected() {
        let g = fixtures::loop_graph();
        let report =
            check_monad_laws_free_with(&g, 3, &testhooks::corrupt_flatten).unwrap();
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .any(|v| v.rule == "associativity" || v.rule.ends_with("unit")));
    }

    #[test]
    fn rearrange_projects_componentwise() {
        let a = fixtures::loop_graph();
        let b = fixtures::loop_graph();
        let t = a.tensor(&b).unwrap();
        let p = enumerate_paths(&t, "(v,v)", "(v,v)", 2)
            .into_iter()
            .find(|p| p.len() == 2)
            .unwrap();
        let (pa, pb) = colax_rearrange(&p).unwrap();
        assert_eq!(pa.len(), 2);
        assert_eq!(pb.len(), 2);
        let (empty_a, empty_b) = colax_rearrange(&Path::empty("(v,v)")).unwrap();
        assert!(empty_a.is_empty() && empty_b.is_empty());
    }

    #[test]
    fn colax_axioms_pass_on_loop_tensor_loop() {
        let a = fixtures::loop_graph();
        let report = check_colax_axioms(&a, &a, 3).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn mixed_length_target_has_no_preimage() {
        let a = fixtures::loop_graph();
        let witness = non_isomorphism_witness(&a, &a, 4).unwrap();
        let (pa, pb) = witness.expect("witness exists");
        assert_eq!((pa.len(), pb.len()), (1, 2));
    }

    #[test]
    fn rearrange_is_natural_in_both_arguments() {
        // Naturality against the collapse morphism edge_graph → loop
        // graph on the second coordinate.
        use crate::wgraph::{BaseMorphism, WGraphMorphism};
        let a = fixtures::loop_graph();
        let b = fixtures::edge_graph();
        let l = fixtures::loop_graph();
        // g: b → l collapsing x,y ↦ v, e ↦ e.
        let g = WGraphMorphism {
            vertex_map: [("x", "v"), ("y", "v")]
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .into_iter()
                .collect(),
            hom_components: b
                .hom
                .iter()
                .map(|(k, h)| {
                    let m = match h {
                        crate::base::BaseObject::Set(s) => BaseMorphism::SetMap(
                            s.iter().map(|e| (e.clone(), "e".to_string())).collect(),
                        ),
                        _ => unreachable!(),
                    };
                    (k.clone(), m)
                })
                .collect(),
        };
        assert!(g.validate(&b, &l).passed());
        let ab = a.tensor(&b).unwrap();
        let map_path = |p: &PathCell| -> PathCell {
            // (id ⊗ g) on paths over the tensor graph.
            Path {
                vertices: p
                    .vertices
                    .iter()
                    .map(|v| {
                        let (va, vb) = crate::base::split_pair_id(v).unwrap();
                        crate::base::pair_id(&va, &g.vertex_map[&vb])
                    })
                    .collect(),
                steps: p
                    .steps
                    .iter()
                    .zip(p.vertices.windows(2))
                    .map(|(e, w)| {
                        let (ea, eb) = crate::base::split_pair_id(e).unwrap();
                        let (x2, y2) = (
                            crate::base::split_pair_id(&w[0]).unwrap().1,
                            crate::base::split_pair_id(&w[1]).unwrap().1,
                        );
                        let comp = &g.hom_components[&(x2, y2)];
                        crate::base::pair_id(&ea, comp.on_point(&eb).unwrap())
                    })
                    .collect(),
            }
        };
        let map_b_path = |p: &PathCell| -> PathCell {
            Path {
                vertices: p.vertices.iter().map(|v| g.vertex_map[v].clone()).collect(),
                steps: p
                    .steps
                    .iter()
                    .zip(p.vertices.windows(2))
                    .map(|(e, w)| {
                        let comp = &g.hom_components[&(w[0].clone(), w[1].clone())];
                        comp.on_point(e).unwrap().clone()
                    })
                    .collect(),
            }
        };
        for x in &ab.vertices {
            for y in &ab.vertices {
                for p in enumerate_paths(&ab, x, y, 3) {
                    let (pa1, pb1) = colax_rearrange(&map_path(&p)).unwrap();
                    let (pa2, pb2) = colax_rearrange(&p).unwrap();
                    assert_eq!(pa1, pa2);
                    assert_eq!(pb1, map_b_path(&pb2));
                }
            }
        }
    }

    #[test]
    fn free_category_preserves_coproducts_on_path_counts() {
        let a = fixtures::loop_graph();
        let b = fixtures::edge_graph();
        let sum = coproduct_graphs(&a, &b);
        sum.check_structure().unwrap();
        // Paths in the sum stay within one summand, so counts add up.
        let mut total_sum = 0u128;
        for x in &sum.vertices {
            for y in &sum.vertices {
                total_sum += enumerate_paths(&sum, x, y, 3).len() as u128;
            }
        }
        let mut total_parts = 0u128;
        for g in [&a, &b] {
            for x in &g.vertices {
                for y in &g.vertices {
                    total_parts += enumerate_paths(g, x, y, 3).len() as u128;
                }
            }
        }
        assert_eq!(total_sum, total_parts);
    }

    #[test]
    fn free_view_hom_is_complete_and_duplicate_free() {
        let view = FreeCategoryView::new(fixtures::loop_graph(), 3);
        let hom = view.hom("v", "v");
        let mut dedup = hom.clone();
        dedup.dedup();
        assert_eq!(hom.len(), dedup.len());
        assert_eq!(hom.len() as u128, transfer_matrix_count(&view.graph, "v", "v", 3));
    }

    #[test]
    fn path_cell_json_shape() {
        let g = fixtures::loop_graph();
        let p = free_unit(&g, "v", "v", "e").unwrap();
        let v: serde_json::Value = serde_json::to_value(&p).unwrap();
        assert!(v.get("vertices").is_some());
        assert!(v.get("steps").is_some());
    }
}
