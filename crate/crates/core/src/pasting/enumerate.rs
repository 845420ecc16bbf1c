//! Bounded exhaustive enumeration of cells, paths, stacks, diagrams
//! and rectangles over a 2-graph. All outputs are canonically sorted.

use super::{Column, GPath, Pd, RectPd, TwoPd, VPath};
use crate::base::ElemId;
use crate::wgraph::{EdgeId, TwoGraph};
use crate::{Bounds, Error, Result};

/// All (source edge, target edge, cell) triples of a 2-graph.
pub fn enumerate_cells(graph: &TwoGraph) -> Vec<(EdgeId, EdgeId, ElemId)> {
    let mut out = Vec::new();
    for ((f, g), hom) in &graph.hom {
        for c in hom.points() {
            out.push((f.clone(), g.clone(), c));
        }
    }
    out.sort();
    out
}

/// All edge paths of length ≤ `max_len`, including the empty path at
/// every vertex.
pub fn enumerate_gpaths(graph: &TwoGraph, max_len: usize) -> Vec<GPath<EdgeId>> {
    let mut out: Vec<GPath<EdgeId>> = graph
        .vertices
        .iter()
        .map(|v| GPath::empty(v.clone()))
        .collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for e in graph.edges_from(&p.tgt) {
                let t = graph.tgt(&e).unwrap().clone();
                let mut q = p.clone();
                q.items.push(e);
                q.tgt = t;
                next.push(q);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort();
    out
}

/// All vertical stacks starting at edge `f` with at most `budget`
/// cells, including the height-0 identity stack.
pub fn enumerate_vchains(graph: &TwoGraph, f: &str, budget: usize) -> Vec<VPath<EdgeId, ElemId>> {
    let mut out = vec![VPath::identity(f.to_string())];
    let mut frontier = out.clone();
    for _ in 0..budget {
        let mut next = Vec::new();
        for v in &frontier {
            let top = v.tgt.clone();
            for g in graph.edges.keys() {
                if !graph.parallel(&top, g) {
                    continue;
                }
                if let Some(hom) = graph.hom_at(&top, g) {
                    for c in hom.points() {
                        let mut w = v.clone();
                        if !w.cells.is_empty() {
                            w.inter.push(top.clone());
                        }
                        w.cells.push(c);
                        w.tgt = g.clone();
                        next.push(w);
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort();
    out
}

/// All pasting diagrams with boundary length ≤ `max_path_len` and at
/// most `max_cells` cells. Complete and canonically ordered.
pub fn enumerate_pds(graph: &TwoGraph, bounds: Bounds) -> Result<Vec<TwoPd>> {
    graph.check_structure()?;
    let mut out = Vec::new();
    let mut count: u128 = 0;
    for path in enumerate_gpaths(graph, bounds.max_path_len) {
        let mut partial: Vec<(Vec<VPath<EdgeId, ElemId>>, usize)> = vec![(Vec::new(), 0)];
        for f in &path.items {
            let mut next = Vec::new();
            for (cols, used) in &partial {
                for v in enumerate_vchains(graph, f, bounds.max_cells - used) {
                    let mut c2 = cols.clone();
                    let cost = v.height();
                    c2.push(v);
                    next.push((c2, used + cost));
                }
            }
            partial = next;
        }
        for (cols, _) in partial {
            count += 1;
            if count > bounds.cap {
                return Err(Error::SizeCap {
                    context: "enumerate_pds".into(),
                    candidates: count,
                    cap: bounds.cap,
                });
            }
            out.push(Pd::from_columns(path.src.clone(), cols));
        }
    }
    out.sort();
    Ok(out)
}

/// All rectangles with boundary length ≤ `max_path_len` and at most
/// `max_cells` cells. For a width-0 boundary the degenerate stacks of
/// empty rows are enumerated up to `max_cells` rows.
pub fn enumerate_rect_pds(graph: &TwoGraph, bounds: Bounds) -> Result<Vec<RectPd<EdgeId, ElemId>>> {
    graph.check_structure()?;
    let mut out = Vec::new();
    for path in enumerate_gpaths(graph, bounds.max_path_len) {
        let n = path.len();
        if n == 0 {
            for k in 0..=bounds.max_cells {
                out.push(RectPd {
                    start: path.src.clone(),
                    src: Vec::new(),
                    tgt: Vec::new(),
                    levels: vec![Vec::new(); k.saturating_sub(1)],
                    rows: vec![Vec::new(); k],
                });
            }
            continue;
        }
        let max_rows = bounds.max_cells / n;
        // Grow rectangles upwards one full row at a time.
        let base = RectPd {
            start: path.src.clone(),
            src: path.items.clone(),
            tgt: path.items.clone(),
            levels: Vec::new(),
            rows: Vec::new(),
        };
        let mut frontier = vec![base.clone()];
        out.push(base);
        for _ in 0..max_rows {
            let mut next = Vec::new();
            for rect in &frontier {
                let below = rect
                    .rows
                    .is_empty()
                    .then(|| rect.src.clone())
                    .unwrap_or_else(|| rect.tgt.clone());
                // Choose a new top path (parallel positionwise) and a
                // row of cells into it.
                let mut rows_built: Vec<(Vec<EdgeId>, Vec<ElemId>)> =
                    vec![(Vec::new(), Vec::new())];
                for f in &below {
                    let mut grown = Vec::new();
                    for (tops, cells) in &rows_built {
                        for g in graph.edges.keys() {
                            if !graph.parallel(f, g) {
                                continue;
                            }
                            for c in graph.hom_at(f, g).map(|h| h.points()).unwrap_or_default() {
                                let mut t2 = tops.clone();
                                let mut c2 = cells.clone();
                                t2.push(g.clone());
                                c2.push(c);
                                grown.push((t2, c2));
                            }
                        }
                    }
                    rows_built = grown;
                }
                for (tops, cells) in rows_built {
                    let mut r = rect.clone();
                    if !r.rows.is_empty() {
                        r.levels.push(r.tgt.clone());
                    }
                    r.rows.push(cells);
                    r.tgt = tops;
                    next.push(r);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
    }
    out.sort();
    Ok(out)
}

/// Nested diagrams: 1-cells are bounded edge paths, 2-cells are
/// bounded base diagrams, total base cells ≤ `max_cells`. The outer
/// boundary length is bounded by `max_path_len` as well.
pub fn enumerate_nested_pds(
    graph: &TwoGraph,
    bounds: Bounds,
) -> Result<Vec<Pd<GPath<EdgeId>, TwoPd>>> {
    let base_pds = enumerate_pds(graph, bounds)?;
    let pds_between = |f: &GPath<EdgeId>, g: &GPath<EdgeId>, budget: usize| -> Vec<TwoPd> {
        base_pds
            .iter()
            .filter(|p| {
                p.cell_count() <= budget
                    && p.start == f.src
                    && p.src == f.items
                    && p.tgt == g.items
            })
            .cloned()
            .collect()
    };
    let gpaths = enumerate_gpaths(graph, bounds.max_path_len);
    // Outer boundary: a path of paths. Bound the number of outer
    // columns by max_path_len.
    let mut outer_paths: Vec<GPath<GPath<EdgeId>>> = graph
        .vertices
        .iter()
        .map(|v| GPath::empty(v.clone()))
        .collect();
    let mut frontier = outer_paths.clone();
    for _ in 0..bounds.max_path_len {
        let mut next = Vec::new();
        for p in &frontier {
            for seg in gpaths.iter().filter(|s| s.src == p.tgt) {
                let mut q = p.clone();
                q.items.push(seg.clone());
                q.tgt = seg.tgt.clone();
                next.push(q);
            }
        }
        outer_paths.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out = Vec::new();
    let mut count: u128 = 0;
    for outer in &outer_paths {
        let mut partial: Vec<(Vec<VPath<GPath<EdgeId>, TwoPd>>, usize)> = vec![(Vec::new(), 0)];
        for f in &outer.items {
            let mut next = Vec::new();
            for (cols, used) in &partial {
                // Vertical stacks of nested cells over this segment.
                let mut stacks = vec![(VPath::identity(f.clone()), 0usize)];
                let mut grow = stacks.clone();
                for _ in 0..bounds.max_cells {
                    let mut next_g = Vec::new();
                    for (v, vcost) in &grow {
                        let top = v.tgt.clone();
                        let Some(remaining) = bounds.max_cells.checked_sub(used + vcost) else {
                            continue;
                        };
                        for g in gpaths
                            .iter()
                            .filter(|g| g.src == top.src && g.tgt == top.tgt && g.len() == top.len())
                        {
                            for pd in pds_between(&top, g, remaining) {
                                let cost = pd.cell_count().max(1);
                                if cost > remaining {
                                    continue;
                                }
                                let mut w = v.clone();
                                if !w.cells.is_empty() {
                                    w.inter.push(top.clone());
                                }
                                w.cells.push(pd);
                                w.tgt = g.clone();
                                next_g.push((w, vcost + cost));
                            }
                        }
                    }
                    stacks.extend(next_g.iter().cloned());
                    grow = next_g;
                }
                for (v, vcost) in stacks {
                    if used + vcost > bounds.max_cells {
                        continue;
                    }
                    let mut c2 = cols.clone();
                    c2.push(v);
                    next.push((c2, used + vcost));
                }
            }
            partial = next;
        }
        for (cols, _) in partial {
            count += 1;
            if count > bounds.cap {
                return Err(Error::SizeCap {
                    context: "enumerate_nested_pds".into(),
                    candidates: count,
                    cap: bounds.cap,
                });
            }
            let mut pd = Pd::empty(outer.src.clone());
            for v in cols {
                pd.src.push(v.src.clone());
                pd.tgt.push(v.tgt.clone());
                pd.cols.push(Column {
                    inter: v.inter.clone(),
                    cells: v.cells.clone(),
                });
            }
            out.push(pd);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Combinatorial recurrence oracle for the diagram count over the
/// single-loop 2-graph with a one-point hom: a diagram is determined
/// by its width `n ≤ L` and column heights `h_i ≥ 0` with `Σ h_i ≤ B`,
/// so the count is `Σ_{n ≤ L} #{(h_1 … h_n) : Σ h_i ≤ B}` with the
/// inner count computed by the standard recurrence.
pub fn pd_count_oracle_single_loop(max_path_len: usize, max_cells: usize) -> u128 {
    fn tuples(n: usize, b: usize) -> u128 {
        if n == 0 {
            return 1;
        }
        (0..=b).map(|h| tuples(n - 1, b - h)).sum()
    }
    (0..=max_path_len).map(|n| tuples(n, max_cells)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn empty_two_graph_has_identity_pds_only() {
        let g = crate::wgraph::TwoGraph {
            vertices: vec!["x".into(), "y".into()],
            ..Default::default()
        };
        let pds = enumerate_pds(&g, Bounds::default()).unwrap();
        assert_eq!(pds.len(), 2); // one empty diagram per vertex
        assert!(pds.iter().all(|p| p.width() == 0));
    }

    #[test]
    fn max_cells_zero_gives_identity_diagrams_per_path() {
        let g = fixtures::loop_two_graph();
        let bounds = Bounds {
            max_path_len: 3,
            max_cells: 0,
            ..Bounds::default()
        };
        let pds = enumerate_pds(&g, bounds).unwrap();
        // One all-identity diagram per boundary path of length ≤ 3.
        assert_eq!(pds.len(), 4);
        assert!(pds.iter().all(|p| p.cell_count() == 0));
    }

    #[test]
    fn loop_counts_match_recurrence_oracle() {
        let g = fixtures::loop_two_graph();
        for max_len in 0..=3 {
            for max_cells in 0..=4 {
                let bounds = Bounds {
                    max_path_len: max_len,
                    max_cells,
                    ..Bounds::default()
                };
                let got = enumerate_pds(&g, bounds).unwrap().len() as u128;
                let expect = pd_count_oracle_single_loop(max_len, max_cells);
                assert_eq!(got, expect, "len {max_len} cells {max_cells}");
            }
        }
    }

    #[test]
    fn all_enumerated_pds_validate() {
        let g = fixtures::parallel_pair_two_graph();
        let pds = enumerate_pds(&g, Bounds::with_cells(3)).unwrap();
        assert!(!pds.is_empty());
        for pd in &pds {
            let report = super::super::validate_pd(&g, pd).unwrap();
            assert!(report.passed(), "{pd:?}: {report}");
        }
    }

    #[test]
    fn rectangles_transpose_into_enumerated_pds() {
        let g = fixtures::parallel_pair_two_graph();
        let bounds = Bounds::with_cells(4);
        let rects = enumerate_rect_pds(&g, bounds).unwrap();
        let pds = enumerate_pds(&g, bounds).unwrap();
        for rect in &rects {
            if rect.width() == 0 {
                continue;
            }
            let pd = super::super::lambda(rect).unwrap();
            assert!(pds.contains(&pd), "transpose of {rect:?} not enumerated");
        }
    }
}
