//! Structural operations: the distributive law, flattenings, and the
//! composite-monad unit and multiplication.

use super::{Column, GPath, Pd, RectPd, TwoPd, VPath};
use crate::wgraph::{EdgeId, TwoGraph, VertexId};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt::Debug;

/// The distributive law: reindex a rectangle (rows of cells) into a
/// pasting diagram (columns of cells). Pure transposition: the cell
/// multiset and both boundaries are unchanged, and every output column
/// has height equal to the row count.
pub fn lambda<E, C>(rect: &RectPd<E, C>) -> Result<Pd<E, C>>
where
    E: Clone + Eq + Ord + Debug,
    C: Clone + Eq + Ord + Debug,
{
    if !rect.well_shaped() {
        return Err(Error::Structural("lambda: rectangle malformed".into()));
    }
    let n = rect.width();
    let k = rect.row_count();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let mut inter = Vec::with_capacity(k.saturating_sub(1));
        for level in &rect.levels {
            inter.push(level[i].clone());
        }
        let cells = rect.rows.iter().map(|row| row[i].clone()).collect();
        cols.push(Column { inter, cells });
    }
    Ok(Pd {
        start: rect.start.clone(),
        src: rect.src.clone(),
        tgt: rect.tgt.clone(),
        cols,
    })
}

/// Independent coordinate-permutation oracle for [`lambda`]: index
/// every cell and intermediate by its (row, column) coordinates, then
/// read the map back in column-major order. Used by tests to confirm
/// the structural transpose against a second computation path.
pub fn lambda_by_coordinates<E, C>(rect: &RectPd<E, C>) -> Result<Pd<E, C>>
where
    E: Clone + Eq + Ord + Debug,
    C: Clone + Eq + Ord + Debug,
{
    if !rect.well_shaped() {
        return Err(Error::Structural("lambda: rectangle malformed".into()));
    }
    let mut cell_at: BTreeMap<(usize, usize), C> = BTreeMap::new();
    for (j, row) in rect.rows.iter().enumerate() {
        for (i, c) in row.iter().enumerate() {
            cell_at.insert((i, j), c.clone());
        }
    }
    let mut inter_at: BTreeMap<(usize, usize), E> = BTreeMap::new();
    for (j, level) in rect.levels.iter().enumerate() {
        for (i, e) in level.iter().enumerate() {
            inter_at.insert((i, j), e.clone());
        }
    }
    let k = rect.row_count();
    let cols = (0..rect.width())
        .map(|i| Column {
            inter: (0..k.saturating_sub(1))
                .map(|j| inter_at[&(i, j)].clone())
                .collect(),
            cells: (0..k).map(|j| cell_at[&(i, j)].clone()).collect(),
        })
        .collect();
    Ok(Pd {
        start: rect.start.clone(),
        src: rect.src.clone(),
        tgt: rect.tgt.clone(),
        cols,
    })
}

/// Inverse transpose: succeeds exactly on diagrams of uniform column
/// height. A width-0 diagram is sent to the 0-row rectangle.
pub fn rect_of_uniform_pd<E, C>(pd: &Pd<E, C>) -> Option<RectPd<E, C>>
where
    E: Clone + Eq,
    C: Clone,
{
    let k = pd.uniform_height()?;
    let n = pd.width();
    if n == 0 {
        return Some(RectPd {
            start: pd.start.clone(),
            src: Vec::new(),
            tgt: Vec::new(),
            levels: Vec::new(),
            rows: Vec::new(),
        });
    }
    let mut rows = Vec::with_capacity(k);
    for j in 0..k {
        rows.push(pd.cols.iter().map(|c| c.cells[j].clone()).collect());
    }
    let mut levels = Vec::with_capacity(k.saturating_sub(1));
    for j in 0..k.saturating_sub(1) {
        levels.push(pd.cols.iter().map(|c| c.inter[j].clone()).collect());
    }
    Some(RectPd {
        start: pd.start.clone(),
        src: pd.src.clone(),
        tgt: pd.tgt.clone(),
        levels,
        rows,
    })
}

/// Vertical join of two stacks sharing a boundary 1-cell.
pub fn join_vpaths<E, C>(lower: &VPath<E, C>, upper: &VPath<E, C>) -> Result<VPath<E, C>>
where
    E: Clone + Eq + Debug,
    C: Clone,
{
    if lower.tgt != upper.src {
        return Err(Error::NotComposable(format!(
            "vertical join: {:?} vs {:?}",
            lower.tgt, upper.src
        )));
    }
    let mut inter = lower.inter.clone();
    if !lower.cells.is_empty() && !upper.cells.is_empty() {
        inter.push(lower.tgt.clone());
    }
    inter.extend(upper.inter.iter().cloned());
    let mut cells = lower.cells.clone();
    cells.extend(upper.cells.iter().cloned());
    Ok(VPath {
        src: lower.src.clone(),
        tgt: upper.tgt.clone(),
        inter,
        cells,
    })
}

/// The vertical multiplication on one hom: flatten a stack of stacks.
/// The outer intermediates are the seams and must match the inner
/// endpoints.
pub fn vflatten<E, C>(outer: &VPath<E, VPath<E, C>>) -> Result<VPath<E, C>>
where
    E: Clone + Eq + Debug,
    C: Clone,
{
    if !outer.well_shaped() {
        return Err(Error::Structural("vflatten: outer stack malformed".into()));
    }
    let mut acc = VPath::identity(outer.src.clone());
    for (j, inner) in outer.cells.iter().enumerate() {
        let below = outer.level(j);
        let above = outer.level_above(j);
        if &inner.src != below || &inner.tgt != above {
            return Err(Error::NotComposable(format!(
                "vflatten: inner stack {j} does not match its seams"
            )));
        }
        acc = join_vpaths(&acc, inner)?;
    }
    Ok(acc)
}

/// Flatten a path of paths of edges.
pub fn gpath_flatten<E: Clone + Eq + Debug>(outer: &GPath<GPath<E>>) -> Result<GPath<E>> {
    let mut items = Vec::new();
    let mut at = outer.src.clone();
    for inner in &outer.items {
        if inner.src != at {
            return Err(Error::NotComposable(format!(
                "path flatten: segment starts at {} but previous ended at {at}",
                inner.src
            )));
        }
        items.extend(inner.items.iter().cloned());
        at = inner.tgt.clone();
    }
    if at != outer.tgt {
        return Err(Error::NotComposable(
            "path flatten: endpoint mismatch".into(),
        ));
    }
    Ok(GPath {
        src: outer.src.clone(),
        tgt: outer.tgt.clone(),
        items,
    })
}

/// Horizontal concatenation of diagrams (boundaries and columns in
/// order); 0-cell composability is the caller's concern.
pub fn hconcat_pds<E: Clone + Eq, C: Clone>(start: VertexId, pds: &[Pd<E, C>]) -> Pd<E, C> {
    let mut out = Pd::empty(start);
    for pd in pds {
        out.src.extend(pd.src.iter().cloned());
        out.tgt.extend(pd.tgt.iter().cloned());
        out.cols.extend(pd.cols.iter().cloned());
    }
    out
}

/// Relabel edges and cells of a diagram.
pub fn map_pd<E1, C1, E2, C2>(
    pd: &Pd<E1, C1>,
    edge_fn: &mut impl FnMut(&E1) -> Result<E2>,
    cell_fn: &mut impl FnMut(&C1) -> Result<C2>,
) -> Result<Pd<E2, C2>>
where
    E1: Clone,
    C1: Clone,
{
    let src = pd.src.iter().map(&mut *edge_fn).collect::<Result<_>>()?;
    let tgt = pd.tgt.iter().map(&mut *edge_fn).collect::<Result<_>>()?;
    let cols = pd
        .cols
        .iter()
        .map(|c| {
            Ok(Column {
                inter: c.inter.iter().map(&mut *edge_fn).collect::<Result<_>>()?,
                cells: c.cells.iter().map(&mut *cell_fn).collect::<Result<_>>()?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Pd {
        start: pd.start.clone(),
        src,
        tgt,
        cols,
    })
}

/// The unit of the composite monad as a pure shape: one column of
/// height one.
pub fn pd_unit<E: Clone + Eq, C>(start: VertexId, src: E, tgt: E, cell: C) -> Pd<E, C> {
    Pd {
        start,
        src: vec![src],
        tgt: vec![tgt],
        cols: vec![Column {
            inter: Vec::new(),
            cells: vec![cell],
        }],
    }
}

/// The unit over a concrete 2-graph: checks the cell is a member of
/// the hom at a parallel pair.
pub fn t_unit(graph: &TwoGraph, f: &str, g: &str, cell: &str) -> Result<TwoPd> {
    let hom = graph
        .hom_at(f, g)
        .ok_or_else(|| Error::Structural(format!("({f},{g}) is not a parallel pair")))?;
    if !hom.contains_point(cell) {
        return Err(Error::Structural(format!(
            "cell {cell} is not in hom({f},{g})"
        )));
    }
    let start = graph.src(f).unwrap().clone();
    Ok(pd_unit(start, f.to_string(), g.to_string(), cell.to_string()))
}

/// The multiplication of the composite monad: flatten a diagram whose
/// 1-cells are paths and whose 2-cells are diagrams.
///
/// The steps are fixed, in order: transpose each outer column's stack
/// of inner diagrams across the inner seam (the distributive law at
/// inner-diagram granularity), then flatten vertically within each
/// resulting column, then concatenate horizontally.
pub fn t_mult<E, C>(nested: &Pd<GPath<E>, Pd<E, C>>) -> Result<Pd<E, C>>
where
    E: Clone + Eq + Ord + Debug,
    C: Clone + Eq + Ord + Debug,
{
    if !nested.well_shaped() {
        return Err(Error::Structural("t_mult: outer diagram malformed".into()));
    }
    let mut blocks: Vec<Pd<E, C>> = Vec::new();
    for i in 0..nested.width() {
        let outer_col = nested.column_vpath(i);
        let width = outer_col.src.len();
        // Boundary sanity along the seams: every level is a path of
        // the same length, and the stacked diagrams match them.
        for level in std::iter::once(&outer_col.src)
            .chain(outer_col.inter.iter())
            .chain(std::iter::once(&outer_col.tgt))
        {
            if level.len() != width {
                return Err(Error::NotComposable(
                    "t_mult: seam paths of unequal length".into(),
                ));
            }
        }
        if outer_col.cells.is_empty() {
            // Identity 2-cell of a path: one height-0 column per edge.
            let cols = outer_col
                .src
                .items
                .iter()
                .map(|e| VPath::identity(e.clone()))
                .collect();
            blocks.push(Pd::from_columns(outer_col.src.src.clone(), cols));
            continue;
        }
        for (j, inner) in outer_col.cells.iter().enumerate() {
            let below = outer_col.level(j);
            let above = outer_col.level_above(j);
            if inner.src != below.items || inner.tgt != above.items {
                return Err(Error::NotComposable(format!(
                    "t_mult: inner diagram at column {i}, row {j} does not match its seams"
                )));
            }
        }
        // The distributive step: per position, gather each stacked
        // diagram's column and join them vertically through the seams.
        let mut columns = Vec::with_capacity(width);
        for p in 0..outer_col.src.items.len() {
            let mut acc = VPath::identity(outer_col.src.items[p].clone());
            for inner in outer_col.cells.iter() {
                acc = join_vpaths(&acc, &inner.column_vpath(p))?;
            }
            columns.push(acc);
        }
        blocks.push(Pd::from_columns(outer_col.src.src.clone(), columns));
    }
    Ok(hconcat_pds(nested.start.clone(), &blocks))
}

/// Relabel a base diagram into the nested form demanded by the right
/// unit law: every edge becomes a singleton path and every cell a
/// single-cell diagram.
pub fn wrap_unitwise(graph: &TwoGraph, pd: &TwoPd) -> Result<Pd<GPath<EdgeId>, TwoPd>> {
    let edge_path = |e: &EdgeId| -> Result<GPath<EdgeId>> {
        let (s, t) = graph
            .edges
            .get(e)
            .ok_or_else(|| Error::Structural(format!("unknown edge {e}")))?;
        Ok(GPath::single(s.clone(), t.clone(), e.clone()))
    };
    let mut cols = Vec::new();
    for i in 0..pd.width() {
        let v = pd.column_vpath(i);
        let mut cells = Vec::new();
        for (j, c) in v.cells.iter().enumerate() {
            let below = v.level(j).clone();
            let above = v.level_above(j).clone();
            let start = graph.src(&below).unwrap().clone();
            cells.push(pd_unit(start, below, above, c.clone()));
        }
        cols.push(VPath {
            src: edge_path(&v.src)?,
            tgt: edge_path(&v.tgt)?,
            inter: v.inter.iter().map(&edge_path).collect::<Result<_>>()?,
            cells,
        });
    }
    Ok(Pd::from_columns(pd.start.clone(), cols))
}

/// Wrap a diagram as the singleton nesting demanded by the left unit
/// law: one column of height one whose only cell is the diagram.
pub fn wrap_singleton(graph: &TwoGraph, pd: &TwoPd) -> Result<Pd<GPath<EdgeId>, TwoPd>> {
    let path_of = |edges: &[EdgeId], start: &VertexId| -> Result<GPath<EdgeId>> {
        let mut at = start.clone();
        for e in edges {
            let (s, t) = graph
                .edges
                .get(e)
                .ok_or_else(|| Error::Structural(format!("unknown edge {e}")))?;
            if *s != at {
                return Err(Error::NotComposable("boundary path broken".into()));
            }
            at = t.clone();
        }
        Ok(GPath {
            src: start.clone(),
            tgt: at,
            items: edges.to_vec(),
        })
    };
    let f = path_of(&pd.src, &pd.start)?;
    let g = path_of(&pd.tgt, &pd.start)?;
    Ok(pd_unit(pd.start.clone(), f, g, pd.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect_2x3() -> RectPd<&'static str, String> {
        // Width 2, three rows; labels record their coordinates.
        let cell = |i: usize, j: usize| format!("c{i}{j}");
        RectPd {
            start: "x".into(),
            src: vec!["f1", "f2"],
            tgt: vec!["g1", "g2"],
            levels: vec![vec!["h11", "h21"], vec!["h12", "h22"]],
            rows: (0..3).map(|j| (0..2).map(|i| cell(i, j)).collect()).collect(),
        }
    }

    #[test]
    fn lambda_transposes_a_grid() {
        let rect = rect_2x3();
        let pd = lambda(&rect).unwrap();
        assert_eq!(pd.width(), 2);
        assert!(pd.cols.iter().all(|c| c.height() == 3));
        assert_eq!(pd.cols[0].cells, vec!["c00", "c01", "c02"]);
        assert_eq!(pd.cols[1].cells, vec!["c10", "c11", "c12"]);
        assert_eq!(pd.cols[0].inter, vec!["h11", "h12"]);
        // Cell multiset preserved.
        let mut a = pd.cells();
        let mut b = rect.cells();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn lambda_agrees_with_coordinate_oracle() {
        let rect = rect_2x3();
        assert_eq!(lambda(&rect).unwrap(), lambda_by_coordinates(&rect).unwrap());
    }

    #[test]
    fn lambda_round_trips_with_transpose() {
        let rect = rect_2x3();
        let pd = lambda(&rect).unwrap();
        assert_eq!(rect_of_uniform_pd(&pd).unwrap(), rect);
    }

    #[test]
    fn lambda_on_single_cell_is_single_column() {
        let rect = RectPd {
            start: "x".to_string(),
            src: vec!["f"],
            tgt: vec!["g"],
            levels: vec![],
            rows: vec![vec!["c"]],
        };
        let pd = lambda(&rect).unwrap();
        assert_eq!(pd.width(), 1);
        assert_eq!(pd.cols[0].cells, vec!["c"]);
        assert!(pd.cols[0].inter.is_empty());
    }

    #[test]
    fn lambda_on_empty_boundary_is_empty_pd() {
        let rect: RectPd<&str, &str> = RectPd {
            start: "x".to_string(),
            src: vec![],
            tgt: vec![],
            levels: vec![],
            rows: vec![],
        };
        let pd = lambda(&rect).unwrap();
        assert_eq!(pd.width(), 0);
        assert_eq!(pd.cell_count(), 0);
    }

    #[test]
    fn join_inserts_seam_only_between_nonempty_stacks() {
        let a: VPath<&str, &str> = VPath::single("f", "h", "c1");
        let b: VPath<&str, &str> = VPath::single("h", "g", "c2");
        let joined = join_vpaths(&a, &b).unwrap();
        assert_eq!(joined.inter, vec!["h"]);
        assert_eq!(joined.cells, vec!["c1", "c2"]);
        let id: VPath<&str, &str> = VPath::identity("f");
        let kept = join_vpaths(&id, &a).unwrap();
        assert_eq!(kept, a);
    }
}
