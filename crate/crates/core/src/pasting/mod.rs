//! 2-dimensional globular pasting diagrams and the distributive law.
//!
//! Two free-category monads act on enriched 2-graphs: a *vertical* one
//! that freely composes 2-cells within each hom, and a *horizontal*
//! one that freely composes 1-cells. Their composite is generated by
//! the distributive law [`lambda`], which reindexes a rectangular
//! arrangement (rows of cells, composed horizontally then vertically)
//! into a general pasting diagram (columns of independent heights,
//! composed vertically then horizontally). Everything in this module
//! is a pure, structural operation on labeled shapes; validation
//! against a particular 2-graph is separate.
//!
//! Heights here count *cells*: a column of height 0 is the identity
//! 2-cell of its boundary 1-cell, height 1 is a single cell with no
//! intermediate 1-cells, and height `k` has `k − 1` intermediates.

mod beck;
mod enumerate;
mod ops;

pub use beck::{
    check_beck_axioms, check_beck_axioms_with, check_t_monad_laws, grouped_columns, grouped_rows,
    LambdaFn,
};
pub use enumerate::{
    enumerate_cells, enumerate_gpaths, enumerate_nested_pds, enumerate_pds, enumerate_rect_pds,
    enumerate_vchains, pd_count_oracle_single_loop,
};
pub use ops::{
    gpath_flatten, hconcat_pds, join_vpaths, lambda, lambda_by_coordinates, map_pd, pd_unit,
    rect_of_uniform_pd, t_mult, t_unit, vflatten,
};

use crate::base::ElemId;
use crate::report::ValidationReport;
use crate::wgraph::{EdgeId, TwoGraph, VertexId};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A 1-cell of a free category: a composable sequence of edge labels
/// with explicit endpoints, so the empty path knows where it sits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GPath<E> {
    pub src: VertexId,
    pub tgt: VertexId,
    pub items: Vec<E>,
}

impl<E: Clone> GPath<E> {
    pub fn empty(at: impl Into<VertexId>) -> Self {
        let v = at.into();
        GPath {
            src: v.clone(),
            tgt: v,
            items: Vec::new(),
        }
    }

    pub fn single(src: impl Into<VertexId>, tgt: impl Into<VertexId>, item: E) -> Self {
        GPath {
            src: src.into(),
            tgt: tgt.into(),
            items: vec![item],
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// A vertical path of 2-cells between parallel 1-cells: an element of
/// the vertical free monad at one hom. `inter` has one entry between
/// each pair of consecutive cells.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VPath<E, C> {
    pub src: E,
    pub tgt: E,
    pub inter: Vec<E>,
    pub cells: Vec<C>,
}

impl<E: Clone + Eq, C> VPath<E, C> {
    pub fn identity(edge: E) -> Self {
        VPath {
            src: edge.clone(),
            tgt: edge,
            inter: Vec::new(),
            cells: Vec::new(),
        }
    }

    pub fn single(src: E, tgt: E, cell: C) -> Self {
        VPath {
            src,
            tgt,
            inter: Vec::new(),
            cells: vec![cell],
        }
    }

    pub fn height(&self) -> usize {
        self.cells.len()
    }

    pub fn well_shaped(&self) -> bool {
        (self.cells.is_empty() && self.inter.is_empty() && self.src == self.tgt)
            || (!self.cells.is_empty() && self.inter.len() + 1 == self.cells.len())
    }

    /// The boundary 1-cell below cell `i`.
    pub fn level(&self, i: usize) -> &E {
        if i == 0 {
            &self.src
        } else {
            &self.inter[i - 1]
        }
    }

    /// The boundary 1-cell above cell `i`.
    pub fn level_above(&self, i: usize) -> &E {
        if i + 1 == self.cells.len() {
            &self.tgt
        } else {
            &self.inter[i]
        }
    }
}

/// A horizontal path of 2-cells: an element of the horizontal free
/// monad. Cell `i` runs `src[i] ⇒ tgt[i]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HPath<E, C> {
    pub start: VertexId,
    pub src: Vec<E>,
    pub tgt: Vec<E>,
    pub cells: Vec<C>,
}

impl<E, C> HPath<E, C> {
    pub fn width(&self) -> usize {
        self.cells.len()
    }

    pub fn well_shaped(&self) -> bool {
        self.src.len() == self.cells.len() && self.tgt.len() == self.cells.len()
    }
}

/// One column of a pasting diagram. The boundary 1-cells live on the
/// enclosing [`Pd`]; `inter` has `cells.len() − 1` entries (none for
/// heights 0 and 1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Column<E, C> {
    pub inter: Vec<E>,
    pub cells: Vec<C>,
}

impl<E, C> Column<E, C> {
    pub fn height(&self) -> usize {
        self.cells.len()
    }

    pub fn well_shaped(&self) -> bool {
        (self.cells.is_empty() && self.inter.is_empty())
            || (!self.cells.is_empty() && self.inter.len() + 1 == self.cells.len())
    }
}

/// A 2-dimensional globular pasting diagram: parallel boundary 1-cell
/// paths `src` and `tgt` of equal length, and one column per position,
/// each of independent height. `start` is the leftmost 0-cell, which
/// carries the whole diagram when the boundary is empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pd<E, C> {
    pub start: VertexId,
    pub src: Vec<E>,
    pub tgt: Vec<E>,
    pub cols: Vec<Column<E, C>>,
}

/// The concrete pasting diagram over a 2-graph.
pub type TwoPd = Pd<EdgeId, ElemId>;

/// A pasting-diagram-shaped morphism: each 2-cell entry replaced by a
/// morphism of the corresponding hom category (a 3-cell). Only
/// meaningful over a `FinCat`-based 2-graph.
pub type PdMorphism = Pd<EdgeId, ElemId>;

impl<E: Clone + Eq, C: Clone> Pd<E, C> {
    pub fn width(&self) -> usize {
        self.cols.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cols.iter().map(|c| c.height()).sum()
    }

    pub fn empty(at: impl Into<VertexId>) -> Self {
        Pd {
            start: at.into(),
            src: Vec::new(),
            tgt: Vec::new(),
            cols: Vec::new(),
        }
    }

    pub fn well_shaped(&self) -> bool {
        self.src.len() == self.tgt.len()
            && self.cols.len() == self.src.len()
            && self.cols.iter().all(|c| c.well_shaped())
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(i, c)| !c.cells.is_empty() || self.src[i] == self.tgt[i])
    }

    /// Column `i` with its boundary 1-cells attached.
    pub fn column_vpath(&self, i: usize) -> VPath<E, C> {
        VPath {
            src: self.src[i].clone(),
            tgt: self.tgt[i].clone(),
            inter: self.cols[i].inter.clone(),
            cells: self.cols[i].cells.clone(),
        }
    }

    /// All cells in column-major order (the canonical multiset order
    /// for preservation checks is obtained by sorting).
    pub fn cells(&self) -> Vec<C> {
        self.cols.iter().flat_map(|c| c.cells.iter().cloned()).collect()
    }

    /// Do all columns have the same height?
    pub fn uniform_height(&self) -> Option<usize> {
        let mut heights = self.cols.iter().map(|c| c.height());
        match heights.next() {
            None => Some(0),
            Some(h) => heights.all(|x| x == h).then_some(h),
        }
    }

    pub fn from_columns(start: VertexId, columns: Vec<VPath<E, C>>) -> Self {
        let mut pd = Pd {
            start,
            src: Vec::new(),
            tgt: Vec::new(),
            cols: Vec::new(),
        };
        for v in columns {
            pd.src.push(v.src);
            pd.tgt.push(v.tgt);
            pd.cols.push(Column {
                inter: v.inter,
                cells: v.cells,
            });
        }
        pd
    }
}

/// A rectangular arrangement: `rows.len()` rows of equal width, with
/// the intermediate boundary paths stored between them. This is the
/// element form of "compose horizontally, then vertically".
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RectPd<E, C> {
    pub start: VertexId,
    pub src: Vec<E>,
    pub tgt: Vec<E>,
    /// `rows.len() − 1` full-width intermediate paths.
    pub levels: Vec<Vec<E>>,
    pub rows: Vec<Vec<C>>,
}

impl<E: Clone + Eq, C: Clone> RectPd<E, C> {
    pub fn width(&self) -> usize {
        self.src.len()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn well_shaped(&self) -> bool {
        let n = self.src.len();
        self.tgt.len() == n
            && self.rows.iter().all(|r| r.len() == n)
            && self.levels.iter().all(|l| l.len() == n)
            && (if self.rows.is_empty() {
                self.levels.is_empty() && self.src == self.tgt
            } else {
                self.levels.len() + 1 == self.rows.len()
            })
    }

    /// The boundary path below row `j`.
    pub fn level(&self, j: usize) -> &Vec<E> {
        if j == 0 {
            &self.src
        } else {
            &self.levels[j - 1]
        }
    }

    /// The boundary path above row `j`.
    pub fn level_above(&self, j: usize) -> &Vec<E> {
        if j + 1 == self.rows.len() {
            &self.tgt
        } else {
            &self.levels[j]
        }
    }

    pub fn cells(&self) -> Vec<C> {
        self.rows.iter().flat_map(|r| r.iter().cloned()).collect()
    }
}

// -------------------------------------------------------------------------
// Validation against a 2-graph.

/// Validate a pasting diagram over a 2-graph: boundary paths
/// composable and parallel positionwise, columns running through
/// parallel intermediates with cells in the right hom objects.
pub fn validate_pd(graph: &TwoGraph, pd: &TwoPd) -> Result<ValidationReport> {
    graph.check_structure()?;
    let mut report = ValidationReport::new();
    if !pd.well_shaped() {
        return Err(Error::Structural("pasting diagram malformed".into()));
    }
    let mut at = pd.start.clone();
    if !graph.vertices.contains(&at) {
        return Err(Error::Structural(format!("unknown start vertex {at}")));
    }
    for (i, f) in pd.src.iter().enumerate() {
        let Some((fs, ft)) = graph.edges.get(f) else {
            return Err(Error::Structural(format!("unknown edge {f}")));
        };
        report.check(
            *fs == at,
            "boundary-composability",
            || format!("src[{i}]={f}"),
            || format!("edge {f} starts at {fs}, expected {at}"),
        );
        at = ft.clone();
        let g = &pd.tgt[i];
        report.check(
            graph.parallel(f, g),
            "boundary-parallel",
            || format!("position {i}"),
            || format!("tgt[{i}]={g} is not parallel to src[{i}]={f}"),
        );
    }
    for (i, col) in pd.cols.iter().enumerate() {
        let v = pd.column_vpath(i);
        for e in &col.inter {
            report.check(
                graph.parallel(&pd.src[i], e),
                "column-intermediate",
                || format!("column {i}, edge {e}"),
                || format!("intermediate {e} not parallel to {}", pd.src[i]),
            );
        }
        for (j, cell) in col.cells.iter().enumerate() {
            let below = v.level(j);
            let above = v.level_above(j);
            let ok = graph
                .hom_at(below, above)
                .map(|h| h.contains_point(cell))
                .unwrap_or(false);
            report.check(
                ok,
                "cell-membership",
                || format!("column {i}, cell {j}"),
                || format!("cell {cell} is not in hom({below},{above})"),
            );
        }
    }
    Ok(report)
}

/// Validate a rectangular arrangement over a 2-graph.
pub fn validate_rect(graph: &TwoGraph, rect: &RectPd<EdgeId, ElemId>) -> Result<ValidationReport> {
    if !rect.well_shaped() {
        return Err(Error::Structural("rectangle malformed".into()));
    }
    // A rectangle is validated through its transpose: same cells, same
    // boundaries, plus the per-row membership derived from levels.
    let pd = lambda(rect)?;
    validate_pd(graph, &pd)
}

// -------------------------------------------------------------------------
// serde for the concrete diagram: the documented column layout with an
// explicit redundant height.

#[derive(Serialize, Deserialize)]
struct ColumnRecord {
    height: usize,
    inter: Vec<EdgeId>,
    cells: Vec<ElemId>,
}

#[derive(Serialize, Deserialize)]
struct PdRecord {
    at: VertexId,
    boundary_src: Vec<EdgeId>,
    boundary_tgt: Vec<EdgeId>,
    columns: Vec<ColumnRecord>,
}

impl Serialize for TwoPd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PdRecord {
            at: self.start.clone(),
            boundary_src: self.src.clone(),
            boundary_tgt: self.tgt.clone(),
            columns: self
                .cols
                .iter()
                .map(|c| ColumnRecord {
                    height: c.height(),
                    inter: c.inter.clone(),
                    cells: c.cells.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TwoPd {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = PdRecord::deserialize(d)?;
        let mut cols = Vec::new();
        for (i, c) in rec.columns.into_iter().enumerate() {
            if c.height != c.cells.len() {
                return Err(serde::de::Error::custom(format!(
                    "column {i}: declared height {} but {} cells",
                    c.height,
                    c.cells.len()
                )));
            }
            cols.push(Column {
                inter: c.inter,
                cells: c.cells,
            });
        }
        Ok(Pd {
            start: rec.at,
            src: rec.boundary_src,
            tgt: rec.boundary_tgt,
            cols,
        })
    }
}

/// Test hooks exposing deliberately wrong implementations so the law
/// checkers can demonstrate they catch them.
pub mod testhooks {
    use super::*;

    /// A corrupted distributive law that swaps the first two columns
    /// of the output whenever there are at least two.
    pub fn lambda_swapped(rect: &RectPd<EdgeId, ElemId>) -> Result<TwoPd> {
        let mut pd = lambda(rect)?;
        if pd.width() >= 2 {
            pd.cols.swap(0, 1);
            pd.src.swap(0, 1);
            pd.tgt.swap(0, 1);
        }
        Ok(pd)
    }
}
