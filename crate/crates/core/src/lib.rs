//! A verification kernel for finite enriched category theory.
//!
//! Everything here is desk-scale and exhaustive: categories, functors,
//! graphs and pasting diagrams are finite tables, and the algebraic laws
//! (monad laws, distributive laws, coherence axioms) are checked
//! element-by-element within caller-supplied bounds instead of being
//! assumed.
//!
//! The layers, bottom up:
//!
//! * [`base`] — finite categories, functors, natural transformations,
//!   products/coproducts, exhaustive functor enumeration, and the
//!   (bijective-on-objects, fully-faithful) factorization.
//! * [`wgraph`] — graphs enriched in a base (`FinSet` or `FinCat`),
//!   their hom formula, and enriched 2-graphs.
//! * [`freecat`] — the free enriched category on a graph: path cells,
//!   unit/multiplication, monad-law checking, and the colax
//!   rearrangement map for tensor graphs.
//! * [`pasting`] — 2-dimensional globular pasting diagrams, the
//!   rectangular special case, the distributive law between the
//!   horizontal and vertical free-category monads, and the composite
//!   pasting monad they generate.
//! * [`algebras`] — strict algebras: enriched categories, strict
//!   3-categories, pasting-diagram evaluation, icons.
//! * [`pseudo`] — finite bicategories, pseudofunctors, pseudo icons,
//!   unbiased structures, strictification, and iconic tricategories.
//! * [`counterexample`] — finite braided monoidal categories from
//!   bicharacters, their embedding as doubly-degenerate pseudo
//!   algebras, and the machine-checked witness that such an algebra is
//!   not equivalent to any strict one.

pub mod algebras;
pub mod base;
pub mod counterexample;
pub mod fixtures;
pub mod freecat;
pub mod par;
pub mod pasting;
pub mod pseudo;
pub mod report;
pub mod wgraph;

use thiserror::Error;

/// Version string embedded in every CLI report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Errors that are structural (malformed input, exhausted caps), as
/// opposed to axiom violations, which are reported through
/// [`report::ValidationReport`] so they can be listed exhaustively.
#[derive(Debug, Error)]
pub enum Error {
    /// Dangling ids, missing table entries, inconsistent tags: the
    /// input does not even parse as the structure it claims to be.
    #[error("structural error: {0}")]
    Structural(String),

    /// An enumeration would exceed its size cap. Never silently
    /// truncated; the caller must raise the cap explicitly.
    #[error("search too large: {candidates} candidates exceed cap {cap} ({context})")]
    SizeCap {
        context: String,
        candidates: u128,
        cap: u128,
    },

    /// Cells or paths that are required to be composable are not.
    #[error("not composable: {0}")]
    NotComposable(String),

    /// A precondition of an operation failed (e.g. asking for a
    /// counterexample witness from a symmetric braiding).
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// JSON did not match the documented schema.
    #[error("schema error: {0}")]
    Schema(String),
}

/// Shorthand used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Default cap on enumeration candidate counts (overridable).
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// Bounds threaded through every bounded law check. The free
/// constructions are infinite on cyclic input, so all quantifiers
/// range over elements within these bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Maximum length of 1-cell paths.
    pub max_path_len: usize,
    /// Maximum number of 2-cells in a pasting diagram.
    pub max_cells: usize,
    /// Cap on enumeration candidate counts.
    pub cap: u128,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_path_len: 3,
            max_cells: 4,
            cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl Bounds {
    pub fn with_cells(max_cells: usize) -> Self {
        Bounds {
            max_cells,
            ..Bounds::default()
        }
    }
}
