//! Finite categories, functors, natural transformations, and the
//! (bijective-on-objects, fully-faithful) factorization.
//!
//! This is the base of enrichment: hom-objects of enriched graphs live
//! in `FinSet` (a finite set) or `FinCat` (a [`FiniteCategory`]). Both
//! are presented as explicit tables keyed by string ids, so an axiom
//! failure can always be reported verbatim at the offending ids.

mod category;
mod enumerate;
mod factorize;
mod functor;

pub use category::{coproduct, product, product_many, validate_category, FiniteCategory};
pub use enumerate::{
    are_isomorphic, enumerate_functors, enumerate_nat_trans, functor_category, hom_set_count,
};
pub use factorize::{enhanced_lifting, factorize_bo_ff, is_fully_faithful, Factorization};
pub use functor::{compose_functors, identity_functor, FiniteFunctor, FiniteNatTrans};

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Object id. Globally unique strings within one category.
pub type ObjId = String;
/// Morphism id. Globally unique strings within one category.
pub type MorId = String;
/// Element id of a finite set.
pub type ElemId = String;

/// An object of the enrichment base: a finite set or a finite
/// category. The tag must be consistent across any single enrichment
/// base instance (a graph whose homs mix sets and categories is
/// malformed).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BaseObject {
    /// An object of `FinSet`.
    #[serde(rename = "set")]
    Set(BTreeSet<ElemId>),
    /// An object of `FinCat`.
    #[serde(rename = "cat")]
    Cat(FiniteCategory),
}

impl BaseObject {
    pub fn empty_set() -> Self {
        BaseObject::Set(BTreeSet::new())
    }

    pub fn singleton_set(elem: impl Into<ElemId>) -> Self {
        BaseObject::Set(std::iter::once(elem.into()).collect())
    }

    pub fn is_set(&self) -> bool {
        matches!(self, BaseObject::Set(_))
    }

    /// Point count: set cardinality, or object count of the category.
    pub fn point_count(&self) -> usize {
        match self {
            BaseObject::Set(s) => s.len(),
            BaseObject::Cat(c) => c.objects.len(),
        }
    }

    /// The "elements" that path and pasting cells may carry: set
    /// elements, or objects of the category.
    pub fn points(&self) -> Vec<ElemId> {
        match self {
            BaseObject::Set(s) => s.iter().cloned().collect(),
            BaseObject::Cat(c) => c.objects.clone(),
        }
    }

    pub fn contains_point(&self, e: &str) -> bool {
        match self {
            BaseObject::Set(s) => s.contains(e),
            BaseObject::Cat(c) => c.objects.iter().any(|o| o == e),
        }
    }

    /// Cartesian/categorical product of base objects. Tags must agree.
    pub fn tensor(&self, other: &BaseObject) -> crate::Result<BaseObject> {
        match (self, other) {
            (BaseObject::Set(a), BaseObject::Set(b)) => Ok(BaseObject::Set(
                a.iter()
                    .flat_map(|x| b.iter().map(move |y| pair_id(x, y)))
                    .collect(),
            )),
            (BaseObject::Cat(a), BaseObject::Cat(b)) => Ok(BaseObject::Cat(product(a, b))),
            _ => Err(crate::Error::Structural(
                "tensor of base objects with different tags (set vs cat)".into(),
            )),
        }
    }
}

/// Canonical id for a pair, used by products and tensor graphs.
pub fn pair_id(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// Split a canonical pair id back into components. Only splits ids
/// produced by [`pair_id`]; the left component may itself be a pair,
/// so the split is at the top-level comma.
pub fn split_pair_id(id: &str) -> Option<(String, String)> {
    let inner = id.strip_prefix('(')?.strip_suffix(')')?;
    let mut depth = 0usize;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                return Some((inner[..i].to_string(), inner[i + 1..].to_string()));
            }
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_ids_round_trip_even_when_nested() {
        let p = pair_id(&pair_id("a", "b"), "c");
        assert_eq!(p, "((a,b),c)");
        let (l, r) = split_pair_id(&p).unwrap();
        assert_eq!(l, "(a,b)");
        assert_eq!(r, "c");
    }

    #[test]
    fn tensor_rejects_mixed_tags() {
        let s = BaseObject::singleton_set("x");
        let c = BaseObject::Cat(crate::fixtures::terminal_category());
        assert!(s.tensor(&c).is_err());
    }
}
