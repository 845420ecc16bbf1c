//! Small standard structures used across tests, docs and the CLI.
//!
//! Everything here is constructed programmatically, validated in
//! tests, and deterministic.

use crate::base::{BaseObject, FiniteCategory};
use crate::wgraph::{TwoGraph, WGraph};
use std::collections::BTreeMap;

/// The empty category.
pub fn empty_category() -> FiniteCategory {
    FiniteCategory::default()
}

/// The terminal category: one object `*`, one morphism `id*`.
pub fn terminal_category() -> FiniteCategory {
    let mut cat = FiniteCategory {
        objects: vec!["*".into()],
        ..Default::default()
    };
    cat.morphisms.insert("id*".into(), ("*".into(), "*".into()));
    cat.identity.insert("*".into(), "id*".into());
    cat.compose
        .insert(("id*".into(), "id*".into()), "id*".into());
    cat
}

/// The walking arrow: objects `0 → 1`, morphisms `id0`, `id1`, `a`.
pub fn walking_arrow() -> FiniteCategory {
    let mut cat = FiniteCategory {
        objects: vec!["0".into(), "1".into()],
        ..Default::default()
    };
    cat.morphisms.insert("id0".into(), ("0".into(), "0".into()));
    cat.morphisms.insert("id1".into(), ("1".into(), "1".into()));
    cat.morphisms.insert("a".into(), ("0".into(), "1".into()));
    cat.identity.insert("0".into(), "id0".into());
    cat.identity.insert("1".into(), "id1".into());
    let t = |g: &str, f: &str, h: &str| ((g.to_string(), f.to_string()), h.to_string());
    cat.compose.extend([
        t("id0", "id0", "id0"),
        t("id1", "id1", "id1"),
        t("a", "id0", "a"),
        t("id1", "a", "a"),
    ]);
    cat
}

/// The discrete category on `n` objects `d0 … d{n-1}`.
pub fn discrete_category(n: usize) -> FiniteCategory {
    let mut cat = FiniteCategory::default();
    for i in 0..n {
        let x = format!("d{i}");
        let id = format!("id{i}");
        cat.objects.push(x.clone());
        cat.morphisms.insert(id.clone(), (x.clone(), x.clone()));
        cat.identity.insert(x.clone(), id.clone());
        cat.compose.insert((id.clone(), id.clone()), id);
    }
    cat
}

/// One-object category from a monoid multiplication table.
/// `table[i][j]` is the index of element `i · j`; `unit` its identity.
pub fn monoid_category(elements: &[&str], unit: usize, table: &[Vec<usize>]) -> FiniteCategory {
    let mut cat = FiniteCategory {
        objects: vec!["x".into()],
        ..Default::default()
    };
    for e in elements {
        cat.morphisms
            .insert((*e).to_string(), ("x".into(), "x".into()));
    }
    cat.identity.insert("x".into(), elements[unit].to_string());
    for (i, row) in table.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            // Composition g∘f applies f first; monoid rows are read as
            // table[g][f] = g·f.
            cat.compose.insert(
                (elements[i].to_string(), elements[j].to_string()),
                elements[k].to_string(),
            );
        }
    }
    cat
}

/// Z/n as a one-object category: morphisms `g0 … g{n-1}`, composition
/// addition mod n, identity `g0`.
pub fn cyclic_group_category(n: usize) -> FiniteCategory {
    let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    monoid_category(&refs, 0, &table)
}

// -------------------------------------------------------------------------
// Enriched graphs.

/// One vertex `v`, hom a singleton set (FinSet base).
pub fn point_graph() -> WGraph {
    WGraph {
        vertices: vec!["v".into()],
        hom: [(("v".into(), "v".into()), BaseObject::singleton_set("e"))]
            .into_iter()
            .collect(),
    }
}

/// One vertex with a single loop edge `e` (FinSet base).
pub fn loop_graph() -> WGraph {
    point_graph()
}

/// Two vertices `x → y` with a single connecting element `e` and empty
/// homs elsewhere (FinSet base).
pub fn edge_graph() -> WGraph {
    let mut hom = BTreeMap::new();
    for (a, b) in [("x", "x"), ("x", "y"), ("y", "x"), ("y", "y")] {
        hom.insert(
            (a.to_string(), b.to_string()),
            if (a, b) == ("x", "y") {
                BaseObject::singleton_set("e")
            } else {
                BaseObject::empty_set()
            },
        );
    }
    WGraph {
        vertices: vec!["x".into(), "y".into()],
        hom,
    }
}

/// One vertex with two loop elements `e1, e2` (FinSet base).
pub fn two_loop_graph() -> WGraph {
    WGraph {
        vertices: vec!["v".into()],
        hom: [(
            ("v".into(), "v".into()),
            BaseObject::Set(["e1".to_string(), "e2".to_string()].into_iter().collect()),
        )]
        .into_iter()
        .collect(),
    }
}

/// Three vertices `x → y → z` with single connecting elements and
/// empty homs elsewhere (FinSet base).
pub fn two_step_graph() -> WGraph {
    let verts = ["x", "y", "z"];
    let mut hom = BTreeMap::new();
    for a in verts {
        for b in verts {
            let obj = match (a, b) {
                ("x", "y") => BaseObject::singleton_set("e"),
                ("y", "z") => BaseObject::singleton_set("f"),
                _ => BaseObject::empty_set(),
            };
            hom.insert((a.to_string(), b.to_string()), obj);
        }
    }
    WGraph {
        vertices: verts.iter().map(|s| s.to_string()).collect(),
        hom,
    }
}

/// One vertex whose hom is the walking-arrow category (FinCat base).
pub fn arrow_hom_graph() -> WGraph {
    WGraph {
        vertices: vec!["v".into()],
        hom: [(("v".into(), "v".into()), BaseObject::Cat(walking_arrow()))]
            .into_iter()
            .collect(),
    }
}

/// 2-graph with one vertex, one loop edge `f`, and a one-element hom
/// at the single parallel pair (FinSet base).
pub fn loop_two_graph() -> TwoGraph {
    TwoGraph {
        vertices: vec!["v".into()],
        edges: [("f".into(), ("v".into(), "v".into()))].into_iter().collect(),
        hom: [(("f".into(), "f".into()), BaseObject::singleton_set("c"))]
            .into_iter()
            .collect(),
    }
}

/// 2-graph with two vertices and two parallel edges `f, g: x → y`,
/// with small set homs on all four parallel pairs.
pub fn parallel_pair_two_graph() -> TwoGraph {
    let mut edges = BTreeMap::new();
    edges.insert("f".to_string(), ("x".to_string(), "y".to_string()));
    edges.insert("g".to_string(), ("x".to_string(), "y".to_string()));
    let mut hom = BTreeMap::new();
    hom.insert(
        ("f".to_string(), "f".to_string()),
        BaseObject::singleton_set("cff"),
    );
    hom.insert(
        ("f".to_string(), "g".to_string()),
        BaseObject::Set(["cfg1".to_string(), "cfg2".to_string()].into_iter().collect()),
    );
    hom.insert(
        ("g".to_string(), "f".to_string()),
        BaseObject::empty_set(),
    );
    hom.insert(
        ("g".to_string(), "g".to_string()),
        BaseObject::singleton_set("cgg"),
    );
    TwoGraph {
        vertices: vec!["x".into(), "y".into()],
        edges,
        hom,
    }
}

/// 2-graph shaped like a composable pair of edges `x → y → z` with
/// singleton homs on the two self-parallel pairs.
pub fn two_step_two_graph() -> TwoGraph {
    let mut edges = BTreeMap::new();
    edges.insert("f".to_string(), ("x".to_string(), "y".to_string()));
    edges.insert("g".to_string(), ("y".to_string(), "z".to_string()));
    let mut hom = BTreeMap::new();
    hom.insert(
        ("f".to_string(), "f".to_string()),
        BaseObject::Set(["a1".to_string(), "a2".to_string()].into_iter().collect()),
    );
    hom.insert(
        ("g".to_string(), "g".to_string()),
        BaseObject::Set(["b1".to_string(), "b2".to_string()].into_iter().collect()),
    );
    TwoGraph {
        vertices: vec!["x".into(), "y".into(), "z".into()],
        edges,
        hom,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::validate_category;

    #[test]
    fn all_category_fixtures_validate() {
        for cat in [
            empty_category(),
            terminal_category(),
            walking_arrow(),
            discrete_category(3),
            cyclic_group_category(2),
            cyclic_group_category(3),
            cyclic_group_category(4),
        ] {
            assert!(validate_category(&cat).unwrap().passed());
        }
    }
}
