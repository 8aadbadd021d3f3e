//! Small named K-spaces and maps used as fixtures.

use std::sync::Arc;

use crate::simplicial::{KSpace, KSpaceMap, SimplicialComplex, SimplicialMap};

fn complex(vertices: &[&str], facets: &[&[&str]]) -> Arc<SimplicialComplex> {
    let facets: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
    Arc::new(SimplicialComplex::from_named(vertices, &facets).expect("fixture complexes are valid"))
}

fn kspace(x: &Arc<SimplicialComplex>, k: &Arc<SimplicialComplex>, assignment: &[(&str, &str)]) -> KSpace {
    let map = assignment
        .iter()
        .map(|&(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let pi = SimplicialMap::from_names(x.clone(), k.clone(), &map).expect("fixture maps are simplicial");
    KSpace::from_map(pi)
}

/// A point over itself.
pub fn point() -> KSpace {
    KSpace::identity(complex(&["p"], &[&["p"]]))
}

/// The edge `ab` over itself.
pub fn edge() -> KSpace {
    KSpace::identity(complex(&["a", "b"], &[&["a", "b"]]))
}

/// The triangle `abc` collapsed onto the edge `uv` by `a ↦ u`, `b, c ↦ v`.
pub fn triangle() -> KSpace {
    let x = complex(&["a", "b", "c"], &[&["a", "b", "c"]]);
    let k = complex(&["u", "v"], &[&["u", "v"]]);
    kspace(&x, &k, &[("a", "u"), ("b", "v"), ("c", "v")])
}

/// The boundary of the triangle `abc` over itself.
pub fn circle() -> KSpace {
    KSpace::identity(complex(&["a", "b", "c"], &[&["a", "b"], &["b", "c"], &["a", "c"]]))
}

/// The hexagon `x0 … x5` wrapped twice around the boundary of `abc`.
pub fn hexagon() -> KSpace {
    let names = ["x0", "x1", "x2", "x3", "x4", "x5"];
    let edges: Vec<[&str; 2]> = (0..6).map(|i| [names[i], names[(i + 1) % 6]]).collect();
    let edge_refs: Vec<&[&str]> = edges.iter().map(|e| &e[..]).collect();
    let x = complex(&names, &edge_refs);
    let k = circle().k;
    let targets = ["a", "b", "c"];
    let assignment: Vec<(&str, &str)> = (0..6).map(|i| (names[i], targets[i % 3])).collect();
    kspace(&x, &k, &assignment)
}

/// The full triangle over itself.
pub fn solid_triangle() -> KSpace {
    KSpace::identity(complex(&["a", "b", "c"], &[&["a", "b", "c"]]))
}

/// The projection of the hexagon onto the circle, as a map of K-spaces.
pub fn hexagon_to_circle() -> KSpaceMap {
    let hex = hexagon();
    let circ = circle();
    let map = hex.pi.clone();
    KSpaceMap::new(hex, circ, map).expect("the projection commutes with the controls")
}

/// All fixtures with their short names.
pub fn all() -> Vec<(&'static str, KSpace)> {
    vec![
        ("PT", point()),
        ("EDGE", edge()),
        ("TRI", triangle()),
        ("CIRC3", circle()),
        ("HEX", hexagon()),
        ("ID2", solid_triangle()),
    ]
}
