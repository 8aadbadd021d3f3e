use std::collections::BTreeMap;

use rkdual_core::cells::*;
use rkdual_core::corpus;
use rkdual_core::linalg::{HomologyGroup, Ring};
use rkdual_core::simplicial::KSpaceMap;

#[test]
fn ball_complexes_pass_their_checks() {
    for (name, ks) in corpus::all() {
        let balls = ball_complex(&ks);
        let report = check_ball_complex(&ks, &balls);
        assert!(report.passed(), "{name}: {report:?}");
    }
}

#[test]
fn cell_census() {
    let census = |ks| ball_complex(&ks).census();
    assert_eq!(census(corpus::edge()), vec![3, 2]);
    assert_eq!(census(corpus::solid_triangle()), vec![7, 9, 3]);
    assert_eq!(census(corpus::hexagon()), vec![12, 12]);
    let edge = corpus::edge();
    let balls = ball_complex(&edge);
    let names: Vec<String> = balls.cells.iter().map(|c| cell_name(&edge, c.top, c.sigma)).collect();
    assert_eq!(names, ["(a|a)", "(b|b)", "(a,b|a)", "(a,b|b)", "(a,b|a,b)"]);
}

#[test]
fn cellular_complexes() {
    for (name, ks) in corpus::all() {
        let cc = cellular_complex(&ks, &OrientationPair::standard(&ks)).unwrap();
        check_boundary_formula(&cc).unwrap_or_else(|e| panic!("{name}: {e}"));
        check_codimension_one(&cc, &ball_complex(&ks)).unwrap_or_else(|e| panic!("{name}: {e}"));
        let cells = cc.complex().underlying().homology(Ring::Integers).unwrap();
        let simplices = ks.x.chain_complex().homology(Ring::Integers).unwrap();
        assert_eq!(cells, simplices, "{name}");
        let p = phi(&cc).unwrap();
        assert!(p.map.is_basis_bijection() && p.map.is_diagonal(), "{name}");
        assert!(p.map.is_chain_map(), "{name}");
    }
    let hex = corpus::hexagon();
    let cc = cellular_complex(&hex, &OrientationPair::standard(&hex)).unwrap();
    assert_eq!(cc.complex().ranks(), BTreeMap::from([(0, 12), (1, 12)]));
    let h = cc.complex().underlying().homology(Ring::Integers).unwrap();
    assert_eq!(h[&1], HomologyGroup { betti: 1, torsion: vec![] });
}

#[test]
fn naturality_for_the_hexagon() {
    let f = corpus::hexagon_to_circle();
    let from = cellular_complex(&f.source, &OrientationPair::standard(&f.source)).unwrap();
    let to = cellular_complex(&f.target, &OrientationPair::standard(&f.target)).unwrap();
    assert!(check_naturality(&f, &from, &to).unwrap());
    let fk = induced_ball_map(&f, &from, &to).unwrap();
    assert!(fk.is_chain_map());
    let one_cells = fk.component(1);
    for col in one_cells.columns() {
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].1.abs(), 1);
    }
    let id = KSpaceMap::identity(f.target.clone());
    assert!(check_naturality(&id, &to, &to).unwrap());
}

#[test]
fn orientation_rule_is_enforced() {
    let ks = corpus::edge();
    let mut o = OrientationPair::standard(&ks);
    assert_eq!(o.signs, vec![1, 1, -1]);
    o.signs[2] = 1;
    assert!(cellular_complex(&ks, &o).is_err());
}
