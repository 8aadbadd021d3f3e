use std::collections::BTreeMap;
use std::sync::Arc;

use rkdual_core::cells::{cellular_complex, pushforward, OrientationPair};
use rkdual_core::corpus;
use rkdual_core::linalg::Matrix;
use rkdual_core::rk::*;
use rkdual_core::simplicial::SimplicialComplex;
use rkdual_core::tensor::*;

fn concentrated(k: &Arc<SimplicialComplex>, label: usize, q: i32) -> Arc<RKComplex> {
    let modules = [(q, vec![Generator::new(label, "g")])].into_iter().collect();
    Arc::new(RKComplex::new(k.clone(), Order::Original, modules, BTreeMap::new()).unwrap())
}

fn simplex(k: &SimplicialComplex, names: &[&str]) -> usize {
    let verts: Vec<usize> = names.iter().map(|n| k.vertex_index(n).unwrap()).collect();
    k.index_of(&verts).unwrap()
}

#[test]
fn hom_of_single_generators_follows_support() {
    let k = corpus::edge().k;
    let (a, ab) = (simplex(&k, &["a"]), simplex(&k, &["a", "b"]));
    let rank = |s: usize, t: usize| hom_rk(&concentrated(&k, s, 0), &concentrated(&k, t, 0)).unwrap().complex.total_rank();
    assert_eq!(rank(a, ab), 1);
    assert_eq!(rank(ab, a), 0);
    assert_eq!(rank(a, a), 1);
}

#[test]
fn hom_of_edge_cochains() {
    let k = corpus::edge().k;
    let dk = delta_star_k(&k);
    let hom = hom_rk(&dk, &dk).unwrap();
    assert_eq!(hom.complex.total_rank(), 5);
    assert_eq!(hom.complex.ranks(), BTreeMap::from([(-1, 2), (0, 3)]));
}

#[test]
fn epsilon_on_single_generators() {
    let k = corpus::point().k;
    for (q, sign) in [(0, 1), (1, -1), (2, 1)] {
        let e = epsilon(&concentrated(&k, 0, q));
        assert_eq!(e.component(q).to_dense(), vec![vec![sign]], "degree {q}");
    }
}

#[test]
fn epsilon_is_natural_on_the_hexagon() {
    let f = corpus::hexagon_to_circle();
    let hex = cellular_complex(&f.source, &OrientationPair::standard(&f.source)).unwrap();
    let circ = cellular_complex(&f.target, &OrientationPair::standard(&f.target)).unwrap();
    let push = pushforward(&f, &hex, &circ).unwrap();
    let (dx, dk) = (Arc::new(dual_star(&hex.delta)), Arc::new(dual_star(&circ.delta)));
    let (ddx, ddk) = (Arc::new(dual_star(&dx)), Arc::new(dual_star(&dk)));
    let pull = dual_map(&push, dk, dx).unwrap();
    let push2 = dual_map(&pull, ddx, ddk).unwrap();
    let (ex, ek) = (epsilon(&hex.delta), epsilon(&circ.delta));
    assert!(ex.is_chain_map());
    assert_eq!(push2.then(&ek).unwrap(), ex.then(&push).unwrap());
}

#[test]
fn hexagon_geometric_ranks_and_labels() {
    let ks = corpus::hexagon();
    let d = delta_complexes(&ks).unwrap();
    assert_eq!(d.delta.ranks(), BTreeMap::from([(0, 6), (1, 6)]));
    let census = d.delta.ranks_by_label();
    for s in 0..ks.k.len() {
        assert_eq!(census.get(&(s, ks.k.dim(s))), Some(&2), "{}", ks.k.simplex_name(s));
    }
    assert_eq!(census.values().sum::<usize>(), 12);
}

#[test]
fn star_sequences_on_the_corpus() {
    for (name, ks) in corpus::all() {
        let d = delta_complexes(&ks).unwrap();
        for sigma in 0..ks.k.len() {
            check_full(&ks.k, &ks.k.star(sigma)).unwrap();
            assert!(star_sequence(&d.delta, sigma).is_ok(), "{name} at {}", ks.k.simplex_name(sigma));
        }
        assert!(matches!(star_sequence(&d.delta_star, 0), Err(rkdual_core::Error::OrderMismatch(_))));
    }
}

#[test]
fn two_vertices_form_a_full_subset() {
    let ks = corpus::edge();
    let k = &ks.k;
    let pair = [simplex(k, &["a"]), simplex(k, &["b"])];
    check_full(k, &pair).unwrap();
    let d = delta_complexes(&ks).unwrap();
    let c = assemble(&d.delta, &pair).unwrap();
    assert_eq!(c.ranks(), &BTreeMap::from([(0, 2)]));
    assert!(c.differential(0).is_zero());
}

#[test]
fn tensor_over_the_edge() {
    let ks = corpus::edge();
    let d = delta_complexes(&ks).unwrap();
    let t = duality(&d.delta_star, &delta_star_k(&ks.k)).unwrap();
    assert_eq!(t.complex().ranks(), BTreeMap::from([(0, 3), (1, 2)]));
}

#[test]
fn over_a_point_both_tensor_products_agree() {
    let ks = corpus::point();
    let d = delta_complexes(&ks).unwrap();
    let dk = delta_star_k(&ks.k);
    let full = tensor_r(&d.delta, &dk).unwrap();
    let star = tensor_k(&d.delta, &dk).unwrap();
    assert_eq!(full.complex.ranks(), star.complex.ranks());
    assert!(pi_projection(&full, &star).unwrap().is_basis_bijection());
}

#[test]
fn projection_onto_the_star_tensor_on_the_hexagon() {
    let ks = corpus::hexagon();
    let d = delta_complexes(&ks).unwrap();
    let dk = delta_star_k(&ks.k);
    let full = tensor_r(&d.delta, &dk).unwrap();
    let star = tensor_k(&d.delta, &dk).unwrap();
    let p = pi_projection(&full, &star).unwrap();
    assert!(p.is_chain_map() && p.is_diagonal());
    for q in full.complex.degrees() {
        let m = p.component(q);
        let kept: Vec<usize> = (0..m.cols()).filter(|&c| m.iter().any(|(_, col, _)| col == c)).collect();
        assert_eq!(kept.len(), star.complex.rank(q));
        for (col, pair) in full.pairs(q).iter().enumerate() {
            let left = full.left.generators(pair.left_degree)[pair.left].label;
            let right = full.right.generators(pair.right_degree)[pair.right].label;
            assert_eq!(kept.contains(&col), ks.k.is_face(right, left), "degree {q}");
        }
    }
}

#[test]
fn duality_preserves_identities() {
    let ks = corpus::hexagon();
    let d = delta_complexes(&ks).unwrap();
    let t = duality(&d.delta_star, &delta_star_k(&ks.k)).unwrap();
    let id = duality_map(&RKMap::identity(d.delta_star.clone()), &t, &t).unwrap();
    for q in t.complex().degrees() {
        assert_eq!(id.component(q).into_owned(), Matrix::identity(t.complex().rank(q)));
    }
}

#[test]
fn e_is_natural_for_the_projection() {
    let f = corpus::hexagon_to_circle();
    let hex = cellular_complex(&f.source, &OrientationPair::standard(&f.source)).unwrap();
    let circ = cellular_complex(&f.target, &OrientationPair::standard(&f.target)).unwrap();
    let push = pushforward(&f, &hex, &circ).unwrap();
    let (dx, dk) = (Arc::new(dual_star(&hex.delta)), Arc::new(dual_star(&circ.delta)));
    let g = dual_map(&push, dk.clone(), dx.clone()).unwrap();
    let base = delta_star_k(&f.source.k);
    let (e_k, e_x) = (e_transform(&dk, &base).unwrap(), e_transform(&dx, &base).unwrap());
    let tg = duality_map(&g, &e_k.first, &e_x.first).unwrap();
    let ttg = duality_map(&tg, &e_x.second, &e_k.second).unwrap();
    assert_eq!(ttg.then(&e_x.map).unwrap(), e_k.map.then(&g).unwrap());
}
