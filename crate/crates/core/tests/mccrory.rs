use std::sync::Arc;

use rkdual_core::cells::{ball_complex, cellular_complex, OrientationPair};
use rkdual_core::corpus;
use rkdual_core::linalg::Ring;
use rkdual_core::mccrory::*;
use rkdual_core::simplicial::{barycentric_subdivision, SimplicialComplex};

#[test]
fn flag_signs_on_an_edge() {
    let k = SimplicialComplex::full_simplex(1);
    let (a, b, ab) = (0, 1, 2);
    assert_eq!(flag_sign(&k, &[ab, b]).unwrap(), 1);
    assert_eq!(flag_sign(&k, &[ab, a]).unwrap(), -1);
    assert_eq!(flag_sign(&k, &[ab]).unwrap(), 1);
    assert!(flag_sign(&k, &[a, b]).is_err());
}

#[test]
fn cap_of_edge_over_vertex() {
    let k = SimplicialComplex::full_simplex(1);
    let kd = barycentric_subdivision(&k);
    let chain = cap_lex(&k, &kd, 2, 0).unwrap();
    let flag = kd.simplex_of_chain(&[2, 0]).unwrap();
    assert_eq!(chain.into_iter().collect::<Vec<_>>(), vec![(flag, -1)]);
    assert!(cap_lex(&k, &kd, 0, 1).unwrap().is_empty());
    let vertex = kd.simplex_of_chain(&[2]).unwrap();
    assert_eq!(cap_lex(&k, &kd, 2, 2).unwrap().into_iter().collect::<Vec<_>>(), vec![(vertex, -1)]);
}

#[test]
fn cap_is_a_chain_map() {
    for dim in 0..=3 {
        let k = Arc::new(SimplicialComplex::full_simplex(dim));
        let r = verify_cap_chain_map(&k).unwrap();
        assert!(r.passed(), "Δ^{dim}: {r:?}");
    }
    let r = verify_cap_chain_map(&corpus::circle().k).unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn cap_is_basis_independent() {
    let k = SimplicialComplex::full_simplex(2);
    let kd = barycentric_subdivision(&k);
    for tau in 0..k.len() {
        for sigma in 0..k.len() {
            let lex = cap_lex(&k, &kd, tau, sigma).unwrap();
            for (st, ss) in [(1, -1), (-1, 1), (-1, -1)] {
                let t = if st < 0 { k.oriented(tau).flipped() } else { k.oriented(tau) };
                let s = if ss < 0 { k.oriented(sigma).flipped() } else { k.oriented(sigma) };
                let sign = k.locate(&t).unwrap().1 * k.locate(&s).unwrap().1;
                let flipped = cap_product(&k, &kd, &t, &s).unwrap();
                let expected: Chain = lex.iter().map(|(&q, &v)| (q, v * sign)).collect();
                assert_eq!(flipped, expected);
            }
        }
    }
}

#[test]
fn cellular_map_properties() {
    for (name, ks) in corpus::all() {
        let cc = cellular_complex(&ks, &OrientationPair::standard(&ks)).unwrap();
        let cx = c_x_map(&cc).unwrap();
        assert!(cx.map.is_chain_map(), "{name}");
        assert!(check_factorization(&cc, &cx).unwrap(), "{name}");
        let bad = verify_fundamental_cycles(&cc, &ball_complex(&ks), &cx).unwrap();
        assert!(bad.is_empty(), "{name}: {bad:?}");
        for q in cx.map.source().degrees() {
            let m = cx.map.component(q);
            assert_eq!(Ring::Integers.rank(&m), m.cols(), "{name} degree {q}");
        }
        for (q, cells) in &cc.cells {
            if *q != 0 {
                continue;
            }
            for (col, &(t, rho)) in cells.iter().enumerate() {
                if ks.x.dim(t) == ks.k.dim(rho) {
                    let column = &cx.map.component(0).columns()[col];
                    assert_eq!(column.len(), 1);
                    assert_eq!(column[0].1, 1, "{name}: 0-cell maps to +barycenter");
                }
            }
        }
    }
}

#[test]
fn equivalences_hold() {
    for (name, ks) in corpus::all() {
        let cc = cellular_complex(&ks, &OrientationPair::standard(&ks)).unwrap();
        for ring in [Ring::Integers, Ring::integers_mod(2).unwrap()] {
            let r = verify_equivalences(&cc, ring).unwrap();
            assert!(r.passed(), "{name} over {ring}: {r:?}");
        }
    }
}
