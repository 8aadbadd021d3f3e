use std::sync::Arc;

use rkdual_core::corpus;
use rkdual_core::linalg::Ring;
use rkdual_core::rk::{delta_complexes, RKComplex};
use rkdual_core::tensor::*;

fn complexes_to_check() -> Vec<(&'static str, Arc<RKComplex>, Arc<RKComplex>)> {
    corpus::all()
        .into_iter()
        .map(|(name, ks)| {
            let d = delta_complexes(&ks).unwrap();
            (name, d.delta_star.clone(), delta_star_k(&ks.k))
        })
        .collect()
}

#[test]
fn psi_is_a_chain_isomorphism() {
    for (name, c, dk) in complexes_to_check() {
        let t = duality(&c, &dk).unwrap();
        let psi = psi_iso(&t.tensor).unwrap();
        assert!(psi.map.is_basis_bijection(), "{name}");
        assert!(psi.map.is_chain_map(), "{name}: {:?}", psi.map.check_chain_map());
    }
}

#[test]
fn e_is_a_chain_equivalence() {
    for (name, c, dk) in complexes_to_check() {
        let e = e_transform(&c, &dk).unwrap();
        assert!(e.evaluation.is_chain_map(), "{name}: E");
        assert!(e.psi_tensor.is_chain_map(), "{name}: Ψ⊗1");
        assert!(e.map.is_chain_map(), "{name}: e");
        for ring in [Ring::Integers, Ring::integers_mod(2).unwrap()] {
            for v in diagonal_verdicts(&e.map, ring).unwrap() {
                assert!(v.acyclic_cone, "{name} at {}", v.name);
            }
        }
    }
}

fn concentrated(k: &Arc<rkdual_core::simplicial::SimplicialComplex>, label: usize, degrees: &[i32]) -> Arc<RKComplex> {
    use rkdual_core::rk::{Generator, Order};
    let modules = degrees.iter().map(|&q| (q, vec![Generator::new(label, format!("g{q}"))])).collect();
    Arc::new(RKComplex::new(k.clone(), Order::Original, modules, Default::default()).unwrap())
}

#[test]
fn concentrated_complexes_give_isomorphisms() {
    for ks in [corpus::point(), corpus::edge(), corpus::solid_triangle()] {
        let k = ks.k.clone();
        let dk = delta_star_k(&k);
        for top in 0..k.len() {
            if !k.is_maximal(top) {
                continue;
            }
            let c = concentrated(&k, top, &[-1, 0, 1, 2]);
            let e = e_transform(&c, &dk).unwrap();
            let signs = concentrated_signs(&e).unwrap();
            assert_eq!(signs.len(), 4);
            for (q, s) in signs {
                let expected = if (q * k.dim(top)) % 2 == 0 { 1 } else { -1 };
                assert_eq!(s, expected, "degree {q} at {}", k.simplex_name(top));
            }
        }
    }
}

#[test]
fn filtration_step_commutes() {
    for (name, c, dk) in complexes_to_check() {
        let check = check_filtration_step(&c, &dk).unwrap().unwrap();
        assert!(check.passed(), "{name}: {check:?}");
    }
}
