use std::collections::BTreeMap;
use std::sync::Arc;

use super::complex::{Generator, RKComplex, RKMap};
use crate::error::Result;
use crate::linalg::Matrix;

fn sign(even: bool) -> i64 {
    if even {
        1
    } else {
        -1
    }
}

/// `C*`: `(C*)_{-q}(σ) = C_q(σ)*` with differential `(-1)^{q+1} (∂_{q+1})ᵀ`,
/// labelled over the opposite order.
pub fn dual_star(c: &RKComplex) -> RKComplex {
    let modules = c
        .degrees()
        .into_iter()
        .map(|q| {
            let gens = c
                .generators(q)
                .iter()
                .map(|g| Generator::new(g.label, format!("{}*", g.name)))
                .collect();
            (-q, gens)
        })
        .collect();
    let mut diffs = BTreeMap::new();
    for q in c.degrees() {
        // d^{C*}_{-q}: (C*)_{-q} -> (C*)_{-q-1} is dual to ∂_{q+1}.
        let d = c.differential(q + 1);
        if !d.is_zero() {
            diffs.insert(-q, d.transpose().scaled(sign(q % 2 != 0)).expect("entries stay bounded"));
        }
    }
    RKComplex::new(c.base().clone(), c.order().flip(), modules, diffs)
        .expect("the dual of a complex is a complex")
}

/// `f*: D* → C*` for `f: C → D` of degree `k`, with the Koszul sign
/// `(-1)^{k(q+k)}` on the component out of `(D*)_{-(q+k)}`.
pub fn dual_map(f: &RKMap, dual_source: Arc<RKComplex>, dual_target: Arc<RKComplex>) -> Result<RKMap> {
    let k = f.degree();
    let mut comps = BTreeMap::new();
    for q in f.source().degrees() {
        let m = f.component(q);
        if !m.is_zero() {
            let s = sign((k * (q + k)) % 2 == 0);
            comps.insert(-(q + k), m.transpose().scaled(s)?);
        }
    }
    // dual_source = D*, dual_target = C*.
    RKMap::new(dual_source, dual_target, k, comps)
}

/// `C**` together with `ε_C: C** → C`, which is `(-1)^q` on each
/// dual-dual basis vector in degree `q`.
pub fn epsilon(c: &Arc<RKComplex>) -> RKMap {
    let cc = Arc::new(dual_star(&dual_star(c)));
    epsilon_from(cc, c.clone())
}

fn epsilon_from(double_dual: Arc<RKComplex>, c: Arc<RKComplex>) -> RKMap {
    let comps = c
        .degrees()
        .into_iter()
        .map(|q| (q, Matrix::identity(c.rank(q)).scaled(sign(q % 2 == 0)).expect("unit entries")))
        .collect();
    RKMap::new(double_dual, c, 0, comps).expect("ε is diagonal")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rk::Order;
    use crate::simplicial::SimplicialComplex;

    fn two_term() -> Arc<RKComplex> {
        let k = Arc::new(SimplicialComplex::full_simplex(0));
        let modules = [(0, vec![Generator::new(0, "y")]), (1, vec![Generator::new(0, "x")])].into();
        let d = [(1, Matrix::identity(1))].into();
        Arc::new(RKComplex::new(k, Order::Original, modules, d).unwrap())
    }

    #[test]
    fn dual_negates_odd_differential() {
        let c = two_term();
        let cs = dual_star(&c);
        assert_eq!(cs.order(), Order::Opposite);
        assert_eq!(cs.ranks(), [(-1, 1), (0, 1)].into());
        assert_eq!(cs.differential(0).to_dense(), vec![vec![-1]]);
        assert_eq!(cs.generators(-1)[0].name, "x*");
    }

    #[test]
    fn epsilon_signs_and_chain_map() {
        let c = two_term();
        let e = epsilon(&c);
        assert_eq!(e.component(0).to_dense(), vec![vec![1]]);
        assert_eq!(e.component(1).to_dense(), vec![vec![-1]]);
        assert!(e.is_chain_map());
        assert!(e.is_basis_bijection());
    }

    #[test]
    fn dual_of_zero_is_zero() {
        let k = Arc::new(SimplicialComplex::full_simplex(1));
        let z = RKComplex::zero(k, Order::Original);
        assert_eq!(dual_star(&z).total_rank(), 0);
    }
}
