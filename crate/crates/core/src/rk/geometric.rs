use std::collections::BTreeMap;
use std::sync::Arc;

use super::complex::{Generator, Order, RKComplex};
use super::dual::dual_star;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::simplicial::{barycentric_subdivision, DerivedComplex, KSpace};

/// `ΔX`, `Δ*X` and `ΔX'` for a K-space, with the subdivision they were built from.
#[derive(Clone, Debug)]
pub struct DeltaComplexes {
    pub delta: Arc<RKComplex>,
    pub delta_star: Arc<RKComplex>,
    pub delta_prime: Arc<RKComplex>,
    pub derived: DerivedComplex,
}

/// Simplicial chains of `X` over `K^op`, each simplex `S` labelled `π(S)`.
/// `signs[S] = ±1` picks the orientation of `S` relative to increasing vertex order.
pub fn delta_x_oriented(ks: &KSpace, signs: &[i64]) -> Result<RKComplex> {
    let x = &ks.x;
    if signs.len() != x.len() || signs.iter().any(|s| s.abs() != 1) {
        return Err(Error::InvalidOrientation(format!(
            "expected {} signs of ±1",
            x.len()
        )));
    }
    let mut modules = BTreeMap::new();
    let mut pos = vec![0; x.len()];
    for q in 0..=x.dimension().max(-1) {
        let gens: Vec<Generator> = x
            .of_dim(q)
            .iter()
            .enumerate()
            .map(|(n, &s)| {
                pos[s] = n;
                Generator::new(ks.pi.image(s), x.simplex_name(s))
            })
            .collect();
        modules.insert(q, gens);
    }
    let mut diffs = BTreeMap::new();
    for q in 1..=x.dimension() {
        let mut m = Matrix::zeros(x.of_dim(q - 1).len(), x.of_dim(q).len());
        for &t in x.of_dim(q) {
            for &(f, inc) in x.faces(t) {
                m.add_to(pos[f], pos[t], inc * signs[t] * signs[f])?;
            }
        }
        diffs.insert(q, m);
    }
    RKComplex::new(ks.k.clone(), Order::Opposite, modules, diffs)
}

/// `ΔX` with every simplex in increasing vertex order.
pub fn delta_x(ks: &KSpace) -> RKComplex {
    delta_x_oriented(ks, &vec![1; ks.x.len()]).expect("canonical orientation is valid")
}

/// Simplicial chains of `X'` over `K`, the chain `⟨Q⁰ > … > Q^p⟩` labelled `π(Q^p)`.
pub fn delta_x_prime(ks: &KSpace, derived: &DerivedComplex) -> Result<RKComplex> {
    let xp = &derived.prime;
    let mut modules = BTreeMap::new();
    let mut pos = vec![0; xp.len()];
    for q in 0..=xp.dimension() {
        let gens = xp
            .of_dim(q)
            .iter()
            .enumerate()
            .map(|(n, &s)| {
                pos[s] = n;
                Generator::new(ks.pi.image(derived.last(s)), xp.simplex_name(s))
            })
            .collect();
        modules.insert(q, gens);
    }
    let mut diffs = BTreeMap::new();
    for q in 1..=xp.dimension() {
        let mut m = Matrix::zeros(xp.of_dim(q - 1).len(), xp.of_dim(q).len());
        for &t in xp.of_dim(q) {
            for &(f, inc) in xp.faces(t) {
                m.add_to(pos[f], pos[t], inc)?;
            }
        }
        diffs.insert(q, m);
    }
    RKComplex::new(ks.k.clone(), Order::Original, modules, diffs)
}

pub fn delta_complexes(ks: &KSpace) -> Result<DeltaComplexes> {
    let delta = delta_x(ks);
    let delta_star = dual_star(&delta);
    let derived = barycentric_subdivision(&ks.x);
    let delta_prime = delta_x_prime(ks, &derived)?;
    Ok(DeltaComplexes {
        delta: Arc::new(delta),
        delta_star: Arc::new(delta_star),
        delta_prime: Arc::new(delta_prime),
        derived,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::SimplicialComplex;

    #[test]
    fn point_and_triangle() {
        let pt = KSpace::identity(Arc::new(SimplicialComplex::full_simplex(0)));
        let d = delta_complexes(&pt).unwrap();
        assert_eq!(d.delta.ranks(), [(0, 1)].into());
        assert_eq!(d.delta_star.ranks(), [(0, 1)].into());

        let id2 = KSpace::identity(Arc::new(SimplicialComplex::full_simplex(2)));
        let d = delta_complexes(&id2).unwrap();
        assert_eq!(d.delta_prime.rank(2), 6);
        for g in d.delta_prime.generators(2) {
            assert_eq!(id2.k.dim(g.label), 0);
        }
        assert_eq!(d.delta_star.order(), Order::Original);
    }
}
