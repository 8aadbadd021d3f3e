use std::collections::BTreeMap;
use std::sync::Arc;

use super::assemble::assemble;
use super::dual::dual_star;
use super::geometric::delta_x;
use crate::error::{Error, Result};
use crate::linalg::Ring;
use crate::simplicial::{KSpace, SimplicialComplex};

/// One `σ` of the star-contractibility check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarPiece {
    pub sigma: String,
    pub ranks: BTreeMap<i32, usize>,
    pub acyclic: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarReport {
    pub maximal: String,
    pub pieces: Vec<StarPiece>,
}

impl StarReport {
    pub fn passed(&self) -> bool {
        self.pieces.iter().all(|p| p.ok)
    }
}

/// For a maximal simplex `S` of `K`, assembles `Δ*S̄` over `st(σ)` for every
/// `σ ∈ K`: acyclic for `σ ≠ S`, and a single generator in degree `−dim S` for `σ = S`.
pub fn check_star_pieces(k: &Arc<SimplicialComplex>, top: usize, ring: Ring) -> Result<StarReport> {
    if top >= k.len() {
        return Err(Error::UnknownSimplex(format!("index {top}")));
    }
    if !k.is_maximal(top) {
        return Err(Error::NotMaximal(k.simplex_name(top)));
    }
    let verts = k.simplex(top).to_vec();
    let names = verts.iter().map(|&v| k.vertex_names()[v].clone()).collect();
    let closure = SimplicialComplex::new(names, &[(0..verts.len()).collect()])?;
    let ks = KSpace::new(Arc::new(closure), k.clone(), verts)?;
    let dual = dual_star(&delta_x(&ks));
    let mut pieces = Vec::new();
    for sigma in 0..k.len() {
        let piece = assemble(&dual, &k.star(sigma))?;
        let acyclic = piece.is_acyclic(ring)?;
        let ranks: BTreeMap<i32, usize> =
            piece.ranks().iter().filter(|(_, &r)| r > 0).map(|(&q, &r)| (q, r)).collect();
        let ok = if sigma == top {
            ranks == BTreeMap::from([(-k.dim(top), 1)])
        } else {
            acyclic
        };
        pieces.push(StarPiece {
            sigma: k.simplex_name(sigma),
            ranks,
            acyclic,
            ok,
        });
    }
    Ok(StarReport {
        maximal: k.simplex_name(top),
        pieces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_star_pieces() {
        let k = Arc::new(SimplicialComplex::full_simplex(1));
        let r = check_star_pieces(&k, 2, Ring::Integers).unwrap();
        assert!(r.passed());
        assert_eq!(r.pieces[2].ranks, BTreeMap::from([(-1, 1)]));
        assert_eq!(r.pieces[0].ranks, BTreeMap::from([(-1, 1), (0, 1)]));
        assert!(matches!(check_star_pieces(&k, 0, Ring::Integers), Err(Error::NotMaximal(_))));
    }
}
