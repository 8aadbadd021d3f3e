use std::collections::BTreeMap;
use std::sync::Arc;

use super::complex::{Order, RKComplex, RKMap};
use super::exact::ShortExactSequence;
use crate::error::{Error, Result};
use crate::linalg::{ChainComplex, Matrix};
use crate::simplicial::SimplicialComplex;

/// Checks that `S` is full: whenever `ρ ≤ σ ≤ τ` with `ρ, τ ∈ S`, also `σ ∈ S`.
pub fn check_full(base: &SimplicialComplex, subset: &[usize]) -> Result<()> {
    let mut member = vec![false; base.len()];
    for &s in subset {
        if s >= base.len() {
            return Err(Error::UnknownSimplex(format!("index {s}")));
        }
        member[s] = true;
    }
    for &rho in subset {
        for &tau in subset {
            if !base.is_face(rho, tau) {
                continue;
            }
            if let Some(sigma) =
                (0..base.len()).find(|&s| !member[s] && base.is_face(rho, s) && base.is_face(s, tau))
            {
                return Err(Error::NotFull(format!(
                    "{} lies between {} and {} but is missing",
                    base.simplex_name(sigma),
                    base.simplex_name(rho),
                    base.simplex_name(tau)
                )));
            }
        }
    }
    Ok(())
}

/// The `R`-complex `C(S)` on the generators labelled in a full subset `S`.
pub fn assemble(c: &RKComplex, subset: &[usize]) -> Result<ChainComplex> {
    check_full(c.base(), subset)?;
    let mut member = vec![false; c.base().len()];
    for &s in subset {
        member[s] = true;
    }
    Ok(c.restrict(&c.positions_where(|l| member[l])))
}

/// `K − st(σ)`, in index order.
pub fn star_complement(base: &SimplicialComplex, sigma: usize) -> Vec<usize> {
    (0..base.len()).filter(|&t| !base.is_face(sigma, t)).collect()
}

/// Sub- or quotient complex on the labels satisfying `keep`, as an (R,K) complex.
fn labelled_part<F: Fn(usize) -> bool>(c: &RKComplex, keep: F) -> Result<(RKComplex, BTreeMap<i32, Vec<usize>>)> {
    let pos = c.positions_where(keep);
    let restricted = c.restrict(&pos);
    let modules = pos
        .iter()
        .map(|(&q, ps)| (q, ps.iter().map(|&i| c.generators(q)[i].clone()).collect()))
        .collect();
    let diffs = restricted.degree_range().map_or_else(Default::default, |(lo, hi)| {
        (lo..=hi).map(|q| (q, restricted.differential(q).into_owned())).collect()
    });
    Ok((RKComplex::new(c.base().clone(), c.order(), modules, diffs)?, pos))
}

/// Splits `C` into the sub-complex on the labels satisfying `in_sub` and
/// the quotient on the others, as a short exact sequence.
pub fn split_by_labels<F: Fn(usize) -> bool>(c: &Arc<RKComplex>, in_sub: F) -> Result<ShortExactSequence> {
    let (sub, sub_pos) = labelled_part(c, &in_sub)?;
    let (quot, quot_pos) = labelled_part(c, |l| !in_sub(l))?;
    let (sub, quot) = (Arc::new(sub), Arc::new(quot));
    let mut inc = BTreeMap::new();
    let mut proj = BTreeMap::new();
    for q in c.degrees() {
        let n = c.rank(q);
        let sp = sub_pos.get(&q).cloned().unwrap_or_default();
        let qp = quot_pos.get(&q).cloned().unwrap_or_default();
        inc.insert(q, Matrix::from_triplets(n, sp.len(), sp.iter().enumerate().map(|(j, &i)| (i, j, 1)))?);
        proj.insert(q, Matrix::from_triplets(qp.len(), n, qp.iter().enumerate().map(|(j, &i)| (j, i, 1)))?);
    }
    let i = RKMap::new(sub, c.clone(), 0, inc)?;
    let j = RKMap::new(c.clone(), quot, 0, proj)?;
    ShortExactSequence::new(i, j)
}

/// `0 → C(K − st σ) → C(K) → C(st σ) → 0` for a complex over `K^op`.
pub fn star_sequence(c: &Arc<RKComplex>, sigma: usize) -> Result<ShortExactSequence> {
    if c.order() != Order::Opposite {
        return Err(Error::OrderMismatch("star sequence needs a K^op complex".into()));
    }
    let base = c.base().clone();
    check_full(&base, &star_complement(&base, sigma))?;
    check_full(&base, &base.star(sigma))?;
    split_by_labels(c, |l| !base.is_face(sigma, l))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fullness() {
        let k = SimplicialComplex::full_simplex(1);
        let (a, b, ab) = (0, 1, 2);
        assert!(check_full(&k, &[a, b]).is_ok());
        assert!(check_full(&k, &[a, ab]).is_ok());
        let tri = SimplicialComplex::full_simplex(2);
        let a = tri.index_of(&[0]).unwrap();
        let abc = tri.index_of(&[0, 1, 2]).unwrap();
        assert!(matches!(check_full(&tri, &[a, abc]), Err(Error::NotFull(_))));
        for s in 0..tri.len() {
            assert!(check_full(&tri, &tri.star(s)).is_ok());
            assert!(check_full(&tri, &star_complement(&tri, s)).is_ok());
        }
    }
}
