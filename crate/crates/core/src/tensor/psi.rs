use std::collections::BTreeMap;
use std::sync::Arc;

use super::product::{Blocking, TensorComplex, TensorPair};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rk::{dual_star, hom_rk, HomComplex, RKComplex, RKMap};

/// `Ψ: Hom_{(R,K)}(D, C*) ≅ (C ⊗_K D)*` with its source and target.
#[derive(Clone, Debug)]
pub struct PsiIso {
    pub hom: HomComplex,
    pub dual: Arc<RKComplex>,
    pub map: RKMap,
}

/// `Ψ(f)(x ⊗ y) = (−1)^{|x||y|} f(y)(x)`, built on the bases of a `⊗_K` product.
pub fn psi_iso(tensor: &TensorComplex) -> Result<PsiIso> {
    psi_iso_with(tensor, Arc::new(dual_star(&tensor.complex)))
}

/// As [`psi_iso`], reusing an already built `(C ⊗_K D)*`.
pub fn psi_iso_with(tensor: &TensorComplex, dual: Arc<RKComplex>) -> Result<PsiIso> {
    if tensor.blocking != Blocking::Star {
        return Err(Error::Shape("Ψ is defined on ⊗_K".into()));
    }
    let cstar = dual_star(&tensor.left);
    let hom = hom_rk(&tensor.right, &cstar)?;
    let mut comps = BTreeMap::new();
    for p in hom.complex.degrees() {
        let mut m = Matrix::zeros(dual.rank(p), hom.complex.rank(p));
        for (col, e) in hom.entries(p).iter().enumerate() {
            let s = e.source_degree;
            let r = -(s + p);
            let pair = TensorPair {
                left_degree: r,
                left: e.target,
                right_degree: s,
                right: e.source,
            };
            let (n, row) = tensor
                .position(&pair)
                .ok_or_else(|| Error::Support("Hom generator without a tensor partner".into()))?;
            debug_assert_eq!(n, -p);
            m.set(row, col, if (r * s) % 2 == 0 { 1 } else { -1 })?;
        }
        comps.insert(p, m);
    }
    let map = RKMap::new(hom.complex.clone(), dual.clone(), 0, comps)?;
    Ok(PsiIso { hom, dual, map })
}
