use std::collections::BTreeMap;
use std::sync::Arc;

use super::product::{tensor_k, tensor_map, TensorComplex};
use super::psi::psi_iso_with;
use crate::error::{Error, Result};
use crate::linalg::{is_cone_acyclic, Matrix, Ring};
use crate::rk::{
    delta_x, dual_map, dual_star, epsilon, hom_post, hom_rk, split_by_labels, HomComplex, Order,
    RKComplex, RKMap, ShortExactSequence,
};
use crate::simplicial::{KSpace, SimplicialComplex};

/// `Δ*K`, the cochains of `K` as a complex over `K`.
pub fn delta_star_k(k: &Arc<SimplicialComplex>) -> Arc<RKComplex> {
    Arc::new(dual_star(&delta_x(&KSpace::identity(k.clone()))))
}

/// `TC = C* ⊗_K Δ*K` together with its factors.
#[derive(Clone, Debug)]
pub struct Duality {
    pub source: Arc<RKComplex>,
    pub dual: Arc<RKComplex>,
    pub tensor: TensorComplex,
}

impl Duality {
    pub fn complex(&self) -> &Arc<RKComplex> {
        &self.tensor.complex
    }
}

/// `T` on objects.
pub fn duality(c: &Arc<RKComplex>, delta_star_k: &Arc<RKComplex>) -> Result<Duality> {
    if c.order() != Order::Original {
        return Err(Error::OrderMismatch("duality is defined on complexes over K".into()));
    }
    let dual = Arc::new(dual_star(c));
    let tensor = tensor_k(&dual, delta_star_k)?;
    Ok(Duality {
        source: c.clone(),
        dual,
        tensor,
    })
}

/// `Tf = f* ⊗_K 1: TD → TC` for `f: C → D`.
pub fn duality_map(f: &RKMap, tc: &Duality, td: &Duality) -> Result<RKMap> {
    if f.source() != &tc.source || f.target() != &td.source {
        return Err(Error::Shape("duality of a map between the wrong complexes".into()));
    }
    let fstar = dual_map(f, td.dual.clone(), tc.dual.clone())?;
    let one = RKMap::identity(td.tensor.right.clone());
    tensor_map(&fstar, &one, &td.tensor, &tc.tensor)
}

/// `e_C: T²C → C` with the intermediate maps it is assembled from.
#[derive(Clone, Debug)]
pub struct ETransform {
    pub first: Duality,
    pub second: Duality,
    /// `H = Hom_{(R,K)}(Δ*K, C)`.
    pub hom: HomComplex,
    /// `H ⊗_K Δ*K`.
    pub hom_tensor: TensorComplex,
    /// `E_C: H ⊗_K Δ*K → C`, `f ⊗ σ* ↦ f(σ*)`.
    pub evaluation: RKMap,
    /// `Ψ_{C*} ∘ Hom(1, ε_C⁻¹)` tensored with `1_{Δ*K}`.
    pub psi_tensor: RKMap,
    pub map: RKMap,
}

/// Builds `e_C` as the unique map with `E_C = e_C ∘ (Ψ_C ⊗ 1)`.
pub fn e_transform(c: &Arc<RKComplex>, delta_star_k: &Arc<RKComplex>) -> Result<ETransform> {
    let first = duality(c, delta_star_k)?;
    let second = duality(first.complex(), delta_star_k)?;
    let psi = psi_iso_with(&first.tensor, second.dual.clone())?;
    let eps_inv = epsilon(c).inverse_of_bijection()?;
    let hom = hom_rk(delta_star_k, c)?;
    let psi_tilde = hom_post(&eps_inv, &hom, &psi.hom)?.then(&psi.map)?;
    let hom_tensor = tensor_k(&hom.complex, delta_star_k)?;
    let psi_tensor = tensor_map(&psi_tilde, &RKMap::identity(delta_star_k.clone()), &hom_tensor, &second.tensor)?;
    let evaluation = evaluation(&hom, &hom_tensor, c)?;
    let map = psi_tensor.inverse_of_bijection()?.then(&evaluation)?;
    Ok(ETransform {
        first,
        second,
        hom,
        hom_tensor,
        evaluation,
        psi_tensor,
        map,
    })
}

fn evaluation(hom: &HomComplex, hom_tensor: &TensorComplex, c: &Arc<RKComplex>) -> Result<RKMap> {
    let mut comps = BTreeMap::new();
    for n in hom_tensor.complex.degrees() {
        let mut m = Matrix::zeros(c.rank(n), hom_tensor.complex.rank(n));
        for (col, p) in hom_tensor.pairs(n).iter().enumerate() {
            let e = hom.entries(p.left_degree)[p.left];
            if e.source_degree == p.right_degree && e.source == p.right {
                m.set(e.target, col, 1)?;
            }
        }
        comps.insert(n, m);
    }
    RKMap::new(hom_tensor.complex.clone(), c.clone(), 0, comps)
}

/// Verdict for one diagonal component `e_C(σ, σ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceVerdict {
    pub sigma: usize,
    pub name: String,
    pub acyclic_cone: bool,
}

/// Cone acyclicity of every diagonal component of a degree-0 map.
pub fn diagonal_verdicts(f: &RKMap, ring: Ring) -> Result<Vec<PieceVerdict>> {
    f.check_chain_map()?;
    let base = f.source().base();
    (0..base.len())
        .map(|sigma| {
            Ok(PieceVerdict {
                sigma,
                name: base.simplex_name(sigma),
                acyclic_cone: is_cone_acyclic(ring, &f.diagonal(sigma)?)?,
            })
        })
        .collect()
}

/// Per-σ certification that `e_C` is an (R,K) chain equivalence.
pub fn verify_e_equivalence(c: &Arc<RKComplex>, delta_star_k: &Arc<RKComplex>, ring: Ring) -> Result<Vec<PieceVerdict>> {
    let e = e_transform(c, delta_star_k)?;
    diagonal_verdicts(&e.map, ring)
}

/// For `C` concentrated at one label `S`: the sign `s` with
/// `e_C(S,S)(c ⊗ S** ⊗ S*) = s·ε_C(c)`, per degree of `C`.
pub fn concentrated_signs(e: &ETransform) -> Result<BTreeMap<i32, i64>> {
    let c = &e.first.source;
    let mut labels: Vec<usize> = c.degrees().iter().flat_map(|&q| c.generators(q).iter().map(|g| g.label)).collect();
    labels.dedup();
    if labels.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Shape("complex is not concentrated at one label".into()));
    }
    let mut signs = BTreeMap::new();
    let Some(&top) = labels.first() else {
        return Ok(signs);
    };
    let piece = e.map.diagonal(top)?;
    for q in c.degrees() {
        let m = piece.component(q);
        if !m.is_signed_permutation() {
            return Err(Error::Shape(format!("e_C(S,S) is not a signed bijection in degree {q}")));
        }
        // ε_C is (−1)^q on dual-dual generators.
        let eps = if q % 2 == 0 { 1 } else { -1 };
        let mut seen = None;
        for (_, _, &v) in m.iter() {
            let s = v * eps;
            if seen.is_some_and(|t| t != s) {
                return Err(Error::Shape(format!("mixed signs in degree {q}")));
            }
            seen = Some(s);
        }
        if let Some(s) = seen {
            signs.insert(q, s);
        }
    }
    Ok(signs)
}

/// The inductive step for a complex over `K`: the piece `C'` at a label `S`
/// of maximal dimension, the quotient `C''`, and the naturality of `e` and
/// exactness of `T` and `T²` on `0 → C' → C → C'' → 0`.
#[derive(Clone, Debug)]
pub struct FiltrationCheck {
    pub top: usize,
    pub squares_commute: bool,
    pub dual_exact: bool,
    pub double_dual_exact: bool,
}

impl FiltrationCheck {
    pub fn passed(&self) -> bool {
        self.squares_commute && self.dual_exact && self.double_dual_exact
    }
}

pub fn check_filtration_step(c: &Arc<RKComplex>, delta_star_k: &Arc<RKComplex>) -> Result<Option<FiltrationCheck>> {
    let base = c.base();
    let Some(top) = c
        .degrees()
        .iter()
        .flat_map(|&q| c.generators(q).iter().map(|g| g.label))
        .max_by_key(|&l| (base.dim(l), std::cmp::Reverse(l)))
    else {
        return Ok(None);
    };
    let ses = split_by_labels(c, |l| l == top)?;
    let (sub, quot) = (ses.i.source().clone(), ses.j.target().clone());
    let (e_sub, e_mid, e_quot) = (e_transform(&sub, delta_star_k)?, e_transform(c, delta_star_k)?, e_transform(&quot, delta_star_k)?);
    // T i: TC → TC', T j: TC'' → TC.
    let ti = duality_map(&ses.i, &e_sub.first, &e_mid.first)?;
    let tj = duality_map(&ses.j, &e_mid.first, &e_quot.first)?;
    let dual_exact = ShortExactSequence::new(tj.clone(), ti.clone()).is_ok();
    // T² i: T²C' → T²C, T² j: T²C → T²C''.
    let tti = duality_map(&ti, &e_mid.second, &e_sub.second)?;
    let ttj = duality_map(&tj, &e_quot.second, &e_mid.second)?;
    let double_dual_exact = ShortExactSequence::new(tti.clone(), ttj.clone()).is_ok();
    let left = tti.then(&e_mid.map)? == e_sub.map.then(&ses.i)?;
    let right = e_mid.map.then(&ses.j)? == ttj.then(&e_quot.map)?;
    Ok(Some(FiltrationCheck {
        top,
        squares_commute: left && right,
        dual_exact,
        double_dual_exact,
    }))
}
