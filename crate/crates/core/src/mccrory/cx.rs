use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::cap::{add_term, cap_lex, Chain};
use crate::cells::{cell_name, phi, positions, BallComplex, CellularComplex};
use crate::error::Result;
use crate::linalg::{HomologyGroup, Matrix, Ring};
use crate::rk::{delta_x_prime, RKComplex, RKMap};
use crate::simplicial::{barycentric_subdivision, DerivedComplex};
use crate::tensor::{
    diagonal_verdicts, duality, duality_map, e_transform, pi_projection, tensor_r, PieceVerdict,
};

/// `C_X: C(X_K) → ΔX'` with its target.
#[derive(Clone, Debug)]
pub struct CxMap {
    pub derived: DerivedComplex,
    pub delta_prime: Arc<RKComplex>,
    pub map: RKMap,
}

/// `c_X(T ⊗ π*ρ*)` for `T` in increasing vertex order: the sum over the
/// `S ≤ T` mapped bijectively onto `ρ` of `sign(π|S) · c(T ⊗ S*)`.
fn cap_pulled_back(cc: &CellularComplex, derived: &DerivedComplex, t: usize, rho: usize) -> Result<Chain> {
    let ks = &cc.kspace;
    let x = &ks.x;
    let mut out = Chain::new();
    for &s in x.of_dim(ks.k.dim(rho)) {
        if !x.is_face(s, t) {
            continue;
        }
        if let Some((image, sign)) = ks.pi.push_forward(s) {
            if image == rho {
                for (q, v) in cap_lex(x, derived, t, s)? {
                    add_term(&mut out, q, sign * v);
                }
            }
        }
    }
    Ok(out)
}

/// `C_X[T_ρ] = c_X(T ⊗ π*ρ*)`, built directly on the cell basis.
pub fn c_x_map(cc: &CellularComplex) -> Result<CxMap> {
    let ks = &cc.kspace;
    let derived = barycentric_subdivision(&ks.x);
    let delta_prime = Arc::new(delta_x_prime(ks, &derived)?);
    let pos = positions(&derived.prime);
    let mut comps = BTreeMap::new();
    for (&q, cells) in &cc.cells {
        let mut m = Matrix::zeros(delta_prime.rank(q), cells.len());
        for (col, &(t, rho)) in cells.iter().enumerate() {
            let o = cc.orientation.signs[t];
            for (a, v) in cap_pulled_back(cc, &derived, t, rho)? {
                m.set(pos[a], col, o * v)?;
            }
        }
        comps.insert(q, m);
    }
    let map = RKMap::new(cc.complex().clone(), delta_prime.clone(), 0, comps)?;
    Ok(CxMap {
        derived,
        delta_prime,
        map,
    })
}

/// Checks `c_X ∘ (1 ⊗ π*) = C_X ∘ π_{ΔX,Δ*K}` on `ΔX ⊗_R Δ*K`.
pub fn check_factorization(cc: &CellularComplex, cx: &CxMap) -> Result<bool> {
    let full = tensor_r(&cc.delta, &cc.delta_star_k)?;
    let (x, k) = (&cc.kspace.x, &cc.kspace.k);
    let pos = positions(&cx.derived.prime);
    let mut comps = BTreeMap::new();
    for n in full.complex.degrees() {
        let mut m = Matrix::zeros(cx.delta_prime.rank(n), full.complex.rank(n));
        for (col, p) in full.pairs(n).iter().enumerate() {
            let t = x.of_dim(p.left_degree)[p.left];
            let rho = k.of_dim(-p.right_degree)[p.right];
            let o = cc.orientation.signs[t];
            for (a, v) in cap_pulled_back(cc, &cx.derived, t, rho)? {
                m.set(pos[a], col, o * v)?;
            }
        }
        comps.insert(n, m);
    }
    let direct = RKMap::new(full.complex.clone(), cx.delta_prime.clone(), 0, comps)?;
    if !direct.is_chain_map() {
        return Ok(false);
    }
    let through = pi_projection(&full, &cc.tensor)?.then(&cx.map)?;
    Ok(direct == through)
}

/// Cells whose image is not a fundamental cycle of `(D_σT, ∂D_σT)`.
pub fn verify_fundamental_cycles(cc: &CellularComplex, balls: &BallComplex, cx: &CxMap) -> Result<Vec<String>> {
    let xp = &cx.derived.prime;
    let mut bad = Vec::new();
    for (&q, cells) in &cc.cells {
        let m = cx.map.component(q).columns();
        let d = cx.delta_prime.differential(q);
        for (col, &(t, rho)) in cells.iter().enumerate() {
            let cell = &balls.cells[balls.cell(t, rho).expect("generators are cells")];
            let top: BTreeSet<usize> = cell.simplices.iter().copied().filter(|&a| xp.dim(a) == q).collect();
            let image: BTreeMap<usize, i64> = m[col].iter().map(|&(r, v)| (xp.of_dim(q)[r], v)).collect();
            let full_support = image.keys().copied().collect::<BTreeSet<_>>() == top
                && image.values().all(|v| v.abs() == 1);
            let boundary: BTreeSet<usize> = cell
                .inner
                .iter()
                .chain(&cell.outer)
                .flat_map(|&i| balls.cells[i].simplices.iter().copied())
                .collect();
            let mut bd = Chain::new();
            for &(r, v) in &m[col] {
                for (row, &w) in d.transpose().row(r) {
                    add_term(&mut bd, xp.of_dim(q - 1)[row], v * w);
                }
            }
            let relative = bd.keys().all(|a| boundary.contains(a));
            if !(full_support && relative) {
                bad.push(cell_name(&cc.kspace, t, rho));
            }
        }
    }
    Ok(bad)
}

/// Per-σ verdicts for the three equivalences, plus homology agreement.
#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    /// `C_X: C(X_K) → ΔX'`.
    pub cells_to_subdivision: Vec<PieceVerdict>,
    /// `C_X Φ_X: TΔ*X → ΔX'`.
    pub dual_to_subdivision: Vec<PieceVerdict>,
    /// `e_{Δ*X} ∘ T(C_X Φ_X): TΔX' → Δ*X`.
    pub subdivision_dual_to_cochains: Vec<PieceVerdict>,
    pub homology_agrees: bool,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.homology_agrees
            && [&self.cells_to_subdivision, &self.dual_to_subdivision, &self.subdivision_dual_to_cochains]
                .iter()
                .all(|v| v.iter().all(|p| p.acyclic_cone))
    }
}

pub fn verify_equivalences(cc: &CellularComplex, ring: Ring) -> Result<EquivalenceReport> {
    let cx = c_x_map(cc)?;
    let p = phi(cc)?;
    let composite = p.map.then(&cx.map)?;
    let dk = &cc.delta_star_k;
    let e = e_transform(&p.delta_star, dk)?;
    let t_prime = duality(&cx.delta_prime, dk)?;
    let back = duality_map(&composite, &e.second, &t_prime)?.then(&e.map)?;
    let homology = |c: &RKComplex| -> Result<BTreeMap<i32, HomologyGroup>> {
        Ok(c.underlying().homology(ring)?.into_iter().filter(|(_, h)| *h != HomologyGroup::default()).collect())
    };
    let homology_agrees = homology(p.duality.complex())? == homology(&cx.delta_prime)?;
    Ok(EquivalenceReport {
        cells_to_subdivision: diagonal_verdicts(&cx.map, ring)?,
        dual_to_subdivision: diagonal_verdicts(&composite, ring)?,
        subdivision_dual_to_cochains: diagonal_verdicts(&back, ring)?,
        homology_agrees,
    })
}
