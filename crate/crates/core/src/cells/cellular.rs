use std::collections::BTreeMap;
use std::sync::Arc;

use super::ball::{cell_name, BallComplex};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rk::{delta_x_oriented, dual_map, dual_star, epsilon, RKComplex, RKMap};
use crate::simplicial::{KSpace, KSpaceMap};
use crate::tensor::{delta_star_k, duality, duality_map, tensor_k, tensor_map, TensorComplex};

/// Orientations of the simplices of `X` relative to increasing vertex order,
/// paired with the increasing-order orientation of `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationPair {
    pub signs: Vec<i64>,
}

impl OrientationPair {
    /// `π_*(T) = (−1)^{dim σ} σ` whenever `π` maps `T` bijectively onto `σ`;
    /// increasing order on degenerate simplices.
    pub fn standard(ks: &KSpace) -> Self {
        let signs = (0..ks.x.len())
            .map(|t| match ks.pi.push_forward(t) {
                Some((sigma, s)) => s * parity(ks.k.dim(sigma)),
                None => 1,
            })
            .collect();
        OrientationPair { signs }
    }

    pub fn validate(&self, ks: &KSpace) -> Result<()> {
        if self.signs.len() != ks.x.len() || self.signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::InvalidOrientation(format!("expected {} signs of ±1", ks.x.len())));
        }
        for t in 0..ks.x.len() {
            if let Some((sigma, s)) = ks.pi.push_forward(t) {
                if s * self.signs[t] != parity(ks.k.dim(sigma)) {
                    return Err(Error::InvalidOrientation(format!(
                        "{} does not map to (−1)^dim {}",
                        ks.x.simplex_name(t),
                        ks.k.simplex_name(sigma)
                    )));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn parity(n: i32) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `C(X_K) = ΔX ⊗_K Δ*K` with cell basis `[T_ρ] = T ⊗ ρ*`.
#[derive(Clone, Debug)]
pub struct CellularComplex {
    pub kspace: KSpace,
    pub orientation: OrientationPair,
    pub delta: Arc<RKComplex>,
    pub delta_star_k: Arc<RKComplex>,
    pub tensor: TensorComplex,
    /// `(T, ρ)` for every generator, per degree.
    pub cells: BTreeMap<i32, Vec<(usize, usize)>>,
}

impl CellularComplex {
    pub fn complex(&self) -> &Arc<RKComplex> {
        &self.tensor.complex
    }

    pub fn position(&self, top: usize, rho: usize) -> Option<(i32, usize)> {
        let q = self.kspace.x.dim(top) - self.kspace.k.dim(rho);
        self.cells.get(&q)?.iter().position(|&c| c == (top, rho)).map(|i| (q, i))
    }
}

/// Index of each simplex within its dimension.
pub(crate) fn positions(c: &crate::simplicial::SimplicialComplex) -> Vec<usize> {
    let mut pos = vec![0; c.len()];
    for q in 0..=c.dimension() {
        for (n, &s) in c.of_dim(q).iter().enumerate() {
            pos[s] = n;
        }
    }
    pos
}

pub fn cellular_complex(ks: &KSpace, orientation: &OrientationPair) -> Result<CellularComplex> {
    orientation.validate(ks)?;
    let delta = Arc::new(delta_x_oriented(ks, &orientation.signs)?);
    let dk = delta_star_k(&ks.k);
    let mut tensor = tensor_k(&delta, &dk)?;
    let (x, k) = (&ks.x, &ks.k);
    let mut cells = BTreeMap::new();
    for n in tensor.complex.degrees() {
        let list: Vec<(usize, usize)> = tensor
            .pairs(n)
            .iter()
            .map(|p| (x.of_dim(p.left_degree)[p.left], k.of_dim(-p.right_degree)[p.right]))
            .collect();
        cells.insert(n, list);
    }
    tensor.complex = Arc::new((*tensor.complex).clone().renamed(|q, i, _| {
        let (t, r) = cells[&q][i];
        cell_name(ks, t, r)
    }));
    Ok(CellularComplex {
        kspace: ks.clone(),
        orientation: orientation.clone(),
        delta,
        delta_star_k: dk,
        tensor,
        cells,
    })
}

/// Rebuilds `∂[T_ρ] = Σ_{S<T} [T,S][S_ρ] + (−1)^{1+|T_ρ|} Σ_{ρ<σ} [σ,ρ][T_σ]`
/// from incidence numbers and compares it with the differential.
pub fn check_boundary_formula(cc: &CellularComplex) -> Result<()> {
    let (x, k) = (&cc.kspace.x, &cc.kspace.k);
    let c = cc.complex();
    for (&q, list) in &cc.cells {
        let mut expected = Matrix::zeros(c.rank(q - 1), c.rank(q));
        for (col, &(t, rho)) in list.iter().enumerate() {
            for &(s, inc) in x.faces(t) {
                if let Some((_, row)) = cc.position(s, rho) {
                    expected.add_to(row, col, inc * cc.orientation.signs[t] * cc.orientation.signs[s])?;
                }
            }
            for &sigma in k.cofaces(rho) {
                if let Some((_, row)) = cc.position(t, sigma) {
                    let inc = k.incidence_number(&k.oriented(sigma), &k.oriented(rho))?;
                    expected.add_to(row, col, parity(1 + q) * inc)?;
                }
            }
        }
        if expected != *c.differential(q) {
            return Err(Error::NotAChainMap { degree: q });
        }
    }
    Ok(())
}

/// Every nonzero boundary coefficient is ±1, and occurs exactly on the
/// codimension-one faces of a cell.
pub fn check_codimension_one(cc: &CellularComplex, balls: &BallComplex) -> Result<()> {
    let c = cc.complex();
    for (&q, list) in &cc.cells {
        let d = c.differential(q);
        for (col, &(t, rho)) in list.iter().enumerate() {
            let cell = &balls.cells[balls.cell(t, rho).expect("every generator is a cell")];
            let faces: Vec<(usize, usize)> = cell
                .inner
                .iter()
                .chain(&cell.outer)
                .map(|&i| &balls.cells[i])
                .filter(|f| f.dim == cell.dim - 1)
                .map(|f| (f.top, f.sigma))
                .collect();
            let mut hits = 0;
            for (row, &v) in d.transpose().row(col) {
                let target = cc.cells[&(q - 1)][row];
                if v.abs() != 1 || !faces.contains(&target) {
                    return Err(Error::Support(format!(
                        "{} has coefficient {v} on {}",
                        cell_name(&cc.kspace, t, rho),
                        cell_name(&cc.kspace, target.0, target.1)
                    )));
                }
                hits += 1;
            }
            if hits != faces.len() {
                return Err(Error::Support(format!(
                    "{} misses a codimension-one face",
                    cell_name(&cc.kspace, t, rho)
                )));
            }
        }
    }
    Ok(())
}

/// `Φ_X = ε_{ΔX} ⊗_K 1: TΔ*X → C(X_K)`, together with `TΔ*X`.
#[derive(Clone, Debug)]
pub struct Phi {
    pub delta_star: Arc<RKComplex>,
    pub duality: crate::tensor::Duality,
    pub map: RKMap,
}

pub fn phi(cc: &CellularComplex) -> Result<Phi> {
    let delta_star = Arc::new(dual_star(&cc.delta));
    let t = duality(&delta_star, &cc.delta_star_k)?;
    let eps = epsilon(&cc.delta);
    let one = RKMap::identity(cc.delta_star_k.clone());
    let map = tensor_map(&eps, &one, &t.tensor, &cc.tensor)?;
    Ok(Phi {
        delta_star,
        duality: t,
        map,
    })
}

/// `f_*: ΔX → ΔY` in the oriented bases of both K-spaces.
pub fn pushforward(f: &KSpaceMap, from: &CellularComplex, to: &CellularComplex) -> Result<RKMap> {
    let (x, y) = (&f.source.x, &f.target.x);
    let (px, py) = (positions(x), positions(y));
    let mut comps = BTreeMap::new();
    for q in 0..=x.dimension() {
        let mut m = Matrix::zeros(to.delta.rank(q), from.delta.rank(q));
        for &t in x.of_dim(q) {
            if let Some((s, sign)) = f.map.push_forward(t) {
                let v = sign * from.orientation.signs[t] * to.orientation.signs[s];
                m.set(py[s], px[t], v)?;
            }
        }
        comps.insert(q, m);
    }
    RKMap::new(from.delta.clone(), to.delta.clone(), 0, comps)
}

/// `f_K = f_* ⊗ 1: C(X_K) → C(Y_K)`.
pub fn induced_ball_map(f: &KSpaceMap, from: &CellularComplex, to: &CellularComplex) -> Result<RKMap> {
    let push = pushforward(f, from, to)?;
    tensor_map(&push, &RKMap::identity(from.delta_star_k.clone()), &from.tensor, &to.tensor)
}

/// `Φ_Y ∘ T(f*) = f_K ∘ Φ_X`.
pub fn check_naturality(f: &KSpaceMap, from: &CellularComplex, to: &CellularComplex) -> Result<bool> {
    let (phi_x, phi_y) = (phi(from)?, phi(to)?);
    let push = pushforward(f, from, to)?;
    let pull = dual_map(&push, phi_y.delta_star.clone(), phi_x.delta_star.clone())?;
    let t_pull = duality_map(&pull, &phi_y.duality, &phi_x.duality)?;
    let f_k = induced_ball_map(f, from, to)?;
    Ok(t_pull.then(&phi_y.map)? == phi_x.map.then(&f_k)?)
}
