use std::collections::{BTreeSet, HashMap};

use crate::simplicial::{barycentric_subdivision, DerivedComplex, KSpace, SimplicialComplex};

/// `D(σ, K)`: simplices `⟨σ₀ > … > σ_p⟩` of `K'` with `σ ≤ σ_p`.
pub fn dual_cone(k: &SimplicialComplex, kd: &DerivedComplex, sigma: usize) -> Vec<usize> {
    (0..kd.prime.len()).filter(|&a| k.is_face(sigma, kd.last(a))).collect()
}

/// `D(σ, τ)`: simplices of `D(σ, K)` with `σ₀ ≤ τ`; empty unless `σ ≤ τ`.
pub fn dual_cell_of_simplex(k: &SimplicialComplex, kd: &DerivedComplex, sigma: usize, tau: usize) -> Vec<usize> {
    dual_cone(k, kd, sigma).into_iter().filter(|&a| k.is_face(kd.first(a), tau)).collect()
}

/// `D_σT`: simplices `⟨S₀ > … > S_p⟩` of `X'` with `σ ≤ π(S_p)` and `S₀ ≤ T`.
pub fn dual_cell(ks: &KSpace, xd: &DerivedComplex, sigma: usize, top: usize) -> Vec<usize> {
    (0..xd.prime.len())
        .filter(|&a| ks.k.is_face(sigma, ks.pi.image(xd.last(a))) && ks.x.is_face(xd.first(a), top))
        .collect()
}

/// The cell `T_σ` of `X_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub top: usize,
    pub sigma: usize,
    pub dim: i32,
    /// `X'`-simplices of `D_σT`, ascending.
    pub simplices: Vec<usize>,
    /// Cells `T_ρ` with `σ < ρ`.
    pub inner: Vec<usize>,
    /// Cells `S_σ` with `S < T`.
    pub outer: Vec<usize>,
}

/// `X_K = {T_σ | σ ≤ π(T)}` with every cell stored as a set of `X'`-simplices.
#[derive(Clone, Debug)]
pub struct BallComplex {
    pub derived: DerivedComplex,
    pub cells: Vec<Cell>,
    index: HashMap<(usize, usize), usize>,
}

impl BallComplex {
    pub fn cell(&self, top: usize, sigma: usize) -> Option<usize> {
        self.index.get(&(top, sigma)).copied()
    }

    /// Number of cells in each dimension.
    pub fn census(&self) -> Vec<usize> {
        let top = self.cells.iter().map(|c| c.dim).max().unwrap_or(-1);
        let mut out = vec![0; (top + 1).max(0) as usize];
        for c in &self.cells {
            out[c.dim as usize] += 1;
        }
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells.iter().map(|c| if c.dim % 2 == 0 { 1 } else { -1 }).sum()
    }
}

/// Enumerates the cells `T_σ` of `X_K`, `T` in index order and `σ` in index order.
pub fn ball_complex(ks: &KSpace) -> BallComplex {
    let derived = barycentric_subdivision(&ks.x);
    let (x, k) = (&ks.x, &ks.k);
    let mut pairs = Vec::new();
    for t in 0..x.len() {
        let image = ks.pi.image(t);
        for sigma in 0..k.len() {
            if k.is_face(sigma, image) {
                pairs.push((t, sigma));
            }
        }
    }
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let cells = pairs
        .iter()
        .map(|&(t, sigma)| {
            let inner = (0..k.len())
                .filter(|&rho| rho != sigma && k.is_face(sigma, rho))
                .filter_map(|rho| index.get(&(t, rho)).copied())
                .collect();
            let outer = (0..x.len())
                .filter(|&s| s != t && x.is_face(s, t))
                .filter_map(|s| index.get(&(s, sigma)).copied())
                .collect();
            Cell {
                top: t,
                sigma,
                dim: x.dim(t) - k.dim(sigma),
                simplices: dual_cell(ks, &derived, sigma, t),
                inner,
                outer,
            }
        })
        .collect();
    BallComplex { derived, cells, index }
}

/// Outcome of the combinatorial checks on `X_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallReport {
    pub cells: usize,
    pub census: Vec<usize>,
    /// Cells whose top dimension is not `dim T − dim σ`.
    pub bad_dimension: Vec<String>,
    /// Cells whose boundary is not the union of inner and outer boundaries.
    pub bad_boundary: Vec<String>,
    /// `X'`-simplices lying in the interior of zero or several cells.
    pub bad_partition: Vec<String>,
    pub euler: (i64, i64, i64),
}

impl BallReport {
    pub fn passed(&self) -> bool {
        self.bad_dimension.is_empty()
            && self.bad_boundary.is_empty()
            && self.bad_partition.is_empty()
            && self.euler.0 == self.euler.1
            && self.euler.1 == self.euler.2
    }
}

pub fn cell_name(ks: &KSpace, top: usize, sigma: usize) -> String {
    format!("({}|{})", ks.x.simplex_name(top), ks.k.simplex_name(sigma))
}

/// Checks dimensions, boundary decompositions, the interior partition of
/// `X'` and the Euler characteristics `χ(X_K) = χ(X') = χ(X)`.
pub fn check_ball_complex(ks: &KSpace, balls: &BallComplex) -> BallReport {
    let xp = &balls.derived.prime;
    let mut bad_dimension = Vec::new();
    let mut bad_boundary = Vec::new();
    for c in &balls.cells {
        let name = cell_name(ks, c.top, c.sigma);
        let top_dim = c.simplices.iter().map(|&a| xp.dim(a)).max().unwrap_or(-1);
        if top_dim != c.dim {
            bad_dimension.push(name.clone());
        }
        let members: BTreeSet<usize> = c.simplices.iter().copied().collect();
        let mut boundary = BTreeSet::new();
        for &a in &c.simplices {
            if xp.dim(a) != c.dim - 1 {
                continue;
            }
            let above = xp.cofaces(a).iter().filter(|b| members.contains(b)).count();
            if above == 1 {
                boundary.extend(xp.closure(a));
            }
        }
        let union: BTreeSet<usize> = c
            .inner
            .iter()
            .chain(&c.outer)
            .flat_map(|&i| balls.cells[i].simplices.iter().copied())
            .collect();
        if boundary != union {
            bad_boundary.push(name);
        }
    }
    let mut bad_partition = Vec::new();
    let mut interior_count = vec![0usize; xp.len()];
    for c in &balls.cells {
        let on_boundary: BTreeSet<usize> = c
            .inner
            .iter()
            .chain(&c.outer)
            .flat_map(|&i| balls.cells[i].simplices.iter().copied())
            .collect();
        for &a in &c.simplices {
            if !on_boundary.contains(&a) {
                interior_count[a] += 1;
                let (s0, sp) = (balls.derived.first(a), balls.derived.last(a));
                if s0 != c.top || ks.pi.image(sp) != c.sigma {
                    bad_partition.push(format!("{} in {}", xp.simplex_name(a), cell_name(ks, c.top, c.sigma)));
                }
            }
        }
    }
    for (a, &n) in interior_count.iter().enumerate() {
        if n != 1 {
            bad_partition.push(format!("{} is interior to {n} cells", xp.simplex_name(a)));
        }
    }
    BallReport {
        cells: balls.cells.len(),
        census: balls.census(),
        bad_dimension,
        bad_boundary,
        bad_partition,
        euler: (balls.euler_characteristic(), xp.euler_characteristic(), ks.x.euler_characteristic()),
    }
}
