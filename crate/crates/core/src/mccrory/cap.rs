use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cells::positions;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rk::{delta_complexes, RKMap};
use crate::simplicial::{DerivedComplex, KSpace, OrientedSimplex, SimplicialComplex};
use crate::tensor::{tensor_r, TensorComplex};

/// A chain of a subdivision: simplex index to coefficient, zeros dropped.
pub type Chain = BTreeMap<usize, i64>;

pub(crate) fn add_term(chain: &mut Chain, key: usize, value: i64) {
    let v = chain.entry(key).or_insert(0);
    *v += value;
    if *v == 0 {
        chain.remove(&key);
    }
}

/// `ε(Q) = [Q⁰,Q¹][Q¹,Q²]…[Q^{q−1},Q^q]` for a decreasing chain of simplices
/// in increasing vertex order; `1` for a single simplex.
pub fn flag_sign(c: &SimplicialComplex, chain: &[usize]) -> Result<i64> {
    let mut sign = 1;
    for w in chain.windows(2) {
        let inc = c
            .faces(w[0])
            .iter()
            .find(|&&(f, _)| f == w[1])
            .map(|&(_, s)| s)
            .ok_or_else(|| Error::NotIncident(c.simplex_name(w[0]), c.simplex_name(w[1])))?;
        sign *= inc;
    }
    Ok(sign)
}

/// `ε(Q)` with the endpoints `Q⁰`, `Q^q` taken in the given orientations.
pub fn flag_sign_oriented(
    c: &SimplicialComplex,
    first: &OrientedSimplex,
    middle: &[usize],
    last: &OrientedSimplex,
) -> Result<i64> {
    let mut links: Vec<OrientedSimplex> = vec![first.clone()];
    links.extend(middle.iter().map(|&m| c.oriented(m)));
    links.push(last.clone());
    let ((a, sa), (b, sb)) = (c.locate(first)?, c.locate(last)?);
    if middle.is_empty() && a == b {
        return Ok(sa * sb);
    }
    let mut sign = 1;
    for w in links.windows(2) {
        sign *= c.incidence_number(&w[0], &w[1])?;
    }
    Ok(sign)
}

/// Full flags `τ = Q⁰ > Q¹ > … > Q^q = σ` with codimension-one steps.
pub fn full_flags(c: &SimplicialComplex, tau: usize, sigma: usize) -> Vec<Vec<usize>> {
    if !c.is_face(sigma, tau) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut stack = vec![vec![tau]];
    while let Some(chain) = stack.pop() {
        let end = *chain.last().expect("chains are nonempty");
        if end == sigma {
            out.push(chain);
            continue;
        }
        for &(f, _) in c.faces(end) {
            if c.is_face(sigma, f) {
                let mut next = chain.clone();
                next.push(f);
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

/// `(−1)^{dim σ} Σ_{Q ∈ D(σ,τ)} ε(Q) Q` for `τ`, `σ` in increasing vertex order.
pub fn cap_lex(c: &SimplicialComplex, derived: &DerivedComplex, tau: usize, sigma: usize) -> Result<Chain> {
    let sign = if c.dim(sigma) % 2 == 0 { 1 } else { -1 };
    let mut out = Chain::new();
    for flag in full_flags(c, tau, sigma) {
        let q = derived
            .simplex_of_chain(&flag)
            .ok_or_else(|| Error::UnknownSimplex(format!("flag from {}", c.simplex_name(tau))))?;
        add_term(&mut out, q, sign * flag_sign(c, &flag)?);
    }
    Ok(out)
}

/// `c_K(τ ⊗ σ*)` for oriented simplices, using `ε(Q)` with oriented endpoints.
pub fn cap_product(
    c: &SimplicialComplex,
    derived: &DerivedComplex,
    tau: &OrientedSimplex,
    sigma: &OrientedSimplex,
) -> Result<Chain> {
    let (t, _) = c.locate(tau)?;
    let (s, _) = c.locate(sigma)?;
    let sign = if c.dim(s) % 2 == 0 { 1 } else { -1 };
    let mut out = Chain::new();
    for flag in full_flags(c, t, s) {
        let q = derived
            .simplex_of_chain(&flag)
            .ok_or_else(|| Error::UnknownSimplex(format!("flag from {}", c.simplex_name(t))))?;
        let middle = if flag.len() > 2 { &flag[1..flag.len() - 1] } else { &[][..] };
        let eps = flag_sign_oriented(c, tau, middle, sigma)?;
        add_term(&mut out, q, sign * eps);
    }
    Ok(out)
}

/// `c_K: ΔK ⊗_R Δ*K → ΔK'` with its domain.
#[derive(Clone, Debug)]
pub struct CapMap {
    pub kspace: KSpace,
    pub derived: DerivedComplex,
    pub domain: TensorComplex,
    pub map: RKMap,
}

pub fn cap_map(k: &Arc<SimplicialComplex>) -> Result<CapMap> {
    let ks = KSpace::identity(k.clone());
    let d = delta_complexes(&ks)?;
    let domain = tensor_r(&d.delta, &d.delta_star)?;
    let prime_pos = positions(&d.derived.prime);
    let mut comps = BTreeMap::new();
    for n in domain.complex.degrees() {
        let mut m = Matrix::zeros(d.delta_prime.rank(n), domain.complex.rank(n));
        for (col, p) in domain.pairs(n).iter().enumerate() {
            let tau = k.of_dim(p.left_degree)[p.left];
            let sigma = k.of_dim(-p.right_degree)[p.right];
            for (q, v) in cap_lex(k, &d.derived, tau, sigma)? {
                m.set(prime_pos[q], col, v)?;
            }
        }
        comps.insert(n, m);
    }
    let map = RKMap::new(domain.complex.clone(), d.delta_prime.clone(), 0, comps)?;
    Ok(CapMap {
        kspace: ks,
        derived: d.derived,
        domain,
        map,
    })
}

/// Outcome of the chain-map verification of `c_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapReport {
    pub chain_map: bool,
    pub identities_checked: usize,
    pub pairs_checked: usize,
    /// First `(τ, σ, i)` at which a face-wise identity fails.
    pub failure: Option<(String, String, usize)>,
}

impl CapReport {
    pub fn passed(&self) -> bool {
        self.chain_map && self.failure.is_none()
    }
}

fn face(derived: &DerivedComplex, q: usize, i: usize) -> Result<usize> {
    let mut verts = derived.prime.simplex(q).to_vec();
    verts.remove(i);
    derived
        .prime
        .index_of(&verts)
        .ok_or_else(|| Error::UnknownSimplex("face of a subdivision simplex".into()))
}

fn apply_face(derived: &DerivedComplex, chain: &Chain, i: usize) -> Result<Chain> {
    let mut out = Chain::new();
    for (&q, &v) in chain {
        add_term(&mut out, face(derived, q, i)?, v);
    }
    Ok(out)
}

fn scaled(chain: &Chain, s: i64) -> Chain {
    chain.iter().map(|(&k, &v)| (k, s * v)).collect()
}

/// Checks `d^{K'} ∘ c_K = c_K ∘ d` as matrices, then the three face-wise
/// identities separately for every `σ ≤ τ` with `p = dim τ − dim σ ≥ 1`:
/// `d⁰c(τ⊗σ*) = c(dτ⊗σ*)`, `(−1)^p d^p c(τ⊗σ*) = (−1)^{dim τ} c(τ⊗dσ*)`, and
/// `d^i c(τ⊗σ*) = 0` for `0 < i < p` through a sign-reversing pairing of flags.
pub fn verify_cap_chain_map(k: &Arc<SimplicialComplex>) -> Result<CapReport> {
    let cap = cap_map(k)?;
    let chain_map = cap.map.is_chain_map();
    let derived = &cap.derived;
    let mut report = CapReport {
        chain_map,
        identities_checked: 0,
        pairs_checked: 0,
        failure: None,
    };
    for tau in 0..k.len() {
        for sigma in 0..k.len() {
            let p = k.dim(tau) - k.dim(sigma);
            if p < 1 || !k.is_face(sigma, tau) {
                continue;
            }
            let c = cap_lex(k, derived, tau, sigma)?;
            let fail = |i: usize| Some((k.simplex_name(tau), k.simplex_name(sigma), i));
            let mut rhs = Chain::new();
            for &(rho, inc) in k.faces(tau) {
                for (q, v) in cap_lex(k, derived, rho, sigma)? {
                    add_term(&mut rhs, q, inc * v);
                }
            }
            report.identities_checked += 1;
            if apply_face(derived, &c, 0)? != rhs {
                report.failure = fail(0);
                return Ok(report);
            }
            let sign_p = if p % 2 == 0 { 1 } else { -1 };
            let lhs = scaled(&apply_face(derived, &c, p as usize)?, sign_p);
            let mut rhs = Chain::new();
            let dual_sign = if k.dim(sigma) % 2 == 0 { -1 } else { 1 };
            let tau_sign = if k.dim(tau) % 2 == 0 { 1 } else { -1 };
            for &rho in k.cofaces(sigma) {
                let inc = k.faces(rho).iter().find(|&&(f, _)| f == sigma).map_or(0, |&(_, s)| s);
                for (q, v) in cap_lex(k, derived, tau, rho)? {
                    add_term(&mut rhs, q, tau_sign * dual_sign * inc * v);
                }
            }
            report.identities_checked += 1;
            if lhs != rhs {
                report.failure = fail(p as usize);
                return Ok(report);
            }
            let flags = full_flags(k, tau, sigma);
            for i in 1..p as usize {
                report.identities_checked += 1;
                if !apply_face(derived, &c, i)?.is_empty() || !pairing_is_perfect(k, &flags, i)? {
                    report.failure = fail(i);
                    return Ok(report);
                }
                report.pairs_checked += flags.len() / 2;
            }
        }
    }
    Ok(report)
}

/// For `0 < i < p`, every flag has exactly one partner sharing its `i`-th
/// face, the partner relation is an involution, and partners have opposite `ε`.
fn pairing_is_perfect(k: &SimplicialComplex, flags: &[Vec<usize>], i: usize) -> Result<bool> {
    let drop = |f: &Vec<usize>| {
        let mut g = f.clone();
        g.remove(i);
        g
    };
    let mut partner = vec![usize::MAX; flags.len()];
    for (a, fa) in flags.iter().enumerate() {
        let others: Vec<usize> = (0..flags.len()).filter(|&b| b != a && drop(&flags[b]) == drop(fa)).collect();
        if others.len() != 1 {
            return Ok(false);
        }
        partner[a] = others[0];
        if flag_sign(k, fa)? != -flag_sign(k, &flags[others[0]])? {
            return Ok(false);
        }
    }
    Ok((0..flags.len()).all(|a| partner[partner[a]] == a))
}
