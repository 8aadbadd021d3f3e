use std::sync::Arc;

use super::complex::SimplicialComplex;
use super::map::{KSpace, SimplicialMap};
use crate::error::Result;

/// The barycentric subdivision `X'`.
///
/// Vertices of `X'` are the simplices of `X`, ranked by decreasing dimension,
/// so the canonical orientation of an `X'`-simplex lists its chain from the
/// largest simplex to the smallest: `⟨σ₀, σ₁, …, σ_p⟩` with `σ₀ > … > σ_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedComplex {
    pub prime: Arc<SimplicialComplex>,
    origin: Vec<usize>,
    vertex_of: Vec<usize>,
}

impl DerivedComplex {
    /// Simplex of `X` that the `X'`-vertex `v` is the barycenter of.
    pub fn origin(&self, v: usize) -> usize {
        self.origin[v]
    }

    /// `X'`-vertex at the barycenter of the `X`-simplex `s`.
    pub fn barycenter(&self, s: usize) -> usize {
        self.vertex_of[s]
    }

    /// The decreasing chain `σ₀ > … > σ_p` of `X`-simplices of `X'`-simplex `i`.
    pub fn chain(&self, i: usize) -> Vec<usize> {
        self.prime.simplex(i).iter().map(|&v| self.origin[v]).collect()
    }

    /// `X'`-simplex of a strictly decreasing chain, if it is one.
    pub fn simplex_of_chain(&self, chain: &[usize]) -> Option<usize> {
        let verts: Vec<usize> = chain.iter().map(|&s| self.vertex_of[s]).collect();
        if verts.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        self.prime.index_of(&verts)
    }

    /// First entry of the chain (the largest simplex).
    pub fn first(&self, i: usize) -> usize {
        self.origin[self.prime.simplex(i)[0]]
    }

    /// Last entry of the chain (the smallest simplex).
    pub fn last(&self, i: usize) -> usize {
        self.origin[*self.prime.simplex(i).last().expect("simplices are nonempty")]
    }
}

/// `X'`: one `p`-simplex per strictly decreasing chain `σ₀ > … > σ_p` in `X`.
pub fn barycentric_subdivision(x: &SimplicialComplex) -> DerivedComplex {
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| x.dim(b).cmp(&x.dim(a)).then_with(|| x.simplex(a).cmp(x.simplex(b))));
    let mut vertex_of = vec![0; x.len()];
    for (v, &s) in order.iter().enumerate() {
        vertex_of[s] = v;
    }
    let names: Vec<String> = order.iter().map(|&s| format!("b({})", x.simplex_name(s))).collect();

    // Maximal chains are the full flags of the maximal simplices.
    let mut facets = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..x.len()).filter(|&s| x.is_maximal(s)).map(|s| vec![s]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("nonempty");
        if x.dim(last) == 0 {
            facets.push(chain.iter().map(|&s| vertex_of[s]).collect());
            continue;
        }
        for &(f, _) in x.faces(last) {
            let mut next = chain.clone();
            next.push(f);
            stack.push(next);
        }
    }
    let prime = SimplicialComplex::new(names, &facets).expect("chains form a simplicial complex");
    DerivedComplex {
        prime: Arc::new(prime),
        origin: order,
        vertex_of,
    }
}

/// `π': X' → K'`, sending the barycenter of `S` to the barycenter of `π(S)`.
pub fn derived_map(ks: &KSpace, xd: &DerivedComplex, kd: &DerivedComplex) -> Result<SimplicialMap> {
    let vertex_map = (0..xd.prime.vertex_count())
        .map(|v| kd.barycenter(ks.pi.image(xd.origin(v))))
        .collect();
    SimplicialMap::new(xd.prime.clone(), kd.prime.clone(), vertex_map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_midpoint() {
        let e = SimplicialComplex::full_simplex(1);
        let d = barycentric_subdivision(&e);
        assert_eq!(d.prime.vertex_count(), 3);
        assert_eq!(d.prime.of_dim(1).len(), 2);
        // ⟨ab, a⟩: the edge comes first in every chain.
        for &i in d.prime.of_dim(1) {
            let chain = d.chain(i);
            assert_eq!(e.dim(chain[0]), 1);
            assert_eq!(e.dim(chain[1]), 0);
        }
    }

    #[test]
    fn triangle_counts() {
        let t = SimplicialComplex::full_simplex(2);
        let d = barycentric_subdivision(&t);
        let p = &d.prime;
        assert_eq!((p.of_dim(0).len(), p.of_dim(1).len(), p.of_dim(2).len()), (7, 12, 6));
        assert_eq!(p.euler_characteristic(), 1);
    }

    #[test]
    fn chain_lookup_round_trips() {
        let t = SimplicialComplex::full_simplex(2);
        let d = barycentric_subdivision(&t);
        for i in 0..d.prime.len() {
            assert_eq!(d.simplex_of_chain(&d.chain(i)), Some(i));
        }
        let v = t.of_dim(0)[0];
        let e = t.of_dim(1)[0];
        assert_eq!(d.simplex_of_chain(&[v, e]), None);
    }
}
