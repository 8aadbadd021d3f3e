use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use super::complex::SimplicialComplex;
use super::map::KSpace;

/// Random K-space: `X` on at most 8 vertices with facets of dimension at
/// most 3, `K` a full simplex on at most 4 vertices, and an arbitrary vertex
/// assignment (always simplicial into a full simplex).
pub fn random_kspace<R: Rng + ?Sized>(rng: &mut R) -> KSpace {
    let n = rng.gen_range(1..=8usize);
    let facet_count = rng.gen_range(1..=4usize);
    let all: Vec<usize> = (0..n).collect();
    let mut facets: Vec<Vec<usize>> = (0..facet_count)
        .map(|_| {
            let size = rng.gen_range(1..=n.min(4));
            let mut f: Vec<usize> = all.choose_multiple(rng, size).copied().collect();
            f.sort_unstable();
            f
        })
        .collect();
    let mut used: Vec<usize> = facets.iter().flatten().copied().collect();
    used.sort_unstable();
    used.dedup();
    // Relabel so that every vertex occurs in some facet.
    for f in &mut facets {
        for v in f.iter_mut() {
            *v = used.binary_search(v).expect("vertex is used");
        }
    }
    let names = (0..used.len()).map(|i| format!("x{i}")).collect();
    let x = Arc::new(SimplicialComplex::new(names, &facets).expect("random facets are valid"));
    let kdim = rng.gen_range(0..=3usize);
    let k = Arc::new(SimplicialComplex::full_simplex(kdim));
    let vertex_map = (0..x.vertex_count()).map(|_| rng.gen_range(0..=kdim)).collect();
    KSpace::new(x, k, vertex_map).expect("every vertex assignment into a full simplex is simplicial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = random_kspace(&mut ChaCha8Rng::seed_from_u64(7));
        let b = random_kspace(&mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
        assert!(a.x.vertex_count() <= 8);
        assert!(a.k.vertex_count() <= 4);
        assert!(a.x.dimension() <= 3);
    }
}
