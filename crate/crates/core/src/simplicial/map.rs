use std::collections::BTreeMap;
use std::sync::Arc;

use super::complex::{permutation_sign, SimplicialComplex};
use crate::error::{Error, Result};

/// A vertex assignment that sends every simplex onto a simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: Arc<SimplicialComplex>,
    target: Arc<SimplicialComplex>,
    vertex_map: Vec<usize>,
    image: Vec<usize>,
}

impl SimplicialMap {
    /// Validates `vertex_map`; the error names the first simplex (in index
    /// order) whose image is not a simplex of the target.
    pub fn new(
        source: Arc<SimplicialComplex>,
        target: Arc<SimplicialComplex>,
        vertex_map: Vec<usize>,
    ) -> Result<Self> {
        if vertex_map.len() != source.vertex_count() {
            return Err(Error::InvalidComplex(format!(
                "vertex map has {} entries for {} vertices",
                vertex_map.len(),
                source.vertex_count()
            )));
        }
        if let Some(&v) = vertex_map.iter().find(|&&v| v >= target.vertex_count()) {
            return Err(Error::InvalidComplex(format!("target vertex index {v} out of range")));
        }
        let mut image = Vec::with_capacity(source.len());
        for (i, s) in source.simplices().iter().enumerate() {
            let mut img: Vec<usize> = s.iter().map(|&v| vertex_map[v]).collect();
            img.sort_unstable();
            img.dedup();
            match target.index_of(&img) {
                Some(j) => image.push(j),
                None => {
                    return Err(Error::NotSimplicial {
                        simplex: source.simplex_name(i),
                    })
                }
            }
        }
        Ok(SimplicialMap {
            source,
            target,
            vertex_map,
            image,
        })
    }

    /// Vertex assignment given by names.
    pub fn from_names(
        source: Arc<SimplicialComplex>,
        target: Arc<SimplicialComplex>,
        assignment: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let mut vertex_map = Vec::with_capacity(source.vertex_count());
        for name in source.vertex_names() {
            let img = assignment
                .get(name)
                .ok_or_else(|| Error::InvalidComplex(format!("vertex `{name}` has no image")))?;
            let j = target
                .vertex_index(img)
                .ok_or_else(|| Error::InvalidComplex(format!("`{img}` is not a vertex of the target")))?;
            vertex_map.push(j);
        }
        Self::new(source, target, vertex_map)
    }

    pub fn identity(c: Arc<SimplicialComplex>) -> Self {
        let n = c.vertex_count();
        Self::new(c.clone(), c, (0..n).collect()).expect("identity is simplicial")
    }

    pub fn source(&self) -> &Arc<SimplicialComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SimplicialComplex> {
        &self.target
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// Index of the image simplex (as a vertex set).
    pub fn image(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn is_injective_on(&self, i: usize) -> bool {
        self.source.dim(i) == self.target.dim(self.image[i])
    }

    /// `f_*` on the canonically oriented simplex `i`: `Some((j, ±1))` when
    /// the image is nondegenerate, `None` when it collapses.
    pub fn push_forward(&self, i: usize) -> Option<(usize, i64)> {
        if !self.is_injective_on(i) {
            return None;
        }
        let mut img: Vec<usize> = self.source.simplex(i).iter().map(|&v| self.vertex_map[v]).collect();
        let sign = permutation_sign(&mut img)?;
        Some((self.image[i], sign))
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &SimplicialMap) -> Result<SimplicialMap> {
        if *first.target != *self.source {
            return Err(Error::PosetMismatch("composable maps need matching complexes".into()));
        }
        let vm = first.vertex_map.iter().map(|&v| self.vertex_map[v]).collect();
        SimplicialMap::new(first.source.clone(), self.target.clone(), vm)
    }
}

/// A simplicial map `π: X → K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSpace {
    pub x: Arc<SimplicialComplex>,
    pub k: Arc<SimplicialComplex>,
    pub pi: SimplicialMap,
}

impl KSpace {
    pub fn new(
        x: Arc<SimplicialComplex>,
        k: Arc<SimplicialComplex>,
        vertex_map: Vec<usize>,
    ) -> Result<Self> {
        let pi = SimplicialMap::new(x.clone(), k.clone(), vertex_map)?;
        Ok(KSpace { x, k, pi })
    }

    pub fn from_map(pi: SimplicialMap) -> Self {
        KSpace {
            x: pi.source().clone(),
            k: pi.target().clone(),
            pi,
        }
    }

    /// `(K, 1_K)`.
    pub fn identity(k: Arc<SimplicialComplex>) -> Self {
        Self::from_map(SimplicialMap::identity(k))
    }
}

/// Validates a vertex assignment `X → K` as a K-space.
pub fn validate_kspace(
    x: Arc<SimplicialComplex>,
    k: Arc<SimplicialComplex>,
    vertex_map: Vec<usize>,
) -> Result<KSpace> {
    KSpace::new(x, k, vertex_map)
}

/// A simplicial map `f: X → Y` with `π_Y ∘ f = π_X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSpaceMap {
    pub source: KSpace,
    pub target: KSpace,
    pub map: SimplicialMap,
}

impl KSpaceMap {
    pub fn new(source: KSpace, target: KSpace, map: SimplicialMap) -> Result<Self> {
        if *source.k != *target.k {
            return Err(Error::ControlMismatch("K-spaces over different complexes".into()));
        }
        if **map.source() != *source.x || **map.target() != *target.x {
            return Err(Error::ControlMismatch("map does not connect the two K-spaces".into()));
        }
        for (v, &w) in map.vertex_map().iter().enumerate() {
            if target.pi.vertex_map()[w] != source.pi.vertex_map()[v] {
                return Err(Error::ControlMismatch(format!(
                    "vertex `{}` is sent to different simplices of K",
                    source.x.vertex_names()[v]
                )));
            }
        }
        Ok(KSpaceMap { source, target, map })
    }

    pub fn identity(ks: KSpace) -> Self {
        let map = SimplicialMap::identity(ks.x.clone());
        KSpaceMap {
            source: ks.clone(),
            target: ks,
            map,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hexagon() -> Arc<SimplicialComplex> {
        let names: Vec<String> = (0..6).map(|i| format!("x{i}")).collect();
        let facets: Vec<Vec<usize>> = (0..6).map(|i| vec![i, (i + 1) % 6]).collect();
        Arc::new(SimplicialComplex::new(names, &facets).unwrap())
    }

    #[test]
    fn identity_on_triangle_is_valid() {
        let k = Arc::new(SimplicialComplex::full_simplex(2));
        assert!(validate_kspace(k.clone(), k, vec![0, 1, 2]).is_ok());
    }

    #[test]
    fn hexagon_wraps_twice_around_circle() {
        let k = Arc::new(SimplicialComplex::simplex_boundary(2));
        let ks = validate_kspace(hexagon(), k.clone(), (0..6).map(|i| i % 3).collect()).unwrap();
        for &e in ks.x.of_dim(1) {
            assert!(ks.pi.is_injective_on(e));
            assert_eq!(k.dim(ks.pi.image(e)), 1);
        }
    }

    #[test]
    fn non_simplicial_map_names_the_edge() {
        // Hexagon into two disjoint points plus an isolated vertex: x0-x1 goes to a non-edge.
        let k = Arc::new(SimplicialComplex::from_named(&["a", "b"], &[]).unwrap());
        let err = validate_kspace(hexagon(), k, vec![0, 1, 0, 1, 0, 1]).unwrap_err();
        assert_eq!(err, Error::NotSimplicial { simplex: "x0,x1".into() });
    }

    #[test]
    fn collapse_onto_a_vertex_is_valid() {
        let k = Arc::new(SimplicialComplex::simplex_boundary(2));
        let ks = validate_kspace(hexagon(), k, vec![0; 6]).unwrap();
        assert_eq!(ks.pi.push_forward(ks.x.of_dim(1)[0]), None);
    }

    #[test]
    fn control_maps_must_commute() {
        let k = Arc::new(SimplicialComplex::simplex_boundary(2));
        let hex = KSpace::new(hexagon(), k.clone(), (0..6).map(|i| i % 3).collect()).unwrap();
        let circ = KSpace::identity(k.clone());
        let good = hex.pi.clone();
        assert!(KSpaceMap::new(hex.clone(), circ.clone(), good).is_ok());
        let bad = SimplicialMap::new(hexagon(), k, (0..6).map(|i| (i + 1) % 3).collect()).unwrap();
        assert!(matches!(KSpaceMap::new(hex, circ, bad), Err(Error::ControlMismatch(_))));
    }
}
