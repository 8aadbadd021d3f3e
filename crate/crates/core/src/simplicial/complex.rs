use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{ChainComplex, Matrix};

/// A simplex as the strictly increasing list of its vertex indices.
pub type Simplex = Vec<usize>;

/// Finite abstract simplicial complex.
///
/// The position of a vertex in `vertex_names` is its rank in the ambient
/// vertex order; listing a simplex's vertices in increasing rank gives its
/// canonical orientation. Simplices are indexed by (dimension, vertices).
#[derive(Clone)]
pub struct SimplicialComplex {
    vertex_names: Vec<String>,
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    by_dim: Vec<Vec<usize>>,
    faces: Vec<Vec<(usize, i64)>>,
    cofaces: Vec<Vec<usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_names == other.vertex_names && self.simplices == other.simplices
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.len()).map(|i| self.simplex_name(i)).collect();
        f.debug_struct("SimplicialComplex")
            .field("vertices", &self.vertex_names)
            .field("simplices", &names)
            .finish()
    }
}

/// An oriented simplex: a vertex ordering, up to even permutations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedSimplex {
    pub vertices: Vec<usize>,
}

impl OrientedSimplex {
    pub fn new(vertices: Vec<usize>) -> Self {
        OrientedSimplex { vertices }
    }

    /// Underlying vertex set and the sign of the permutation sorting the ordering.
    pub fn sorted(&self) -> Option<(Simplex, i64)> {
        let mut v = self.vertices.clone();
        let sign = permutation_sign(&mut v)?;
        Some((v, sign))
    }

    /// The same simplex with the opposite orientation.
    pub fn flipped(&self) -> Self {
        let mut v = self.vertices.clone();
        if v.len() >= 2 {
            v.swap(0, 1);
        }
        OrientedSimplex { vertices: v }
    }
}

/// Sorts `v` in place, returning the sign of the sorting permutation, or
/// `None` if `v` has a repeated entry.
pub(crate) fn permutation_sign(v: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|v| it.any(|w| w == v))
}

impl SimplicialComplex {
    /// Closure of `facets` over the vertex list `vertex_names`, whose order is
    /// the ambient vertex order. Each vertex becomes a 0-simplex.
    pub fn new(vertex_names: Vec<String>, facets: &[Vec<usize>]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for name in &vertex_names {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidComplex(format!("duplicate vertex `{name}`")));
            }
        }
        let n = vertex_names.len();
        let mut all: BTreeSet<(usize, Simplex)> = (0..n).map(|v| (0, vec![v])).collect();
        for facet in facets {
            let mut f = facet.clone();
            if f.is_empty() {
                return Err(Error::InvalidComplex("empty simplex".into()));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidComplex(format!("vertex index {v} out of range")));
            }
            if permutation_sign(&mut f).is_none() {
                return Err(Error::InvalidComplex("repeated vertex in a simplex".into()));
            }
            if all.contains(&(f.len() - 1, f.clone())) {
                continue;
            }
            let k = f.len();
            if k > 20 {
                return Err(Error::InvalidComplex("simplex dimension too large".into()));
            }
            for mask in 1u32..(1 << k) {
                let sub: Simplex = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| f[i]).collect();
                all.insert((sub.len() - 1, sub));
            }
        }
        let simplices: Vec<Simplex> = all.into_iter().map(|(_, s)| s).collect();
        Ok(Self::from_closed(vertex_names, simplices))
    }

    /// Vertices named by strings, ordered lexicographically by name.
    pub fn from_named<S: AsRef<str>>(vertices: &[S], facets: &[Vec<S>]) -> Result<Self> {
        let mut names: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for f in facets {
            names.extend(f.iter().map(|v| v.as_ref().to_string()));
        }
        names.sort();
        names.dedup();
        let pos: HashMap<&str, usize> =
            names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let facets: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| f.iter().map(|v| pos[v.as_ref()]).collect())
            .collect();
        Self::new(names, &facets)
    }

    /// The full simplex on vertices `v0, …, v{dim}`.
    pub fn full_simplex(dim: usize) -> Self {
        let names = (0..=dim).map(|i| format!("v{i}")).collect();
        Self::new(names, &[(0..=dim).collect()]).expect("a full simplex is valid")
    }

    /// The boundary of the full simplex of dimension `dim ≥ 1`.
    pub fn simplex_boundary(dim: usize) -> Self {
        let names = (0..=dim).map(|i| format!("v{i}")).collect();
        let facets: Vec<Vec<usize>> = (0..=dim)
            .map(|skip| (0..=dim).filter(|&v| v != skip).collect())
            .collect();
        Self::new(names, &facets).expect("a simplex boundary is valid")
    }

    fn from_closed(vertex_names: Vec<String>, mut simplices: Vec<Simplex>) -> Self {
        simplices.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let index: HashMap<Simplex, usize> =
            simplices.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let top = simplices.last().map_or(0, Vec::len);
        let mut by_dim = vec![Vec::new(); top];
        let mut faces = vec![Vec::new(); simplices.len()];
        let mut cofaces = vec![Vec::new(); simplices.len()];
        for (i, s) in simplices.iter().enumerate() {
            by_dim[s.len() - 1].push(i);
            if s.len() > 1 {
                for k in 0..s.len() {
                    let mut f = s.clone();
                    f.remove(k);
                    let j = index[&f];
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    faces[i].push((j, sign));
                    cofaces[j].push(i);
                }
            }
        }
        SimplicialComplex {
            vertex_names,
            simplices,
            index,
            by_dim,
            faces,
            cofaces,
        }
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_names.iter().position(|n| n == name)
    }

    /// Top dimension, or `-1` for the empty complex.
    pub fn dimension(&self) -> i32 {
        self.by_dim.len() as i32 - 1
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn simplex(&self, i: usize) -> &[usize] {
        &self.simplices[i]
    }

    pub fn dim(&self, i: usize) -> i32 {
        self.simplices[i].len() as i32 - 1
    }

    pub fn index_of(&self, vertices: &[usize]) -> Option<usize> {
        self.index.get(vertices).copied()
    }

    /// Simplices of dimension `q`, in index order.
    pub fn of_dim(&self, q: i32) -> &[usize] {
        if q < 0 {
            return &[];
        }
        self.by_dim.get(q as usize).map_or(&[], Vec::as_slice)
    }

    /// Codimension-one faces with their incidence numbers in the canonical
    /// orientation.
    pub fn faces(&self, i: usize) -> &[(usize, i64)] {
        &self.faces[i]
    }

    /// Simplices having `i` as a codimension-one face.
    pub fn cofaces(&self, i: usize) -> &[usize] {
        &self.cofaces[i]
    }

    /// `a ≤ b` in the face order.
    pub fn is_face(&self, a: usize, b: usize) -> bool {
        is_subset(&self.simplices[a], &self.simplices[b])
    }

    /// `st(σ) = {τ | τ ≥ σ}`, in index order.
    pub fn star(&self, sigma: usize) -> Vec<usize> {
        (0..self.len()).filter(|&t| self.is_face(sigma, t)).collect()
    }

    /// `σ̄ = {τ | τ ≤ σ}`, in index order.
    pub fn closure(&self, sigma: usize) -> Vec<usize> {
        (0..self.len()).filter(|&t| self.is_face(t, sigma)).collect()
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.cofaces[i].is_empty()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .map(|s| if s.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// Comma-separated vertex names, e.g. `a,b`.
    pub fn simplex_name(&self, i: usize) -> String {
        self.name_of(&self.simplices[i])
    }

    pub fn name_of(&self, vertices: &[usize]) -> String {
        vertices
            .iter()
            .map(|&v| self.vertex_names.get(v).map_or("?", String::as_str))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Canonically oriented simplex `i`.
    pub fn oriented(&self, i: usize) -> OrientedSimplex {
        OrientedSimplex::new(self.simplices[i].clone())
    }

    /// Index of the underlying simplex and its sign relative to the canonical
    /// orientation.
    pub fn locate(&self, s: &OrientedSimplex) -> Result<(usize, i64)> {
        let (sorted, sign) = s
            .sorted()
            .ok_or_else(|| Error::UnknownSimplex(self.name_of(&s.vertices)))?;
        let i = self
            .index_of(&sorted)
            .ok_or_else(|| Error::UnknownSimplex(self.name_of(&s.vertices)))?;
        Ok((i, sign))
    }

    /// Coefficient of `b` in `∂a`, with `∂⟨v₀…v_q⟩ = Σ (-1)^i ⟨v₀…v̂ᵢ…v_q⟩`.
    pub fn incidence_number(&self, a: &OrientedSimplex, b: &OrientedSimplex) -> Result<i64> {
        let (ia, sa) = self.locate(a)?;
        let (ib, sb) = self.locate(b)?;
        Ok(self
            .faces(ia)
            .iter()
            .find(|&&(f, _)| f == ib)
            .map_or(0, |&(_, s)| s * sa * sb))
    }

    /// Simplicial chain complex in the canonical oriented basis; the basis of
    /// degree `q` is `of_dim(q)` in order.
    pub fn chain_complex(&self) -> ChainComplex {
        let ranks = (0..self.by_dim.len() as i32)
            .map(|q| (q, self.of_dim(q).len()))
            .collect();
        let mut pos = vec![0; self.len()];
        for q in 0..=self.dimension() {
            for (k, &i) in self.of_dim(q).iter().enumerate() {
                pos[i] = k;
            }
        }
        let pos = &pos;
        let diffs = (1..=self.dimension())
            .map(|q| {
                let triplets = self.of_dim(q).iter().enumerate().flat_map(|(col, &i)| {
                    self.faces(i).iter().map(move |&(f, s)| (pos[f], col, s))
                });
                let d = Matrix::from_triplets(self.of_dim(q - 1).len(), self.of_dim(q).len(), triplets)
                    .expect("face positions are in range");
                (q, d)
            })
            .collect();
        ChainComplex::new(ranks, diffs).expect("boundary matrices have consistent shapes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Ring;

    fn edge() -> SimplicialComplex {
        SimplicialComplex::from_named(&["a", "b"], &[vec!["a", "b"]]).unwrap()
    }

    #[test]
    fn closure_adds_all_faces() {
        let t = SimplicialComplex::full_simplex(2);
        assert_eq!(t.len(), 7);
        assert_eq!(t.euler_characteristic(), 1);
        assert_eq!(SimplicialComplex::simplex_boundary(2).euler_characteristic(), 0);
    }

    #[test]
    fn invalid_inputs() {
        let names = vec!["a".to_string(), "a".to_string()];
        assert!(SimplicialComplex::new(names, &[]).is_err());
        let names = vec!["a".to_string()];
        assert!(SimplicialComplex::new(names.clone(), &[vec![]]).is_err());
        assert!(SimplicialComplex::new(names.clone(), &[vec![3]]).is_err());
        assert!(SimplicialComplex::new(names, &[vec![0, 0]]).is_err());
    }

    #[test]
    fn edge_incidences() {
        let e = edge();
        let ab = OrientedSimplex::new(vec![0, 1]);
        let a = OrientedSimplex::new(vec![0]);
        let b = OrientedSimplex::new(vec![1]);
        assert_eq!(e.incidence_number(&ab, &b), Ok(1));
        assert_eq!(e.incidence_number(&ab, &a), Ok(-1));
        assert_eq!(e.incidence_number(&a, &b), Ok(0));
        assert_eq!(e.incidence_number(&ab, &ab), Ok(0));
        assert_eq!(e.incidence_number(&ab.flipped(), &b), Ok(-1));
    }

    #[test]
    fn triangle_incidence_by_hand() {
        // ∂⟨a,b,c⟩ = ⟨b,c⟩ - ⟨a,c⟩ + ⟨a,b⟩
        let t = SimplicialComplex::from_named(&["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap();
        let abc = OrientedSimplex::new(vec![0, 1, 2]);
        assert_eq!(t.incidence_number(&abc, &OrientedSimplex::new(vec![0, 2])), Ok(-1));
        assert_eq!(t.incidence_number(&abc, &OrientedSimplex::new(vec![1, 2])), Ok(1));
        assert_eq!(t.incidence_number(&abc, &OrientedSimplex::new(vec![2, 0])), Ok(1));
    }

    #[test]
    fn foreign_simplex_is_an_error() {
        let e = edge();
        assert!(matches!(
            e.incidence_number(&OrientedSimplex::new(vec![0, 5]), &OrientedSimplex::new(vec![0])),
            Err(Error::UnknownSimplex(_))
        ));
    }

    #[test]
    fn point_chain_complex() {
        let p = SimplicialComplex::full_simplex(0);
        let c = p.chain_complex();
        assert_eq!(c.ranks(), &[(0, 1)].into());
        assert!(c.differential(0).is_zero());
    }

    #[test]
    fn circle_and_disc() {
        let circle = SimplicialComplex::simplex_boundary(2).chain_complex();
        assert_eq!(circle.rank(0), 3);
        assert_eq!(circle.rank(1), 3);
        assert_eq!(
            circle.differential(1).to_dense(),
            vec![vec![-1, -1, 0], vec![1, 0, -1], vec![0, 1, 1]]
        );
        let h = circle.homology(Ring::Integers).unwrap();
        assert_eq!((h[&0].betti, h[&1].betti), (1, 1));

        let disc = SimplicialComplex::full_simplex(2).chain_complex();
        assert_eq!((disc.rank(0), disc.rank(1), disc.rank(2)), (3, 3, 1));
        disc.check_d_squared().unwrap();
        let h = disc.homology(Ring::Integers).unwrap();
        assert_eq!((h[&0].betti, h[&1].betti, h[&2].betti), (1, 0, 0));
    }
}
