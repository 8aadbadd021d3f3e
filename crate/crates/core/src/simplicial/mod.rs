//! Abstract simplicial complexes, simplicial maps, K-spaces and barycentric
//! subdivision.

mod complex;
mod derived;
mod map;
mod random;

pub use complex::{OrientedSimplex, Simplex, SimplicialComplex};
pub use derived::{barycentric_subdivision, derived_map, DerivedComplex};
pub use map::{validate_kspace, KSpace, KSpaceMap, SimplicialMap};
pub use random::random_kspace;
