//! Ranicki duality for chain complexes controlled by a simplicial complex.

pub mod cells;
pub mod corpus;
pub mod error;
pub mod linalg;
pub mod mccrory;
pub mod rk;
pub mod simplicial;
pub mod tensor;

pub use error::{Error, Result};
