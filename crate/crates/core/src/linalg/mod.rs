//! Exact linear algebra over ℤ, ℚ and ℤ/p.
//!
//! Every chain-level object in this crate has integer coefficients; a ring is
//! chosen only when homology or equivalence is decided, by reducing the
//! integer matrices into it.

mod chain;
mod matrix;
mod ring;
mod snf;

pub use chain::{is_cone_acyclic, ChainComplex, ChainMap, HomologyGroup};
pub use matrix::Matrix;
pub use ring::{is_prime, EuclideanDomain, Integers, IntegersMod, Rationals, Ring};
pub use snf::{smith_normal_form, SmithForm};
