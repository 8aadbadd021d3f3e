//! The dual-cell ball complex `X_K` and its cellular chains.

mod ball;
mod cellular;

pub use ball::{
    ball_complex, cell_name, check_ball_complex, dual_cell, dual_cell_of_simplex, dual_cone, BallComplex,
    BallReport, Cell,
};
pub use cellular::{
    cellular_complex, check_boundary_formula, check_codimension_one, check_naturality, induced_ball_map, phi,
    pushforward, CellularComplex, OrientationPair, Phi,
};
pub(crate) use cellular::positions;
