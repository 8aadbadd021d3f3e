//! Blocked tensor products and the duality functor `TC = C* ⊗_K Δ*K`.

mod duality;
mod product;
mod psi;

pub use duality::{
    check_filtration_step, concentrated_signs, delta_star_k, diagonal_verdicts, duality, duality_map,
    e_transform, verify_e_equivalence, Duality, ETransform, FiltrationCheck, PieceVerdict,
};
pub use product::{pi_projection, tensor_k, tensor_map, tensor_r, Blocking, TensorComplex, TensorPair};
pub use psi::{psi_iso, psi_iso_with, PsiIso};
