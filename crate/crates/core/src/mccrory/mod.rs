//! The McCrory cap product `c_K: ΔK ⊗ Δ*K → ΔK'` and the cellular map `C_X: C(X_K) → ΔX'`.

mod cap;
mod cx;

pub use cap::{
    cap_lex, cap_map, cap_product, flag_sign, flag_sign_oriented, full_flags, verify_cap_chain_map, CapMap,
    CapReport, Chain,
};
pub use cx::{c_x_map, check_factorization, verify_equivalences, verify_fundamental_cycles, CxMap, EquivalenceReport};
