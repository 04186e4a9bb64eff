//! Zeta integrals, L-factors and ★-epsilon factors on `K` and `K × K`.

mod epsilon;
mod zeta;

pub use epsilon::{
    check_identity_a, check_identity_a_all, check_product_fe, delta, double_star, double_star_invariance, epsilon_closed_form,
    epsilon_from, epsilon_star, epsilon_test_functions, format_monomial, gauss_sum, identity_a_constant, rho0,
    star_product,
};
pub use zeta::{l_function, z_normalized, zeta, zeta_product, Tensor};

use crate::localfield::KCoset;

/// All cosets `a + π^n𝒪 ⊆ π^{min_val}𝒪` with `min_val ≤ n ≤ max_level`.
pub fn coset_basis(q: u32, min_val: i64, max_level: i64) -> Vec<KCoset> {
    let root = KCoset::ideal(q, min_val);
    let mut out = vec![root.clone()];
    let mut layer = vec![root];
    for _ in min_val..max_level {
        layer = layer.iter().flat_map(|c| c.children()).collect();
        out.extend(layer.iter().cloned());
    }
    debug_assert!(out.iter().all(|c| c.rep().valuation() >= min_val));
    out
}
