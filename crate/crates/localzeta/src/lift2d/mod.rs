//! The two-dimensional field `F = K((t))`: lifted functions, `∫^F`, `μ^F`,
//! the Fourier transform and one-dimensional zeta integrals on `F`.
//!
//! Lifted-function literals read `coeff * lift(g; a; gamma) * psi(b)`.

mod felement;
mod lifted;
mod measure;
mod zeta;

pub use felement::{parse_felement, FElement};
pub use lifted::{double_transform_constant, lift_char, parse_lifted, GoodCharacter, LiftTerm, LiftedFn, ResidueFn};
pub use measure::{distinguished, measure_f, FAtom, FAtomClass, ResidueSet};
pub use zeta::{
    divide_by_abs, integrate_f2, mult_integral, mult_integral_of_lift, truncated_gauss_integral, zeta1d_on_f,
    zeta1d_on_f_regularized, zeta_case, LiftTerm2, LiftedFn2, ZetaCase,
};

use crate::exactnum::ZetaValue;
use crate::Error;

/// `|α| = q^{−w(η(α))}X^{ν(α)}`.
pub fn abs_f(alpha: &FElement) -> Result<ZetaValue, Error> {
    alpha.abs()
}
