//! Exact coefficient arithmetic: cyclotomic rationals, polynomials and
//! rational functions in `T = q^{-s}` with Laurent monomials in `X`.

mod cyclotomic;
mod rational;
mod poly;
mod sqrtq;
mod zeta_value;

pub use cyclotomic::{cyclotomic_poly, euler_phi, CycRat};
pub use poly::{Field, Poly};
pub use sqrtq::{sqrt_q, QScaled};
pub use zeta_value::ZetaValue;
