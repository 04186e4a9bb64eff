//! Exact harmonic analysis on a local field `K = 𝔽_q((u))` and on the
//! two-dimensional field `F = K((t))`.
//!
//! * [`exactnum`]: cyclotomic numbers and rational functions in `T = q^{-s}`.
//! * [`localfield`]: elements, cosets and characters of `K`.
//! * [`schwartz`]: Schwartz–Bruhat functions, Fourier, `W`, `∇` and `★`.
//! * [`zeta1d`]: zeta integrals, L-functions and ★-epsilon factors on `K`.
//! * [`setring`]: rings of sets generated by d-classes and their measures.
//! * [`lift2d`]: lifted functions and integration on `F`.
//! * [`zeta2d`]: two-dimensional zeta integrals.
//! * [`archfe`]: numerical ★-transform over the reals.

pub mod archfe;
pub mod exactnum;
pub mod lift2d;
pub mod localfield;
pub mod schwartz;
pub mod setring;
pub mod zeta1d;
pub mod zeta2d;

mod error;

pub use error::Error;
pub use exactnum::{CycRat, QScaled, ZetaValue};
pub use localfield::{AdditiveCharacter, KCoset, KElement, QuasiCharacter};
pub use schwartz::SBFunction;

/// Archimedean test functions in double precision.
pub type RealTestFunction64 = archfe::RealTestFunction<f64>;
/// Archimedean test functions in single precision.
pub type RealTestFunction32 = archfe::RealTestFunction<f32>;
