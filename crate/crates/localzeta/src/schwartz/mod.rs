//! Schwartz–Bruhat calculus on `K`.

mod function;
mod transforms;

pub use function::{parse_coset, SBFunction, SBTerm, DEFAULT_TERM_CAP};
pub(crate) use function::{coset_measure, parse_rational};
pub use transforms::ceil_half;
