//! The local field `K = 𝔽_q((u))`: elements, cosets and characters.

mod character;
mod coset;
mod element;

pub use character::{enumerate_characters, unit_group_order, unit_index, unit_reps, AdditiveCharacter, QuasiCharacter};
pub use coset::{CosetRelation, KCoset};
pub use element::{parse_kelement, pi_power, KElement, VAL_INF};
pub(crate) use element::{inv_mod, split_signed};
