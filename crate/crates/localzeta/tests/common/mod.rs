#![allow(dead_code)]

use localzeta::{CycRat, KCoset, KElement, SBFunction};
use num_rational::BigRational;
use proptest::prelude::*;

pub fn mu1() -> BigRational {
    BigRational::from_integer(1.into())
}

pub fn kelem(q: u32, low: i64, digits: Vec<u32>) -> KElement {
    KElement::from_dense(q, low, digits.into_iter().map(|d| d % q).collect())
}

/// Elements with support in exponents `low..low+len`.
pub fn arb_kelement(q: u32, low: i64, len: usize) -> impl Strategy<Value = KElement> {
    prop::collection::vec(0..q, len).prop_map(move |d| kelem(q, low, d))
}

pub fn arb_coset(q: u32) -> impl Strategy<Value = KCoset> {
    (arb_kelement(q, -1, 3), -1i64..=2).prop_map(|(a, n)| KCoset::new(&a, n))
}

pub fn arb_small_rat() -> impl Strategy<Value = CycRat> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| CycRat::frac(n, d))
}

/// Combinations of up to three cosets with small rational coefficients.
pub fn arb_sb(q: u32) -> impl Strategy<Value = SBFunction> {
    prop::collection::vec((arb_coset(q), arb_small_rat()), 0..=3)
        .prop_map(move |terms| SBFunction::from_terms(q, mu1(), terms))
}
